"""Built-in example catalog and input resolution.

Catalog files ship with the package as canonical-form JSON. The environment
variable ``PLIE_CATALOG_DIR`` points command-line input resolution at a
different directory, e.g. one produced by the doubling emitter.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .document import SpecDocument, parse_spec
from .errors import InvalidInputError

CATALOG_ENV = "PLIE_CATALOG_DIR"


def _builtin_dir() -> Path:
    return Path(str(resources.files("plie") / "data"))


def catalog_dir() -> Path:
    override = os.environ.get(CATALOG_ENV)
    return Path(override) if override else _builtin_dir()


def catalog_names() -> list[str]:
    directory = catalog_dir()
    if not directory.is_dir():
        return []
    return sorted(p.stem for p in directory.glob("*.json"))


def catalog_bytes(name: str) -> bytes:
    path = catalog_dir() / f"{name}.json"
    if not path.is_file():
        raise InvalidInputError(
            f"no catalog entry {name!r} (have: {', '.join(catalog_names()) or 'none'})"
        )
    return path.read_bytes()


def load_catalog(name: str) -> SpecDocument:
    return parse_spec(catalog_bytes(name))


def resolve_input(spec: str) -> tuple[str, bytes]:
    """Turn a CLI input argument into (display name, bytes).

    A readable path wins; otherwise the argument (with or without a ``.json``
    suffix) is looked up in the catalog directory.
    """
    path = Path(spec)
    if path.is_file():
        return str(path), path.read_bytes()
    name = path.name
    if name.endswith(".json"):
        name = name[: -len(".json")]
    try:
        return f"catalog:{name}", catalog_bytes(name)
    except InvalidInputError:
        raise InvalidInputError(f"cannot read {spec!r}: not a file and not a catalog entry")


__all__ = [
    "CATALOG_ENV",
    "catalog_bytes",
    "catalog_dir",
    "catalog_names",
    "load_catalog",
    "resolve_input",
]
