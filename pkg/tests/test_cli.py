import json

import pytest

from plie.catalog import catalog_bytes
from plie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def checks_of(payload: str) -> dict:
    report = json.loads(payload)
    return {c["name"]: c for c in report["checks"]}


class TestCheck:
    def test_catalog_entry_passes(self, capsys):
        code, out, _ = run(capsys, "check", "r3-lambda.json")
        assert code == 0
        assert "jacobi_g" in out

    def test_invalid_document_fails_with_witness(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps(
                {
                    "name": "bad",
                    "dim": 3,
                    "params": {},
                    "g_bracket": [
                        {"i": 1, "j": 2, "out": {"1": "1"}},
                        {"i": 1, "j": 3, "out": {"3": "1"}},
                        {"i": 2, "j": 3, "out": {"1": "1"}},
                    ],
                    "gstar_bracket": [],
                    "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
                    "metric_side": "contravariant",
                }
            )
        )
        code, out, _ = run(capsys, "check", str(bad), "--format", "json")
        assert code == 1
        checks = checks_of(out)
        assert checks["jacobi_g"]["verdict"] == "FAIL"
        assert checks["jacobi_g"]["witness"]["index"][:3] == [1, 2, 3]

    def test_malformed_json_exits_2(self, capsys, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        code, _, err = run(capsys, "check", str(broken))
        assert code == 2
        assert "error" in err

    def test_missing_input_exits_2(self, capsys):
        code, _, err = run(capsys, "check", "no-such-entry")
        assert code == 2
        assert "catalog" in err


class TestClassify:
    def test_r3_lambda_reports_all_good(self, capsys):
        code, out, _ = run(capsys, "classify", "r3-lambda", "--format", "json")
        assert code == 0
        checks = checks_of(out)
        assert checks["flat"]["verdict"] == "true"
        assert checks["locally_symmetric"]["verdict"] == "true"
        assert checks["metaflat"]["verdict"] == "true"
        assert checks["prla"]["verdict"] == "PASS"
        assert checks["prpl_abelian_base"]["verdict"] == "PASS"

    def test_so3_dual_fails_compatibility_with_witness(self, capsys):
        code, out, _ = run(capsys, "classify", "so3-dual", "--format", "json")
        assert code == 1
        checks = checks_of(out)
        assert checks["flat"]["verdict"] == "false"
        assert checks["prla"]["verdict"] == "FAIL"
        assert checks["prla"]["witness"]["index"]

    def test_heisenberg_skips_abelian_check(self, capsys):
        code, out, _ = run(capsys, "classify", "heisenberg", "--format", "json")
        assert code == 0
        assert checks_of(out)["prpl_abelian_base"]["verdict"] == "SKIPPED"

    def test_param_override_changes_result_not_verdicts(self, capsys):
        code, out, _ = run(
            capsys, "classify", "r3-lambda", "--param", "lambda=-5/2", "--format", "json"
        )
        assert code == 0
        assert checks_of(out)["prpl_abelian_base"]["verdict"] == "PASS"


class TestConnectionCurvatureHawkins:
    def test_connection_tensor_values(self, capsys):
        code, out, _ = run(capsys, "connection", "r3-lambda", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["tensors"]["connection"]["1,2,3"] == "-1"
        assert report["tensors"]["connection"]["1,3,2"] == "1"
        checks = checks_of(out)
        assert checks["torsion_free"]["verdict"] == "PASS"
        assert checks["metric_parallel"]["verdict"] == "PASS"

    def test_curvature_values(self, capsys):
        code, out, _ = run(capsys, "curvature", "so3-dual", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["tensors"]["curvature"]["1,2,2,1"] == "1/4"
        assert checks_of(out)["flat"]["verdict"] == "false"

    def test_hawkins_pre_poisson_nonzero(self, capsys):
        code, out, _ = run(capsys, "hawkins", "nontrivial-bi", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["tensors"]["pre_poisson"]
        assert checks_of(out)["metaflat"]["verdict"] == "true"


class TestVerifyTangent:
    @pytest.mark.parametrize(
        "name", ["r3-lambda", "heisenberg", "so3-dual", "abelian-trivial", "nontrivial-bi"]
    )
    def test_catalog_passes(self, capsys, name):
        code, out, _ = run(capsys, "verify-tangent", name, "--format", "json")
        assert code == 0
        for check in json.loads(out)["checks"]:
            assert check["verdict"] in ("PASS", "SKIPPED")


class TestDouble:
    def test_double_then_classify(self, capsys, tmp_path):
        out_path = tmp_path / "double.json"
        code, _, _ = run(capsys, "double", "r3-lambda", "--out", str(out_path))
        assert code == 0
        code, out, _ = run(capsys, "classify", str(out_path), "--format", "json")
        assert code == 0
        assert checks_of(out)["prpl_abelian_base"]["verdict"] == "PASS"

    def test_double_output_is_canonical(self, capsys, tmp_path):
        from plie.document import parse_spec, serialize_document

        out_path = tmp_path / "double.json"
        run(capsys, "double", "nontrivial-bi", "--out", str(out_path))
        data = out_path.read_bytes()
        assert serialize_document(parse_spec(data)) == data


class TestDeterminismAndUsage:
    def test_json_reports_are_byte_identical(self, capsys):
        _, first, _ = run(capsys, "classify", "r3-lambda", "--format", "json")
        _, second, _ = run(capsys, "classify", "r3-lambda", "--format", "json")
        assert first == second

    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate", "r3-lambda"])
        assert err.value.code == 2

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["classify", "r3-lambda", "--frobnicate"])
        assert err.value.code == 2

    def test_bad_param_syntax_exits_2(self, capsys):
        code, _, err = run(capsys, "classify", "r3-lambda", "--param", "lambda")
        assert code == 2

    def test_catalog_list_and_show(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        assert "r3-lambda" in out and "nontrivial-bi" in out
        code, out, _ = run(capsys, "catalog", "show", "so3-dual")
        assert code == 0
        assert out.encode() == catalog_bytes("so3-dual")

    def test_catalog_dir_override(self, capsys, tmp_path, monkeypatch):
        target = tmp_path / "alt"
        target.mkdir()
        (target / "custom.json").write_bytes(catalog_bytes("r3-lambda"))
        monkeypatch.setenv("PLIE_CATALOG_DIR", str(target))
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        assert out.strip() == "custom"
        code, _, _ = run(capsys, "classify", "custom")
        assert code == 0
