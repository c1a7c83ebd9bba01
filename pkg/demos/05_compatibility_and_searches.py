"""Poisson/metric compatibility and the brute-force fixture searches.

For an abelian base group the compatibility of the linear Poisson structure
with a left-invariant form reduces to a finite, exact check over basis
points. The script also runs the two searches that pinned the shipped
catalog fixtures: a {-1,0,1} metric making the 3-dimensional nilpotent
algebra pseudo-Riemannian, and a smallest bialgebra with both brackets
nonzero whose pre-Poisson bracket does not vanish.
"""

from plie import (
    LieAlgebra,
    LieBialgebra,
    MetricForm,
    linearized_poisson,
    prla_defect,
    prpl_abelian_base_check,
    tangent_bialgebra,
    complete_lift_metric,
)
from plie.search import find_nontrivial_bialgebra, pseudo_riemannian_metrics

euclid = MetricForm.identity(3)
lam = -1
rot = LieAlgebra(3, {(0, 1): [0, 0, lam], (0, 2): [0, -lam, 0]})
bi = LieBialgebra(LieAlgebra.abelian(3), rot)

# ----------------------------------------------------------------------
# abelian-base compatibility, swept exactly over basis points
# ----------------------------------------------------------------------

print("linear Poisson matrix at (0,0,1):")
pi = linearized_poisson(bi, (0, 0, 1))
for i in range(3):
    print("  ", [str(pi[(i, j)]) for j in range(3)])

print("compatible:", prpl_abelian_base_check(bi, euclid).passed)

double = tangent_bialgebra(bi)
print("double compatible:",
      prpl_abelian_base_check(double, complete_lift_metric(euclid)).passed)

# a failing example carries a witness
so3 = LieAlgebra(3, {(0, 1): [0, 0, 1], (0, 2): [0, -1, 0], (1, 2): [1, 0, 0]})
verdict = prpl_abelian_base_check(LieBialgebra(LieAlgebra.abelian(3), so3), euclid)
print("so(3)-dual compatible:", verdict.passed, " witness:", verdict.witness)

# ----------------------------------------------------------------------
# search 1: a {-1,0,1} metric for the nilpotent algebra
# ----------------------------------------------------------------------

heis = LieAlgebra(3, {(0, 1): [0, 0, 1]})
print("\neuclidean form works for the nilpotent bracket:",
      prla_defect(heis, euclid).is_zero())
metric = pseudo_riemannian_metrics(heis, limit=1)[0]
print("first searched metric that does work:")
for row in metric.matrix:
    print("  ", [str(v) for v in row])

# ----------------------------------------------------------------------
# search 2: smallest bialgebra with both brackets nonzero
# ----------------------------------------------------------------------

result = find_nontrivial_bialgebra()
print("\nbialgebra search: dim", result.dim,
      "after", result.pairs_checked, "candidate pairs,",
      result.both_nonzero_found, "valid both-nonzero hits seen")
print("  base bracket:", {k: [str(x) for x in v] for k, v in result.bialgebra.g.table.items()})
print("  dual bracket:", {k: [str(x) for x in v] for k, v in result.bialgebra.gstar.table.items()})
