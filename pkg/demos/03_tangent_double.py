"""The tangent double and its structure theorems, verified mechanically.

Doubling a bialgebra (semidirect base bracket, dual-semidirect dual bracket,
completely lifted metric) models the tangent group of a Poisson-Lie group.
Every geometric object of the double decomposes into pair formulas over the
base. Each verification below computes both sides through disjoint code
paths -- the generic machinery on the double versus the direct pair formula
-- and compares exactly.
"""

from plie import (
    LieAlgebra,
    LieBialgebra,
    MetricForm,
    complete_lift_metric,
    dual_semidirect_double,
    levi_civita,
    semidirect_double,
    tangent_bialgebra,
    verify_all,
)

heis = LieAlgebra(3, {(0, 1): [0, 0, 1]})
solvable_dual = LieAlgebra(3, {(0, 2): [1, 0, 0], (1, 2): [0, 1, 0]})
bi = LieBialgebra(heis, solvable_dual)  # both brackets nonzero
euclid = MetricForm.identity(3)

# ----------------------------------------------------------------------
# the double itself
# ----------------------------------------------------------------------

double = tangent_bialgebra(bi)
print("base dim:", bi.dim, "-> double dim:", double.dim)
dd = semidirect_double(heis)
print("[(e1,0),(0,e2)] in the doubled base:",
      [str(v) for v in dd.bracket_basis(0, 4)])

lifted = complete_lift_metric(euclid)
print("lifted metric block (1,4):", lifted.matrix[0][3], " block (1,1):", lifted.matrix[0][0])

conn_double = levi_civita(dual_semidirect_double(solvable_dual), lifted)
conn_base = levi_civita(solvable_dual, euclid)
print("double connection at mixed pair (1, 4):",
      [str(v) for v in conn_double.basis(0, 3)])
print("base connection at (1, 1):        ",
      [str(v) for v in conn_base.basis(0, 0)])

# ----------------------------------------------------------------------
# the statement suite: connection, curvature, its derivative, Koszul
# bracket, pre-Poisson bracket, metacurvature, the equivalences, and the
# vector-side semidirect statement
# ----------------------------------------------------------------------

print()
for report in verify_all(bi, euclid, MetricForm(euclid.inverse)):
    print(f"{report.statement:30s} {'PASS' if report.passed else 'FAIL'}")
