"""Lie algebras, the contravariant Levi-Civita connection, and curvature.

Two 3-dimensional examples drive this script:

* the "rotation-like" solvable bracket [e1,e2] = lambda e3,
  [e1,e3] = -lambda e2 with the euclidean form (flat, and a pseudo-
  Riemannian Lie algebra);
* the cyclic bracket of so(3) with the euclidean form (curved: the
  connection is half the bracket, and the compatibility defect is nonzero).
"""

from fractions import Fraction

from plie import (
    LieAlgebra,
    MetricForm,
    curvature,
    jacobi_defect,
    levi_civita,
    metric_parallel_defect,
    nabla_curvature,
    prla_defect,
    torsion_defect,
)

lam = Fraction(-1)
rot = LieAlgebra(3, {(0, 1): [0, 0, lam], (0, 2): [0, -lam, 0]})
so3 = LieAlgebra(3, {(0, 1): [0, 0, 1], (0, 2): [0, -1, 0], (1, 2): [1, 0, 0]})
euclid = MetricForm.identity(3)

print("both tables satisfy Jacobi:",
      jacobi_defect(rot).is_zero() and jacobi_defect(so3).is_zero())

# ----------------------------------------------------------------------
# The connection: unique torsion-free, metric-parallel solution of the
# Koszul-type linear system, solved exactly per basis pair
# ----------------------------------------------------------------------

conn = levi_civita(rot, euclid)
print("\nrotation-like bracket, euclidean form:")
print("  A_{e1} e2 =", [str(v) for v in conn.basis(0, 1)])
print("  A_{e2} e1 =", [str(v) for v in conn.basis(1, 0)])
print("  torsion defect zero:", torsion_defect(conn, rot).is_zero())
print("  parallel defect zero:", metric_parallel_defect(conn, euclid).is_zero())

r = curvature(conn, rot)
print("  flat:", r.is_zero())
print("  pseudo-Riemannian Lie algebra:", prla_defect(rot, euclid).is_zero())

# ----------------------------------------------------------------------
# so(3): an ad-invariant form makes A = [ , ]/2 and R nonzero
# ----------------------------------------------------------------------

conn3 = levi_civita(so3, euclid)
r3 = curvature(conn3, so3)
print("\nso(3), euclidean form:")
print("  A_{e1} e2 =", [str(v) for v in conn3.basis(0, 1)])
print("  R(e1,e2)e2 =", [str(v) for v in r3.basis(0, 1, 1)])
print("  flat:", r3.is_zero())
print("  locally symmetric:", nabla_curvature(conn3, r3, so3).is_zero())

defect = prla_defect(so3, euclid)
print("  compatibility defect at (e1,e2,e2):",
      [str(defect[(0, 1, 1, l)]) for l in range(3)])
