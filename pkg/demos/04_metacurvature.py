"""The bracket on forms and its obstruction tensor.

A torsion-free flat contravariant connection induces a bracket on the whole
exterior algebra (generated by the pre-Poisson bracket on 1-forms, the
product rule, and graded antisymmetry). The graded Jacobi identity of that
bracket holds exactly when the metacurvature tensor vanishes; then the forms
carry a differential graded Poisson algebra.
"""

from plie import (
    FormElement,
    InvariantComplex,
    LieAlgebra,
    LieBialgebra,
    MetricForm,
    ce_differential,
    graded_bracket,
    graded_jacobi_defect,
    is_metaflat,
    metacurvature,
    pre_poisson_bracket,
)

e = FormElement.basis_covector
euclid = MetricForm.identity(3)

heis = LieAlgebra(3, {(0, 1): [0, 0, 1]})
solvable_dual = LieAlgebra(3, {(0, 2): [1, 0, 0], (1, 2): [0, 1, 0]})
bi = LieBialgebra(heis, solvable_dual)
cx = InvariantComplex.from_bialgebra(bi, euclid)

# ----------------------------------------------------------------------
# the differential and the bracket on 1-forms
# ----------------------------------------------------------------------

print("d e3 =", ce_differential(cx, e(3, 3)))
print("d(d e3) =", ce_differential(cx, ce_differential(cx, e(3, 3))))

for i, j in [(1, 1), (1, 3), (3, 3)]:
    value = pre_poisson_bracket(cx, e(3, i), e(3, j))
    print(f"{{e{i}, e{j}}} =", value)

# the bracket extends to all degrees through the product rule
print("{e1, e2^e3} =", graded_bracket(cx, e(3, 1), FormElement(3, {(2, 3): 1})))

# ----------------------------------------------------------------------
# metacurvature: this entry is NOT metaflat
# ----------------------------------------------------------------------

meta = metacurvature(cx)
print("\nmetaflat:", is_metaflat(cx))
nonzero = [(k, v) for k, v in sorted(meta.entries.items()) if not v.is_zero()]
print("first nonzero metacurvature entry:", nonzero[0])

# the graded Jacobi defect sees the same obstruction
defect = graded_jacobi_defect(cx, e(3, 1), e(3, 1), e(3, 3))
print("a graded Jacobi defect:", defect)

# ----------------------------------------------------------------------
# a metaflat entry for contrast: abelian base kills the differential
# ----------------------------------------------------------------------

flat_bi = LieBialgebra(LieAlgebra.abelian(3), solvable_dual)
flat_cx = InvariantComplex.from_bialgebra(flat_bi, euclid)
print("\nabelian-base entry metaflat:", is_metaflat(flat_cx))
print("its Jacobi defect on the same triple:",
      graded_jacobi_defect(flat_cx, e(3, 1), e(3, 1), e(3, 3)))
