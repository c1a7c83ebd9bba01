"""Exact scalars, tensors, and the exterior algebra.

Everything in this library computes over Q: scalars are Fractions, equality
means exact equality, and there is no epsilon anywhere. This script walks
through the low-level carriers the geometry is built on.
"""

from fractions import Fraction

from plie import FormElement, Tensor, solve_linear, tensor_contract, wedge

# ----------------------------------------------------------------------
# Rational tensors
# ----------------------------------------------------------------------

identity = Tensor.from_function((3, 3), lambda idx: Fraction(int(idx[0] == idx[1])))
print("trace of the 3x3 identity:", tensor_contract(identity, 0, 1)[()])

rhs = Tensor((3,), ["1", "1/2", "-2/3"])
solution = solve_linear(identity, rhs)
print("identity system solution:", [str(v) for v in solution.to_vector()])

# an exact solve of a less trivial system
m = Tensor((2, 2), ["2", "1", "1", "1"])
x = solve_linear(m, Tensor((2,), ["1", "0"]))
print("[[2,1],[1,1]] x = (1,0) gives x =", [str(v) for v in x.to_vector()])

# ----------------------------------------------------------------------
# The exterior algebra on basis covectors e1..en
# ----------------------------------------------------------------------

e1 = FormElement.basis_covector(3, 1)
e2 = FormElement.basis_covector(3, 2)
e3 = FormElement.basis_covector(3, 3)

print("\ne1 ^ e2 =", wedge(e1, e2))
print("e2 ^ e1 =", wedge(e2, e1))
print("e1 ^ e1 =", wedge(e1, e1))

# graded commutativity: 1-forms anticommute, even forms are central
two_form = wedge(e1, e2)
print("(e1^e2) ^ e3 == e1 ^ (e2^e3):", wedge(two_form, e3) == wedge(e1, wedge(e2, e3)))
print("(e1^e2) ^ e3 == e3 ^ (e1^e2):", wedge(two_form, e3) == wedge(e3, two_form))

# coefficients stay exact rationals throughout
mixed = e1 * Fraction(1, 3) + wedge(e2, e3) * Fraction(-5, 7)
print("\na mixed-degree element:", mixed)
print("its degree-2 part:", mixed.homogeneous_part(2))
