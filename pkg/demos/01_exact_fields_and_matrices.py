#!/usr/bin/env python3
# Tour of the exact arithmetic layer: field elements, matrices,
# characteristic polynomials and root finding. Everything is exact --
# fractions stay fractions, residues stay residues.

from leonardkit import (
    GF,
    QQ,
    Polynomial,
    SquareMatrix,
    char_poly,
    inverse,
    kernel_basis,
    roots_in_field,
)

# field elements carry their field and refuse to mix
half = QQ.element("1/2")
print("1/2 + 1/3 =", half + QQ.element("1/3"))

f5 = GF(5)
print("3 * 4 in GF(5) =", f5.element(3) * f5.element(4))
print("inverse of 3 in GF(5) =", f5.one / f5.element(3))

# matrices are immutable values; the inverse is exact, never approximate
m = SquareMatrix.from_rows(QQ, [["1", "1/2"], ["1/3", "1"]])
m_inv = inverse(m)
print("\nm^-1 =", m_inv)
print("m^-1 m == I:", m_inv @ m == SquareMatrix.identity(QQ, 2))

# the characteristic polynomial comes from a division-free recursion,
# so it also works over small prime fields where dim exceeds p
rot = SquareMatrix.from_rows(QQ, [[0, -1], [1, 0]])
print("\nchar poly of a rotation:", char_poly(rot))
print("its rational roots:", roots_in_field(char_poly(rot)))

p = Polynomial.from_coeffs(f5, [1, 0, 1])  # x^2 + 1
print("roots of x^2 + 1 over GF(5):", [(str(r), m) for r, m in roots_in_field(p)])

# exact kernels: each basis vector is scaled to leading entry 1
ones = SquareMatrix.from_rows(QQ, [[1, 1], [1, 1]])
print("\nkernel of the all-ones matrix:", kernel_basis(ones))
