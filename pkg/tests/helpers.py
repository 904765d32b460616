"""Shared builders and independent reference routines for the test suite.

The naive_* functions deliberately avoid the library's linear algebra so
they can serve as oracles for it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from leonardkit import (
    GF,
    QQ,
    Field,
    ParameterArray,
    SquareMatrix,
    inverse,
    is_invertible,
)

# the worked d=2 fixture used throughout: theta = theta* = (2, 0, -2),
# split sequence (-4, -4), companion sequence (4, 4)
D2_THETA = (2, 0, -2)
D2_VARPHI = (-4, -4)


def make_array(field: Field, theta, theta_star, varphi) -> ParameterArray:
    return ParameterArray(
        field=field,
        theta=tuple(field.element(v) for v in theta),
        theta_star=tuple(field.element(v) for v in theta_star),
        varphi=tuple(field.element(v) for v in varphi),
    )


def d2_array(field: Field = QQ, varphi=D2_VARPHI) -> ParameterArray:
    return make_array(field, D2_THETA, D2_THETA, varphi)


# ---------------------------------------------------------------------------
# naive reference arithmetic (plain lists, no library code)


def naive_matmul(a: list[list], b: list[list]) -> list[list]:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def naive_scale(a: list[list], c) -> list[list]:
    return [[x * c for x in row] for row in a]


def naive_sub_scalar_diag(a: list[list], c) -> list[list]:
    return [[a[i][j] - (c if i == j else 0) for j in range(len(a))] for i in range(len(a))]


def naive_is_zero(a: list[list]) -> bool:
    return all(not x for row in a for x in row)


def naive_idempotents(a: list[list], eigenvalues: list[Fraction]) -> list[list[list]]:
    """Projector family via the product formula, plain Fractions."""
    n = len(a)
    out = []
    for i, ti in enumerate(eigenvalues):
        prod = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
        for j, tj in enumerate(eigenvalues):
            if i == j:
                continue
            prod = naive_matmul(prod, naive_sub_scalar_diag(a, tj))
            prod = naive_scale(prod, Fraction(1, 1) / (ti - tj))
        out.append(prod)
    return out


def fl_char_poly_coeffs(m: SquareMatrix) -> list[Fraction]:
    """Faddeev-LeVerrier characteristic coefficients, lowest degree first.

    Rationals only (divides by 1..n); serves as an independent oracle for
    the division-free route.
    """
    n = m.dim
    a = [[Fraction(x) for x in row] for row in m.rows]
    ident = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    coeffs_desc = [Fraction(1)]
    mk = [[Fraction(0)] * n for _ in range(n)]
    ck = Fraction(1)
    for k in range(1, n + 1):
        mk = naive_matmul(a, [[mk[i][j] + (ck if i == j else 0) for j in range(n)] for i in range(n)])
        ck = -sum(mk[i][i] for i in range(n)) / k
        coeffs_desc.append(ck)
    return list(reversed(coeffs_desc))


# ---------------------------------------------------------------------------
# random instance builders


def random_matrix(rng: random.Random, field: Field, n: int) -> SquareMatrix:
    if field == QQ:
        return SquareMatrix.from_rows(
            field, [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        )
    p = field.modulus
    return SquareMatrix.from_rows(
        field, [[rng.randrange(p) for _ in range(n)] for _ in range(n)]
    )


def random_invertible(rng: random.Random, field: Field, n: int) -> SquareMatrix:
    while True:
        m = random_matrix(rng, field, n)
        if is_invertible(m):
            return m


def random_mult_free(rng: random.Random, field: Field, n: int) -> SquareMatrix:
    """Random matrix with n distinct in-field eigenvalues.

    Conjugates a triangular matrix with distinct diagonal by a random
    invertible matrix, so the spectrum is known and fully split.
    """
    if field == QQ:
        diag = rng.sample(range(-12, 13), n)
        tri = [
            [rng.randint(-5, 5) if j < i else (diag[i] if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    else:
        p = field.modulus
        diag = rng.sample(range(p), n)
        tri = [
            [rng.randrange(p) if j < i else (diag[i] if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    m = SquareMatrix.from_rows(field, tri)
    g = random_invertible(rng, field, n)
    return inverse(g) @ m @ g
