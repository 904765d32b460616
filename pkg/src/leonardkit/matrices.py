"""Dense exact linear algebra over the rationals and GF(p).

Matrices, vectors and polynomials are immutable value types carrying
their field descriptor.  Internally entries are stored as raw machine
values (``Fraction`` or ``int`` residues) so the elimination and
multiplication kernels stay fast; the public accessors hand out
``FieldElement`` objects.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

from ._intfactor import divisors
from .errors import (
    DescriptorMismatch,
    DimMismatch,
    InvariantViolation,
    ModulusTooLarge,
    Singular,
)
from .fields import Field, FieldElement, PrimeField, Raw

DEFAULT_RESIDUE_SEARCH_BOUND = 10**6


def _same_field(a: Field, b: Field) -> None:
    if a != b:
        raise DescriptorMismatch(f"operands live in different fields: {a!r} vs {b!r}")


# ---------------------------------------------------------------------------
# vectors


class Vector:
    """Immutable column vector over a field."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries: Sequence[Raw]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "entries", tuple(entries))
        if not self.entries:
            raise DimMismatch("vectors must have dimension >= 1")

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def from_entries(cls, field: Field, entries: Iterable) -> "Vector":
        return cls(field, [field.coerce(e) for e in entries])

    @classmethod
    def unit(cls, field: Field, dim: int, index: int) -> "Vector":
        one = field.coerce(1)
        zero = field.coerce(0)
        return cls(field, [one if i == index else zero for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.entries[i])

    def __iter__(self):
        return (FieldElement(self.field, e) for e in self.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def first_nonzero(self) -> Optional[int]:
        for i, e in enumerate(self.entries):
            if e:
                return i
        return None

    def __add__(self, other: "Vector") -> "Vector":
        _same_field(self.field, other.field)
        if self.dim != other.dim:
            raise DimMismatch("vector dimensions differ")
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return Vector(field, [(a + b) % p for a, b in zip(self.entries, other.entries)])
        return Vector(field, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "Vector") -> "Vector":
        return self + (-other)

    def __neg__(self) -> "Vector":
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return Vector(field, [(-a) % p for a in self.entries])
        return Vector(field, [-a for a in self.entries])

    def scale(self, scalar) -> "Vector":
        c = self.field.coerce(scalar)
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return Vector(field, [a * c % p for a in self.entries])
        return Vector(field, [a * c for a in self.entries])

    def normalized(self) -> "Vector":
        """Scale so the first nonzero entry equals 1."""
        i = self.first_nonzero()
        if i is None:
            raise InvariantViolation("cannot normalize the zero vector")
        return self.scale(self.field.raw_inv(self.entries[i]) if isinstance(self.field, PrimeField) else 1 / self.entries[i])

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return "(" + ", ".join(self.field.format(e) for e in self.entries) + ")"

    def to_strings(self) -> list[str]:
        return [self.field.format(e) for e in self.entries]


def colinear(u: Vector, v: Vector) -> bool:
    """True iff u and v are nonzero scalar multiples of each other."""
    _same_field(u.field, v.field)
    if u.dim != v.dim or u.is_zero() or v.is_zero():
        return False
    return u.normalized() == v.normalized()


# ---------------------------------------------------------------------------
# matrices


class SquareMatrix:
    """Immutable dense square matrix over a field.

    ``rows`` holds canonical raw entries; use :meth:`from_rows` to build
    one from arbitrary coercible entries.
    """

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Sequence[Sequence[Raw]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimMismatch("square matrix requires n rows of n entries, n >= 1")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SquareMatrix is immutable")

    @classmethod
    def from_rows(cls, field: Field, entries: Sequence[Sequence]) -> "SquareMatrix":
        return cls(field, [[field.coerce(e) for e in row] for row in entries])

    @classmethod
    def identity(cls, field: Field, dim: int) -> "SquareMatrix":
        one = field.coerce(1)
        zero = field.coerce(0)
        return cls(field, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, field: Field, dim: int) -> "SquareMatrix":
        zero = field.coerce(0)
        return cls(field, [[zero] * dim for _ in range(dim)])

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence["Vector"]) -> "SquareMatrix":
        for col in columns:
            _same_field(field, col.field)
        return cls(field, [[col.entries[i] for col in columns] for i in range(len(columns))])

    @classmethod
    def diagonal(cls, field: Field, diag: Sequence) -> "SquareMatrix":
        vals = [field.coerce(v) for v in diag]
        zero = field.coerce(0)
        n = len(vals)
        return cls(field, [[vals[i] if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, key) -> FieldElement:
        i, j = key
        return FieldElement(self.field, self.rows[i][j])

    def row(self, i: int) -> Vector:
        return Vector(self.field, self.rows[i])

    def column(self, j: int) -> Vector:
        return Vector(self.field, [r[j] for r in self.rows])

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(self.field, tuple(zip(*self.rows)))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        _same_field(self.field, other.field)
        if self.dim != other.dim:
            raise DimMismatch("matrix dimensions differ")
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return SquareMatrix(
                field,
                [[(a + b) % p for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            )
        return SquareMatrix(
            field, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "SquareMatrix") -> "SquareMatrix":
        return self + (-other)

    def __neg__(self) -> "SquareMatrix":
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return SquareMatrix(field, [[(-a) % p for a in r] for r in self.rows])
        return SquareMatrix(field, [[-a for a in r] for r in self.rows])

    def scale(self, scalar) -> "SquareMatrix":
        c = self.field.coerce(scalar)
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return SquareMatrix(field, [[a * c % p for a in r] for r in self.rows])
        return SquareMatrix(field, [[a * c for a in r] for r in self.rows])

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        _same_field(self.field, other.field)
        if self.dim != other.dim:
            raise DimMismatch("matrix dimensions differ")
        return SquareMatrix(self.field, _raw_matmul(self.rows, other.rows, self.field))

    def apply(self, vec: Vector) -> Vector:
        _same_field(self.field, vec.field)
        if self.dim != vec.dim:
            raise DimMismatch("matrix and vector dimensions differ")
        field = self.field
        v = vec.entries
        if isinstance(field, PrimeField):
            p = field.modulus
            return Vector(field, [sum(map(operator.mul, r, v)) % p for r in self.rows])
        return Vector(field, [sum(map(operator.mul, r, v)) for r in self.rows])

    def power(self, k: int) -> "SquareMatrix":
        if k < 0:
            raise ValueError("negative matrix powers are not supported; invert first")
        result = SquareMatrix.identity(self.field, self.dim)
        for _ in range(k):
            result = result @ self
        return result

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(e) for e in r) for r in self.rows)
        return f"[{body}]"

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(e) for e in r] for r in self.rows]


def _int_scaled(rows) -> tuple[list[list[int]], int]:
    # clear denominators so the inner product runs on machine integers
    scale = 1
    for row in rows:
        for x in row:
            d = x.denominator
            scale = scale * d // gcd(scale, d)
    ints = [[x.numerator * (scale // x.denominator) for x in row] for row in rows]
    return ints, scale


def _raw_matmul(rows_a, rows_b, field: Field):
    cols_b = tuple(zip(*rows_b))
    mul = operator.mul
    if isinstance(field, PrimeField):
        p = field.modulus
        return tuple(
            tuple(sum(map(mul, ra, cb)) % p for cb in cols_b) for ra in rows_a
        )
    # rationals: integer-scale both factors, one Fraction reduction per entry
    ints_a, scale_a = _int_scaled(rows_a)
    ints_b, scale_b = _int_scaled(rows_b)
    cols_b = tuple(zip(*ints_b))
    scale = scale_a * scale_b
    return tuple(
        tuple(Fraction(sum(map(mul, ra, cb)), scale) for cb in cols_b) for ra in ints_a
    )


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    """Exact matrix product."""
    return a @ b


# ---------------------------------------------------------------------------
# elimination kernels


def _rref(rows: list[list[Raw]], field: Field) -> list[int]:
    """In-place reduced row echelon form; returns the pivot column list."""
    nrows = len(rows)
    if nrows == 0:
        return []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    if isinstance(field, PrimeField):
        p = field.modulus
        for c in range(ncols):
            pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = pow(rows[r][c], -1, p)
            rows[r] = [x * inv % p for x in rows[r]]
            prow = rows[r]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
    else:
        for c in range(ncols):
            pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            prow = rows[r]
            for i in range(nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
    return pivots


def _kernel_raw(rows: Sequence[Sequence[Raw]], ncols: int, field: Field) -> list[list[Raw]]:
    """Basis of the right kernel of a (possibly rectangular) matrix."""
    work = [list(r) for r in rows]
    pivots = _rref(work, field)
    pivot_set = set(pivots)
    zero = field.coerce(0)
    one = field.coerce(1)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [zero] * ncols
        vec[free] = one
        if isinstance(field, PrimeField):
            p = field.modulus
            for r, pc in enumerate(pivots):
                vec[pc] = (-work[r][free]) % p
        else:
            for r, pc in enumerate(pivots):
                vec[pc] = -work[r][free]
        basis.append(vec)
    return basis


def kernel_basis(m: SquareMatrix) -> list[Vector]:
    """Exact basis of the null space, each vector scaled to leading 1.

    Returns the empty list when ``m`` is invertible.
    """
    raw = _kernel_raw(m.rows, m.dim, m.field)
    return [Vector(m.field, v).normalized() for v in raw]


def rank_of_vectors(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    field = vectors[0].field
    work = [list(v.entries) for v in vectors]
    return len(_rref(work, field))


def span_equal(left: Sequence[Vector], right: Sequence[Vector]) -> bool:
    """Exact equality of spans, decided by ranks of stacked spanners."""
    rl = rank_of_vectors(left)
    rr = rank_of_vectors(right)
    if rl != rr:
        return False
    return rank_of_vectors(list(left) + list(right)) == rl


def span_intersection(left: Sequence[Vector], right: Sequence[Vector]) -> list[Vector]:
    """Basis of the intersection of two spans.

    Solves ``sum a_i l_i = sum b_j r_j`` through the kernel of the
    column-stacked system ``[L | -R]``.
    """
    if not left or not right:
        return []
    field = left[0].field
    n = left[0].dim
    cols = [list(v.entries) for v in left] + [list((-v).entries) for v in right]
    stacked = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
    kernel = _kernel_raw(stacked, len(cols), field)
    result = []
    seen_rows: list[Vector] = []
    for coeffs in kernel:
        combo = None
        for a, vec in zip(coeffs[: len(left)], left):
            term = vec.scale(a)
            combo = term if combo is None else combo + term
        if combo is None or combo.is_zero():
            continue
        if not span_equal(seen_rows + [combo], seen_rows):
            seen_rows.append(combo)
            result.append(combo.normalized())
    return result


def inverse(m: SquareMatrix) -> SquareMatrix:
    """Exact inverse via Gauss-Jordan elimination."""
    n = m.dim
    field = m.field
    ident = SquareMatrix.identity(field, n)
    work = [list(r) + list(i) for r, i in zip(m.rows, ident.rows)]
    pivots = _rref(work, field)
    if pivots != list(range(n)):
        raise Singular("matrix is singular")
    return SquareMatrix(field, [row[n:] for row in work])


def is_invertible(m: SquareMatrix) -> bool:
    work = [list(r) for r in m.rows]
    return len(_rref(work, m.field)) == m.dim


def represented_in(m: SquareMatrix, basis: Sequence[Vector]) -> SquareMatrix:
    """Matrix of ``m`` with respect to a basis given as column vectors: P^-1 m P."""
    p = SquareMatrix.from_columns(m.field, basis)
    return inverse(p) @ m @ p


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Polynomial with exact coefficients, stored lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Sequence[Raw]):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_coeffs(cls, field: Field, coeffs: Iterable) -> "Polynomial":
        return cls(field, [field.coerce(c) for c in coeffs])

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable) -> "Polynomial":
        """Monic product of (lambda - r) over the given roots."""
        poly = cls(field, [field.coerce(1)])
        for r in roots:
            poly = poly * cls(field, [-field.coerce(r), field.coerce(1)])
        return poly

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> FieldElement:
        raw = self.coeffs[i] if i < len(self.coeffs) else self.field.coerce(0)
        return FieldElement(self.field, raw)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        _same_field(self.field, other.field)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        merged = list(a)
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            for i, c in enumerate(b):
                merged[i] = (merged[i] + c) % p
        else:
            for i, c in enumerate(b):
                merged[i] = merged[i] + c
        return Polynomial(field, merged)

    def __neg__(self) -> "Polynomial":
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return Polynomial(field, [(-c) % p for c in self.coeffs])
        return Polynomial(field, [-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        _same_field(self.field, other.field)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field, [])
        field = self.field
        out = [field.coerce(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        if isinstance(field, PrimeField):
            p = field.modulus
            out = [c % p for c in out]
        return Polynomial(field, out)

    def scale(self, scalar) -> "Polynomial":
        c = self.field.coerce(scalar)
        field = self.field
        if isinstance(field, PrimeField):
            p = field.modulus
            return Polynomial(field, [a * c % p for a in self.coeffs])
        return Polynomial(field, [a * c for a in self.coeffs])

    def shift_up(self, k: int = 1) -> "Polynomial":
        """Multiply by lambda**k."""
        if self.is_zero():
            return self
        zero = self.field.coerce(0)
        return Polynomial(self.field, [zero] * k + list(self.coeffs))

    def eval_raw(self, x: Raw) -> Raw:
        field = self.field
        acc = field.coerce(0)
        if isinstance(field, PrimeField):
            p = field.modulus
            for c in reversed(self.coeffs):
                acc = (acc * x + c) % p
        else:
            for c in reversed(self.coeffs):
                acc = acc * x + c
        return acc

    def __call__(self, x) -> FieldElement:
        return FieldElement(self.field, self.eval_raw(self.field.coerce(x)))

    def deflate(self, root: Raw) -> "Polynomial":
        """Exact synthetic division by (lambda - root); root must be a root."""
        field = self.field
        n = self.degree
        if n < 1:
            raise InvariantViolation("cannot deflate a constant polynomial")
        quot = [field.coerce(0)] * n
        acc = self.coeffs[n]
        if isinstance(field, PrimeField):
            p = field.modulus
            for k in range(n - 1, -1, -1):
                quot[k] = acc
                acc = (self.coeffs[k] + root * acc) % p
        else:
            for k in range(n - 1, -1, -1):
                quot[k] = acc
                acc = self.coeffs[k] + root * acc
        if acc:
            raise InvariantViolation("deflation by a non-root")
        return Polynomial(field, quot)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            s = self.field.format(c)
            terms.append(s if i == 0 else (f"({s})*x^{i}" if i > 1 else f"({s})*x"))
        return " + ".join(terms)


# ---------------------------------------------------------------------------
# characteristic polynomial and roots


def char_poly(m: SquareMatrix) -> Polynomial:
    """Monic characteristic polynomial det(lambda*I - m).

    Uses the division-free Berkowitz recursion, which is valid over any
    field including GF(p) with p <= dim.
    """
    field = m.field
    n = m.dim
    rows = m.rows
    p = field.modulus if isinstance(field, PrimeField) else None
    # descending coefficient vector for the trailing 1x1 principal block
    vec: list[Raw] = [field.coerce(1), -rows[n - 1][n - 1] if p is None else (-rows[n - 1][n - 1]) % p]
    mul = operator.mul
    for i in range(n - 2, -1, -1):
        a = rows[i][i]
        r_row = rows[i][i + 1 :]
        c_col = [rows[k][i] for k in range(i + 1, n)]
        block = [row[i + 1 :] for row in rows[i + 1 :]]
        # Toeplitz column: 1, -a, -R C, -R B C, ..., -R B^{n-i-2} C
        toep: list[Raw] = [field.coerce(1), (-a) % p if p is not None else -a]
        w = c_col
        for _ in range(len(block)):
            s = sum(map(mul, r_row, w))
            toep.append((-s) % p if p is not None else -s)
            if len(toep) == n - i + 1:
                break
            if p is not None:
                w = [sum(map(mul, br, w)) % p for br in block]
            else:
                w = [sum(map(mul, br, w)) for br in block]
        out: list[Raw] = []
        for k in range(n - i + 1):
            s = field.coerce(0)
            for j, vj in enumerate(vec):
                if 0 <= k - j < len(toep):
                    s = s + toep[k - j] * vj
            out.append(s % p if p is not None else s)
        vec = out
    return Polynomial(field, list(reversed(vec)))


def _rational_roots(poly: Polynomial) -> list[tuple[Fraction, int]]:
    coeffs = list(poly.coeffs)
    # roots at zero: multiplicity equals the index of the first nonzero coeff
    zero_mult = 0
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        zero_mult += 1
    found: list[tuple[Fraction, int]] = []
    if zero_mult:
        found.append((Fraction(0), zero_mult))
    work = Polynomial(poly.field, coeffs)
    if work.degree < 1:
        return found
    # clear denominators and content to get a primitive integer polynomial
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]
    lead = ints[-1]
    trail = ints[0]
    candidates = set()
    for num in divisors(trail):
        for den in divisors(lead):
            candidates.add(Fraction(num, den))
            candidates.add(Fraction(-num, den))
    for cand in sorted(candidates):
        mult = 0
        while work.degree >= 1 and work.eval_raw(cand) == 0:
            work = work.deflate(cand)
            mult += 1
        if mult:
            found.append((cand, mult))
        if work.degree < 1:
            break
    found.sort(key=lambda t: t[0])
    return found


def _prime_field_roots(poly: Polynomial, bound: int) -> list[tuple[int, int]]:
    field = poly.field
    p = field.modulus
    if p > bound:
        raise ModulusTooLarge(
            f"exhaustive root search over GF({p}) exceeds the bound {bound}"
        )
    found: list[tuple[int, int]] = []
    work = poly
    for r in range(p):
        if work.degree < 1:
            break
        mult = 0
        while work.degree >= 1 and work.eval_raw(r) == 0:
            work = work.deflate(r)
            mult += 1
        if mult:
            found.append((r, mult))
    return found


def roots_in_field(
    poly: Polynomial, *, residue_search_bound: int = DEFAULT_RESIDUE_SEARCH_BOUND
) -> list[tuple[FieldElement, int]]:
    """All roots of ``poly`` lying in its field, with multiplicities.

    Over the rationals this is the rational root theorem with
    synthetic-division deflation; over GF(p) every residue is tested,
    provided p does not exceed ``residue_search_bound``.
    """
    if poly.is_zero():
        raise InvariantViolation("the zero polynomial has every element as a root")
    field = poly.field
    if poly.degree == 0:
        return []
    if poly.degree == 1:
        # -c0/c1, no search needed in any field
        root = FieldElement(field, poly.coeffs[0]) / FieldElement(field, poly.coeffs[1])
        return [(-root, 1)]
    if isinstance(field, PrimeField):
        pairs = _prime_field_roots(poly, residue_search_bound)
    else:
        pairs = _rational_roots(poly)
    return [(FieldElement(field, r), m) for r, m in pairs]


def eval_poly_at_matrix(poly: Polynomial, m: SquareMatrix) -> SquareMatrix:
    """Horner evaluation of ``poly`` at a square matrix."""
    _same_field(poly.field, m.field)
    field = m.field
    n = m.dim
    if poly.is_zero():
        return SquareMatrix.zeros(field, n)
    acc = SquareMatrix.identity(field, n).scale(FieldElement(field, poly.coeffs[-1]))
    for c in reversed(poly.coeffs[:-1]):
        acc = acc @ m
        acc = acc + SquareMatrix.identity(field, n).scale(FieldElement(field, c))
    return acc
