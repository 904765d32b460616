"""Split decompositions: vanishing patterns, existence, construction, witnesses.

Given multiplicity-free A, A* with ordered projectors E_i, E*_i, the
central objects are the triple products E*_i A E*_j and E_i A* E_j.
A decomposition U_0..U_d of the column space is *split* when A - t_i I
shifts U_i up to U_{i+1} and A* - t*_i I shifts it down to U_{i-1}; it
exists precisely when the E*-side products vanish below the subdiagonal
with a fully nonzero subdiagonal, and the E-side products do the same
above the superdiagonal.  Construction, uniqueness witnesses, graded
polynomial sequences, and the subspace identities all live here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimMismatch, InvariantViolation, PatternViolation, SplitDoesNotExist
from .fields import FieldElement
from .matrices import (
    Polynomial,
    SquareMatrix,
    Vector,
    colinear,
    eval_poly_at_matrix,
    rank_of_vectors,
    represented_in,
    span_equal,
    span_intersection,
)
from .spectral import SpectralData, eigenspace, spectral_data


class PatternClass(enum.Enum):
    LOWER = "LowerPattern"
    UPPER = "UpperPattern"
    IRREDUCIBLE_TRIDIAGONAL = "IrreducibleTridiagonal"
    OTHER = "Other"


@dataclass(frozen=True)
class ZeroPattern:
    """Boolean table: entry (i, j) is True iff the (i, j) triple product is zero."""

    vanishes: tuple[tuple[bool, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.vanishes)

    def lower_violation(self) -> Optional[tuple[int, int, str]]:
        """First (i, j, expected) breaking the subdiagonal-support condition."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                if i - j > 1 and not self.vanishes[i][j]:
                    return (i, j, "zero")
                if i - j == 1 and self.vanishes[i][j]:
                    return (i, j, "nonzero")
        return None

    def upper_violation(self) -> Optional[tuple[int, int, str]]:
        """First (i, j, expected) breaking the superdiagonal-support condition."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                if j - i > 1 and not self.vanishes[i][j]:
                    return (i, j, "zero")
                if j - i == 1 and self.vanishes[i][j]:
                    return (i, j, "nonzero")
        return None

    def classify(self) -> PatternClass:
        lower = self.lower_violation() is None
        upper = self.upper_violation() is None
        if lower and upper:
            return PatternClass.IRREDUCIBLE_TRIDIAGONAL
        if lower:
            return PatternClass.LOWER
        if upper:
            return PatternClass.UPPER
        return PatternClass.OTHER


def zero_pattern(a: SquareMatrix, sd_star: SpectralData) -> ZeroPattern:
    """Vanishing table of the products E*_i a E*_j, computed definitionally."""
    if a.dim != sd_star.dim:
        raise DimMismatch("matrix and spectral data dimensions differ")
    if a.field != sd_star.matrix.field:
        raise DimMismatch("matrix and spectral data fields differ")
    idems = sd_star.idempotents
    left = [e @ a for e in idems]
    table = tuple(
        tuple((left[i] @ idems[j]).is_zero() for j in range(sd_star.dim))
        for i in range(sd_star.dim)
    )
    return ZeroPattern(vanishes=table)


def classify_pattern(zp: ZeroPattern) -> PatternClass:
    """Which of the four support classes the table belongs to."""
    return zp.classify()


@dataclass(frozen=True)
class Decomposition:
    """A direct-sum decomposition into 1-dimensional subspaces, one spanner each."""

    spanners: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.spanners)

    def verify(self) -> None:
        if rank_of_vectors(list(self.spanners)) != self.dim:
            raise InvariantViolation("spanners are linearly dependent")


@dataclass(frozen=True)
class SplitCertificate:
    """A split decomposition in raising-normalized form with its split sequence.

    The spanners satisfy (A - t_i I) u_i = u_{i+1} and
    (A* - t*_i I) u_i = phi_i u_{i-1} with every phi_i nonzero.
    """

    decomposition: Decomposition
    split_sequence: tuple[FieldElement, ...]
    theta_order: tuple[FieldElement, ...]
    theta_star_order: tuple[FieldElement, ...]

    @property
    def dim(self) -> int:
        return self.decomposition.dim

    def u(self, i: int) -> Vector:
        return self.decomposition.spanners[i]


def _pattern_pair(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]],
    theta_star_order: Optional[Sequence[FieldElement]],
) -> tuple[SpectralData, SpectralData, ZeroPattern, ZeroPattern]:
    sd = spectral_data(a, theta_order)
    sd_star = spectral_data(a_star, theta_star_order)
    return sd, sd_star, zero_pattern(a, sd_star), zero_pattern(a_star, sd)


def exists_split(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]] = None,
    theta_star_order: Optional[Sequence[FieldElement]] = None,
) -> bool:
    """Decide split existence from the two vanishing patterns alone."""
    _, _, zp_dual, zp_primal = _pattern_pair(a, a_star, theta_order, theta_star_order)
    dual_ok = zp_dual.classify() in (PatternClass.LOWER, PatternClass.IRREDUCIBLE_TRIDIAGONAL)
    primal_ok = zp_primal.classify() in (PatternClass.UPPER, PatternClass.IRREDUCIBLE_TRIDIAGONAL)
    return dual_ok and primal_ok


def build_split(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]] = None,
    theta_star_order: Optional[Sequence[FieldElement]] = None,
) -> SplitCertificate:
    """Construct the split decomposition and read off its split sequence.

    The spanners are u_i = (A - t_{i-1} I) ... (A - t_0 I) v*_0 for a
    deterministic spanner v*_0 of the 0-th eigenspace of A*.  Every
    certificate invariant is verified before returning; any failure
    raises SplitDoesNotExist, so success is itself a proof of existence
    independent of the pattern test.
    """
    sd = spectral_data(a, theta_order)
    sd_star = spectral_data(a_star, theta_star_order)
    field = a.field
    n = a.dim
    d = n - 1
    ident = SquareMatrix.identity(field, n)
    theta = sd.eigenvalues
    theta_star = sd_star.eigenvalues

    v0 = eigenspace(sd_star, 0)
    spanners = [v0]
    for i in range(d):
        spanners.append((a - ident.scale(theta[i])).apply(spanners[i]))
    if rank_of_vectors(spanners) != n:
        raise SplitDoesNotExist("iterated raising vectors are linearly dependent")
    if not (a - ident.scale(theta[d])).apply(spanners[d]).is_zero():
        raise SplitDoesNotExist("top spanner is not annihilated by A - theta_d I")
    if not (a_star - ident.scale(theta_star[0])).apply(spanners[0]).is_zero():
        raise SplitDoesNotExist("bottom spanner is not annihilated by A* - theta*_0 I")

    split_sequence = []
    for i in range(1, n):
        lowered = (a_star - ident.scale(theta_star[i])).apply(spanners[i])
        prev = spanners[i - 1]
        k = prev.first_nonzero()
        phi = lowered[k] / prev[k]
        if phi.is_zero() or lowered != prev.scale(phi):
            raise SplitDoesNotExist(
                f"A* - theta*_{i} I does not lower spanner {i} onto spanner {i - 1}"
            )
        split_sequence.append(phi)

    decomposition = Decomposition(spanners=tuple(spanners))
    decomposition.verify()
    return SplitCertificate(
        decomposition=decomposition,
        split_sequence=tuple(split_sequence),
        theta_order=tuple(theta),
        theta_star_order=tuple(theta_star),
    )


def split_uniqueness_witness(
    cert: SplitCertificate,
    a: SquareMatrix,
    a_star: SquareMatrix,
    sd: SpectralData,
    sd_star: SpectralData,
) -> bool:
    """Check each spanner against both closed-form subspace products.

    span(u_i) must equal (A - t_{i-1} I)...(A - t_0 I) E*_0 V and also
    (A* - t*_{i+1} I)...(A* - t*_d I) E_d V.
    """
    field = a.field
    n = a.dim
    d = n - 1
    ident = SquareMatrix.identity(field, n)
    theta = cert.theta_order
    theta_star = cert.theta_star_order

    up = eigenspace(sd_star, 0)
    ups = [up]
    for h in range(d):
        up = (a - ident.scale(theta[h])).apply(up)
        ups.append(up)

    down = eigenspace(sd, d)
    downs = [down]
    for h in range(d, 0, -1):
        down = (a_star - ident.scale(theta_star[h])).apply(down)
        downs.append(down)
    downs.reverse()  # downs[i] = prod_{h=i+1..d} (A* - t*_h I) applied to v_d

    for i in range(n):
        u_i = cert.u(i)
        if not colinear(u_i, ups[i]):
            return False
        if not colinear(u_i, downs[i]):
            return False
    return True


def subspace_identities(
    cert: SplitCertificate,
    a: SquareMatrix,
    a_star: SquareMatrix,
    sd: SpectralData,
    sd_star: SpectralData,
) -> bool:
    """Verify the five prefix/suffix/intersection identities of a split decomposition.

    For every i: the prefix sum of the U_h equals both the Krylov prefix
    A^h E*_0 V (h <= i) and the E*-eigenspace prefix; the suffix sum
    equals both the A*-Krylov prefix from E_d V and the E-eigenspace
    suffix; and U_i is the intersection of the E*-prefix with the
    E-suffix.
    """
    n = a.dim
    d = n - 1
    u = list(cert.decomposition.spanners)
    v_star = [eigenspace(sd_star, h) for h in range(n)]
    v = [eigenspace(sd, h) for h in range(n)]

    krylov_up = [eigenspace(sd_star, 0)]
    for _ in range(d):
        krylov_up.append(a.apply(krylov_up[-1]))
    krylov_down = [eigenspace(sd, d)]
    for _ in range(d):
        krylov_down.append(a_star.apply(krylov_down[-1]))

    for i in range(n):
        prefix_u = u[: i + 1]
        suffix_u = u[i:]
        if not span_equal(prefix_u, krylov_up[: i + 1]):
            return False
        if not span_equal(prefix_u, v_star[: i + 1]):
            return False
        if not span_equal(suffix_u, krylov_down[: d - i + 1]):
            return False
        if not span_equal(suffix_u, v[i:]):
            return False
        meet = span_intersection(v_star[: i + 1], v[i:])
        if len(meet) != 1 or not colinear(meet[0], u[i]):
            return False
    return True


def graded_polynomials(a: SquareMatrix, sd_star: SpectralData) -> list[Polynomial]:
    """Polynomials f_0..f_d with deg f_i = i carrying E*_0 V onto each E*_i V.

    Requires the E*-side products of ``a`` to vanish below the
    subdiagonal with a nonzero subdiagonal.  With B the matrix of ``a``
    in the E*-eigenbasis, the sequence is pinned by f_0 = 1 and

        lambda f_j = sum_{i=0}^{j+1} B_ij f_i      (0 <= j <= d-1),

    and satisfies f_i(a) v*_0 = v*_i for the deterministic eigenspace
    spanners, which is verified before returning.
    """
    zp = zero_pattern(a, sd_star)
    if zp.classify() not in (PatternClass.LOWER, PatternClass.IRREDUCIBLE_TRIDIAGONAL):
        raise PatternViolation("E*-side products of A do not have subdiagonal support")
    field = a.field
    n = a.dim
    basis = [eigenspace(sd_star, i) for i in range(n)]
    b = represented_in(a, basis)
    polys = [Polynomial.from_coeffs(field, [1])]
    for j in range(n - 1):
        num = polys[j].shift_up()
        for i in range(j + 1):
            num = num - polys[i].scale(b[i, j])
        polys.append(num.scale(field.one / b[j + 1, j]))
    for i, f in enumerate(polys):
        if f.degree != i:
            raise InvariantViolation(f"graded polynomial {i} has degree {f.degree}")
        if eval_poly_at_matrix(f, a).apply(basis[0]) != basis[i]:
            raise InvariantViolation(f"f_{i}(A) does not carry v*_0 to v*_{i}")
    return polys


def iso_to_module_check(a: SquareMatrix, sd_star: SpectralData) -> bool:
    """True iff v*_0 is a cyclic vector for ``a``.

    Equivalently, evaluation at v*_0 is injective on polynomials in
    ``a`` of degree at most d.
    """
    n = a.dim
    vecs = [eigenspace(sd_star, 0)]
    for _ in range(n - 1):
        vecs.append(a.apply(vecs[-1]))
    return rank_of_vectors(vecs) == n
