"""Leonard-system classification, characterizations, and canonical forms.

A pair of multiplicity-free matrices with chosen eigenvalue orderings is
a Leonard system when both triple-product tables E*_i A E*_j and
E_i A* E_j are supported exactly on the tridiagonal band with nonzero
sub- and superdiagonals.  This module decides that predicate, searches
for admissible orderings, realizes the two split-decomposition
characterizations, constructs the transpose-conjugating matrix H and
the reversal conjugator G, and validates/constructs the canonical
bidiagonal parameter arrays with their companion sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import (
    BadOrdering,
    InvariantViolation,
    NotIrreducibleTridiagonal,
    NotLeonard,
)
from .fields import Field, FieldElement
from .matrices import (
    SquareMatrix,
    Vector,
    _kernel_raw,
    inverse,
    is_invertible,
)
from .spectral import SpectralData, eigenspace, spectral_data
from .splitdecomp import (
    SplitCertificate,
    ZeroPattern,
    _pattern_pair,
    build_split,
    exists_split,
)


class ConditionFlags(NamedTuple):
    """The four vanishing-pattern conditions of the Leonard predicate.

    ``a_*`` flags describe the products E*_i A E*_j (A framed by the
    A*-projectors), ``astar_*`` the products E_i A* E_j; ``lower`` means
    zero below the subdiagonal with the subdiagonal fully nonzero,
    ``upper`` the transposed statement.
    """

    a_lower: bool
    a_upper: bool
    astar_lower: bool
    astar_upper: bool


@dataclass(frozen=True)
class FailureWitness:
    condition: str
    i: int
    j: int
    expected: str  # "zero" or "nonzero"

    def describe(self) -> str:
        table = "E*_i A E*_j" if self.condition.startswith("a_") else "E_i A* E_j"
        return (
            f"condition {self.condition} fails: product {table} at "
            f"(i={self.i}, j={self.j}) should be {self.expected}"
        )


@dataclass(frozen=True)
class LeonardVerdict:
    is_leonard_system: bool
    flags: ConditionFlags
    failure_witness: Optional[FailureWitness]


@dataclass(frozen=True)
class Antiautomorphism:
    """Invertible conjugator realizing the order-reversing symmetry.

    The map X -> H^-1 X^t H fixes both A and A*, and applying it twice
    returns every element it fixes.
    """

    conjugator: SquareMatrix
    basis_context: str


@dataclass(frozen=True)
class ParameterArray:
    """The data (d; theta; theta_star; varphi) of a canonical bidiagonal pair."""

    field: Field
    theta: tuple[FieldElement, ...]
    theta_star: tuple[FieldElement, ...]
    varphi: tuple[FieldElement, ...]

    def __post_init__(self):
        n = len(self.theta)
        if n == 0 or len(self.theta_star) != n or len(self.varphi) != n - 1:
            raise InvariantViolation("array lengths must be d+1, d+1, d")
        for seq in (self.theta, self.theta_star, self.varphi):
            for e in seq:
                if e.field != self.field:
                    raise InvariantViolation("array entries must share one field")
        if len({e.value for e in self.theta}) != n:
            raise InvariantViolation("theta values must be mutually distinct")
        if len({e.value for e in self.theta_star}) != n:
            raise InvariantViolation("theta_star values must be mutually distinct")
        if any(e.is_zero() for e in self.varphi):
            raise InvariantViolation("every varphi_i must be nonzero")

    @property
    def d(self) -> int:
        return len(self.theta) - 1


@dataclass(frozen=True)
class LeonardParameterReport:
    valid: bool
    phi: Optional[tuple[FieldElement, ...]]
    failed_condition: Optional[str]  # "CondI" | "CondII" | "CondIII" | "PhiZero"


def _verdict_from_patterns(zp_dual: ZeroPattern, zp_primal: ZeroPattern) -> LeonardVerdict:
    checks = (
        ("a_lower", zp_dual.lower_violation()),
        ("a_upper", zp_dual.upper_violation()),
        ("astar_lower", zp_primal.lower_violation()),
        ("astar_upper", zp_primal.upper_violation()),
    )
    flags = ConditionFlags(*(violation is None for _, violation in checks))
    witness = None
    for name, violation in checks:
        if violation is not None:
            witness = FailureWitness(name, violation[0], violation[1], violation[2])
            break
    return LeonardVerdict(
        is_leonard_system=all(flags), flags=flags, failure_witness=witness
    )


def leonard_verdict(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]] = None,
    theta_star_order: Optional[Sequence[FieldElement]] = None,
) -> LeonardVerdict:
    """Evaluate all four vanishing-pattern conditions for the given orderings."""
    _, _, zp_dual, zp_primal = _pattern_pair(a, a_star, theta_order, theta_star_order)
    return _verdict_from_patterns(zp_dual, zp_primal)


def three_gives_four(flags: ConditionFlags) -> bool:
    """Consistency predicate: no actual pair exhibits exactly three true flags."""
    return sum(flags) != 3


# ---------------------------------------------------------------------------
# ordering search


def _path_orders(zp: ZeroPattern) -> list[tuple[int, ...]]:
    """Index orderings compatible with the nonzero-product support graph.

    A valid ordering lines the projectors up along a Hamiltonian path of
    the graph with an edge wherever either directed product is nonzero,
    so only a path graph admits candidates: its two traversals.
    """
    n = zp.dim
    if n == 1:
        return [(0,)]
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = 0
    for i in range(n):
        for j in range(i + 1, n):
            if not zp.vanishes[i][j] or not zp.vanishes[j][i]:
                adj[i].add(j)
                adj[j].add(i)
                edges += 1
    if edges != n - 1 or any(len(nb) > 2 for nb in adj):
        return []
    endpoints = sorted(i for i in range(n) if len(adj[i]) == 1)
    if len(endpoints) != 2:
        return []
    orders = []
    for start in endpoints:
        walk = [start]
        prev = None
        while len(walk) < n:
            nxt = [v for v in adj[walk[-1]] if v != prev]
            if len(nxt) != 1:
                return []  # disconnected support
            prev = walk[-1]
            walk.append(nxt[0])
        orders.append(tuple(walk))
    return orders


def find_leonard_orderings(
    a: SquareMatrix, a_star: SquareMatrix
) -> list[tuple[tuple[FieldElement, ...], tuple[FieldElement, ...]]]:
    """All ordering pairs that make the pair a Leonard system.

    Candidates come from the path structure of the nonzero triple
    products, so at most 2 x 2 ordering pairs are ever tested.
    """
    sd = spectral_data(a)
    sd_star = spectral_data(a_star)
    _, _, zp_dual, zp_primal = _pattern_pair(a, a_star, None, None)
    theta_cands = _path_orders(zp_primal)
    theta_star_cands = _path_orders(zp_dual)
    found = []
    for t_idx in theta_cands:
        t_order = tuple(sd.eigenvalues[k] for k in t_idx)
        for ts_idx in theta_star_cands:
            ts_order = tuple(sd_star.eigenvalues[k] for k in ts_idx)
            if leonard_verdict(a, a_star, t_order, ts_order).is_leonard_system:
                found.append((t_order, ts_order))
    return found


# ---------------------------------------------------------------------------
# the two characterizations


def _resolved_orders(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]],
    theta_star_order: Optional[Sequence[FieldElement]],
) -> tuple[tuple[FieldElement, ...], tuple[FieldElement, ...]]:
    return (
        spectral_data(a, theta_order).eigenvalues,
        spectral_data(a_star, theta_star_order).eigenvalues,
    )


def char1_check(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]] = None,
    theta_star_order: Optional[Sequence[FieldElement]] = None,
) -> bool:
    """First characterization: split decompositions exist for the given
    orderings and for the reversed first ordering."""
    theta, theta_star = _resolved_orders(a, a_star, theta_order, theta_star_order)
    if not exists_split(a, a_star, theta, theta_star):
        return False
    return exists_split(a, a_star, tuple(reversed(theta)), theta_star)


def antiauto_solution_space(a: SquareMatrix, a_star: SquareMatrix) -> list[SquareMatrix]:
    """Basis of the space of matrices H with A^t H = H A and A*^t H = H A*.

    Solved as one exact homogeneous linear system in the n^2 entries
    of H.
    """
    field = a.field
    n = a.dim
    zero = field.coerce(0)
    rows: list[list] = []
    for mat in (a, a_star):
        m_rows = mat.rows
        for i in range(n):
            for j in range(n):
                row = [zero] * (n * n)
                for k in range(n):
                    row[k * n + j] = row[k * n + j] + m_rows[k][i]
                for l in range(n):
                    row[i * n + l] = row[i * n + l] - m_rows[l][j]
                if field.modulus is not None:
                    p = field.modulus
                    row = [x % p for x in row]
                rows.append(row)
    kernel = _kernel_raw(rows, n * n, field)
    return [
        SquareMatrix(field, [vec[i * n : (i + 1) * n] for i in range(n)]) for vec in kernel
    ]


def char2_check(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]] = None,
    theta_star_order: Optional[Sequence[FieldElement]] = None,
) -> bool:
    """Second characterization: a split decomposition exists for the given
    orderings and some invertible H conjugates both transposes back.

    Once the split test passes, the solution space of the H-system has
    dimension at most one, so invertibility of a basis vector decides.
    """
    if not exists_split(a, a_star, theta_order, theta_star_order):
        return False
    return any(is_invertible(h) for h in antiauto_solution_space(a, a_star))


def antiautomorphism_in_eigenbasis(
    a: SquareMatrix, sd_star: SpectralData
) -> Antiautomorphism:
    """Conjugator H with H^-1 A^t H = A and H^-1 A*^t H = A*.

    Built from the matrix B of A in the eigenbasis of A*: the diagonal
    D with D_00 = 1 and D_ii = (B_01 ... B_{i-1,i}) / (B_10 ... B_{i,i-1})
    satisfies D^-1 B^t D = B, and H is D pushed back through the basis
    change, scaled so its first nonzero entry in reading order is 1.
    Requires B to be irreducible tridiagonal.
    """
    field = a.field
    n = a.dim
    a_star = sd_star.matrix
    basis = [eigenspace(sd_star, i) for i in range(n)]
    p_mat = SquareMatrix.from_columns(field, basis)
    p_inv = inverse(p_mat)
    b = p_inv @ a @ p_mat
    for i in range(n):
        for j in range(n):
            if abs(i - j) > 1 and b[i, j]:
                raise NotIrreducibleTridiagonal(
                    f"entry ({i},{j}) of A in the A*-eigenbasis is nonzero"
                )
            if abs(i - j) == 1 and not b[i, j]:
                raise NotIrreducibleTridiagonal(
                    f"entry ({i},{j}) of A in the A*-eigenbasis vanishes"
                )
    diag = [field.one]
    for i in range(1, n):
        diag.append(diag[-1] * b[i - 1, i] / b[i, i - 1])
    d_mat = SquareMatrix.diagonal(field, diag)
    h = p_inv.transpose() @ d_mat @ p_inv
    scale = next(h[i, j] for i in range(n) for j in range(n) if h[i, j])
    h = h.scale(field.one / scale)
    h_inv = inverse(h)
    if h_inv @ a.transpose() @ h != a or h_inv @ a_star.transpose() @ h != a_star:
        raise InvariantViolation("constructed conjugator fails a transpose identity")
    return Antiautomorphism(conjugator=h, basis_context="standard")


# ---------------------------------------------------------------------------
# canonical bidiagonal pairs and parameter arrays


def lower_bidiagonal(field: Field, diag: Sequence[FieldElement]) -> SquareMatrix:
    """Lower bidiagonal matrix with the given diagonal and unit subdiagonal."""
    n = len(diag)
    zero = field.coerce(0)
    one = field.coerce(1)
    rows = [[zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = field.coerce(diag[i])
        if i:
            rows[i][i - 1] = one
    return SquareMatrix(field, rows)


def upper_bidiagonal(
    field: Field, diag: Sequence[FieldElement], superdiag: Sequence[FieldElement]
) -> SquareMatrix:
    n = len(diag)
    zero = field.coerce(0)
    rows = [[zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = field.coerce(diag[i])
        if i < n - 1:
            rows[i][i + 1] = field.coerce(superdiag[i])
    return SquareMatrix(field, rows)


def construct_pair(pa: ParameterArray) -> tuple[SquareMatrix, SquareMatrix]:
    """Transcribe a parameter array into its canonical bidiagonal pair."""
    a = lower_bidiagonal(pa.field, pa.theta)
    a_star = upper_bidiagonal(pa.field, pa.theta_star, pa.varphi)
    return a, a_star


def parameter_array_of_pair(a: SquareMatrix, a_star: SquareMatrix) -> ParameterArray:
    """Read the parameter array off a pair in canonical bidiagonal form.

    Raises InvariantViolation unless A is lower bidiagonal with unit
    subdiagonal and A* is upper bidiagonal with nonzero superdiagonal.
    """
    if a.field != a_star.field or a.dim != a_star.dim:
        raise InvariantViolation("pair must share field and dimension")
    n = a.dim
    one = a.field.coerce(1)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if i == j + 1:
                if a.rows[i][j] != one:
                    raise InvariantViolation("subdiagonal of A must be all ones")
                if not a_star.rows[j][i]:
                    raise InvariantViolation("superdiagonal of A* must be nonzero")
            elif a.rows[i][j] or a_star.rows[j][i]:
                raise InvariantViolation("pair is not in canonical bidiagonal form")
    theta = tuple(a[i, i] for i in range(n))
    theta_star = tuple(a_star[i, i] for i in range(n))
    varphi = tuple(a_star[i, i + 1] for i in range(n - 1))
    return ParameterArray(field=a.field, theta=theta, theta_star=theta_star, varphi=varphi)


def _prefix_ratios(pa: ParameterArray) -> list[FieldElement]:
    """S_i = sum_{h=0}^{i-1} (theta_h - theta_{d-h}) / (theta_0 - theta_d), i = 1..d."""
    d = pa.d
    denom = pa.theta[0] - pa.theta[d]
    sums = []
    acc = pa.field.zero
    for h in range(d):
        acc = acc + (pa.theta[h] - pa.theta[d - h]) / denom
        sums.append(acc)
    return sums


def check_parameter_array(pa: ParameterArray) -> LeonardParameterReport:
    """Decide whether the array comes from a Leonard pair, in closed form.

    The companion scalar phi_1 is pinned by the first closed-form
    condition at i = 1 (where the normalized prefix sum is 1); the rest
    of the companion sequence is generated by the second condition.
    Then all three conditions are re-verified exactly, and every
    companion entry must be nonzero.
    """
    d = pa.d
    if d == 0:
        return LeonardParameterReport(valid=True, phi=(), failed_condition=None)
    theta, theta_star, varphi = pa.theta, pa.theta_star, pa.varphi
    sums = _prefix_ratios(pa)
    phi1 = varphi[0] - (theta_star[1] - theta_star[0]) * (theta[0] - theta[d])
    phi = [
        varphi[0] * sums[i - 1] + (theta_star[i] - theta_star[0]) * (theta[d - i + 1] - theta[0])
        for i in range(1, d + 1)
    ]
    phi[0] = phi1  # the two derivations agree exactly when the array is valid

    for i in range(1, d + 1):
        expected = phi1 * sums[i - 1] + (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d])
        if varphi[i - 1] != expected:
            return LeonardParameterReport(valid=False, phi=None, failed_condition="CondI")
    for i in range(1, d + 1):
        expected = varphi[0] * sums[i - 1] + (theta_star[i] - theta_star[0]) * (
            theta[d - i + 1] - theta[0]
        )
        if phi[i - 1] != expected:
            return LeonardParameterReport(valid=False, phi=None, failed_condition="CondII")
    ratio = None
    for i in range(2, d):
        r_theta = (theta[i - 2] - theta[i + 1]) / (theta[i - 1] - theta[i])
        r_star = (theta_star[i - 2] - theta_star[i + 1]) / (theta_star[i - 1] - theta_star[i])
        if r_theta != r_star:
            return LeonardParameterReport(valid=False, phi=None, failed_condition="CondIII")
        if ratio is None:
            ratio = r_theta
        elif r_theta != ratio:
            return LeonardParameterReport(valid=False, phi=None, failed_condition="CondIII")
    if any(e.is_zero() for e in phi):
        return LeonardParameterReport(valid=False, phi=None, failed_condition="PhiZero")
    return LeonardParameterReport(valid=True, phi=tuple(phi), failed_condition=None)


def g_conjugation(
    a: SquareMatrix,
    a_star: SquareMatrix,
    theta_order: Optional[Sequence[FieldElement]] = None,
    theta_star_order: Optional[Sequence[FieldElement]] = None,
) -> tuple[SquareMatrix, list[FieldElement]]:
    """Reversal conjugator for a canonical bidiagonal Leonard pair.

    Returns (G, phi) where G's columns are the split basis for the
    reversed first ordering, G^-1 A G is lower bidiagonal with the
    reversed diagonal and unit subdiagonal, and G^-1 A* G is upper
    bidiagonal with superdiagonal phi, the companion split sequence.
    Both conjugated forms are verified exactly before returning.
    """
    pa = parameter_array_of_pair(a, a_star)
    natural = (pa.theta, pa.theta_star)
    if theta_order is not None and tuple(theta_order) != natural[0]:
        raise BadOrdering("theta ordering must match the diagonal of A")
    if theta_star_order is not None and tuple(theta_star_order) != natural[1]:
        raise BadOrdering("theta_star ordering must match the diagonal of A*")
    if not leonard_verdict(a, a_star, *natural).is_leonard_system:
        raise NotLeonard("pair is not a Leonard pair for its natural orderings")
    cert = build_split(a, a_star, tuple(reversed(natural[0])), natural[1])
    g = SquareMatrix.from_columns(a.field, cert.decomposition.spanners)
    g_inv = inverse(g)
    conj_a = g_inv @ a @ g
    conj_a_star = g_inv @ a_star @ g
    phi = list(cert.split_sequence)
    expected_a = lower_bidiagonal(a.field, tuple(reversed(natural[0])))
    expected_a_star = upper_bidiagonal(a.field, natural[1], phi)
    if conj_a != expected_a or conj_a_star != expected_a_star:
        raise InvariantViolation("conjugated pair is not in the expected bidiagonal form")
    return g, phi


# re-exported convenience: the split certificate type used by callers
__all__ = [
    "Antiautomorphism",
    "ConditionFlags",
    "FailureWitness",
    "LeonardParameterReport",
    "LeonardVerdict",
    "ParameterArray",
    "SplitCertificate",
    "antiauto_solution_space",
    "antiautomorphism_in_eigenbasis",
    "char1_check",
    "char2_check",
    "check_parameter_array",
    "construct_pair",
    "find_leonard_orderings",
    "g_conjugation",
    "leonard_verdict",
    "lower_bidiagonal",
    "parameter_array_of_pair",
    "three_gives_four",
    "upper_bidiagonal",
]
