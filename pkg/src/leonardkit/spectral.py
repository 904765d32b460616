"""Multiplicity-free tests, eigenvalue orderings, and rank-1 spectral projectors.

A multiplicity-free matrix A with eigenvalues t_0..t_d carries one
projector per eigenvalue,

    E_i = prod_{j != i} (A - t_j I) / (t_i - t_j),

and the family satisfies A E_i = t_i E_i, E_i E_j = delta_ij E_i,
sum E_i = I, A = sum t_i E_i, with every E_i of rank one.  Construction
here re-verifies all of that before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import BadOrdering, IndexOutOfRange, InvariantViolation, NotMultiplicityFree
from .fields import Field, FieldElement
from .matrices import (
    DEFAULT_RESIDUE_SEARCH_BOUND,
    SquareMatrix,
    Vector,
    char_poly,
    rank_of_vectors,
    roots_in_field,
)


@dataclass(frozen=True)
class SpectralData:
    """A multiplicity-free matrix with ordered eigenvalues and projectors."""

    matrix: SquareMatrix
    eigenvalues: tuple[FieldElement, ...]
    idempotents: tuple[SquareMatrix, ...]

    @property
    def dim(self) -> int:
        return self.matrix.dim

    @property
    def d(self) -> int:
        return self.matrix.dim - 1

    def verify(self) -> None:
        """Check every structural invariant; raises InvariantViolation."""
        a = self.matrix
        field = a.field
        n = a.dim
        if len(self.eigenvalues) != n or len(self.idempotents) != n:
            raise InvariantViolation("eigenvalue/idempotent count must equal dim")
        if len({e.value for e in self.eigenvalues}) != n:
            raise InvariantViolation("eigenvalues must be mutually distinct")
        total = SquareMatrix.zeros(field, n)
        recombined = SquareMatrix.zeros(field, n)
        for i, (theta, e_i) in enumerate(zip(self.eigenvalues, self.idempotents)):
            if a @ e_i != e_i.scale(theta):
                raise InvariantViolation(f"A E_{i} != theta_{i} E_{i}")
            for j, e_j in enumerate(self.idempotents):
                prod = e_i @ e_j
                expected = e_i if i == j else SquareMatrix.zeros(field, n)
                if prod != expected:
                    raise InvariantViolation(f"E_{i} E_{j} is not delta_ij E_{i}")
            if rank_of_vectors([e_i.row(r) for r in range(n)]) != 1:
                raise InvariantViolation(f"E_{i} is not rank one")
            total = total + e_i
            recombined = recombined + e_i.scale(theta)
        if total != SquareMatrix.identity(field, n):
            raise InvariantViolation("projectors do not sum to the identity")
        if recombined != a:
            raise InvariantViolation("sum of theta_i E_i does not recover the matrix")


def eigenvalue_multiset(
    m: SquareMatrix, *, residue_search_bound: int = DEFAULT_RESIDUE_SEARCH_BOUND
) -> list[tuple[FieldElement, int]]:
    """Roots of the characteristic polynomial lying in the field."""
    return roots_in_field(char_poly(m), residue_search_bound=residue_search_bound)


def is_multiplicity_free(
    m: SquareMatrix, *, residue_search_bound: int = DEFAULT_RESIDUE_SEARCH_BOUND
) -> bool:
    """True iff the characteristic polynomial has dim distinct roots in the field."""
    roots = eigenvalue_multiset(m, residue_search_bound=residue_search_bound)
    return len(roots) == m.dim and all(mult == 1 for _, mult in roots)


def canonical_order(field: Field, eigenvalues: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Deterministic default ordering: ascending value / residue."""
    return tuple(sorted(eigenvalues, key=lambda e: e.value))


@lru_cache(maxsize=1024)
def _spectral_cached(
    m: SquareMatrix, order: Optional[tuple[FieldElement, ...]], bound: int
) -> SpectralData:
    field = m.field
    n = m.dim
    roots = eigenvalue_multiset(m, residue_search_bound=bound)
    if len(roots) != n or any(mult != 1 for _, mult in roots):
        raise NotMultiplicityFree(
            f"matrix has {len(roots)} distinct in-field eigenvalues, needs {n}"
        )
    spectrum = [r for r, _ in roots]
    if order is None:
        ordered = canonical_order(field, spectrum)
    else:
        if len(order) != n or {e.value for e in order} != {e.value for e in spectrum}:
            raise BadOrdering("ordering must be a permutation of the eigenvalues")
        if any(e.field != field for e in order):
            raise BadOrdering("ordering contains elements of the wrong field")
        ordered = tuple(order)
    ident = SquareMatrix.identity(field, n)
    idempotents = []
    for i, theta_i in enumerate(ordered):
        prod = ident
        denom = field.one
        for j, theta_j in enumerate(ordered):
            if j == i:
                continue
            prod = prod @ (m - ident.scale(theta_j))
            denom = denom * (theta_i - theta_j)
        idempotents.append(prod.scale(field.one / denom))
    data = SpectralData(matrix=m, eigenvalues=ordered, idempotents=tuple(idempotents))
    data.verify()
    return data


def spectral_data(
    m: SquareMatrix,
    order: Optional[Sequence[FieldElement]] = None,
    *,
    residue_search_bound: int = DEFAULT_RESIDUE_SEARCH_BOUND,
) -> SpectralData:
    """Eigenvalues and projectors of a multiplicity-free matrix.

    ``order`` fixes the eigenvalue ordering and must be a permutation of
    the spectrum; when omitted the canonical ascending order is used.
    Raises NotMultiplicityFree or BadOrdering.
    """
    key = None if order is None else tuple(order)
    return _spectral_cached(m, key, residue_search_bound)


def eigenspace(sd: SpectralData, i: int) -> Vector:
    """Deterministic spanning vector of the i-th eigenspace.

    Takes the first nonzero column of E_i, scaled so its first nonzero
    entry is 1.
    """
    if not 0 <= i < sd.dim:
        raise IndexOutOfRange(f"index {i} outside 0..{sd.d}")
    e_i = sd.idempotents[i]
    for j in range(sd.dim):
        col = e_i.column(j)
        if not col.is_zero():
            return col.normalized()
    raise InvariantViolation("idempotent has no nonzero column")  # pragma: no cover
