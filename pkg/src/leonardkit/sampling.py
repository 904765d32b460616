"""Seeded random generation of valid parameter arrays.

The eigenvalue ladders are drawn affine (t_i = a + b*i with b nonzero),
which keeps them mutually distinct and makes the shared-ratio condition
hold identically; the companion scalar is drawn freely and the split
sequence derived in closed form, with rejection on any zero entry.
"""

from __future__ import annotations

import random

from .errors import SamplingExhausted
from .fields import Field, FieldElement, PrimeField
from .leonard import ParameterArray, check_parameter_array

DEFAULT_MAX_ATTEMPTS = 500


def _affine_ladder(rng: random.Random, d: int, field: Field) -> tuple[FieldElement, ...]:
    if isinstance(field, PrimeField):
        p = field.modulus
        base = rng.randrange(p)
        step = rng.randrange(1, p)
        return tuple(field.element(base + step * i) for i in range(d + 1))
    base = rng.randint(-6, 6)
    step = rng.randint(1, 5) * rng.choice((1, -1))
    return tuple(field.element(base + step * i) for i in range(d + 1))


def _nonzero_scalar(rng: random.Random, field: Field) -> FieldElement:
    if isinstance(field, PrimeField):
        return field.element(rng.randrange(1, field.modulus))
    return field.element(rng.randint(1, 9) * rng.choice((1, -1)))


def sample_parameter_array(
    rng: random.Random,
    d: int,
    field: Field,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> ParameterArray:
    """Draw one valid parameter array of diameter ``d``.

    Raises SamplingExhausted when the field cannot seat d+1 distinct
    eigenvalues or the rejection budget runs out.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if isinstance(field, PrimeField) and d + 1 > field.modulus:
        raise SamplingExhausted(
            f"cannot seat {d + 1} distinct eigenvalues in {field!r}"
        )
    for _ in range(max_attempts):
        theta = _affine_ladder(rng, d, field)
        theta_star = _affine_ladder(rng, d, field)
        if d == 0:
            return ParameterArray(field=field, theta=theta, theta_star=theta_star, varphi=())
        phi1 = _nonzero_scalar(rng, field)
        denom = theta[0] - theta[d]
        varphi = []
        acc = field.zero
        for i in range(1, d + 1):
            acc = acc + (theta[i - 1] - theta[d - i + 1]) / denom
            varphi.append(phi1 * acc + (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d]))
        if any(v.is_zero() for v in varphi):
            continue
        pa = ParameterArray(
            field=field, theta=theta, theta_star=theta_star, varphi=tuple(varphi)
        )
        if check_parameter_array(pa).valid:
            return pa
    raise SamplingExhausted(f"no valid array found in {max_attempts} attempts")


def sample_parameter_arrays(
    seed: int, d: int, field: Field, count: int
) -> list[ParameterArray]:
    """Deterministic batch of valid arrays for a fixed seed."""
    rng = random.Random(seed)
    return [sample_parameter_array(rng, d, field) for _ in range(count)]
