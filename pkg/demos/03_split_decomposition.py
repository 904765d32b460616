#!/usr/bin/env python3
# The split decomposition: a chain of one-dimensional subspaces that
# A - theta_i I raises and A* - theta*_i I lowers.  Its existence is
# equivalent to a vanishing pattern among the products E*_i A E*_j and
# E_i A* E_j, and when it exists it is unique.

from leonardkit import (
    QQ,
    build_split,
    classify_pattern,
    construct_pair,
    exists_split,
    graded_polynomials,
    spectral_data,
    split_uniqueness_witness,
    subspace_identities,
    zero_pattern,
)
from leonardkit.leonard import ParameterArray

# the worked three-dimensional example: theta = theta* = (2, 0, -2),
# split sequence (-4, -4)
pa = ParameterArray(
    field=QQ,
    theta=tuple(QQ.element(v) for v in (2, 0, -2)),
    theta_star=tuple(QQ.element(v) for v in (2, 0, -2)),
    varphi=(QQ.element(-4), QQ.element(-4)),
)
a, a_star = construct_pair(pa)
print("A =", a)
print("A* =", a_star)

sd = spectral_data(a, pa.theta)
sd_star = spectral_data(a_star, pa.theta_star)

# which products vanish? True marks a zero product
zp = zero_pattern(a, sd_star)
for row in zp.vanishes:
    print(["." if v else "x" for v in row])
print("pattern class:", classify_pattern(zp).value)

print("\nsplit exists for these orderings:", exists_split(a, a_star, pa.theta, pa.theta_star))

cert = build_split(a, a_star, pa.theta, pa.theta_star)
print("split basis:", [v.to_strings() for v in cert.decomposition.spanners])
print("split sequence:", [str(x) for x in cert.split_sequence])

# the certificate is forced: both closed-form products give the same spaces,
# and all five prefix/suffix/intersection identities hold
print("uniqueness witness:", split_uniqueness_witness(cert, a, a_star, sd, sd_star))
print("subspace identities:", subspace_identities(cert, a, a_star, sd, sd_star))

# a graded polynomial ladder carries the bottom eigenspace of A* up
fs = graded_polynomials(a, sd_star)
for i, f in enumerate(fs):
    print(f"f_{i} (degree {f.degree}):", f)

# scrambling one ordering destroys the pattern
swapped = (pa.theta_star[1], pa.theta_star[0], pa.theta_star[2])
print("\nsplit after swapping two eigenvalues:", exists_split(a, a_star, pa.theta, swapped))
