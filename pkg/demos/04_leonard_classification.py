#!/usr/bin/env python3
# Deciding whether a pair of matrices is a Leonard pair: the four-way
# vanishing test, the ordering search, the two split-based
# characterizations, and the transpose-conjugating matrix H.

from leonardkit import (
    QQ,
    antiauto_solution_space,
    antiautomorphism_in_eigenbasis,
    char1_check,
    char2_check,
    construct_pair,
    find_leonard_orderings,
    inverse,
    leonard_verdict,
    spectral_data,
)
from leonardkit.leonard import ParameterArray


def arr(theta, theta_star, varphi):
    return ParameterArray(
        field=QQ,
        theta=tuple(QQ.element(v) for v in theta),
        theta_star=tuple(QQ.element(v) for v in theta_star),
        varphi=tuple(QQ.element(v) for v in varphi),
    )


good = arr((2, 0, -2), (2, 0, -2), (-4, -4))
a, a_star = construct_pair(good)
verdict = leonard_verdict(a, a_star, good.theta, good.theta_star)
print("Leonard system:", verdict.is_leonard_system)
print("condition flags:", verdict.flags)

# the same pair with one split scalar changed: the split side still holds
# but the reversed side breaks, and the verdict names a witness product
bad = arr((2, 0, -2), (2, 0, -2), (-4, 1))
b, b_star = construct_pair(bad)
verdict = leonard_verdict(b, b_star, bad.theta, bad.theta_star)
print("\nperturbed pair is Leonard:", verdict.is_leonard_system)
print("witness:", verdict.failure_witness.describe())

# without orderings, the search reduces to walking a path graph: at most
# four candidate pairs ever need testing
orders = find_leonard_orderings(a, a_star)
print("\nadmissible orderings:")
for theta, theta_star in orders:
    print("  theta:", [str(t) for t in theta], " theta*:", [str(t) for t in theta_star])

# both characterizations agree with the verdict: split + reversed split,
# and split + existence of an invertible transpose conjugator
print("\nfirst characterization:", char1_check(a, a_star, good.theta, good.theta_star))
print("second characterization:", char2_check(a, a_star, good.theta, good.theta_star))

# H is unique up to scale: the solution space of the linear system is a line
basis = antiauto_solution_space(a, a_star)
print("\nH solution space dimension:", len(basis))
h = antiautomorphism_in_eigenbasis(a, spectral_data(a_star, good.theta_star)).conjugator
print("H =", h)
h_inv = inverse(h)
print("H^-1 A^t H == A:", h_inv @ a.transpose() @ h == a)
print("H^-1 A*^t H == A*:", h_inv @ a_star.transpose() @ h == a_star)
