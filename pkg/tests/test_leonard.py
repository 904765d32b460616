import itertools
import random
from fractions import Fraction

import pytest

from leonardkit import (
    GF,
    QQ,
    BadOrdering,
    ConditionFlags,
    InvariantViolation,
    NotIrreducibleTridiagonal,
    NotLeonard,
    NotMultiplicityFree,
    SquareMatrix,
    antiauto_solution_space,
    antiautomorphism_in_eigenbasis,
    char1_check,
    char2_check,
    check_parameter_array,
    construct_pair,
    exists_split,
    find_leonard_orderings,
    g_conjugation,
    inverse,
    is_invertible,
    leonard_verdict,
    parameter_array_of_pair,
    spectral_data,
    three_gives_four,
    zero_pattern,
)
from leonardkit.sampling import sample_parameter_array
from helpers import d2_array, make_array, random_invertible, random_mult_free


def _pair(pa):
    a, a_star = construct_pair(pa)
    return a, a_star, pa.theta, pa.theta_star


# ---------------------------------------------------------------------------
# verdict


def test_verdict_dimension_zero_always_true():
    a = SquareMatrix.from_rows(QQ, [[3]])
    a_star = SquareMatrix.from_rows(QQ, [[-5]])
    verdict = leonard_verdict(a, a_star)
    assert verdict.is_leonard_system
    assert verdict.flags == ConditionFlags(True, True, True, True)
    assert verdict.failure_witness is None


def test_verdict_d1_from_parameter_array():
    pa = make_array(QQ, (1, 0), (1, 0), (1,))
    # companion scalar 2 is nonzero, so the array is a Leonard pair
    report = check_parameter_array(pa)
    assert report.valid and [str(e) for e in report.phi] == ["2"]
    a, a_star, theta, theta_star = _pair(pa)
    assert leonard_verdict(a, a_star, theta, theta_star).is_leonard_system


def test_verdict_d2_invalid_array_fails_on_expected_conditions():
    pa = d2_array(varphi=(-4, 1))
    a, a_star, theta, theta_star = _pair(pa)
    verdict = leonard_verdict(a, a_star, theta, theta_star)
    assert not verdict.is_leonard_system
    # the canonical-form pair always has a split decomposition, so the two
    # split-side conditions hold and the failure sits on the other two
    assert verdict.flags.a_lower and verdict.flags.astar_upper
    assert not (verdict.flags.a_upper and verdict.flags.astar_lower)
    assert verdict.failure_witness is not None
    assert verdict.failure_witness.condition in ("a_upper", "astar_lower")
    assert "product" in verdict.failure_witness.describe()


def test_verdict_flags_match_pattern_tables():
    pa = d2_array()
    a, a_star, theta, theta_star = _pair(pa)
    verdict = leonard_verdict(a, a_star, theta, theta_star)
    assert verdict.is_leonard_system
    zp_dual = zero_pattern(a, spectral_data(a_star, theta_star))
    zp_primal = zero_pattern(a_star, spectral_data(a, theta))
    assert verdict.flags.a_lower == (zp_dual.lower_violation() is None)
    assert verdict.flags.astar_upper == (zp_primal.upper_violation() is None)


def test_flip_symmetry_of_patterns_for_leonard_pairs():
    pa = d2_array()
    a, a_star, theta, theta_star = _pair(pa)
    zp = zero_pattern(a, spectral_data(a_star, theta_star))
    for i in range(3):
        for j in range(3):
            assert zp.vanishes[i][j] == zp.vanishes[j][i]


# ---------------------------------------------------------------------------
# ordering search


def test_find_orderings_matches_exhaustive_search():
    pa = d2_array()
    a, a_star = construct_pair(pa)
    found = set()
    sd = spectral_data(a)
    sd_star = spectral_data(a_star)
    for perm in itertools.permutations(sd.eigenvalues):
        for perm_star in itertools.permutations(sd_star.eigenvalues):
            if leonard_verdict(a, a_star, perm, perm_star).is_leonard_system:
                found.add((perm, perm_star))
    fast = set(find_leonard_orderings(a, a_star))
    assert fast == found
    assert len(fast) == 4


def test_find_orderings_closed_under_reversal():
    pa = d2_array()
    a, a_star = construct_pair(pa)
    found = set(find_leonard_orderings(a, a_star))
    for theta, theta_star in found:
        assert (tuple(reversed(theta)), theta_star) in found
        assert (theta, tuple(reversed(theta_star))) in found


def test_find_orderings_commuting_pair_empty():
    m = SquareMatrix.diagonal(QQ, [1, 2, 3])
    assert find_leonard_orderings(m, m) == []


def test_find_orderings_dimension_zero():
    a = SquareMatrix.from_rows(QQ, [[3]])
    a_star = SquareMatrix.from_rows(QQ, [[4]])
    assert find_leonard_orderings(a, a_star) == [
        ((QQ.element(3),), (QQ.element(4),))
    ]


def test_find_orderings_requires_multiplicity_free():
    nilp = SquareMatrix.from_rows(QQ, [[0, 1], [0, 0]])
    with pytest.raises(NotMultiplicityFree):
        find_leonard_orderings(nilp, SquareMatrix.diagonal(QQ, [1, 2]))


# ---------------------------------------------------------------------------
# parameter arrays


def test_check_parameter_array_worked_examples():
    good = d2_array()
    report = check_parameter_array(good)
    assert report.valid and [str(e) for e in report.phi] == ["4", "4"]
    bad = d2_array(varphi=(-4, 1))
    report = check_parameter_array(bad)
    assert not report.valid and report.failed_condition == "CondI" and report.phi is None
    d1 = make_array(QQ, (1, 0), (1, 0), (1,))
    report = check_parameter_array(d1)
    assert report.valid and [str(e) for e in report.phi] == ["2"]


def test_check_parameter_array_dimension_zero():
    pa = make_array(QQ, (5,), (7,), ())
    report = check_parameter_array(pa)
    assert report.valid and report.phi == ()


def test_parameter_array_invariants():
    with pytest.raises(InvariantViolation):
        make_array(QQ, (1, 1), (1, 0), (1,))
    with pytest.raises(InvariantViolation):
        make_array(QQ, (1, 0), (2, 2), (1,))
    with pytest.raises(InvariantViolation):
        make_array(QQ, (1, 0), (1, 0), (0,))
    with pytest.raises(InvariantViolation):
        make_array(QQ, (1, 0), (1, 0), (1, 1))


def test_eigenvalue_ratio_condition_breaks_under_perturbation():
    field = GF(997)
    rng = random.Random(71)
    pa = sample_parameter_array(rng, 4, field)
    assert check_parameter_array(pa).valid
    theta = list(pa.theta)
    theta[2] = theta[2] + field.one  # keep distinctness overwhelmingly likely
    if len({e.value for e in theta}) == 5:
        perturbed = make_array(field, [e.value for e in theta],
                               [e.value for e in pa.theta_star],
                               [e.value for e in pa.varphi])
        assert not check_parameter_array(perturbed).valid


def test_construct_pair_examples():
    a, a_star = construct_pair(make_array(QQ, (5,), (7,), ()))
    assert a == SquareMatrix.from_rows(QQ, [[5]])
    assert a_star == SquareMatrix.from_rows(QQ, [[7]])
    a, a_star = construct_pair(make_array(QQ, (1, 0), (1, 0), (1,)))
    assert a == SquareMatrix.from_rows(QQ, [[1, 0], [1, 0]])
    assert a_star == SquareMatrix.from_rows(QQ, [[1, 1], [0, 0]])


def test_parameter_array_of_pair_round_trip():
    pa = d2_array()
    a, a_star = construct_pair(pa)
    back = parameter_array_of_pair(a, a_star)
    assert back == pa
    with pytest.raises(InvariantViolation):
        parameter_array_of_pair(a_star, a)


# ---------------------------------------------------------------------------
# characterizations


def test_characterizations_agree_on_fixtures():
    cases = []
    good = d2_array()
    cases.append((*construct_pair(good), good.theta, good.theta_star))
    bad = d2_array(varphi=(-4, 1))
    cases.append((*construct_pair(bad), bad.theta, bad.theta_star))
    diag = SquareMatrix.diagonal(QQ, [1, 2, 3])
    cases.append((diag, diag, None, None))
    one_a = SquareMatrix.from_rows(QQ, [[3]])
    one_b = SquareMatrix.from_rows(QQ, [[4]])
    cases.append((one_a, one_b, None, None))
    for a, a_star, theta, theta_star in cases:
        verdict = leonard_verdict(a, a_star, theta, theta_star).is_leonard_system
        assert char1_check(a, a_star, theta, theta_star) == verdict
        assert char2_check(a, a_star, theta, theta_star) == verdict


def test_char1_reversed_leg_is_the_failing_one():
    # canonical-form pair with an invalid array: the split exists for the
    # given orderings but not for the reversed first ordering
    pa = d2_array(varphi=(-4, 1))
    a, a_star, theta, theta_star = _pair(pa)
    assert exists_split(a, a_star, theta, theta_star)
    assert not exists_split(a, a_star, tuple(reversed(theta)), theta_star)
    assert not char1_check(a, a_star, theta, theta_star)


def test_three_gives_four_predicate():
    assert three_gives_four(ConditionFlags(True, True, True, True))
    assert three_gives_four(ConditionFlags(True, True, False, False))
    assert three_gives_four(ConditionFlags(False, False, False, False))
    assert not three_gives_four(ConditionFlags(True, True, True, False))
    assert not three_gives_four(ConditionFlags(False, True, True, True))


# ---------------------------------------------------------------------------
# antiautomorphism


def test_antiautomorphism_symmetric_tridiagonal_gives_identity():
    a = SquareMatrix.from_rows(QQ, [[0, 1, 0], [1, 0, 1], [0, 1, 1]])
    a_star = SquareMatrix.diagonal(QQ, [1, 2, 3])
    anti = antiautomorphism_in_eigenbasis(a, spectral_data(a_star))
    assert anti.conjugator == SquareMatrix.identity(QQ, 3)


def test_antiautomorphism_degree_one_diagonal_formula():
    # B = [[a, 2], [1, b]] in the eigenbasis of a diagonal partner:
    # the conjugator is diag(1, B_01/B_10) = diag(1, 2)
    a = SquareMatrix.from_rows(QQ, [[5, 2], [1, 7]])
    a_star = SquareMatrix.diagonal(QQ, [1, 2])
    anti = antiautomorphism_in_eigenbasis(a, spectral_data(a_star))
    h = anti.conjugator
    assert h == SquareMatrix.diagonal(QQ, [1, 2])
    # hand check of the conjugation identity
    h_inv = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1, 2)]]
    a_t = [[Fraction(5), Fraction(1)], [Fraction(2), Fraction(7)]]
    lhs = [
        [sum(h_inv[i][k] * a_t[k][j] for k in range(2)) for j in range(2)] for i in range(2)
    ]
    lhs = [[sum(lhs[i][k] * [[1, 0], [0, 2]][k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert lhs == [[Fraction(5), Fraction(2)], [Fraction(1), Fraction(7)]]


def test_antiautomorphism_on_derived_instance():
    pa = d2_array()
    a, a_star, theta, theta_star = _pair(pa)
    anti = antiautomorphism_in_eigenbasis(a, spectral_data(a_star, theta_star))
    h = anti.conjugator
    h_inv = inverse(h)
    assert h_inv @ a.transpose() @ h == a
    assert h_inv @ a_star.transpose() @ h == a_star
    # normalized: first nonzero entry in reading order is one
    flat = [h[i, j] for i in range(3) for j in range(3)]
    first = next(x for x in flat if not x.is_zero())
    assert first == QQ.one
    assert anti.basis_context == "standard"


def test_antiautomorphism_requires_irreducible_tridiagonal():
    diag = SquareMatrix.diagonal(QQ, [1, 2, 3])
    with pytest.raises(NotIrreducibleTridiagonal):
        antiautomorphism_in_eigenbasis(diag, spectral_data(diag))


def test_double_conjugation_fixes_both_matrices():
    pa = d2_array()
    a, a_star, theta, theta_star = _pair(pa)
    h = antiautomorphism_in_eigenbasis(a, spectral_data(a_star, theta_star)).conjugator
    h_inv = inverse(h)
    conj = lambda x: h_inv @ x.transpose() @ h
    assert conj(conj(a)) == a
    assert conj(conj(a_star)) == a_star


def test_solution_space_dimension_and_uniqueness():
    pa = d2_array()
    a, a_star, *_ = _pair(pa)
    basis = antiauto_solution_space(a, a_star)
    assert len(basis) == 1
    assert is_invertible(basis[0])
    # the constructed conjugator lies in that one-dimensional space
    h = antiautomorphism_in_eigenbasis(a, spectral_data(a_star, pa.theta_star)).conjugator
    from leonardkit import colinear, Vector

    flat = lambda m: Vector(QQ, [x for row in m.rows for x in row])
    assert colinear(flat(h), flat(basis[0]))


def test_no_invertible_solution_for_split_intact_non_leonard():
    pa = d2_array(varphi=(-4, 1))
    a, a_star, theta, theta_star = _pair(pa)
    assert exists_split(a, a_star, theta, theta_star)
    basis = antiauto_solution_space(a, a_star)
    assert all(not is_invertible(h) for h in basis)
    assert not char2_check(a, a_star, theta, theta_star)


def test_solution_space_dimension_zero_instance():
    a = SquareMatrix.from_rows(QQ, [[3]])
    a_star = SquareMatrix.from_rows(QQ, [[4]])
    basis = antiauto_solution_space(a, a_star)
    assert len(basis) == 1
    assert char2_check(a, a_star)


# ---------------------------------------------------------------------------
# reversal conjugation


def test_g_conjugation_dimension_zero():
    a, a_star = construct_pair(make_array(QQ, (5,), (7,), ()))
    g, phi = g_conjugation(a, a_star)
    assert g == SquareMatrix.identity(QQ, 1)
    assert phi == []


def test_g_conjugation_matches_companion_sequence():
    for pa in (make_array(QQ, (1, 0), (1, 0), (1,)), d2_array()):
        a, a_star = construct_pair(pa)
        g, phi = g_conjugation(a, a_star)
        report = check_parameter_array(pa)
        assert tuple(phi) == report.phi
        # conjugated forms, re-derived here
        g_inv = inverse(g)
        conj_a = g_inv @ a @ g
        n = a.dim
        for i in range(n):
            assert conj_a[i, i] == pa.theta[n - 1 - i]
            if i:
                assert conj_a[i, i - 1] == QQ.one
        conj_a_star = g_inv @ a_star @ g
        for i in range(n - 1):
            assert conj_a_star[i, i + 1] == phi[i]


def test_g_conjugation_rejects_non_canonical_input():
    rng = random.Random(5)
    m = random_mult_free(rng, QQ, 3)
    with pytest.raises(InvariantViolation):
        g_conjugation(m, m)


def test_g_conjugation_rejects_non_leonard():
    pa = d2_array(varphi=(-4, 1))
    a, a_star = construct_pair(pa)
    with pytest.raises(NotLeonard):
        g_conjugation(a, a_star)


def test_g_conjugation_rejects_foreign_orderings():
    pa = d2_array()
    a, a_star = construct_pair(pa)
    with pytest.raises(BadOrdering):
        g_conjugation(a, a_star, tuple(reversed(pa.theta)), pa.theta_star)


# ---------------------------------------------------------------------------
# randomized agreement across the pipeline


def test_characterization_agreement_randomized():
    rng = random.Random(73)
    field = GF(997)
    for k in range(25):
        d = k % 5
        pa = sample_parameter_array(rng, d, field)
        a, a_star = construct_pair(pa)
        # valid instance
        assert leonard_verdict(a, a_star, pa.theta, pa.theta_star).is_leonard_system
        assert char1_check(a, a_star, pa.theta, pa.theta_star)
        assert char2_check(a, a_star, pa.theta, pa.theta_star)
        # generic re-paired instance agrees too (normally all three False)
        if d >= 1:
            g = random_invertible(rng, field, d + 1)
            twisted = inverse(g) @ a_star @ g
            v = leonard_verdict(a, twisted, pa.theta, pa.theta_star).is_leonard_system
            assert char1_check(a, twisted, pa.theta, pa.theta_star) == v
            assert char2_check(a, twisted, pa.theta, pa.theta_star) == v
