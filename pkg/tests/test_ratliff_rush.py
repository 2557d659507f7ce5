import logging
import warnings

import pytest

import config
from conftest import random_equal_degree, random_slanted
from errors import BadBound, BadParameters, NotCertified, NotPrimary, SearchExhausted, WrongClass
from ideal import (
    Monomial, colon, contains_ideal, contains_monomial, from_generators, hilbert_function,
    hilbert_polynomial, ideal_sum, maximal_power, power, principal, product, shift, unit_ideal,
)
from ratliff_rush import (
    ClassKind, Family, FamilySpec, Method, all_powers_rr_check, classify, closure, closure_brute_force,
    closure_closed_form, cross_check, enumerate_equal_degree, family_ideal, full_closure,
    half_form_holds, ideal_S, ideal_T, is_ratliff_rush, iter_equal_degree, power_decomposition,
    power_form_bound, power_form_holds, reduction_bound, reduction_number, semigroups_of,
    sufficient_rr_check, sufficient_rr_check_y,
)
from semigroup import frobenius


def all_equal_degree(d):
    for mask in range(2 ** (d - 1)):
        middle = [(i, d - i) for i in range(1, d) if mask >> (i - 1) & 1]
        yield from_generators([(0, d), (d, 0)] + middle)


def stable_power_index(I):
    """An l past which I^l is Ratliff-Rush, so the closure's powers agree with I's."""
    d = classify(I).degree
    S, T = semigroups_of(I)
    return max(reduction_bound(I), power_form_bound(I), -(-(frobenius(S) + frobenius(T) + 2) // d))


# --- classification ---

def test_classify(golden_equal_degree, golden_slanted):
    cls = classify(golden_equal_degree)
    assert cls.kind is ClassKind.EQUAL_DEGREE
    assert cls.degree == 7
    assert str(cls) == "EqualDegree(d=7)"

    cls = classify(golden_slanted)
    assert cls.kind is ClassKind.SLANTED_LINE
    assert (cls.a_r, cls.b_0) == (18, 12)

    assert classify(from_generators([(0, 3), (1, 1), (3, 0)])).kind is ClassKind.GENERAL
    assert classify(unit_ideal()).kind is ClassKind.GENERAL
    with pytest.raises(NotPrimary):
        classify(principal(Monomial(2, 0)))


def test_semigroups_need_a_line():
    with pytest.raises(WrongClass):
        semigroups_of(from_generators([(0, 3), (1, 1), (3, 0)]))


def test_slanted_staircase_ideals(golden_slanted):
    S, T = semigroups_of(golden_slanted)
    assert S.generators == (6, 9)
    assert T.generators == (2,)
    assert ideal_S(golden_slanted) == from_generators([(0, 12), (6, 8), (9, 6), (12, 4), (15, 2), (18, 0)])
    assert ideal_T(golden_slanted) == from_generators(
        [(0, 12), (3, 10), (6, 8), (9, 6), (12, 4), (15, 2), (18, 0)]
    )


# --- golden closures ---

def test_golden_equal_degree_closure(golden_equal_degree):
    result = closure_closed_form(golden_equal_degree)
    assert result.closure == from_generators([(0, 7), (2, 5), (4, 4), (5, 2), (7, 0)])
    assert result.method is Method.CLOSED_FORM
    assert result.certified
    assert result.reduction_number == 1
    assert result.added_to(golden_equal_degree) == (Monomial(4, 4),)


def test_golden_equal_degree_bounds(golden_equal_degree):
    # S = T = <2, 5>, g = 3, Lambda = 4
    assert reduction_bound(golden_equal_degree) == 9
    assert power_form_bound(golden_equal_degree) == 8
    for l in range(4, 9):
        assert power_form_holds(golden_equal_degree, l)
    assert reduction_bound(golden_equal_degree) >= 1
    assert power_form_bound(golden_equal_degree) >= 4


def test_brute_force_certification(golden_equal_degree):
    closed = closure_closed_form(golden_equal_degree).closure

    short = closure_brute_force(golden_equal_degree, 5)
    assert not short.certified
    assert short.reduction_number is None
    assert short.closure == closed
    assert short.plateau is True
    with pytest.raises(NotCertified):
        reduction_number(golden_equal_degree, short)

    full = closure_brute_force(golden_equal_degree, 9)
    assert full.certified
    assert full.closure == closed
    assert full.reduction_number == 1
    assert full.method is Method.BRUTE_FORCE
    assert full.l_used == 9

    assert closure_brute_force(golden_equal_degree, 1).plateau is None
    with pytest.raises(BadBound):
        closure_brute_force(golden_equal_degree, 0)


def test_golden_uneven_closure(golden_uneven_closure):
    result = closure_closed_form(golden_uneven_closure)
    assert result.added_to(golden_uneven_closure) == (Monomial(8, 12), Monomial(9, 10))
    assert result.reduction_number == 4
    assert {m.degree for m in result.closure} == {18, 20, 19}


def test_golden_slanted_closure(golden_slanted):
    result = closure_closed_form(golden_slanted)
    assert result.closure == ideal_sum(golden_slanted, principal(Monomial(12, 4)))
    assert result.reduction_number == 1


def test_closure_is_not_monotone(small_j):
    bigger = from_generators([(0, 3), (3, 0)])
    assert contains_ideal(bigger, small_j)
    assert contains_monomial(full_closure(small_j), Monomial(2, 2))
    assert full_closure(bigger) == bigger
    assert not contains_monomial(full_closure(bigger), Monomial(2, 2))


def test_small_j_reduction(small_j):
    # S = T = <1>, but Λ is taken over s <= g + d = 3, so Λ = 3.
    assert reduction_bound(small_j) == 7
    assert power_form_bound(small_j) == 7
    assert not closure_brute_force(small_j, 1).certified
    result = closure_brute_force(small_j, 7)
    assert result.certified
    assert result.closure == maximal_power(4)
    assert result.reduction_number == 1


def test_bounds_use_the_ideal_degree():
    I = from_generators([(0, 5), (1, 4), (4, 1), (5, 0)])
    S, _ = semigroups_of(I)
    assert S.generators == (1,)
    assert reduction_bound(I) == 9

    _, result = closure(I)
    assert result.closure == maximal_power(5)
    assert result.added_to(I) == (Monomial(2, 3), Monomial(3, 2))
    assert 1 <= result.reduction_number <= reduction_bound(I)

    brute = closure_brute_force(I, reduction_bound(I))
    assert brute.certified
    assert brute.closure == maximal_power(5)
    assert not closure_brute_force(I, 1).certified


# --- dispatch ---

def test_principal_ideals_are_ratliff_rush():
    factor, result = closure(principal(Monomial(5, 0)))
    assert factor == Monomial(5, 0)
    assert result.closure.is_unit
    assert result.certified
    assert result.reduction_number == 0
    assert is_ratliff_rush(principal(Monomial(2, 3))) == (True, True)


def test_closure_factors_out_common_monomial(small_j):
    m = Monomial(2, 1)
    factor, result = closure(shift(small_j, m))
    assert factor == m
    assert result.closure == maximal_power(4)
    assert full_closure(shift(small_j, m)) == shift(maximal_power(4), m)


def test_general_ideals_use_the_colon_chain(caplog):
    I = from_generators([(0, 3), (1, 1), (3, 0)])
    with caplog.at_level(logging.WARNING):
        _, result = closure(I, max_l=5)
    assert result.method is Method.BRUTE_FORCE
    assert not result.certified
    assert result.l_used == 5
    assert contains_ideal(result.closure, I)
    assert "lower approximation" in caplog.text


def test_default_cap_comes_from_config(monkeypatch):
    monkeypatch.setattr(config, "DEFAULT_MAX_L", 3)
    _, result = closure(from_generators([(0, 3), (1, 1), (3, 0)]))
    assert result.l_used == 3


def test_reduction_search_is_capped(golden_slanted, monkeypatch):
    monkeypatch.setattr(config, "REDUCTION_SEARCH_CAP", 0)
    with pytest.raises(SearchExhausted):
        reduction_number(golden_slanted, closure_closed_form(golden_slanted, with_reduction_number=False))


def test_closed_form_needs_a_line():
    with pytest.raises(WrongClass):
        closure_closed_form(from_generators([(0, 3), (1, 1), (3, 0)]))
    with pytest.raises(WrongClass):
        cross_check(from_generators([(0, 3), (1, 1), (3, 0)]))


def test_cross_check(golden_equal_degree):
    check = cross_check(golden_equal_degree)
    assert check.agree
    assert check.brute_force.certified
    assert check.brute_force.l_used == 9


# --- powers ---

def test_cube_is_not_ratliff_rush(non_rr_cube):
    assert is_ratliff_rush(non_rr_cube) == (True, True)
    cube = power(non_rr_cube, 3)
    assert is_ratliff_rush(cube) == (False, True)
    assert full_closure(cube) == ideal_sum(cube, principal(Monomial(12, 12)))


@pytest.mark.parametrize("l, expected", [(1, True), (2, True), (3, False), (4, True), (5, True), (6, True)])
def test_power_forms(non_rr_cube, l, expected):
    assert power_form_holds(non_rr_cube, l) is expected
    assert half_form_holds(non_rr_cube, l) is expected


def test_power_form_rejects_bad_input(non_rr_cube, golden_slanted):
    with pytest.raises(BadParameters):
        power_form_holds(non_rr_cube, 0)
    with pytest.raises(WrongClass):
        half_form_holds(golden_slanted, 2)


def test_all_powers_check(non_rr_cube):
    statuses = all_powers_rr_check(non_rr_cube, 4)
    assert [s.l for s in statuses] == [1, 2, 3, 4]
    assert [s.is_rr for s in statuses] == [True, True, False, True]
    assert all(s.certified for s in statuses)
    assert statuses[2].added == (Monomial(12, 12),)
    assert statuses[0].added == ()
    with pytest.raises(BadParameters):
        all_powers_rr_check(non_rr_cube, 0)


def test_power_decomposition(non_rr_cube):
    fourth = power_decomposition(non_rr_cube, 4)
    assert fourth.holds
    assert fourth.middle == maximal_power(16)
    assert fourth.middle_is_maximal_power
    assert fourth.maximal_power_expected

    third = power_decomposition(non_rr_cube, 3)
    assert third.holds
    assert not third.middle_is_maximal_power

    with pytest.raises(BadParameters):
        power_decomposition(non_rr_cube, 1)


def test_sufficient_checks(non_rr_cube):
    assert not sufficient_rr_check(non_rr_cube)
    assert sufficient_rr_check(from_generators([(0, 4), (2, 2), (4, 0)]))
    lopsided = from_generators([(0, 4), (1, 3), (4, 0)])
    assert not sufficient_rr_check(lopsided)
    assert sufficient_rr_check_y(lopsided)


# --- families ---

def test_family_generators():
    assert family_ideal(FamilySpec(Family.I_K, (2,))) == from_generators(
        [(0, 13), (5, 8), (7, 6), (9, 4), (10, 3), (11, 2), (12, 1), (13, 0)]
    )
    assert family_ideal(FamilySpec(Family.I_NK, (3, 2))) == from_generators(
        [(0, 8), (3, 5), (6, 2), (7, 1), (8, 0)]
    )
    assert family_ideal(FamilySpec(Family.I_D, (4,))) == from_generators([(0, 4), (3, 1), (4, 0)])
    assert family_ideal(FamilySpec(Family.I_DK, (5, 2))) == from_generators([(0, 5), (3, 2), (4, 1), (5, 0)])


@pytest.mark.parametrize("spec", [
    FamilySpec(Family.I_D, (1,)),
    FamilySpec(Family.I_D, (3, 1)),
    FamilySpec(Family.I_DK, (4, 4)),
    FamilySpec(Family.I_K, (0,)),
    FamilySpec(Family.I_NK, (0, 2)),
])
def test_family_parameters_are_validated(spec):
    with pytest.raises(BadParameters):
        family_ideal(spec)


def test_family_powers_are_ratliff_rush():
    specs = [FamilySpec(Family.I_D, (d,)) for d in range(3, 11)]
    specs += [FamilySpec(Family.I_DK, (d, k)) for d in range(2, 11) for k in range(1, d)]
    for spec in specs:
        statuses = all_powers_rr_check(family_ideal(spec), 5)
        assert all(s.is_rr and s.certified for s in statuses), spec

    for k in range(1, 4):
        statuses = all_powers_rr_check(family_ideal(FamilySpec(Family.I_K, (k,))), 4)
        assert all(s.is_rr and s.certified for s in statuses), k


# --- enumeration ---

def test_enumeration_summary_degree_four():
    summary = enumerate_equal_degree(4)
    assert (summary.total, summary.rr_count) == (8, 7)
    assert (summary.half_criterion_count, summary.half_criterion_rr_count) == (6, 6)
    assert summary.sufficient_count == 5
    assert summary.half_criterion_estimate == 8


def test_enumeration_callback_and_limits():
    seen = []
    summary = enumerate_equal_degree(3, seen.append)
    assert summary.total == len(seen) == 4
    assert summary.rr_count == 4
    with pytest.raises(BadParameters):
        list(iter_equal_degree(1))
    with pytest.raises(BadParameters):
        list(iter_equal_degree(config.ENUMERATE_MAX_DEGREE + 1))


def test_criteria_imply_ratliff_rush():
    for d in range(2, 11):
        entries = list(iter_equal_degree(d))
        assert len(entries) == 2 ** (d - 1)
        for entry in entries:
            if entry.sufficient or entry.half_criterion:
                assert entry.is_rr, entry.ideal


def test_maximal_powers_are_ratliff_rush():
    for d in range(1, 9):
        assert is_ratliff_rush(maximal_power(d)) == (True, True)
        assert family_ideal(FamilySpec(Family.I_DK, (d + 1, d))) == maximal_power(d + 1)


# --- oracle: closed form against the colon chain ---

def test_oracle_exhaustive_small_degrees():
    for d in range(2, 9):
        for I in all_equal_degree(d):
            closed = closure_closed_form(I, with_reduction_number=False)
            brute = closure_brute_force(I, max(reduction_bound(I), 1), with_reduction_number=False)
            assert brute.certified
            assert brute.closure == closed.closure, I


def test_reduction_number_within_bound_up_to_degree_nine():
    for d in range(2, 10):
        for I in all_equal_degree(d):
            # reduction_number stops at reduction_bound and raises SearchExhausted past it.
            r = closure_closed_form(I).reduction_number
            assert 0 <= r <= reduction_bound(I), I


def test_power_form_from_bound_up_to_degree_nine():
    for d in range(2, 10):
        for I in all_equal_degree(d):
            start = max(power_form_bound(I), 1)
            for l in range(start, start + 4):
                assert power_form_holds(I, l), (I, l)


def test_oracle_random_equal_degree(rng):
    for _ in range(200):
        I = random_equal_degree(rng, rng.randint(2, 16))
        closed = closure_closed_form(I, with_reduction_number=False)
        brute = closure_brute_force(I, max(reduction_bound(I), 1), with_reduction_number=False)
        assert brute.closure == closed.closure, I


def test_oracle_random_slanted(rng):
    mismatches = []
    for _ in range(50):
        I = random_slanted(rng)
        assert classify(I).kind is ClassKind.SLANTED_LINE
        check = cross_check(I)
        assert contains_ideal(check.closed_form.closure, I)
        if not check.agree:
            mismatches.append(I)
    if mismatches:
        warnings.warn(f"Slanted closed form and colon chain disagree on {len(mismatches)} ideals: {mismatches[:3]}")


# --- Hilbert data ---

def _check_hilbert_consistency(I, closure_ideal, cap=40):
    result_r = reduction_number(I, closure_ideal)
    start = next(l for l in range(max(result_r, 1), cap) if power(closure_ideal, l) == power(I, l))
    for l in range(start, start + 3):
        assert power(closure_ideal, l) == power(I, l)
        assert hilbert_function(closure_ideal, l) == hilbert_function(I, l)
    assert hilbert_polynomial(closure_ideal, start).coefficients == hilbert_polynomial(I, start).coefficients
    return start


def test_hilbert_consistency_goldens(golden_equal_degree, golden_uneven_closure, non_rr_cube, golden_slanted):
    for I in (golden_equal_degree, golden_uneven_closure, non_rr_cube):
        start = _check_hilbert_consistency(I, closure_closed_form(I, with_reduction_number=False).closure)
        assert start <= stable_power_index(I)
        L = stable_power_index(I)
        tilde = closure_closed_form(I, with_reduction_number=False).closure
        assert hilbert_function(tilde, L) == hilbert_function(I, L)
    _check_hilbert_consistency(golden_slanted, closure_closed_form(golden_slanted).closure)


def test_hilbert_consistency_random(rng):
    for _ in range(100):
        I = random_equal_degree(rng, rng.randint(2, 8))
        tilde = closure_closed_form(I, with_reduction_number=False).closure
        start = _check_hilbert_consistency(I, tilde)
        assert start <= stable_power_index(I)


# --- structural invariants ---

def test_extensive_and_idempotent():
    for d in range(2, 7):
        for I in all_equal_degree(d):
            tilde = full_closure(I)
            assert contains_ideal(tilde, I)
            if classify(tilde).kind is ClassKind.EQUAL_DEGREE:
                assert is_ratliff_rush(tilde) == (True, True), I
            else:
                # A Ratliff-Rush ideal is its own colon chain term at every l.
                assert is_ratliff_rush(tilde)[0], I
                for l in range(1, stable_power_index(I) + 2):
                    assert colon(power(tilde, l + 1), power(tilde, l)) == tilde, (I, l)


def _chain_index(I, target, cap):
    current = unit_ideal()
    for l in range(cap + 1):
        following = product(current, I)
        if colon(following, current) == target:
            return l
        current = following
    return None


def test_factor_out_equivariance(rng):
    for _ in range(30):
        I = random_equal_degree(rng, rng.randint(2, 7))
        m = Monomial(rng.randint(0, 3), rng.randint(0, 3))
        mI = shift(I, m)
        assert full_closure(mI) == shift(full_closure(I), m)
        for l in range(1, 4):
            assert colon(power(mI, l + 1), power(mI, l)) == shift(colon(power(I, l + 1), power(I, l)), m)

        r = closure(I)[1].reduction_number
        assert closure(mI)[1].reduction_number == r
        assert _chain_index(mI, full_closure(mI), reduction_bound(I)) == r


def test_colon_chain_is_monotone(golden_equal_degree, golden_slanted, small_j, rng):
    ideals = [golden_equal_degree, golden_slanted, small_j, from_generators([(0, 3), (1, 1), (3, 0)])]
    ideals += [random_equal_degree(rng, rng.randint(2, 8)) for _ in range(10)]
    for I in ideals:
        terms = [colon(power(I, l + 1), power(I, l)) for l in range(1, 7)]
        for smaller, larger in zip(terms, terms[1:]):
            assert contains_ideal(larger, smaller)
