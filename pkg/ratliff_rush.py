"""Ratliff-Rush closures and reduction numbers of <x, y>-primary monomial ideals.

Two routes to the closure:

* closed form, for ideals whose generators lie on one line a/a_r + b/b_0 = 1
  (equal degree when a_r = b_0 = d): intersect the two staircase ideals
  built from the numerical semigroups of the x- and y-exponents;
* brute force, the colon chain I^(l+1) : I^l, which is nondecreasing in l
  and reaches the closure at the reduction number.

Brute-force results are certified only when the Λ-based reduction bound is
known for the ideal's class and the chain was followed at least that far.
"""
import logging
from dataclasses import dataclass
from enum import Enum, auto
from fractions import Fraction
from math import ceil
from typing import Callable, Iterator, List, Optional, Tuple, Union

import config
from errors import (
    BadBound, BadParameters, NotCertified, NotPrimary, SearchExhausted, WrongClass,
)
from ideal import (
    Monomial, MonomialIdeal, colon, contains_monomial, equals, extract_common_factor,
    from_generators, ideal_sum, intersect, is_m_primary, maximal_power, power, powers,
    principal, shift,
)
from semigroup import NumericalSemigroup, big_lambda, contains, frobenius, normalize_generators

LOGGER = logging.getLogger(__name__)


class ClassKind(Enum):
    EQUAL_DEGREE = auto()
    SLANTED_LINE = auto()
    GENERAL = auto()


@dataclass(frozen=True)
class IdealClass:
    kind: ClassKind
    degree: Optional[int] = None
    a_r: Optional[int] = None
    b_0: Optional[int] = None

    @property
    def has_closed_form(self) -> bool:
        return self.kind is not ClassKind.GENERAL

    @property
    def line(self) -> Tuple[int, int]:
        """(a_r, b_0) of the line every generator lies on."""
        if self.kind is ClassKind.EQUAL_DEGREE:
            return self.degree, self.degree
        if self.kind is ClassKind.SLANTED_LINE:
            return self.a_r, self.b_0
        raise WrongClass("General ideals do not lie on a line.")

    def __str__(self) -> str:
        if self.kind is ClassKind.EQUAL_DEGREE:
            return f"EqualDegree(d={self.degree})"
        if self.kind is ClassKind.SLANTED_LINE:
            return f"SlantedLine(a_r={self.a_r}, b_0={self.b_0})"
        return "General"


class Method(Enum):
    CLOSED_FORM = "closed_form"
    BRUTE_FORCE = "brute_force"


@dataclass(frozen=True)
class ClosureResult:
    closure: MonomialIdeal
    method: Method
    reduction_number: Optional[int]
    l_used: int
    certified: bool
    # Brute force only: the last two colon terms agreed. A hint, never a certificate.
    plateau: Optional[bool] = None

    def added_to(self, I: MonomialIdeal) -> Tuple[Monomial, ...]:
        return tuple(m for m in self.closure.gens if not contains_monomial(I, m))


# --- classification and the associated semigroups ---

def classify(I: MonomialIdeal) -> IdealClass:
    if not is_m_primary(I):
        raise NotPrimary("Only <x, y>-primary ideals can be classified.")
    if I.is_unit:
        return IdealClass(ClassKind.GENERAL)

    degrees = {m.degree for m in I.gens}
    if len(degrees) == 1:
        return IdealClass(ClassKind.EQUAL_DEGREE, degree=degrees.pop())

    a_r, b_0 = I.gens[-1].a, I.gens[0].b
    if all(m.a * b_0 + m.b * a_r == a_r * b_0 for m in I.gens):
        return IdealClass(ClassKind.SLANTED_LINE, a_r=a_r, b_0=b_0)
    return IdealClass(ClassKind.GENERAL)


def _closed_form_class(I: MonomialIdeal) -> IdealClass:
    cls = classify(I)
    if not cls.has_closed_form:
        raise WrongClass(f"Ideal is {cls}; an equal-degree or slanted-line ideal is required.")
    return cls


def _equal_degree(I: MonomialIdeal) -> int:
    cls = classify(I)
    if cls.kind is not ClassKind.EQUAL_DEGREE:
        raise WrongClass(f"Ideal is {cls}; an equal-degree ideal is required.")
    return cls.degree


def semigroups_of(I: MonomialIdeal) -> Tuple[NumericalSemigroup, NumericalSemigroup]:
    _closed_form_class(I)
    return normalize_generators(I.x_exponents), normalize_generators(I.y_exponents)


def ideal_S(I: MonomialIdeal) -> MonomialIdeal:
    a_r, b_0 = _closed_form_class(I).line
    S, _ = semigroups_of(I)
    # Members whose companion exponent b_0*(a_r - s)/a_r is not integral are skipped.
    return from_generators(
        (s, b_0 * (a_r - s) // a_r)
        for s in range(a_r + 1)
        if contains(S, s) and (b_0 * (a_r - s)) % a_r == 0
    )


def ideal_T(I: MonomialIdeal) -> MonomialIdeal:
    a_r, b_0 = _closed_form_class(I).line
    _, T = semigroups_of(I)
    return from_generators(
        (a_r * (b_0 - t) // b_0, t)
        for t in range(b_0 + 1)
        if contains(T, t) and (a_r * (b_0 - t)) % b_0 == 0
    )


# --- bounds ---

def reduction_bound(I: MonomialIdeal) -> int:
    d = _equal_degree(I)
    S, T = semigroups_of(I)
    worst = max(2 * big_lambda(X, d) + 2 - Fraction(frobenius(X) + 1, d) for X in (S, T))
    return max(0, ceil(worst) - 1)


def power_form_bound(I: MonomialIdeal) -> int:
    d = _equal_degree(I)
    S, T = semigroups_of(I)
    worst = max(2 * big_lambda(X, d) + 1 - Fraction(3 + 2 * frobenius(X), d) for X in (S, T))
    return max(0, ceil(worst))


# --- closures ---

def reduction_number(I: MonomialIdeal, closure: Union[MonomialIdeal, ClosureResult]) -> int:
    """Least l >= 0 with I^(l+1) : I^l equal to the closure (the l = 0 term is I itself)."""
    if isinstance(closure, ClosureResult):
        if not closure.certified:
            raise NotCertified("A reduction number needs the certified closure, not a lower approximation.")
        closure = closure.closure

    cls = classify(I)
    cap = reduction_bound(I) if cls.kind is ClassKind.EQUAL_DEGREE else config.REDUCTION_SEARCH_CAP

    chain = powers(I)
    current = next(chain)
    for l in range(cap + 1):
        following = next(chain)
        if equals(colon(following, current), closure):
            return l
        current = following
    raise SearchExhausted(f"Colon chain did not reach the closure within l <= {cap}.")


def closure_closed_form(I: MonomialIdeal, with_reduction_number: bool = True) -> ClosureResult:
    cls = _closed_form_class(I)
    tilde = intersect(ideal_S(I), ideal_T(I))
    LOGGER.info(f"Closed-form closure for {cls}: {len(tilde)} generators")
    r = reduction_number(I, tilde) if with_reduction_number else None
    return ClosureResult(tilde, Method.CLOSED_FORM, r, 0, True)


def closure_brute_force(I: MonomialIdeal, max_l: int, with_reduction_number: bool = True) -> ClosureResult:
    if not is_m_primary(I):
        raise NotPrimary("The colon chain is only computed for <x, y>-primary ideals.")
    if max_l < 1:
        raise BadBound(f"max_l must be at least 1, got {max_l}")

    # The chain is nondecreasing, so the union up to max_l is its last term.
    chain = powers(I)
    window: List[MonomialIdeal] = []
    for l, P in enumerate(chain):
        if l >= max_l - 1:
            window.append(P)
        if l == max_l + 1:
            break
    tilde = colon(window[-1], window[-2])
    plateau = equals(tilde, colon(window[-2], window[-3])) if max_l >= 2 else None

    cls = classify(I)
    certified = cls.kind is ClassKind.EQUAL_DEGREE and max_l >= reduction_bound(I)
    if not certified:
        LOGGER.warning(f"Brute-force closure for {cls} is a lower approximation (l <= {max_l} examined)")

    r = reduction_number(I, tilde) if certified and with_reduction_number else None
    return ClosureResult(tilde, Method.BRUTE_FORCE, r, max_l, certified, plateau)


def closure(I: MonomialIdeal, max_l: Optional[int] = None,
            with_reduction_number: bool = True) -> Tuple[Monomial, ClosureResult]:
    """Closure of the primary part; the closure of I itself is factor * result.closure."""
    factor, reduced = extract_common_factor(I)
    if reduced.is_unit:
        LOGGER.info("Principal ideal: trivially Ratliff-Rush")
        return factor, ClosureResult(reduced, Method.CLOSED_FORM, 0, 0, True)

    cls = classify(reduced)
    LOGGER.info(f"Dispatching closure for {cls} (common factor x^{factor.a} y^{factor.b})")
    if cls.has_closed_form:
        return factor, closure_closed_form(reduced, with_reduction_number)
    return factor, closure_brute_force(reduced, max_l or config.DEFAULT_MAX_L, with_reduction_number)


def full_closure(I: MonomialIdeal, max_l: Optional[int] = None) -> MonomialIdeal:
    factor, result = closure(I, max_l, with_reduction_number=False)
    return shift(result.closure, factor)


def is_ratliff_rush(I: MonomialIdeal, max_l: Optional[int] = None) -> Tuple[bool, bool]:
    """(is Ratliff-Rush, certified).

    A lower approximation that already exceeds I proves I is not Ratliff-Rush,
    so negative answers are always certified.
    """
    factor, result = closure(I, max_l, with_reduction_number=False)
    is_rr = equals(shift(result.closure, factor), I)
    return is_rr, result.certified or not is_rr


@dataclass(frozen=True)
class CrossCheck:
    closed_form: ClosureResult
    brute_force: ClosureResult
    agree: bool


def cross_check(I: MonomialIdeal, max_l: Optional[int] = None) -> CrossCheck:
    """Closed form against the colon chain, followed to the reduction bound where one exists."""
    cls = _closed_form_class(I)
    if max_l is None:
        max_l = reduction_bound(I) if cls.kind is ClassKind.EQUAL_DEGREE else config.DEFAULT_MAX_L
    closed = closure_closed_form(I, with_reduction_number=False)
    brute = closure_brute_force(I, max(max_l, 1), with_reduction_number=False)
    agree = equals(closed.closure, brute.closure)
    if not agree:
        LOGGER.warning(f"Closed form and colon chain disagree for {cls} at l={brute.l_used}")
    return CrossCheck(closed, brute, agree)


# --- power structure ---

def _power_form_rhs(I: MonomialIdeal, l: int) -> MonomialIdeal:
    a_r, b_0 = _closed_form_class(I).line
    S, T = semigroups_of(I)
    gens = []
    for s in range(a_r * l + 1):
        if not contains(S, s):
            continue
        numerator = b_0 * (a_r * l - s)
        if numerator % a_r == 0 and contains(T, numerator // a_r):
            gens.append((s, numerator // a_r))
    return from_generators(gens)


def power_form_holds(I: MonomialIdeal, l: int) -> bool:
    if l < 1:
        raise BadParameters(f"l must be at least 1, got {l}")
    return equals(power(I, l), _power_form_rhs(I, l))


def half_form_holds(I: MonomialIdeal, l: int) -> bool:
    d = _equal_degree(I)
    if l < 1:
        raise BadParameters(f"l must be at least 1, got {l}")
    S, T = semigroups_of(I)
    top = d * l
    gens = [(s, top - s) for s in range(top // 2 + 1) if contains(S, s)]
    gens += [(top - t, t) for t in range(top // 2 + 1) if contains(T, t)]
    return equals(power(I, l), from_generators(gens))


@dataclass(frozen=True)
class PowerDecomposition:
    s_part: MonomialIdeal
    t_part: MonomialIdeal
    middle: MonomialIdeal
    holds: bool
    middle_is_maximal_power: bool
    maximal_power_expected: bool


def power_decomposition(I: MonomialIdeal, l: int) -> PowerDecomposition:
    """I^l against y^(dl-d) I_S + x^(dl-d) I_T + x^d y^d (I^l : x^d y^d)."""
    d = _equal_degree(I)
    if l < 2:
        raise BadParameters(f"The decomposition needs l >= 2, got {l}")

    P = power(I, l)
    middle = colon(P, principal(Monomial(d, d)))
    s_part = shift(ideal_S(I), Monomial(0, d * l - d))
    t_part = shift(ideal_T(I), Monomial(d * l - d, 0))
    rebuilt = ideal_sum(ideal_sum(s_part, t_part), shift(middle, Monomial(d, d)))

    S, T = semigroups_of(I)
    return PowerDecomposition(
        s_part=s_part,
        t_part=t_part,
        middle=middle,
        holds=equals(rebuilt, P),
        middle_is_maximal_power=equals(middle, maximal_power(d * (l - 2))),
        maximal_power_expected=frobenius(S) <= d - 1 and frobenius(T) <= d - 1,
    )


def _pairs_closed(exponents: List[int], d: int) -> bool:
    present = set(exponents)
    return all(p + q in present or p + q >= d for p in present for q in present)


def sufficient_rr_check(I: MonomialIdeal) -> bool:
    """Every a_i + a_j is again some a_k or reaches d. True implies Ratliff-Rush."""
    return _pairs_closed(I.x_exponents, _equal_degree(I))


def sufficient_rr_check_y(I: MonomialIdeal) -> bool:
    """The same test on the y-exponents."""
    return _pairs_closed(I.y_exponents, _equal_degree(I))


@dataclass(frozen=True)
class PowerStatus:
    l: int
    is_rr: bool
    certified: bool
    added: Tuple[Monomial, ...]


def all_powers_rr_check(I: MonomialIdeal, l_max: int, max_l: Optional[int] = None) -> List[PowerStatus]:
    if not is_m_primary(I):
        raise NotPrimary("Powers are checked for <x, y>-primary ideals only.")
    if l_max < 1:
        raise BadParameters(f"l_max must be at least 1, got {l_max}")

    statuses = []
    for l, P in enumerate(powers(I)):
        if l == 0:
            continue
        if l > l_max:
            break
        _, result = closure(P, max_l, with_reduction_number=False)
        added = result.added_to(P)
        statuses.append(PowerStatus(l, not added, result.certified or bool(added), added))
        LOGGER.debug(f"I^{l}: {'Ratliff-Rush' if not added else f'{len(added)} generators added'}")
    return statuses


# --- families ---

class Family(Enum):
    I_D = "I_d"
    I_DK = "I_dk"
    I_K = "I_k"
    I_NK = "I_nk"


FAMILY_PARAMETERS = {
    Family.I_D: ("d",),
    Family.I_DK: ("d", "k"),
    Family.I_K: ("k",),
    Family.I_NK: ("n", "k"),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: Tuple[int, ...]


def family_ideal(spec: FamilySpec) -> MonomialIdeal:
    expected = FAMILY_PARAMETERS[spec.family]
    if len(spec.params) != len(expected):
        raise BadParameters(f"{spec.family.value} takes parameters {', '.join(expected)}, got {spec.params}")

    if spec.family is Family.I_D:
        (d,) = spec.params
        if d < 2:
            raise BadParameters(f"I_d needs d >= 2, got {d}")
        return from_generators([(0, d), (d - 1, 1), (d, 0)])

    if spec.family is Family.I_DK:
        d, k = spec.params
        if d < 2 or not 1 <= k < d:
            raise BadParameters(f"I_dk needs d >= 2 and 1 <= k < d, got d={d}, k={k}")
        return from_generators([(0, d)] + [(d - j, j) for j in range(k + 1)])

    if spec.family is Family.I_K:
        (k,) = spec.params
        if k < 1:
            raise BadParameters(f"I_k needs k >= 1, got {k}")
        gens = [(0, 6 * k + 1)]
        gens += [(2 * (k + i) + 1, 4 * k - 2 * i) for i in range(k)]
        gens += [(4 * k + i + 1, 2 * k - i) for i in range(2 * k + 1)]
        return from_generators(gens)

    n, k = spec.params
    if n < 1 or k < 1:
        raise BadParameters(f"I_nk needs n >= 1 and k >= 1, got n={n}, k={k}")
    gens = [(i * n, n * (k + 1 - i) - 1) for i in range(k + 1)]
    gens += [(k * n + j, n - j - 1) for j in range(n)]
    return from_generators(gens)


# --- enumeration ---

@dataclass(frozen=True)
class EnumeratedIdeal:
    ideal: MonomialIdeal
    is_rr: bool
    half_criterion: bool
    sufficient: bool


@dataclass(frozen=True)
class EnumerationSummary:
    degree: int
    total: int
    rr_count: int
    half_criterion_count: int
    half_criterion_rr_count: int
    sufficient_count: int
    half_criterion_estimate: int


def iter_equal_degree(d: int) -> Iterator[EnumeratedIdeal]:
    """Every <x, y>-primary ideal generated in degree d, middle monomials chosen by bitmask."""
    if not 2 <= d <= config.ENUMERATE_MAX_DEGREE:
        raise BadParameters(f"Enumeration needs 2 <= d <= {config.ENUMERATE_MAX_DEGREE}, got {d}")
    for mask in range(2 ** (d - 1)):
        middle = [(i, d - i) for i in range(1, d) if mask >> (i - 1) & 1]
        I = from_generators([(0, d), (d, 0)] + middle)
        result = closure_closed_form(I, with_reduction_number=False)
        half = 2 * I.gens[1].a >= d or 2 * I.gens[-2].b >= d
        yield EnumeratedIdeal(I, equals(result.closure, I), half, sufficient_rr_check(I))


def enumerate_equal_degree(d: int,
                           on_entry: Optional[Callable[[EnumeratedIdeal], None]] = None) -> EnumerationSummary:
    total = rr_count = half_count = half_rr = sufficient = 0
    for entry in iter_equal_degree(d):
        total += 1
        rr_count += entry.is_rr
        half_count += entry.half_criterion
        half_rr += entry.half_criterion and entry.is_rr
        sufficient += entry.sufficient
        if on_entry:
            on_entry(entry)
    LOGGER.info(f"Degree {d}: {rr_count}/{total} Ratliff-Rush")
    return EnumerationSummary(d, total, rr_count, half_count, half_rr, sufficient, 2 * 2 ** -(-d // 2))
