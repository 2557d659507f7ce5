"""Monomial ideals of k[x, y] (or k[[x, y]]) and their exact arithmetic.

An ideal is stored as its minimal generators x^a y^b sorted by increasing a,
which forces strictly decreasing b: the inner corners of the staircase. The
zero ideal has no generators and the unit ideal is the single generator 1.

Colon and intersection work on the staircase function f(u) = least b with
x^u y^b in the ideal, which is nonincreasing in u and constant past the
last generator.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, List, NamedTuple, Sequence, Tuple

from errors import BadParameters, NotPrimary, ZeroDivisor, ZeroIdeal

LOGGER = logging.getLogger(__name__)

_UNBOUNDED = math.inf


class Monomial(NamedTuple):
    a: int  # exponent of x
    b: int  # exponent of y

    @property
    def degree(self) -> int:
        return self.a + self.b

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b)


ONE = Monomial(0, 0)


@dataclass(frozen=True)
class MonomialIdeal:
    gens: Tuple[Monomial, ...]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (ONE,)

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    @property
    def x_exponents(self) -> List[int]:
        return [m.a for m in self.gens]

    @property
    def y_exponents(self) -> List[int]:
        return [m.b for m in self.gens]

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self) -> int:
        return len(self.gens)


def _minimalize(monomials: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    kept: List[Monomial] = []
    lowest_b = _UNBOUNDED
    for m in sorted(set(monomials)):
        if m.b < lowest_b:
            kept.append(m)
            lowest_b = m.b
    return tuple(kept)


def from_generators(raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    monomials = []
    for item in raw:
        a, b = item
        if int(a) != a or int(b) != b or a < 0 or b < 0:
            raise BadParameters(f"Exponents must be nonnegative integers, got ({a}, {b})")
        monomials.append(Monomial(int(a), int(b)))
    return MonomialIdeal(_minimalize(monomials))


def zero_ideal() -> MonomialIdeal:
    return MonomialIdeal(())


def unit_ideal() -> MonomialIdeal:
    return MonomialIdeal((ONE,))


def principal(m: Monomial) -> MonomialIdeal:
    return MonomialIdeal((Monomial(*m),))


def maximal_power(d: int) -> MonomialIdeal:
    """<x, y>^d."""
    if d < 0:
        raise BadParameters(f"Power of the maximal ideal must be nonnegative, got {d}")
    return MonomialIdeal(tuple(Monomial(i, d - i) for i in range(d + 1)))


# --- membership and comparison ---

def contains_monomial(I: MonomialIdeal, m: Monomial) -> bool:
    return any(g.divides(m) for g in I.gens)


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when J is a subideal of I."""
    return all(contains_monomial(I, g) for g in J.gens)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return I.gens == J.gens


# --- staircase helpers ---

def _staircase(I: MonomialIdeal, width: int) -> List[float]:
    """f(u) for u = 0..width; unbounded where no generator has a <= u."""
    values: List[float] = []
    current = _UNBOUNDED
    gens = I.gens
    idx = 0
    for u in range(width + 1):
        while idx < len(gens) and gens[idx].a <= u:
            current = min(current, gens[idx].b)
            idx += 1
        values.append(current)
    return values


def _from_staircase(values: Sequence[float]) -> MonomialIdeal:
    gens = []
    previous = _UNBOUNDED
    for u, v in enumerate(values):
        if v < previous:
            gens.append(Monomial(u, int(v)))
            previous = v
    return MonomialIdeal(tuple(gens))


# --- operations ---

def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(_minimalize(I.gens + J.gens))


def shift(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """m * I."""
    return MonomialIdeal(tuple(g.times(m) for g in I.gens))


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(_minimalize(g.times(h) for g in I.gens for h in J.gens))


def powers(I: MonomialIdeal) -> Iterator[MonomialIdeal]:
    """I^0, I^1, I^2, ... by iterated product."""
    current = unit_ideal()
    while True:
        yield current
        current = product(current, I)


def power(I: MonomialIdeal, l: int) -> MonomialIdeal:
    if l < 0:
        raise BadParameters(f"Power must be nonnegative, got {l}")
    result = unit_ideal()
    for _ in range(l):
        result = product(result, I)
    return result


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.is_zero or J.is_zero:
        return zero_ideal()
    width = max(I.gens[-1].a, J.gens[-1].a)
    f_i, f_j = _staircase(I, width), _staircase(J, width)
    return _from_staircase([max(p, q) for p, q in zip(f_i, f_j)])


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """I : m, generated by x^max(a-m.a, 0) y^max(b-m.b, 0)."""
    return MonomialIdeal(_minimalize(
        Monomial(max(g.a - m.a, 0), max(g.b - m.b, 0)) for g in I.gens
    ))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J, the intersection of I : g over the generators g of J."""
    if J.is_zero:
        raise ZeroDivisor("Colon by the zero ideal is undefined.")
    if I.is_zero:
        return zero_ideal()

    width = I.gens[-1].a
    reach = J.gens[-1].a
    f = _staircase(I, width + reach)
    j_gens = J.gens
    values = []
    for u in range(width + 1):
        # x^u y^v lies in I:J iff v + b >= f(u + a) for every generator (a, b) of J
        need = max(f[u + g.a] - g.b for g in j_gens)
        values.append(max(need, 0))
    return _from_staircase(values)


def extract_common_factor(I: MonomialIdeal) -> Tuple[Monomial, MonomialIdeal]:
    """Split I = m * I' with I' the unit ideal or <x, y>-primary."""
    if I.is_zero:
        raise ZeroIdeal("The zero ideal has no common monomial factor.")
    m = Monomial(I.gens[0].a, I.gens[-1].b)
    reduced = MonomialIdeal(tuple(Monomial(g.a - m.a, g.b - m.b) for g in I.gens))
    return m, reduced


def is_m_primary(I: MonomialIdeal) -> bool:
    return not I.is_zero and I.gens[0].a == 0 and I.gens[-1].b == 0


# --- Hilbert data ---

def colength(I: MonomialIdeal) -> int:
    """dim_k R/I, the number of monomials under the staircase."""
    if not is_m_primary(I):
        raise NotPrimary("Colength is infinite unless the ideal is <x, y>-primary.")
    gens = I.gens
    return sum(gens[i].a * (gens[i - 1].b - gens[i].b) for i in range(1, len(gens)))


def hilbert_function(I: MonomialIdeal, l: int) -> int:
    if not is_m_primary(I):
        raise NotPrimary("The Hilbert function needs an <x, y>-primary ideal.")
    return colength(power(I, l))


@dataclass(frozen=True)
class HilbertPolynomial:
    c2: Fraction
    c1: Fraction
    c0: Fraction
    verified: bool
    l_start: int

    def __call__(self, l: int) -> Fraction:
        return self.c2 * l * l + self.c1 * l + self.c0

    @property
    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        return self.c2, self.c1, self.c0


def hilbert_polynomial(I: MonomialIdeal, l_start: int = 1) -> HilbertPolynomial:
    """Quadratic through H(l_start), H(l_start+1), H(l_start+2), checked on two more points."""
    if not is_m_primary(I):
        raise NotPrimary("The Hilbert polynomial needs an <x, y>-primary ideal.")
    if l_start < 1:
        raise BadParameters(f"l_start must be at least 1, got {l_start}")

    values = []
    for l, P in enumerate(powers(I)):
        if l >= l_start:
            values.append(colength(P))
        if len(values) == 5:
            break

    h0, h1, h2 = values[:3]
    c2 = Fraction(h2 - 2 * h1 + h0, 2)
    c1 = (h1 - h0) - c2 * (2 * l_start + 1)
    c0 = h0 - c2 * l_start * l_start - c1 * l_start
    poly = HilbertPolynomial(c2, c1, c0, False, l_start)
    verified = poly(l_start + 3) == values[3] and poly(l_start + 4) == values[4]
    if not verified:
        LOGGER.debug(f"Hilbert fit from l={l_start} not yet stable")
    return HilbertPolynomial(c2, c1, c0, verified, l_start)
