"""Numerical semigroups: membership, minimal representations, Frobenius number
and the representation-count bounds used by the closure constructions.

Every quantity is exact. Minimal coefficient sums are computed by the
min-coin dynamic program, never greedily: greedy fails on semigroups as small
as <3, 5> (9 = 3+3+3, but 9 - 5 = 4 is not a member).
"""
import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import ceil, gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import AlphaOutOfRange, BadParameters, EmptySemigroup, NoRepresentation, NotAMember

LOGGER = logging.getLogger(__name__)

Rational = Fraction | int


def _extend_min_coin_table(table: List[Optional[int]], coins: Sequence[int], n: int) -> None:
    # table[m] is the least number of coins summing to m, None when m is unreachable.
    for m in range(len(table), n + 1):
        best = None
        for coin in coins:
            if coin > m:
                break
            prev = table[m - coin]
            if prev is not None and (best is None or prev + 1 < best):
                best = prev + 1
        table.append(best)


def _min_coin_table(coins: Sequence[int], n: int) -> List[Optional[int]]:
    table: List[Optional[int]] = [0]
    _extend_min_coin_table(table, coins, n)
    return table


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: Tuple[int, ...]
    h: int
    # Only ever appended to, under _lock.
    _table: List[Optional[int]] = field(default_factory=lambda: [0], init=False, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False, compare=False)

    @property
    def smallest(self) -> int:
        return self.generators[0]

    @property
    def largest(self) -> int:
        """a_r, the largest minimal generator."""
        return self.generators[-1]

    def scaled(self, factor: int) -> "NumericalSemigroup":
        if factor < 1:
            raise BadParameters(f"Scaling factor must be positive, got {factor}")
        return NumericalSemigroup(tuple(factor * a for a in self.generators), factor * self.h)

    def lambda_table(self, n: int) -> List[Optional[int]]:
        if n >= len(self._table):
            with self._lock:
                old_size = len(self._table)
                _extend_min_coin_table(self._table, self.generators, n)
                if len(self._table) > old_size:
                    LOGGER.debug(f"{self}: min-coin table grown {old_size} -> {len(self._table)}")
        return self._table

    def __str__(self) -> str:
        return "<" + ", ".join(str(a) for a in self.generators) + ">"


def normalize_generators(raw: Iterable[int]) -> NumericalSemigroup:
    positives = sorted({int(a) for a in raw if int(a) > 0})
    if not positives:
        raise EmptySemigroup("A numerical semigroup needs at least one positive generator.")

    wanted = set(positives)
    reachable = [True] + [False] * positives[-1]
    minimal: List[int] = []
    for n in range(1, positives[-1] + 1):
        reachable[n] = any(reachable[n - a] for a in minimal if a <= n)
        if n in wanted and not reachable[n]:
            minimal.append(n)
            reachable[n] = True

    return NumericalSemigroup(tuple(minimal), reduce(gcd, minimal))


def contains(S: NumericalSemigroup, n: int) -> bool:
    if n < 0 or n % S.h:
        return False
    return S.lambda_table(n)[n] is not None


def lambda_min(S: NumericalSemigroup, s: int) -> int:
    if not contains(S, s):
        raise NotAMember(S, s)
    return S.lambda_table(s)[s]


def min_representation(S: NumericalSemigroup, s: int) -> Tuple[int, ...]:
    """Coefficients over the minimal generators realising lambda_min.

    Among all minimal representations the one with the greatest coefficient
    on the largest generator wins, then on the next largest, and so on.
    """
    coins_left = lambda_min(S, s)
    gens = S.generators
    coeffs = [0] * len(gens)
    remaining = s

    for idx in range(len(gens) - 1, 0, -1):
        a = gens[idx]
        smaller = _min_coin_table(gens[:idx], remaining)
        for c in range(min(remaining // a, coins_left), -1, -1):
            rest = smaller[remaining - c * a]
            if rest is not None and rest == coins_left - c:
                coeffs[idx] = c
                remaining -= c * a
                coins_left -= c
                break

    coeffs[0] = remaining // gens[0]
    return tuple(coeffs)


def representation_with_total(S: NumericalSemigroup, s: int, total: int) -> Tuple[int, ...]:
    """(λ_0, λ_1, ..., λ_r) with Σλ_i = total and Σλ_i·a_i = s, λ_0 sitting on a_0 = 0."""
    if total < 0:
        raise BadParameters(f"Coefficient total must be nonnegative, got {total}")
    if not contains(S, s):
        raise NoRepresentation(f"{s} is not a member of {S}, so no representation exists")
    if lambda_min(S, s) > total:
        raise NoRepresentation(
            f"{s} needs at least {lambda_min(S, s)} generators of {S}; {total} are not enough"
        )
    coeffs = min_representation(S, s)
    return (total - sum(coeffs),) + coeffs


def frobenius(S: NumericalSemigroup) -> int:
    """g(S), the greatest multiple of h outside S; -h when there is none."""
    needed_run = S.smallest // S.h
    last_gap = -S.h
    run = 0
    n = 0
    while run < needed_run:
        if contains(S, n):
            run += 1
        else:
            last_gap = n
            run = 0
        n += S.h
    return last_gap


def big_lambda(S: NumericalSemigroup, a_r: Optional[int] = None) -> int:
    """Λ, the largest λ(s) over members s <= g(S) + a_r.

    a_r defaults to the largest minimal generator. Semigroups read off an
    ideal pass the ideal's largest exponent, which the minimal generating
    set may have dropped (<1> from <y^5, xy^4, x^4y, x^5> still needs a_r = 5).
    """
    if a_r is None:
        a_r = S.largest
    if a_r < S.largest:
        raise BadParameters(f"a_r must be at least the largest generator {S.largest}, got {a_r}")
    upper = frobenius(S) + a_r
    table = S.lambda_table(max(upper, 0))
    return max((table[s] for s in range(0, upper + 1) if table[s] is not None), default=0)


def bound_L(S: NumericalSemigroup, alpha: Rational, beta: Rational) -> int:
    """Least index from which every member s <= a_r*alpha*l + beta has λ(s) <= l."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha >= 1:
        raise AlphaOutOfRange(f"alpha must be < 1, got {alpha}")
    if alpha < 0 or beta < 0:
        raise BadParameters(f"alpha and beta must be nonnegative, got alpha={alpha}, beta={beta}")
    a_r = S.largest
    value = (a_r * big_lambda(S) + beta - frobenius(S) - 1) / (a_r * (1 - alpha))
    return max(0, ceil(value))


def half_window_bound(S: NumericalSemigroup, j: int) -> int:
    if j < 0:
        raise BadParameters(f"Window shift j must be nonnegative, got {j}")
    return bound_L(S, Fraction(1, 2), Fraction(S.largest * (j + 1) - 1, 2))


def ratio_bounds(S: NumericalSemigroup, s: int) -> Tuple[Fraction, Optional[Fraction]]:
    """Lower and upper brackets for s/λ(s) past the Frobenius number."""
    g = frobenius(S)
    if not contains(S, s):
        raise NotAMember(S, s)
    if s <= g:
        raise BadParameters(f"ratio_bounds needs s > g(S) = {g}, got {s}")
    a_r = S.largest
    n = (s - g - 1) // a_r
    lower = Fraction(g + a_r * n + 1, big_lambda(S) + n)
    upper = Fraction(g + a_r * (n + 1), n) if n else None
    return lower, upper
