"""
Exact counting formulas

Möbius function, primitive necklace counts L(a_1, ..., a_m), the aggregates bigL,
|N_lambda^(m)|, the inversion a_lambda(m) = |C_lambda(m)|, the character values
chi_lambda, and numeric sweeps of the three counting lemmas. Everything is integer
arithmetic; nothing here touches floating point.
"""

import logging
import time
from dataclasses import dataclass
from functools import lru_cache, reduce
from math import comb, factorial, gcd
from typing import Dict, Sequence, Tuple

from sympy import divisors, factorint

from .perm_core import Composition, compositions
from .report import VerificationReport

logger = logging.getLogger(__name__)


def binomial(a: int, b: int) -> int:
    """C(a, b), zero whenever b < 0 or b > a"""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(part!)"""
    result = factorial(sum(parts))
    for part in parts:
        result //= factorial(part)
    return result


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """
    Number-theoretic Möbius function.

    Args:
        n: Positive integer

    Returns:
        (-1)^t if n is a product of t distinct primes, 0 otherwise
    """
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    exponents = factorint(n)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=None)
def _primitive_necklaces(content: Tuple[int, ...]) -> int:
    n = sum(content)
    g = reduce(gcd, content)
    total = sum(mobius(ell) * multinomial([a // ell for a in content]) for ell in divisors(g))
    count, remainder = divmod(total, n)
    if remainder:
        raise ArithmeticError(f"primitive necklace sum {total} not divisible by {n} for {content}")
    return count


def count_primitive_necklaces(a: Sequence[int]) -> int:
    """
    L(a_1, ..., a_m): primitive necklaces with a_t copies of letter t.

    Zero entries are dropped before taking the gcd, which agrees with brute force.

    Args:
        a: Nonnegative letter counts with positive total

    Returns:
        Nonnegative integer
    """
    if any(x < 0 for x in a):
        raise ValueError(f"letter counts must be nonnegative: {tuple(a)}")
    content = tuple(x for x in a if x)
    if not content:
        raise ValueError("at least one letter count must be positive")
    return _primitive_necklaces(content)


def _check_m(lam: Composition, m: int):
    if not 0 <= m <= lam.n:
        raise ValueError(f"m must lie in [0, {lam.n}] for lambda = {lam.to_text()}, got {m}")


def split_content(lam: Composition, split: Sequence[int]) -> Tuple[int, ...]:
    """Letter counts (lambda_1 - i_1, i_1, ..., lambda_k - i_k, i_k)"""
    content = []
    for part, odd in zip(lam.parts, split):
        content.extend((part - odd, odd))
    return tuple(content)


@lru_cache(maxsize=None)
def bigL(lam: Composition, m: int) -> int:
    """
    Number of primitive necklaces in N_lambda^(m).

    Args:
        lam: Composition of n
        m: Number of odd letters, 0 <= m <= n

    Returns:
        Sum over splits (i_t) with sum m of L(lambda_1 - i_1, i_1, ..., lambda_k - i_k, i_k)
    """
    _check_m(lam, m)
    return sum(count_primitive_necklaces(split_content(lam, split)) for split in lam.splits(m))


def count_N_lambda_m(lam: Composition, m: int) -> int:
    """
    |N_lambda^(m)|, adding the squares q^2 when d is even and m = 2 mod 4.

    Args:
        lam: Composition of n
        m: Number of odd letters, 0 <= m <= n

    Returns:
        Exact count
    """
    _check_m(lam, m)
    total = bigL(lam, m)
    if lam.d % 2 == 0 and m % 4 == 2:
        total += bigL(lam.halved(), m // 2)
    return total


def a_lambda(lam: Composition, m: int) -> int:
    """
    |C_lambda(m)| recovered from the necklace counts by inverting (1 + x)^k.

    Args:
        lam: Composition of n with k parts
        m: Descents outside S(lambda), 0 <= m <= n

    Returns:
        sum_j (-1)^(m-j) C(m-j+k-1, m-j) |N_lambda^(j)|
    """
    _check_m(lam, m)
    k = lam.k
    total = 0
    for j in range(m + 1):
        sign = -1 if (m - j) % 2 else 1
        total += sign * binomial(m - j + k - 1, m - j) * count_N_lambda_m(lam, j)
    return total


def chi(lam: Composition) -> int:
    """
    Character of the representation induced from a faithful linear character of <(12...n)>.

    Args:
        lam: Cycle type, as a composition (order of parts is irrelevant)

    Returns:
        (k-1)! d^(k-1) mu(d) when lambda = (d^k), 0 otherwise
    """
    if not lam.is_rectangular():
        return 0
    d, k = lam.parts[0], lam.k
    return factorial(k - 1) * d ** (k - 1) * mobius(d)


@dataclass(frozen=True)
class CountingLimits:
    """Parameter bounds for the counting lemma sweeps"""

    n_max: int = 10
    dk_max: int = 6
    r_max: int = 10

    def __post_init__(self):
        if min(self.n_max, self.dk_max, self.r_max) < 1:
            raise ValueError(f"counting limits must be positive: {self}")

    def to_params(self) -> Dict[str, int]:
        return {'n_max': self.n_max, 'dk_max': self.dk_max, 'r_max': self.r_max}


def _alternating_polynomial_sums(limits: CountingLimits, lhs: Dict[str, int], rhs: Dict[str, int]) -> int:
    # sum_i (-1)^i p(i) C(n, i) = 0 for deg p = r < n, checked on the monomial basis i^r
    evaluated = 0
    for n in range(1, limits.n_max + 1):
        for r in range(n):
            key = f"bincoef:n={n},r={r}"
            lhs[key] = sum((-1) ** i * i ** r * comb(n, i) for i in range(n + 1))
            rhs[key] = 0
            evaluated += 1
    return evaluated


def _box_choices(limits: CountingLimits, lhs: Dict[str, int], rhs: Dict[str, int]) -> int:
    # sum_{i=1..k} (-1)^(i+k) C(di, k) C(k, i) = d^k
    evaluated = 0
    for d in range(1, limits.dk_max + 1):
        for k in range(1, limits.dk_max + 1):
            key = f"incex:d={d},k={k}"
            lhs[key] = sum((-1) ** (i + k) * comb(d * i, k) * comb(k, i) for i in range(1, k + 1))
            rhs[key] = d ** k
            evaluated += 1
    return evaluated


def _colored_arrangements(limits: CountingLimits, lhs: Dict[str, int], rhs: Dict[str, int]) -> int:
    # sum over a with 0 <= a_t <= gamma_t, sum a = i of r!/prod (gamma_t - a_t)! a_t!
    #   = r!/prod gamma_t! * C(r, i)
    evaluated = 0
    for r in range(1, limits.r_max + 1):
        for gamma in compositions(r):
            by_total = [0] * (r + 1)
            for split in gamma.splits():
                by_total[sum(split)] += multinomial(split_content(gamma, split))
            for i in range(r + 1):
                key = f"long:gamma={gamma.to_text()},i={i}"
                lhs[key] = by_total[i]
                rhs[key] = multinomial(gamma.parts) * comb(r, i)
                evaluated += 1
    return evaluated


def check_counting_lemmas(limits: CountingLimits = CountingLimits()) -> VerificationReport:
    """
    Evaluate both sides of the three counting lemmas over every parameter tuple.

    Args:
        limits: n_max bounds the alternating polynomial sums, dk_max bounds d and k in the
            inclusion-exclusion identity, r_max bounds the compositions gamma

    Returns:
        One report whose lhs/rhs map 'lemma:params' keys to exact values
    """
    started = time.perf_counter()
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    evaluated = _alternating_polynomial_sums(limits, lhs, rhs)
    evaluated += _box_choices(limits, lhs, rhs)
    evaluated += _colored_arrangements(limits, lhs, rhs)
    logger.debug("counting lemmas: %d parameter tuples evaluated", evaluated)
    return VerificationReport(
        identity='counting_lemmas',
        params=limits.to_params(),
        lhs=lhs,
        rhs=rhs,
        enumerated_count=evaluated,
        elapsed=time.perf_counter() - started,
    )
