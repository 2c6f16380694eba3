"""
Words, necklaces and the periodic-pattern map

Words live on the alphabet {0, ..., 2k-1}: within block t, letter 2t marks the
increasing run and 2t+1 the decreasing run. N_lambda holds the primitive necklaces
with block contents a_2t + a_2t+1 = lambda_(t+1), plus the squares q^2 of primitive
q with an odd number of odd letters. PPat_lambda sends such a necklace to the cyclic
permutation whose cycle ranks the rotations of a representative under the
parity-twisted order.
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from sympy import divisors

from .errors import InvalidWordError, NotInCLambdaError, NotInNLambdaError
from .perm_core import (
    Composition,
    Permutation,
    cycle_to_one_line,
    is_cyclic,
    is_lambda_unimodal,
    one_line_to_cycle,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Word:
    """
    A word s_1 ... s_n on the letters {0, ..., 2k-1}.
    """

    letters: Tuple[int, ...]
    k: int

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, 'letters', letters)
        if self.k < 1:
            raise InvalidWordError(f"alphabet needs k >= 1 blocks, got {self.k}")
        bad = [x for x in letters if not 0 <= x < 2 * self.k]
        if bad:
            raise InvalidWordError(f"letters {bad} outside alphabet {{0..{2 * self.k - 1}}}")

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def alphabet_size(self) -> int:
        return 2 * self.k

    def content(self) -> Tuple[int, ...]:
        """(a_0(s), ..., a_(2k-1)(s))"""
        counts = [0] * self.alphabet_size
        for x in self.letters:
            counts[x] += 1
        return tuple(counts)

    @property
    def odd_count(self) -> int:
        """o(s)"""
        return sum(1 for x in self.letters if x % 2)

    def rotate(self, i: int) -> 'Word':
        """Sigma^i(s)"""
        if not self.letters:
            return self
        i %= self.n
        return Word(self.letters[i:] + self.letters[:i], self.k)

    def rotations(self) -> List['Word']:
        return [self.rotate(i) for i in range(self.n)]

    def to_text(self) -> str:
        """Digit string for alphabets of size <= 10, comma list otherwise"""
        if self.alphabet_size <= 10:
            return ''.join(str(x) for x in self.letters)
        return ','.join(str(x) for x in self.letters)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def parse(cls, text: str, k: int) -> 'Word':
        """
        Parse a word.

        Args:
            text: '00121' or '0,11,3' for alphabets larger than 10
            k: Number of blocks (alphabet {0..2k-1})

        Returns:
            Word instance
        """
        cleaned = text.strip().replace(' ', '')
        try:
            if ',' in cleaned:
                letters = tuple(int(tok) for tok in cleaned.split(',') if tok)
            else:
                letters = tuple(int(ch) for ch in cleaned)
        except ValueError as e:
            raise InvalidWordError(f"cannot parse word {text!r}") from e
        return cls(letters, k)


def _least_rotation(letters: Tuple[int, ...]) -> Tuple[int, ...]:
    return min((letters[i:] + letters[:i] for i in range(len(letters))), default=letters)


@dataclass(frozen=True)
class NecklaceClass:
    """
    A rotation class of words, keyed by its lexicographically least rotation
    (ordinary integer order on letters).
    """

    canonical: Word

    def __post_init__(self):
        if self.canonical.letters != _least_rotation(self.canonical.letters):
            raise InvalidWordError(
                f"{self.canonical.to_text()} is not the least rotation of its class; use NecklaceClass.of")

    @classmethod
    def of(cls, word: Word) -> 'NecklaceClass':
        return cls(Word(_least_rotation(word.letters), word.k))

    @property
    def n(self) -> int:
        return self.canonical.n

    @property
    def k(self) -> int:
        return self.canonical.k


@dataclass(frozen=True)
class NLambdaMember:
    """A necklace class of N_lambda with its primitivity flag"""

    necklace: NecklaceClass
    lam: Composition
    primitive: bool

    @property
    def word(self) -> Word:
        return self.necklace.canonical

    @property
    def odd_count(self) -> int:
        return self.necklace.canonical.odd_count

    def to_dict(self) -> dict:
        return {
            'lambda': self.lam.to_text(),
            'word': self.word.to_text(),
            'primitive': self.primitive,
            'o': self.odd_count,
        }


def shift(s: Word) -> Word:
    """Sigma: s_1 s_2 ... s_n -> s_2 ... s_n s_1"""
    return s.rotate(1)


def _check_comparable(s: Word, t: Word):
    if s.n != t.n:
        raise ValueError(f"cannot compare words of lengths {s.n} and {t.n}")
    if s.k != t.k:
        raise ValueError(f"cannot compare words over alphabets of size {s.alphabet_size} and {t.alphabet_size}")


def precedence_key(s: Word) -> Tuple[int, ...]:
    """
    Key whose ordinary lexicographic order is the order ≺.

    Each letter is negated when the prefix before it holds an odd number of odd letters.
    """
    key = []
    odd = 0
    for x in s.letters:
        key.append(-x if odd else x)
        odd ^= x & 1
    return tuple(key)


def precedes(s: Word, t: Word) -> bool:
    """
    s ≺ t: at the first disagreement i, s_i < t_i after an even prefix, s_i > t_i after an odd one.

    Equal words are incomparable, so precedes(s, s) is False.
    """
    _check_comparable(s, t)
    odd = 0
    for x, y in zip(s.letters, t.letters):
        if x != y:
            return x > y if odd else x < y
        odd ^= x & 1
    return False


@lru_cache(maxsize=None)
def _divisors(n: int) -> Tuple[int, ...]:
    return tuple(divisors(n))


def smallest_period(s: Word) -> int:
    """Least r dividing n with s = q^(n/r), |q| = r"""
    for r in _divisors(s.n):
        if s.letters[r:] + s.letters[:r] == s.letters:
            return r
    return s.n


def is_primitive(s: Word) -> bool:
    """True iff s is not q^r for a shorter word q"""
    return smallest_period(s) == s.n


def complement(s: Word) -> Word:
    """Swap 2t <-> 2t+1 in every letter"""
    return Word(tuple(x ^ 1 for x in s.letters), s.k)


def n_lambda_violation(s: Word, lam: Composition) -> Optional[str]:
    """
    Name the first N_lambda membership clause s fails, or None when s is a member.

    Args:
        s: Candidate representative
        lam: Composition of n

    Returns:
        'size', 'alphabet', 'content', 'primitivity' or None
    """
    if s.n != lam.n:
        return 'size'
    if s.k != lam.k:
        return 'alphabet'
    content = s.content()
    if any(content[2 * t] + content[2 * t + 1] != part for t, part in enumerate(lam.parts)):
        return 'content'
    period = smallest_period(s)
    if period == s.n:
        return None
    if 2 * period == s.n and Word(s.letters[:period], s.k).odd_count % 2 == 1:
        return None
    return 'primitivity'


def in_N_lambda(s: Word, lam: Composition) -> bool:
    """
    Check that [s] belongs to N_lambda.

    Args:
        s: Word of length lam.n on 2 * lam.k letters
        lam: Composition

    Returns:
        True iff the block contents match lambda and s is primitive or q^2 with o(q) odd
    """
    clause = n_lambda_violation(s, lam)
    if clause in ('size', 'alphabet'):
        raise ValueError(f"word {s.to_text()} does not fit lambda = {lam.to_text()} ({clause} mismatch)")
    return clause is None


def require_N_lambda(s: Word, lam: Composition) -> NLambdaMember:
    """Build the member for s, raising NotInNLambdaError with the failed clause"""
    clause = n_lambda_violation(s, lam)
    if clause is not None:
        messages = {
            'size': f"word has length {s.n} but lambda sums to {lam.n}",
            'alphabet': f"word uses {s.alphabet_size} letters but lambda needs {2 * lam.k}",
            'content': "block contents a_2t + a_2t+1 do not match the parts of lambda",
            'primitivity': "word is neither primitive nor q^2 with q primitive and o(q) odd",
        }
        raise NotInNLambdaError(f"{s.to_text()} not in N_{lam.to_text()}: {messages[clause]}", clause)
    return NLambdaMember(NecklaceClass.of(s), lam, is_primitive(s))


def _necklaces_with_content(counts: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """
    Fixed-content FKM generation: yield (necklace, period) in lexicographic order.

    Each necklace is the least rotation of its class; period is the length of its
    longest Lyndon prefix, so the necklace is primitive iff period == n.
    """
    n = sum(counts)
    remaining = list(counts)
    first = next(letter for letter, c in enumerate(counts) if c)
    a = [0] * (n + 1)
    a[1] = first
    remaining[first] -= 1

    def gen(t: int, p: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
        if t > n:
            if n % p == 0:
                yield tuple(a[1:]), p
            return
        for letter in range(a[t - p], len(counts)):
            if not remaining[letter]:
                continue
            a[t] = letter
            remaining[letter] -= 1
            yield from gen(t + 1, p if letter == a[t - p] else t)
            remaining[letter] += 1

    yield from gen(2, 1)


def enumerate_N_lambda(lam: Composition, m: Optional[int] = None) -> Iterator[NLambdaMember]:
    """
    Yield each necklace class of N_lambda (or N_lambda^(m)) exactly once.

    Classes come grouped by content vector (odd letters i_t per block, lexicographic)
    and, within a content vector, in lexicographic order of their least rotation.

    Args:
        lam: Composition of n
        m: If given, only classes with o(s) = m

    Returns:
        Iterator of NLambdaMember
    """
    if m is not None and not 0 <= m <= lam.n:
        raise ValueError(f"m must lie in [0, {lam.n}], got {m}")
    n, k = lam.n, lam.k
    for split in lam.splits(m):
        counts = []
        for part, odd in zip(lam.parts, split):
            counts.extend((part - odd, odd))
        for letters, period in _necklaces_with_content(tuple(counts)):
            word = Word(letters, k)
            if period == n:
                yield NLambdaMember(NecklaceClass(word), lam, True)
            elif 2 * period == n and sum(x & 1 for x in letters[:period]) % 2 == 1:
                yield NLambdaMember(NecklaceClass(word), lam, False)


def pattern(s: Word) -> Permutation:
    """
    The pattern pi: pi_i is the rank of Sigma^(i-1)(s) among all rotations under ≺.

    For s = q^2 the rotations j and j + n/2 coincide; j ranks first iff the prefix
    s_1 ... s_j holds an even number of odd letters.

    Args:
        s: Primitive word, or q^2 with q primitive and o(q) odd

    Returns:
        Permutation pi in one-line notation
    """
    n = s.n
    period = smallest_period(s)
    if period != n and 2 * period != n:
        raise ValueError(f"{s.to_text()} has period {period}; only primitive words and squares have a pattern")

    # parity[t] = odd letters among the first t letters of s s, mod 2
    doubled = s.letters + s.letters
    parity = [0] * (2 * n + 1)
    for t, x in enumerate(doubled):
        parity[t + 1] = parity[t] ^ (x & 1)
    # precedence_key(Sigma^i(s)) is signed[i:i+n] after an even prefix, flipped[i:i+n] after an odd one
    signed = tuple(-x if parity[t] else x for t, x in enumerate(doubled))
    flipped = tuple(-x for x in signed)

    def tiebreak(i: int) -> int:
        if period == n:
            return 0
        j = i % period
        first = j if parity[j] == 0 else j + period
        return 0 if i == first else 1

    keys = [((flipped if parity[i] else signed)[i:i + n], tiebreak(i)) for i in range(n)]
    order = sorted(range(n), key=keys.__getitem__)
    ranks = [0] * n
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return Permutation(tuple(ranks))


def ppat_word(s: Word) -> Permutation:
    """PPat of the class of s, computed from s itself as representative"""
    return cycle_to_one_line(pattern(s).entries)


def ppat(member: NLambdaMember) -> Permutation:
    """
    PPat_lambda: the cyclic permutation (pi_1 pi_2 ... pi_n) of the pattern pi.

    Args:
        member: Element of N_lambda

    Returns:
        Element of C(lambda), independent of the representative
    """
    return ppat_word(member.word)


def cut_words(p: Permutation, lam: Composition) -> Iterator[Word]:
    """
    Every word built from a cut sequence 0 = e_0 <= e_1 <= ... <= e_2k = n of p.

    e_2t are the partial sums of lambda; e_2t+1 ends the increasing run of block t and is
    either the position of the block maximum or the position just before it. The letter
    at cycle position i is the t with e_t < c_i <= e_(t+1), where c is the cycle of p
    starting at 1.

    Args:
        p: Element of C(lambda)
        lam: Composition of n

    Returns:
        Iterator of 2^k words (cut choices in lexicographic order, maximum in the increasing run first)
    """
    cycle = one_line_to_cycle(p)
    peaks = []
    for start, end in lam.blocks():
        block = p.entries[start:end]
        peaks.append(start + block.index(max(block)) + 1)

    for drops in product((0, 1), repeat=lam.k):
        cuts = [0]
        for t, end in enumerate(lam.partial_sums):
            cuts.append(peaks[t] - drops[t])
            cuts.append(end)
        yield Word(tuple(bisect_left(cuts, c) - 1 for c in cycle), lam.k)


def in_C_lambda(p: Permutation, lam: Composition) -> bool:
    return p.n == lam.n and is_cyclic(p) and is_lambda_unimodal(p, lam)


def ppat_preimages(p: Permutation, lam: Composition) -> Dict[int, FrozenSet[NLambdaMember]]:
    """
    The whole PPat_lambda fiber over p, split by number of odd letters.

    Args:
        p: Element of C(lambda)
        lam: Composition of n

    Returns:
        Map m -> members of N_lambda^(m) sent to p; m without members is absent
    """
    if not in_C_lambda(p, lam):
        raise NotInCLambdaError(f"{p.to_text()} is not a {lam.to_text()}-unimodal cycle")
    buckets: Dict[int, Dict[NecklaceClass, NLambdaMember]] = {}
    for word in cut_words(p, lam):
        if not in_N_lambda(word, lam) or ppat_word(word) != p:
            continue
        necklace = NecklaceClass.of(word)
        buckets.setdefault(word.odd_count, {})[necklace] = NLambdaMember(necklace, lam, is_primitive(word))
    logger.debug("preimage of %s in N_%s: %s", p.to_text(), lam.to_text(),
                 {m: len(members) for m, members in sorted(buckets.items())})
    return {m: frozenset(members.values()) for m, members in buckets.items()}


def ppat_preimage(p: Permutation, lam: Composition, m: int) -> FrozenSet[NLambdaMember]:
    """
    All members of N_lambda^(m) that PPat_lambda sends to p.

    Args:
        p: Element of C(lambda)
        lam: Composition of n
        m: Number of odd letters

    Returns:
        Frozen set of size C(k, j) when |Des(p) minus S(lambda)| = m - j, 0 <= j <= k; empty otherwise
    """
    return ppat_preimages(p, lam).get(m, frozenset())
