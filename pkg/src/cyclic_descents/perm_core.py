"""
Permutations, compositions and descent sets

Provides the one-line Permutation type, Composition with its partial sums S(lambda),
DescentSet, and the predicates for cyclicity and lambda-unimodality. Enumeration of
lambda-unimodal (cyclic) permutations is a lexicographic depth-first search that
builds each block as an increasing run followed by a decreasing run.
"""

from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidCompositionError, InvalidPermutationError


def _parse_sequence(text: str) -> Tuple[int, ...]:
    """Parse '149753286' or '10,2,3,...' (brackets and spaces are ignored)"""
    cleaned = text.strip().strip('()[]').replace(' ', '')
    if not cleaned:
        raise ValueError("empty sequence")
    if ',' in cleaned:
        return tuple(int(tok) for tok in cleaned.split(',') if tok)
    if not cleaned.isdigit():
        raise ValueError(f"not a digit string: {text!r}")
    return tuple(int(ch) for ch in cleaned)


@dataclass(frozen=True)
class Permutation:
    """
    A permutation of [n] in one-line notation.

    entries[i - 1] is the image of i.
    """

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, 'entries', entries)
        if not entries:
            raise InvalidPermutationError("a permutation needs n >= 1 entries")
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise InvalidPermutationError(f"{entries} is not a bijection on 1..{len(entries)}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __call__(self, i: int) -> int:
        """Image of i (1-based)"""
        return self.entries[i - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """
        Parse a permutation from text.

        Args:
            text: Digit string ('36578124') or comma list ('10,1,2,...')

        Returns:
            Permutation instance
        """
        try:
            return cls(_parse_sequence(text))
        except InvalidPermutationError:
            raise
        except ValueError as e:
            raise InvalidPermutationError(f"cannot parse permutation {text!r}: {e}") from e

    def to_text(self) -> str:
        """Digit string for n <= 9, comma-separated otherwise"""
        if self.n <= 9:
            return ''.join(str(v) for v in self.entries)
        return ','.join(str(v) for v in self.entries)

    def cycles(self) -> List[Tuple[int, ...]]:
        """Cycle decomposition, each cycle starting at its smallest element"""
        seen = [False] * (self.n + 1)
        result = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = []
            x = start
            while not seen[x]:
                seen[x] = True
                cycle.append(x)
                x = self(x)
            result.append(tuple(cycle))
        return result


@dataclass(frozen=True)
class Composition:
    """
    An ordered list of positive parts lambda = (lambda_1, ..., lambda_k) summing to n.
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if not parts:
            raise InvalidCompositionError("a composition needs at least one part")
        if any(p < 1 for p in parts):
            raise InvalidCompositionError(f"composition parts must be positive: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def partial_sums(self) -> Tuple[int, ...]:
        """s_1(lambda), ..., s_k(lambda) = n"""
        sums = []
        total = 0
        for part in self.parts:
            total += part
            sums.append(total)
        return tuple(sums)

    @property
    def partial_sum_set(self) -> FrozenSet[int]:
        """S(lambda)"""
        return frozenset(self.partial_sums)

    @property
    def d(self) -> int:
        """gcd of the parts"""
        return reduce(gcd, self.parts)

    def is_all_ones(self) -> bool:
        return all(p == 1 for p in self.parts)

    def is_rectangular(self) -> bool:
        """True when every part equals d, i.e. lambda = (d^k)"""
        return len(set(self.parts)) == 1

    def halved(self) -> 'Composition':
        """lambda/2, defined only when every part is even"""
        if self.d % 2:
            raise InvalidCompositionError(f"{self.to_text()} has an odd part; lambda/2 is undefined")
        return Composition(tuple(p // 2 for p in self.parts))

    def blocks(self) -> List[Tuple[int, int]]:
        """0-based half-open (start, end) ranges of the blocks"""
        bounds = []
        start = 0
        for end in self.partial_sums:
            bounds.append((start, end))
            start = end
        return bounds

    def splits(self, m: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        """
        Yield every (i_1, ..., i_k) with 0 <= i_t <= lambda_t, lexicographically.

        Args:
            m: If given, only vectors with sum m

        Returns:
            Iterator over tuples
        """
        if m is None:
            yield from product(*(range(p + 1) for p in self.parts))
            return

        suffix_capacity = [0] * (self.k + 1)
        for t in range(self.k - 1, -1, -1):
            suffix_capacity[t] = suffix_capacity[t + 1] + self.parts[t]

        chosen: List[int] = []

        def extend(t: int, remaining: int) -> Iterator[Tuple[int, ...]]:
            if t == self.k:
                if remaining == 0:
                    yield tuple(chosen)
                return
            low = max(0, remaining - suffix_capacity[t + 1])
            high = min(self.parts[t], remaining)
            for i in range(low, high + 1):
                chosen.append(i)
                yield from extend(t + 1, remaining - i)
                chosen.pop()

        yield from extend(0, m)

    @classmethod
    def parse(cls, text: str) -> 'Composition':
        """Parse a comma list such as '6,3' (a single number '7' is the one-part composition)"""
        cleaned = text.strip().strip('()[]').replace(' ', '')
        try:
            parts = tuple(int(tok) for tok in cleaned.split(',') if tok)
        except ValueError as e:
            raise InvalidCompositionError(f"cannot parse composition {text!r}") from e
        return cls(parts)

    @classmethod
    def ones(cls, n: int) -> 'Composition':
        return cls((1,) * n)

    def to_text(self) -> str:
        return ','.join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return self.to_text()


def compositions(n: int) -> Iterator[Composition]:
    """
    Yield all 2^(n-1) compositions of n in lexicographic order by parts.

    Args:
        n: Positive integer

    Returns:
        Iterator of Composition, starting with (1, ..., 1) and ending with (n)
    """
    if n < 1:
        raise InvalidCompositionError(f"compositions need n >= 1, got {n}")

    def extend(remaining: int, prefix: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for first in range(1, remaining + 1):
            yield from extend(remaining - first, prefix + (first,))

    for parts in extend(n, ()):
        yield Composition(parts)


@dataclass(frozen=True)
class DescentSet:
    """A subset of [n-1], typically Des of a permutation or a tableau"""

    elements: FrozenSet[int]
    n: int

    def __post_init__(self):
        elements = frozenset(self.elements)
        object.__setattr__(self, 'elements', elements)
        for i in elements:
            if not 1 <= i <= self.n - 1:
                raise ValueError(f"descent position {i} outside [1, {self.n - 1}]")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.elements))

    def __contains__(self, i: object) -> bool:
        return i in self.elements

    def to_text(self) -> str:
        """Sorted comma list; the empty set prints as an empty string"""
        return ','.join(str(i) for i in sorted(self.elements))

    def __str__(self) -> str:
        return '{' + self.to_text() + '}'

    @classmethod
    def parse(cls, text: str, n: int) -> 'DescentSet':
        cleaned = text.strip().strip('{}').replace(' ', '')
        if not cleaned:
            return cls(frozenset(), n)
        return cls(frozenset(int(tok) for tok in cleaned.split(',')), n)

    @classmethod
    def all_subsets(cls, n: int) -> List['DescentSet']:
        """Every subset of [n-1], in bitmask order (bit i-1 set means i is present)"""
        size = max(n - 1, 0)
        return [
            cls(frozenset(i + 1 for i in range(size) if mask >> i & 1), n)
            for mask in range(1 << size)
        ]


def descent_set(p: Permutation) -> DescentSet:
    """Des(p) = {i : p_i > p_(i+1)}"""
    e = p.entries
    return DescentSet(frozenset(i + 1 for i in range(p.n - 1) if e[i] > e[i + 1]), p.n)


def is_cyclic(p: Permutation) -> bool:
    """True iff p is a single n-cycle (n = 1 counts as a 1-cycle)"""
    length = 1
    x = p(1)
    while x != 1:
        x = p(x)
        length += 1
    return length == p.n


def cycle_to_one_line(cycle: Sequence[int]) -> Permutation:
    """
    Convert a single cycle (c_1 c_2 ... c_n) to one-line notation.

    Args:
        cycle: The n distinct values 1..n, listed in cycle order

    Returns:
        Permutation p with p(c_j) = c_(j+1), indices taken cyclically
    """
    values = tuple(cycle)
    n = len(values)
    if n == 0 or sorted(values) != list(range(1, n + 1)):
        raise InvalidPermutationError(f"cycle {values} must list each of 1..{n} exactly once")
    entries = [0] * n
    for j, c in enumerate(values):
        entries[c - 1] = values[(j + 1) % n]
    return Permutation(tuple(entries))


def one_line_to_cycle(p: Permutation) -> Tuple[int, ...]:
    """Cycle listing of a cyclic permutation, starting at 1"""
    if not is_cyclic(p):
        raise InvalidPermutationError(f"{p.to_text()} is not a single n-cycle")
    cycle = [1]
    while len(cycle) < p.n:
        cycle.append(p(cycle[-1]))
    return tuple(cycle)


def is_unimodal(word: Sequence[int]) -> bool:
    """True iff the word strictly increases up to some position, then strictly decreases"""
    i = 1
    while i < len(word) and word[i - 1] < word[i]:
        i += 1
    while i < len(word) and word[i - 1] > word[i]:
        i += 1
    return i >= len(word)


def is_lambda_unimodal(p: Permutation, lam: Composition) -> bool:
    """
    Check that each block of p cut at the partial sums of lam is unimodal.

    Args:
        p: Permutation of [n]
        lam: Composition of the same n

    Returns:
        True if every block is unimodal
    """
    if lam.n != p.n:
        raise ValueError(f"composition {lam.to_text()} has size {lam.n}, permutation has size {p.n}")
    return all(is_unimodal(p.entries[start:end]) for start, end in lam.blocks())


def is_lambda_unimodal_set(D: DescentSet, lam: Composition) -> bool:
    """
    Check that D minus S(lambda) is, within each block, a suffix interval of the block.

    Args:
        D: Subset of [n-1]
        lam: Composition of n

    Returns:
        True iff D is lambda-unimodal
    """
    if D.n != lam.n:
        raise ValueError(f"descent set over [{D.n - 1}] does not match composition of {lam.n}")
    for start, end in lam.blocks():
        # internal positions of the block are start+1 .. end-1 (1-based)
        internal = sorted(i for i in D.elements if start < i < end)
        if internal != list(range(end - len(internal), end)):
            return False
    return True


def descents_outside(D: DescentSet, lam: Composition) -> int:
    """|D \\ S(lambda)|"""
    return len(D.elements - lam.partial_sum_set)


def signed_unimodal_sum(descent_sets: Iterable[DescentSet], lam: Composition) -> int:
    """
    Sum of (-1)^|D \\ S(lambda)| over the lambda-unimodal members of descent_sets.

    This is the right-hand side of the fine-set condition for a character value at lambda.
    """
    total = 0
    for D in descent_sets:
        if is_lambda_unimodal_set(D, lam):
            total += -1 if descents_outside(D, lam) % 2 else 1
    return total


def _unimodal_search(lam: Composition, cyclic: bool) -> Iterator[Permutation]:
    """Lexicographic DFS over lambda-unimodal permutations, optionally pruned to n-cycles"""
    n = lam.n
    block_starts = {start for start, _ in lam.blocks()}
    entries = [0] * n
    used = [False] * (n + 1)
    succ = [0] * (n + 1)

    def closes_early(i: int, v: int) -> bool:
        # assigning i -> v closes a cycle iff the path from v ends at i
        x = v
        while succ[x]:
            x = succ[x]
        return x == i and i != n

    def search(pos: int, prev: int, rising: bool) -> Iterator[Permutation]:
        if pos == n:
            yield Permutation(tuple(entries))
            return
        starting = pos in block_starts
        for v in range(1, n + 1):
            if used[v]:
                continue
            if starting:
                next_rising = True
            elif rising:
                next_rising = v > prev
            else:
                if v > prev:
                    break
                next_rising = False
            if cyclic and closes_early(pos + 1, v):
                continue
            used[v] = True
            entries[pos] = v
            succ[pos + 1] = v
            yield from search(pos + 1, v, next_rising)
            succ[pos + 1] = 0
            used[v] = False

    yield from search(0, 0, True)


def enumerate_lambda_unimodal(lam: Composition) -> Iterator[Permutation]:
    """U(lambda): all lambda-unimodal permutations, lexicographic"""
    return _unimodal_search(lam, cyclic=False)


def enumerate_cyclic_lambda_unimodal(lam: Composition) -> Iterator[Permutation]:
    """
    C(lambda): all lambda-unimodal n-cycles, lexicographic, without duplicates.

    Filtering by descents_outside(descent_set(p), lam) == m gives C_lambda(m).
    """
    return _unimodal_search(lam, cyclic=True)


def cyclic_permutations(n: int) -> Iterator[Permutation]:
    """C_n in lexicographic order"""
    return enumerate_cyclic_lambda_unimodal(Composition.ones(n))
