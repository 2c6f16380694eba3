"""
Partitions, standard Young tableaux and symmetric-group characters

Tableaux use the English convention: row 1 on top, "south" means a larger row index.
Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets. The
representation rho induced from a faithful linear character of the n-cycle subgroup
is kept as shape-level multiplicities (BasisMultiset) rather than as a materialized
multiset of tableaux.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, Iterator, List, Tuple

from .counting import chi
from .errors import InvalidCompositionError
from .perm_core import Composition, DescentSet, Permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """
    An integer partition nu = (nu_1 >= nu_2 >= ... >= nu_l >= 1).
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, 'parts', parts)
        if not parts:
            raise InvalidCompositionError("a partition needs at least one part")
        if any(p < 1 for p in parts):
            raise InvalidCompositionError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidCompositionError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @classmethod
    def from_composition(cls, lam: Composition) -> 'Partition':
        """Sort the parts of a composition into a partition (its cycle type)"""
        return cls(tuple(sorted(lam.parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> 'Partition':
        """Parse a comma list such as '2,1'; parts must already be weakly decreasing"""
        cleaned = text.strip().strip('()[]').replace(' ', '')
        try:
            parts = tuple(int(tok) for tok in cleaned.split(',') if tok)
        except ValueError as e:
            raise InvalidCompositionError(f"cannot parse partition {text!r}") from e
        return cls(parts)

    def to_text(self) -> str:
        return ','.join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return self.to_text()

    def conjugate(self) -> 'Partition':
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def hook_count(self) -> int:
        """
        Number of standard Young tableaux of this shape, by the hook length formula.

        Returns:
            f^nu = n! / prod(hook lengths)
        """
        columns = self.conjugate().parts
        product = 1
        for i, row in enumerate(self.parts):
            for j in range(row):
                product *= (row - j - 1) + (columns[j] - i - 1) + 1
        return factorial(self.n) // product


def partitions(n: int) -> List[Partition]:
    """
    All partitions of n in reverse lexicographic order: (n) first, (1^n) last.

    Args:
        n: Positive integer

    Returns:
        List of Partition
    """
    if n < 1:
        raise InvalidCompositionError(f"partitions need n >= 1, got {n}")

    result = []

    def extend(remaining: int, largest: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            result.append(Partition(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return result


@dataclass(frozen=True)
class StandardTableau:
    """
    A standard Young tableau: rows and columns strictly increasing, entries exactly 1..n.
    """

    rows: Tuple[Tuple[int, ...], ...]
    _row_of: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)
        Partition(tuple(len(row) for row in rows))

        n = sum(len(row) for row in rows)
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, n + 1)):
            raise ValueError(f"tableau entries must be exactly 1..{n}: {rows}")
        for r, row in enumerate(rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {r + 1} of {rows} is not increasing")
            if r and any(row[j] <= rows[r - 1][j] for j in range(len(row))):
                raise ValueError(f"a column of {rows} is not increasing")

        object.__setattr__(self, '_row_of', {v: r for r, row in enumerate(rows) for v in row})

    @property
    def n(self) -> int:
        return len(self._row_of)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def row_of(self, value: int) -> int:
        """0-based row index holding value"""
        return self._row_of[value]

    def descent_set(self) -> DescentSet:
        """Des(T) = {i : i+1 lies strictly south of i}"""
        return DescentSet(
            frozenset(i for i in range(1, self.n) if self.row_of(i + 1) > self.row_of(i)),
            self.n,
        )

    def major_index(self) -> int:
        return sum(self.descent_set().elements)

    def to_text(self) -> str:
        """Rows separated by '/', entries by ',' once n > 9 ('13/2')"""
        sep = '' if self.n <= 9 else ','
        return '/'.join(sep.join(str(v) for v in row) for row in self.rows)

    def __str__(self) -> str:
        return self.to_text()


def enumerate_SYT(shape: Partition) -> Iterator[StandardTableau]:
    """
    Yield every standard Young tableau of the given shape.

    Entries 1..n are placed in turn at the end of a row whose length is below its
    target and, below the first row, shorter than the row above. Rows are tried top
    to bottom, so the single-row filling (when it exists) comes first.

    Args:
        shape: Partition nu

    Returns:
        Iterator of f^nu tableaux
    """
    target = shape.parts
    rows: List[List[int]] = [[] for _ in target]
    n = shape.n

    def place(value: int) -> Iterator[StandardTableau]:
        if value > n:
            yield StandardTableau(tuple(tuple(row) for row in rows))
            return
        for r, row in enumerate(rows):
            if len(row) < target[r] and (r == 0 or len(rows[r - 1]) > len(row)):
                row.append(value)
                yield from place(value + 1)
                row.pop()

    yield from place(1)


def descent_set_tableau(T: StandardTableau) -> DescentSet:
    return T.descent_set()


def rsk(p: Permutation) -> Tuple[StandardTableau, StandardTableau]:
    """
    Robinson-Schensted row insertion.

    Args:
        p: Permutation in one-line notation

    Returns:
        (P, Q): insertion tableau and recording tableau, same shape, Des(Q) = Des(p)
    """
    P: List[List[int]] = []
    Q: List[List[int]] = []
    for step, value in enumerate(p.entries, start=1):
        x = value
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            bumped = next((j for j, y in enumerate(row) if y > x), None)
            if bumped is None:
                row.append(x)
                Q[r].append(step)
                break
            row[bumped], x = x, row[bumped]
            r += 1
    return (
        StandardTableau(tuple(tuple(row) for row in P)),
        StandardTableau(tuple(tuple(row) for row in Q)),
    )


@lru_cache(maxsize=None)
def _mn(shape: Tuple[int, ...], class_parts: Tuple[int, ...]) -> int:
    if not class_parts:
        return 1 if not shape else 0
    r, rest = class_parts[0], class_parts[1:]
    length = len(shape)
    beta = [part + (length - 1 - i) for i, part in enumerate(shape)]
    members = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in members:
            continue
        # removing a border strip of size r: b -> b - r, height = beta values jumped over
        height = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if c == b else c for c in beta), reverse=True)
        new_shape = tuple(c - (length - 1 - i) for i, c in enumerate(new_beta))
        new_shape = tuple(part for part in new_shape if part > 0)
        value = _mn(new_shape, rest)
        total += -value if height % 2 else value
    return total


def mn_character(shape: Partition, class_type: Partition) -> int:
    """
    Irreducible character chi^nu evaluated at the class of cycle type lambda.

    Args:
        shape: Partition nu
        class_type: Partition lambda with |lambda| = |nu|

    Returns:
        Exact integer character value
    """
    if shape.n != class_type.n:
        raise ValueError(f"shape {shape.to_text()} and class {class_type.to_text()} have different sizes")
    return _mn(shape.parts, class_type.parts)


def centralizer_order(class_type: Partition) -> int:
    """z_lambda = prod_i i^(m_i) m_i!"""
    z = 1
    for part, mult in Counter(class_type.parts).items():
        z *= part ** mult * factorial(mult)
    return z


def class_size(class_type: Partition) -> int:
    """|K_lambda| = n! / z_lambda"""
    return factorial(class_type.n) // centralizer_order(class_type)


def cycle_type(p: Permutation) -> Partition:
    return Partition(tuple(sorted((len(c) for c in p.cycles()), reverse=True)))


def character_table(n: int) -> Dict[Partition, Dict[Partition, int]]:
    """
    Full irreducible character table of S_n.

    Returns:
        table[nu][lambda] = chi^nu(lambda), rows and columns in reverse lexicographic order
    """
    shapes = partitions(n)
    return {nu: {lam: mn_character(nu, lam) for lam in shapes} for nu in shapes}


@dataclass
class BasisMultiset:
    """
    Shape multiplicities m_nu of the tableau basis B_rho.

    Attributes:
        n: Size of the permutations
        multiplicities: m_nu for every partition nu of n (zeros included)
    """

    n: int
    multiplicities: Dict[Partition, int]

    def dimension(self) -> int:
        return sum(m * nu.hook_count() for nu, m in self.multiplicities.items())

    def tableaux(self) -> Iterator[Tuple[StandardTableau, int]]:
        """(T, m_shape(T)) for each tableau whose shape has positive multiplicity"""
        for nu, m in self.multiplicities.items():
            if m:
                for T in enumerate_SYT(nu):
                    yield T, m

    def to_dict(self) -> Dict[str, int]:
        return {nu.to_text(): m for nu, m in self.multiplicities.items()}


def rho_multiplicities(n: int) -> BasisMultiset:
    """
    Decompose rho into irreducibles by the character inner product.

    Args:
        n: Positive integer

    Returns:
        BasisMultiset with m_nu = (1/n!) sum_lambda |K_lambda| chi_lambda chi^nu_lambda
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    classes = partitions(n)
    weights = {lam: class_size(lam) * chi(Composition(lam.parts)) for lam in classes}
    order = factorial(n)
    multiplicities = {}
    for nu in classes:
        total = sum(w * mn_character(nu, lam) for lam, w in weights.items() if w)
        m, remainder = divmod(total, order)
        if remainder:
            raise ArithmeticError(f"inner product for {nu.to_text()} is {total}/{order}, not an integer")
        multiplicities[nu] = m
    logger.debug("rho multiplicities for n=%d: %s", n, {k.to_text(): v for k, v in multiplicities.items()})
    return BasisMultiset(n, multiplicities)


def b_rho_descent_distribution(n: int) -> Dict[DescentSet, int]:
    """
    Descent-set histogram of B_rho over all subsets of [n-1], zeros included.

    Args:
        n: Positive integer

    Returns:
        Map D -> sum over nu of m_nu * #{T in SYT(nu) : Des(T) = D}
    """
    histogram = {D: 0 for D in DescentSet.all_subsets(n)}
    for T, m in rho_multiplicities(n).tableaux():
        histogram[T.descent_set()] += m
    return histogram


def knuth_classes(n: int) -> Dict[StandardTableau, List[Permutation]]:
    """S_n grouped by RSK insertion tableau, permutations in lexicographic order"""
    classes: Dict[StandardTableau, List[Permutation]] = {}
    for entries in permutations(range(1, n + 1)):
        p = Permutation(entries)
        P, _ = rsk(p)
        classes.setdefault(P, []).append(p)
    return classes


def maj_multiplicity(shape: Partition) -> int:
    """#{T in SYT(nu) : maj(T) = 1 mod n}"""
    n = shape.n
    return sum(1 for T in enumerate_SYT(shape) if T.major_index() % n == 1 % n)
