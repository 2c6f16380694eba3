"""
Identity checks

Each check pairs a closed-form side with an independently enumerated side at one
parameter point and returns a VerificationReport. verify_suite plans the checks for
every n up to n_max (and every composition of n where a check is per composition),
runs them sequentially or on a process pool, and returns the reports in plan order.
"""

import logging
import sys
import time
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from math import factorial
from multiprocessing import Pool
from typing import Any, Dict, Iterable, List, Optional, Set, Tuple, Union

from tqdm import tqdm

from .cache import ReportCache
from .counting import (
    CountingLimits,
    a_lambda,
    bigL,
    binomial,
    check_counting_lemmas,
    chi,
    count_N_lambda_m,
    mobius,
)
from .errors import UnknownIdentityError
from .necklace import (
    NecklaceClass,
    complement,
    cut_words,
    enumerate_N_lambda,
    in_N_lambda,
    ppat,
    ppat_preimages,
    ppat_word,
)
from .perm_core import (
    Composition,
    DescentSet,
    Permutation,
    compositions,
    cyclic_permutations,
    descent_set,
    descents_outside,
    enumerate_cyclic_lambda_unimodal,
    enumerate_lambda_unimodal,
    is_lambda_unimodal,
    signed_unimodal_sum,
)
from .report import VerificationReport
from .tableaux import (
    Partition,
    b_rho_descent_distribution,
    class_size,
    enumerate_SYT,
    knuth_classes,
    maj_multiplicity,
    mn_character,
    partitions,
    rho_multiplicities,
    rsk,
)

logger = logging.getLogger(__name__)


class IdentityName(str, Enum):
    """Named checks, in suite order"""
    MAIN = "main"
    UNIMODAL_MU = "unimodal_mu"
    EQUIDISTRIBUTION = "equidistribution"
    ELIZALDE = "elizalde"
    REGULAR_FINE = "regular_fine"
    COUNTING_LEMMAS = "counting_lemmas"
    INVOLUTION = "involution"
    NECKLACE_COUNTS = "necklace_counts"
    BIGL_SYMMETRY = "bigl_symmetry"
    A_LAMBDA = "a_lambda"
    PPAT_FIBERS = "ppat_fibers"
    PPAT_PREIMAGE = "ppat_preimage"
    CUT_WORDS = "cut_words"
    RSK = "rsk"
    ORTHOGONALITY = "orthogonality"
    KNUTH = "knuth"
    BRHO_FINE = "brho_fine"
    RESTRICTED_FINE = "restricted_fine"
    MAJ_MULTIPLICITY = "maj_multiplicity"


def _sign(count: int) -> int:
    return -1 if count % 2 else 1


def _lambda_params(lam: Composition) -> Dict[str, Any]:
    return {'lambda': lam.to_text()}


def _n_params(n: int) -> Dict[str, Any]:
    return {'n': n}


def _report(identity: IdentityName, params: Dict[str, Any], lhs, rhs, count: int, started: float) -> VerificationReport:
    return VerificationReport(
        identity=identity.value,
        params=params,
        lhs=lhs,
        rhs=rhs,
        enumerated_count=count,
        elapsed=time.perf_counter() - started,
    )


def verify_main_theorem(lam: Composition) -> VerificationReport:
    """
    Signed count of C(lambda) against the closed form chi(lambda).

    Args:
        lam: Composition of n

    Returns:
        Report with lhs = sum over C(lambda) of (-1)^|Des minus S(lambda)|, rhs = chi(lambda)
    """
    started = time.perf_counter()
    lhs = 0
    count = 0
    for p in enumerate_cyclic_lambda_unimodal(lam):
        lhs += _sign(descents_outside(descent_set(p), lam))
        count += 1
    return _report(IdentityName.MAIN, _lambda_params(lam), lhs, chi(lam), count, started)


def verify_unimodal_mu(n: int) -> VerificationReport:
    """Sum of (-1)^des over unimodal n-cycles equals mu(n)"""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    started = time.perf_counter()
    lhs = 0
    count = 0
    for p in enumerate_cyclic_lambda_unimodal(Composition((n,))):
        lhs += _sign(len(descent_set(p)))
        count += 1
    return _report(IdentityName.UNIMODAL_MU, _n_params(n), lhs, mobius(n), count, started)


def _histogram_text(histogram: Dict[DescentSet, int], keys: Iterable[DescentSet]) -> Dict[str, int]:
    return {str(D): histogram.get(D, 0) for D in keys}


def verify_equidistribution(n: int) -> VerificationReport:
    """
    Descent-set histogram of C_n against the histogram of the tableau basis B_rho.

    Both sides list every subset of [n-1], zero counts included.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    started = time.perf_counter()
    subsets = DescentSet.all_subsets(n)
    cyclic = Counter(descent_set(p) for p in cyclic_permutations(n))
    basis = b_rho_descent_distribution(n)
    return _report(
        IdentityName.EQUIDISTRIBUTION,
        _n_params(n),
        _histogram_text(cyclic, subsets),
        _histogram_text(basis, subsets),
        sum(cyclic.values()),
        started,
    )


def verify_elizalde(n: int) -> VerificationReport:
    """
    For every D in [n-2]: #{tau in S_(n-1) : Des = D} = #{pi in C_n : Des in {D, D + {n-1}}}.

    Args:
        n: n >= 2

    Returns:
        Report whose lhs/rhs are histograms over all subsets of [n-2]
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    started = time.perf_counter()
    subsets = DescentSet.all_subsets(n - 1)
    linear = Counter(descent_set(Permutation(entries)) for entries in permutations(range(1, n)))
    cyclic: Counter = Counter()
    count = sum(linear.values())
    for p in cyclic_permutations(n):
        cyclic[DescentSet(descent_set(p).elements - {n - 1}, n - 1)] += 1
        count += 1
    return _report(
        IdentityName.ELIZALDE,
        _n_params(n),
        _histogram_text(linear, subsets),
        _histogram_text(cyclic, subsets),
        count,
        started,
    )


def verify_regular_fine(lam: Composition) -> VerificationReport:
    """Signed count of U(lambda) equals n! for lambda = (1^n) and 0 otherwise"""
    started = time.perf_counter()
    lhs = 0
    count = 0
    for p in enumerate_lambda_unimodal(lam):
        lhs += _sign(descents_outside(descent_set(p), lam))
        count += 1
    rhs = factorial(lam.n) if lam.is_all_ones() else 0
    return _report(IdentityName.REGULAR_FINE, _lambda_params(lam), lhs, rhs, count, started)


def phi_involution(p: Permutation, lam: Composition) -> Permutation:
    """
    Swap the two largest entries of the first block of size > 1.

    Args:
        p: lambda-unimodal permutation
        lam: Composition other than (1^n)

    Returns:
        lambda-unimodal permutation whose count of descents outside S(lambda) differs by one
    """
    if lam.is_all_ones():
        raise ValueError("phi needs a block of size > 1; lambda = (1^n) has none")
    if not is_lambda_unimodal(p, lam):
        raise ValueError(f"{p.to_text()} is not {lam.to_text()}-unimodal")
    start, end = next((s, e) for s, e in lam.blocks() if e - s > 1)
    entries = list(p.entries)
    block = entries[start:end]
    second, largest = sorted(block)[-2:]
    i = start + block.index(largest)
    j = start + block.index(second)
    entries[i], entries[j] = entries[j], entries[i]
    return Permutation(tuple(entries))


def verify_involution(lam: Composition) -> VerificationReport:
    """
    phi is a fixed-point-free, sign-reversing involution on U(lambda).

    Each lhs counter must reach the number of permutations in U(lambda).
    """
    started = time.perf_counter()
    checks = ('closed', 'involutive', 'fixed_point_free', 'sign_reversing')
    passed = dict.fromkeys(checks, 0)
    count = 0
    for p in enumerate_lambda_unimodal(lam):
        count += 1
        q = phi_involution(p, lam)
        passed['closed'] += is_lambda_unimodal(q, lam)
        passed['involutive'] += phi_involution(q, lam) == p
        passed['fixed_point_free'] += q != p
        shift = descents_outside(descent_set(q), lam) - descents_outside(descent_set(p), lam)
        passed['sign_reversing'] += abs(shift) == 1
    rhs = dict.fromkeys(checks, count)
    return _report(IdentityName.INVOLUTION, _lambda_params(lam), passed, rhs, count, started)


def _members_by_odd_count(lam: Composition) -> Tuple[Counter, Dict[int, Set[NecklaceClass]], int]:
    totals: Counter = Counter()
    primitive: Dict[int, Set[NecklaceClass]] = {m: set() for m in range(lam.n + 1)}
    count = 0
    for member in enumerate_N_lambda(lam):
        totals[member.odd_count] += 1
        if member.primitive:
            primitive[member.odd_count].add(member.necklace)
        count += 1
    return totals, primitive, count


def verify_necklace_counts(lam: Composition) -> VerificationReport:
    """
    |N_lambda^(m)| and the primitive counts bigL against enumeration, for every m.

    Args:
        lam: Composition of n

    Returns:
        Report keyed 'N(m=..)' and 'L(m=..)'; lhs enumerated, rhs closed form
    """
    started = time.perf_counter()
    totals, primitive, count = _members_by_odd_count(lam)
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for m in range(lam.n + 1):
        lhs[f"N(m={m})"] = totals[m]
        rhs[f"N(m={m})"] = count_N_lambda_m(lam, m)
        lhs[f"L(m={m})"] = len(primitive[m])
        rhs[f"L(m={m})"] = bigL(lam, m)
    return _report(IdentityName.NECKLACE_COUNTS, _lambda_params(lam), lhs, rhs, count, started)


def verify_bigl_symmetry(lam: Composition) -> VerificationReport:
    """
    bigL(lambda, m) = bigL(lambda, n - m), and complement() carries the primitive
    classes with m odd letters onto those with n - m.
    """
    started = time.perf_counter()
    n = lam.n
    _, primitive, count = _members_by_odd_count(lam)
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for m in range(n + 1):
        lhs[f"bigL(m={m})"] = bigL(lam, m)
        rhs[f"bigL(m={m})"] = bigL(lam, n - m)
        image = {NecklaceClass.of(complement(c.canonical)) for c in primitive[m]}
        lhs[f"complement(m={m})"] = len(image & primitive[n - m])
        rhs[f"complement(m={m})"] = len(primitive[n - m])
    return _report(IdentityName.BIGL_SYMMETRY, _lambda_params(lam), lhs, rhs, count, started)


def _cycles_by_outside(lam: Composition) -> Dict[Permutation, int]:
    return {p: descents_outside(descent_set(p), lam) for p in enumerate_cyclic_lambda_unimodal(lam)}


def verify_a_lambda(lam: Composition) -> VerificationReport:
    """
    a_lambda(m) against |C_lambda(m)| by enumeration, and the round trip
    sum_j C(k, j) a_lambda(m - j) = |N_lambda^(m)|.
    """
    started = time.perf_counter()
    outside = _cycles_by_outside(lam)
    sizes = Counter(outside.values())
    k = lam.k
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for m in range(lam.n + 1):
        lhs[f"a(m={m})"] = a_lambda(lam, m)
        rhs[f"a(m={m})"] = sizes[m]
        lhs[f"N(m={m})"] = sum(binomial(k, j) * a_lambda(lam, m - j) for j in range(min(k, m) + 1))
        rhs[f"N(m={m})"] = count_N_lambda_m(lam, m)
    return _report(IdentityName.A_LAMBDA, _lambda_params(lam), lhs, rhs, len(outside), started)


def _fiber_key(m: int, tau: Permutation) -> str:
    return f"m={m},tau={tau.to_text()}"


def _forward_fibers(lam: Composition) -> Tuple[Dict[Tuple[int, Permutation], Set[NecklaceClass]], int]:
    fibers: Dict[Tuple[int, Permutation], Set[NecklaceClass]] = {}
    count = 0
    for member in enumerate_N_lambda(lam):
        fibers.setdefault((member.odd_count, ppat(member)), set()).add(member.necklace)
        count += 1
    return fibers, count


def verify_ppat_fibers(lam: Composition) -> VerificationReport:
    """
    PPat maps N_lambda^(m) onto the union of C_lambda(m - j), 0 <= j <= k, with fibers of size C(k, j).

    Args:
        lam: Composition of n

    Returns:
        Report keyed 'm=..,tau=..'; lhs observed fiber sizes, rhs C(k, j)
    """
    started = time.perf_counter()
    fibers, count = _forward_fibers(lam)
    expected: Dict[Tuple[int, Permutation], int] = {}
    for tau, o in _cycles_by_outside(lam).items():
        for j in range(lam.k + 1):
            expected[(o + j, tau)] = binomial(lam.k, j)
    keys = sorted(set(fibers) | set(expected), key=lambda key: (key[0], key[1].entries))
    lhs = {_fiber_key(m, tau): len(fibers.get((m, tau), ())) for m, tau in keys}
    rhs = {_fiber_key(m, tau): expected.get((m, tau), 0) for m, tau in keys}
    return _report(IdentityName.PPAT_FIBERS, _lambda_params(lam), lhs, rhs, count, started)


def verify_ppat_preimage(lam: Composition) -> VerificationReport:
    """
    ppat_preimage agrees with the fibers found by mapping all of N_lambda forward.

    For each tau and each m it can reach, 'size' compares |preimage| with |fiber|
    and 'common' compares |preimage| with |preimage & fiber|.
    """
    started = time.perf_counter()
    fibers, count = _forward_fibers(lam)
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for tau, o in _cycles_by_outside(lam).items():
        preimages = ppat_preimages(tau, lam)
        for m in range(o, o + lam.k + 1):
            found = {member.necklace for member in preimages.get(m, ())}
            forward = fibers.get((m, tau), set())
            key = _fiber_key(m, tau)
            lhs[f"{key}:size"] = len(found)
            rhs[f"{key}:size"] = len(forward)
            lhs[f"{key}:common"] = len(found)
            rhs[f"{key}:common"] = len(found & forward)
    return _report(IdentityName.PPAT_PREIMAGE, _lambda_params(lam), lhs, rhs, count, started)


def verify_cut_words(lam: Composition) -> VerificationReport:
    """Every cut word of every tau in C(lambda) lies in N_lambda and maps back to tau"""
    started = time.perf_counter()
    total = in_set = maps_back = 0
    for tau in enumerate_cyclic_lambda_unimodal(lam):
        for word in cut_words(tau, lam):
            total += 1
            if in_N_lambda(word, lam):
                in_set += 1
                maps_back += ppat_word(word) == tau
    lhs = {'in_N_lambda': in_set, 'maps_back': maps_back}
    rhs = {'in_N_lambda': total, 'maps_back': total}
    return _report(IdentityName.CUT_WORDS, _lambda_params(lam), lhs, rhs, total, started)


def verify_rsk(n: int) -> VerificationReport:
    """Des(p) = Des(Q) on S_n, and RSK is injective with equal shapes"""
    started = time.perf_counter()
    checks = ('descents_match', 'same_shape', 'distinct_pairs')
    passed = dict.fromkeys(checks, 0)
    pairs = set()
    count = 0
    for entries in permutations(range(1, n + 1)):
        p = Permutation(entries)
        P, Q = rsk(p)
        passed['descents_match'] += Q.descent_set() == descent_set(p)
        passed['same_shape'] += P.shape == Q.shape
        pairs.add((P, Q))
        count += 1
    passed['distinct_pairs'] = len(pairs)
    return _report(IdentityName.RSK, _n_params(n), passed, dict.fromkeys(checks, count), count, started)


def verify_orthogonality(n: int) -> VerificationReport:
    """
    Row orthogonality of the Murnaghan-Nakayama character table, and chi^nu(1^n) = f^nu.
    """
    started = time.perf_counter()
    shapes = partitions(n)
    sizes = {lam: class_size(lam) for lam in shapes}
    rows = {nu: {lam: mn_character(nu, lam) for lam in shapes} for nu in shapes}
    identity_class = Partition((1,) * n)
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for i, nu in enumerate(shapes):
        lhs[f"dim({nu})"] = rows[nu][identity_class]
        rhs[f"dim({nu})"] = nu.hook_count()
        for rho in shapes[i:]:
            key = f"<{nu}|{rho}>"
            lhs[key] = sum(sizes[lam] * rows[nu][lam] * rows[rho][lam] for lam in shapes)
            rhs[key] = factorial(n) if nu == rho else 0
    return _report(IdentityName.ORTHOGONALITY, _n_params(n), lhs, rhs, len(shapes) ** 2, started)


def verify_knuth(n: int) -> VerificationReport:
    """
    Every Knuth class of shape nu is a fine set for chi^nu.

    Args:
        n: Positive integer

    Returns:
        Report keyed 'nu=..,lambda=..'; lhs counts the classes whose signed sum at lambda
        equals chi^nu(lambda), rhs counts all classes of shape nu
    """
    started = time.perf_counter()
    classes = knuth_classes(n)
    lams = list(compositions(n))
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for nu in partitions(n):
        for lam in lams:
            key = f"nu={nu},lambda={lam}"
            lhs[key] = 0
            rhs[key] = 0
    for P, members in classes.items():
        nu = P.shape
        descents = [descent_set(p) for p in members]
        for lam in lams:
            key = f"nu={nu},lambda={lam}"
            value = mn_character(nu, Partition.from_composition(lam))
            lhs[key] += signed_unimodal_sum(descents, lam) == value
            rhs[key] += 1
    return _report(IdentityName.KNUTH, _n_params(n), lhs, rhs, factorial(n), started)


def verify_brho_fine(n: int) -> VerificationReport:
    """B_rho is a fine set for rho: weighted signed tableau sums equal chi(lambda) for every composition"""
    started = time.perf_counter()
    basis = rho_multiplicities(n)
    weighted = [(m, [T.descent_set() for T in enumerate_SYT(nu)]) for nu, m in basis.multiplicities.items() if m]
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for lam in compositions(n):
        lhs[lam.to_text()] = sum(m * signed_unimodal_sum(descents, lam) for m, descents in weighted)
        rhs[lam.to_text()] = chi(lam)
    count = sum(m * len(descents) for m, descents in weighted)
    return _report(IdentityName.BRHO_FINE, _n_params(n), lhs, rhs, count, started)


def verify_restricted_fine(n: int) -> VerificationReport:
    """
    C_n with the restricted descent set Des minus {n-1} is a fine set for the regular
    character of S_(n-1).
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    started = time.perf_counter()
    restricted = [DescentSet(descent_set(p).elements - {n - 1}, n - 1) for p in cyclic_permutations(n)]
    lhs: Dict[str, int] = {}
    rhs: Dict[str, int] = {}
    for mu in compositions(n - 1):
        lhs[mu.to_text()] = signed_unimodal_sum(restricted, mu)
        rhs[mu.to_text()] = factorial(n - 1) if mu.is_all_ones() else 0
    return _report(IdentityName.RESTRICTED_FINE, _n_params(n), lhs, rhs, len(restricted), started)


def verify_maj_multiplicity(n: int) -> VerificationReport:
    """m_nu from the character inner product against #{T in SYT(nu) : maj(T) = 1 mod n}"""
    started = time.perf_counter()
    shapes = partitions(n)
    lhs = rho_multiplicities(n).to_dict()
    rhs = {nu.to_text(): maj_multiplicity(nu) for nu in shapes}
    count = sum(nu.hook_count() for nu in shapes)
    return _report(IdentityName.MAJ_MULTIPLICITY, _n_params(n), lhs, rhs, count, started)


def verify_counting_lemmas() -> VerificationReport:
    return check_counting_lemmas()


# identity -> (check, parameter scope, smallest n)
_CHECKS = {
    IdentityName.MAIN: (verify_main_theorem, 'lambda', 1),
    IdentityName.UNIMODAL_MU: (verify_unimodal_mu, 'n', 1),
    IdentityName.EQUIDISTRIBUTION: (verify_equidistribution, 'n', 1),
    IdentityName.ELIZALDE: (verify_elizalde, 'n', 2),
    IdentityName.REGULAR_FINE: (verify_regular_fine, 'lambda', 1),
    IdentityName.COUNTING_LEMMAS: (verify_counting_lemmas, 'none', 1),
    IdentityName.INVOLUTION: (verify_involution, 'lambda', 2),
    IdentityName.NECKLACE_COUNTS: (verify_necklace_counts, 'lambda', 1),
    IdentityName.BIGL_SYMMETRY: (verify_bigl_symmetry, 'lambda', 1),
    IdentityName.A_LAMBDA: (verify_a_lambda, 'lambda', 1),
    IdentityName.PPAT_FIBERS: (verify_ppat_fibers, 'lambda', 1),
    IdentityName.PPAT_PREIMAGE: (verify_ppat_preimage, 'lambda', 1),
    IdentityName.CUT_WORDS: (verify_cut_words, 'lambda', 1),
    IdentityName.RSK: (verify_rsk, 'n', 1),
    IdentityName.ORTHOGONALITY: (verify_orthogonality, 'n', 1),
    IdentityName.KNUTH: (verify_knuth, 'n', 1),
    IdentityName.BRHO_FINE: (verify_brho_fine, 'n', 1),
    IdentityName.RESTRICTED_FINE: (verify_restricted_fine, 'n', 2),
    IdentityName.MAJ_MULTIPLICITY: (verify_maj_multiplicity, 'n', 1),
}


@dataclass(frozen=True)
class VerificationTask:
    """One planned check: an identity at a composition, at an n, or on its own"""

    identity: IdentityName
    lam: Optional[Composition] = None
    n: Optional[int] = None

    @property
    def params(self) -> Dict[str, Any]:
        if self.identity is IdentityName.COUNTING_LEMMAS:
            return CountingLimits().to_params()
        if self.lam is not None:
            return _lambda_params(self.lam)
        return _n_params(self.n)


def resolve_identities(selection: Iterable[Union[str, IdentityName]]) -> List[IdentityName]:
    """
    Validate identity names.

    Args:
        selection: Names or IdentityName members

    Returns:
        The selected identities in suite order
    """
    chosen = set()
    for name in selection:
        try:
            chosen.add(IdentityName(name))
        except ValueError:
            known = ', '.join(i.value for i in IdentityName)
            raise UnknownIdentityError(f"unknown identity {name!r} (known: {known})") from None
    return [identity for identity in IdentityName if identity in chosen]


def plan_tasks(n_max: int, selection: Iterable[Union[str, IdentityName]],
               lam: Optional[Composition] = None) -> List[VerificationTask]:
    """
    Lay out the checks in suite order.

    Identities come in declaration order; within an identity, n increases and
    compositions of each n follow lexicographic order. Passing lam restricts the
    per-composition checks to lam and the per-n checks to lam.n.

    Args:
        n_max: Largest n visited
        selection: Identity names
        lam: Optional single composition

    Returns:
        Ordered list of VerificationTask
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    identities = resolve_identities(selection)
    sizes = [lam.n] if lam is not None else list(range(1, n_max + 1))
    tasks = []
    for identity in identities:
        _, scope, smallest = _CHECKS[identity]
        if scope == 'none':
            tasks.append(VerificationTask(identity))
        elif scope == 'n':
            tasks.extend(VerificationTask(identity, n=n) for n in sizes if n >= smallest)
        else:
            for n in sizes:
                if n < smallest:
                    continue
                for composition in ([lam] if lam is not None else compositions(n)):
                    if identity is IdentityName.INVOLUTION and composition.is_all_ones():
                        continue
                    tasks.append(VerificationTask(identity, lam=composition))
    return tasks


def run_task(task: VerificationTask) -> VerificationReport:
    """Run one planned check (module-level so worker processes can unpickle it)"""
    check, scope, _ = _CHECKS[task.identity]
    if scope == 'none':
        report = check()
    elif scope == 'n':
        report = check(task.n)
    else:
        report = check(task.lam)
    mismatches = report.mismatches()
    if report.passed:
        logger.debug("%s %s passed (%d enumerated)", report.identity, report.params, report.enumerated_count)
    elif mismatches:
        logger.warning("%s %s FAILED at %s", report.identity, report.params, ", ".join(mismatches[:5]))
    else:
        logger.warning("%s %s FAILED: lhs=%s rhs=%s", report.identity, report.params, report.lhs, report.rhs)
    return report


def verify_suite(n_max: int, selection: Iterable[Union[str, IdentityName]], jobs: int = 1,
                 cache: Optional[ReportCache] = None, progress: bool = False,
                 lam: Optional[Composition] = None) -> List[VerificationReport]:
    """
    Run the selected checks and return their reports in plan order.

    Args:
        n_max: Largest n visited
        selection: Identity names; an empty selection yields no reports
        jobs: Worker processes (1 runs in-process)
        cache: Report cache consulted before and filled after each check
        progress: Show a tqdm bar on stderr
        lam: Optional single composition, see plan_tasks

    Returns:
        List of VerificationReport, order independent of jobs
    """
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    tasks = plan_tasks(n_max, selection, lam)
    reports: List[Optional[VerificationReport]] = [None] * len(tasks)

    pending = []
    for i, task in enumerate(tasks):
        cached = cache.get(task.identity.value, task.params) if cache is not None else None
        if cached is None:
            pending.append(i)
        else:
            reports[i] = cached
    logger.info("verify: %d checks planned, %d cached", len(tasks), len(tasks) - len(pending))

    def record(i: int, report: VerificationReport):
        reports[i] = report
        if cache is not None:
            cache.put(report)

    with tqdm(total=len(tasks), initial=len(tasks) - len(pending), desc="verify", unit=" check",
              disable=not progress, file=sys.stderr) as progress_bar:
        if jobs > 1 and len(pending) > 1:
            with Pool(processes=jobs) as pool:
                for i, report in zip(pending, pool.imap(run_task, [tasks[i] for i in pending])):
                    record(i, report)
                    progress_bar.update(1)
        else:
            for i in pending:
                record(i, run_task(tasks[i]))
                progress_bar.update(1)

    return reports
