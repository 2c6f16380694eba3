from collections import Counter
from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from src.cyclic_descents.counting import (
    CountingLimits,
    a_lambda,
    bigL,
    binomial,
    check_counting_lemmas,
    chi,
    count_N_lambda_m,
    count_primitive_necklaces,
    mobius,
    multinomial,
)
from src.cyclic_descents.perm_core import (
    Composition,
    compositions,
    descent_set,
    descents_outside,
    enumerate_cyclic_lambda_unimodal,
)


def brute_force_primitive(a):
    """Primitive necklaces with a[t] copies of letter t, by listing every word"""
    n = sum(a)
    classes = set()
    for letters in product(range(len(a)), repeat=n):
        if Counter(letters) != Counter({t: c for t, c in enumerate(a) if c}):
            continue
        rotations = [letters[i:] + letters[:i] for i in range(n)]
        if len(set(rotations)) == n:
            classes.add(min(rotations))
    return len(classes)


class TestMobius:
    @pytest.mark.parametrize("n,expected", [(1, 1), (2, -1), (4, 0), (6, 1), (12, 0), (30, -1)])
    def test_values(self, n, expected):
        assert mobius(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            mobius(0)

    @pytest.mark.parametrize("n", range(2, 40))
    def test_divisor_sum_vanishes(self, n):
        assert sum(mobius(d) for d in range(1, n + 1) if n % d == 0) == 0


class TestPrimitiveNecklaces:
    @pytest.mark.parametrize("a,expected", [((1, 1), 1), ((2, 2), 1), ((3,), 0), ((1,), 1), ((2, 0, 1), 1)])
    def test_values(self, a, expected):
        assert count_primitive_necklaces(a) == expected

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            count_primitive_necklaces((0, 0))
        with pytest.raises(ValueError):
            count_primitive_necklaces((2, -1))

    @given(st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=3).filter(lambda a: 1 <= sum(a) <= 7))
    def test_matches_brute_force(self, a):
        assert count_primitive_necklaces(a) == brute_force_primitive(a)

    def test_binomial_convention(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0
        assert binomial(5, 2) == 10
        assert multinomial((2, 1, 1)) == 12


class TestNecklaceCounts:
    @pytest.mark.parametrize("n", range(1, 10))
    def test_bigL_symmetry(self, n):
        for lam in compositions(n):
            for m in range(n + 1):
                assert bigL(lam, m) == bigL(lam, n - m)

    def test_square_correction(self):
        lam = Composition((4, 4))
        assert count_N_lambda_m(lam, 2) == bigL(lam, 2) + bigL(Composition((2, 2)), 1)
        assert count_N_lambda_m(lam, 3) == bigL(lam, 3)
        assert count_N_lambda_m(Composition((3, 6)), 2) == bigL(Composition((3, 6)), 2)

    def test_m_out_of_range(self):
        with pytest.raises(ValueError):
            bigL(Composition((2, 1)), 4)
        with pytest.raises(ValueError):
            count_N_lambda_m(Composition((2, 1)), -1)
        with pytest.raises(ValueError):
            a_lambda(Composition((2, 1)), 5)


class TestALambda:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_enumeration(self, n):
        for lam in compositions(n):
            sizes = Counter(descents_outside(descent_set(p), lam) for p in enumerate_cyclic_lambda_unimodal(lam))
            for m in range(n + 1):
                assert a_lambda(lam, m) == sizes[m]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_round_trip(self, n):
        for lam in compositions(n):
            for m in range(n + 1):
                total = sum(binomial(lam.k, j) * a_lambda(lam, m - j) for j in range(min(lam.k, m) + 1))
                assert total == count_N_lambda_m(lam, m)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_alternating_sum_is_chi(self, n):
        for lam in compositions(n):
            assert sum((-1) ** m * a_lambda(lam, m) for m in range(n - lam.k + 1)) == chi(lam)


class TestChi:
    @pytest.mark.parametrize("parts,expected", [
        ((1, 1, 1, 1), 6),
        ((2, 3), 0),
        ((2, 2), -2),
        ((4,), 0),
        ((3,), -1),
        ((3, 3), -3),
    ])
    def test_values(self, parts, expected):
        assert chi(Composition(parts)) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_identity_class(self, n):
        assert chi(Composition.ones(n)) == factorial(n - 1)


class TestCountingLemmas:
    def test_default_sweep_passes(self):
        report = check_counting_lemmas()
        assert report.passed
        assert report.identity == 'counting_lemmas'
        assert report.params == {'n_max': 10, 'dk_max': 6, 'r_max': 10}

    def test_worked_values(self):
        report = check_counting_lemmas(CountingLimits(n_max=2, dk_max=2, r_max=2))
        assert report.lhs["incex:d=2,k=2"] == 4
        assert report.lhs["bincoef:n=1,r=0"] == 0
        assert report.lhs["long:gamma=2,i=1"] == report.rhs["long:gamma=2,i=1"] == 2

    def test_limits_must_be_positive(self):
        with pytest.raises(ValueError):
            CountingLimits(n_max=0)
