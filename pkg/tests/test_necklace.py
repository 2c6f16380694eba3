from collections import Counter
from itertools import product

import pytest
from hypothesis import assume, given

from src.cyclic_descents.counting import binomial, bigL, count_N_lambda_m
from src.cyclic_descents.errors import InvalidWordError, NotInCLambdaError, NotInNLambdaError
from src.cyclic_descents.necklace import (
    NecklaceClass,
    Word,
    complement,
    cut_words,
    enumerate_N_lambda,
    in_N_lambda,
    is_primitive,
    n_lambda_violation,
    pattern,
    ppat,
    ppat_preimage,
    ppat_preimages,
    ppat_word,
    precedence_key,
    precedes,
    require_N_lambda,
    shift,
)
from src.cyclic_descents.perm_core import (
    Composition,
    Permutation,
    compositions,
    descent_set,
    descents_outside,
    enumerate_cyclic_lambda_unimodal,
)

from .conftest import word_strategy


def W(text, k=2):
    return Word.parse(text, k)


def all_words(n, k):
    return [Word(letters, k) for letters in product(range(2 * k), repeat=n)]


class TestWord:
    def test_content_and_odd_count(self):
        s = W("00121")
        assert s.content() == (2, 2, 1, 0)
        assert s.odd_count == 2

    def test_alphabet_checked(self):
        with pytest.raises(InvalidWordError):
            Word((0, 4), 2)
        with pytest.raises(InvalidWordError):
            Word.parse("0x1", 2)

    def test_text_forms(self):
        assert W("0213302133").to_text() == "0213302133"
        wide = Word((0, 11, 3), 6)
        assert wide.to_text() == "0,11,3"
        assert Word.parse("0,11,3", 6) == wide

    def test_shift(self):
        s = W("00100011")
        assert shift(s) == W("01000110")
        assert shift(shift(s)) == W("10001100")
        t = s
        for _ in range(s.n):
            t = shift(t)
        assert t == s

    def test_necklace_class_is_least_rotation(self):
        assert NecklaceClass.of(W("12100")).canonical == W("00121")
        assert NecklaceClass.of(W("22102210")) == NecklaceClass.of(W("02210221"))

    def test_necklace_class_rejects_other_rotations(self):
        assert NecklaceClass(W("00121")).canonical == W("00121")
        with pytest.raises(InvalidWordError):
            NecklaceClass(W("12100"))

    def test_complement(self):
        assert complement(W("00121")) == W("11030")


class TestOrder:
    def test_example(self):
        assert precedes(Word.parse("0010111", 1), Word.parse("0010001", 1))

    def test_equal_words_incomparable(self):
        s = W("0121")
        assert not precedes(s, s)

    def test_empty_prefix_is_even(self):
        assert precedes(W("0100"), W("0200"))

    def test_mismatched_words(self):
        with pytest.raises(ValueError):
            precedes(W("012"), W("0123"))
        with pytest.raises(ValueError):
            precedes(Word((0, 1), 1), Word((0, 1), 2))

    @pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (3, 2), (4, 2)])
    def test_strict_total_order(self, n, k):
        words = all_words(n, k)
        for s in words:
            for t in words:
                if s == t:
                    assert not precedes(s, t)
                    continue
                assert precedes(s, t) != precedes(t, s)
                assert precedes(s, t) == (precedence_key(s) < precedence_key(t))

    @given(word_strategy(6, 2), word_strategy(6, 2), word_strategy(6, 2))
    def test_transitive(self, s, t, u):
        if precedes(s, t) and precedes(t, u):
            assert precedes(s, u)

    @pytest.mark.parametrize("n,k", [(4, 1), (4, 2)])
    def test_shift_preserves_or_flips_by_first_letter(self, n, k):
        words = all_words(n, k)
        for s in words:
            for t in words:
                if s != t and s.letters[0] == t.letters[0] and precedes(s, t):
                    assert precedes(shift(s), shift(t)) == (s.letters[0] % 2 == 0)


class TestMembership:
    def test_primitivity(self):
        assert is_primitive(W("0221"))
        assert not is_primitive(W("02210221"))
        assert is_primitive(W("3"))

    def test_examples_in_N_lambda(self):
        assert in_N_lambda(W("00121"), Composition((4, 1)))
        assert in_N_lambda(W("0213302133"), Composition((4, 6)))
        assert in_N_lambda(W("02210221"), Composition((4, 4)))

    def test_square_with_even_odd_count_rejected(self):
        assert not in_N_lambda(W("00220022"), Composition((4, 4)))
        assert n_lambda_violation(W("00220022"), Composition((4, 4))) == 'primitivity'

    def test_content_clause(self):
        assert n_lambda_violation(W("02220222"), Composition((4, 4))) == 'content'

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            in_N_lambda(W("0012"), Composition((4, 1)))
        with pytest.raises(NotInNLambdaError) as info:
            require_N_lambda(W("0012"), Composition((4, 1)))
        assert info.value.clause == 'size'

    def test_require_reports_clause(self):
        with pytest.raises(NotInNLambdaError) as info:
            require_N_lambda(W("00220022"), Composition((4, 4)))
        assert info.value.clause == 'primitivity'
        member = require_N_lambda(W("02210221"), Composition((4, 4)))
        assert not member.primitive
        assert member.word == W("02210221")


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 5))
    def test_matches_brute_force(self, n):
        for lam in compositions(n):
            expected = {
                NecklaceClass.of(w) for w in all_words(n, lam.k) if in_N_lambda(w, lam)
            }
            found = [member.necklace for member in enumerate_N_lambda(lam)]
            assert len(found) == len(set(found))
            assert set(found) == expected

    @pytest.mark.parametrize("n", range(1, 7))
    def test_counts_match_closed_form(self, n):
        for lam in compositions(n):
            members = list(enumerate_N_lambda(lam))
            by_m = Counter(member.odd_count for member in members)
            primitive = Counter(member.odd_count for member in members if member.primitive)
            for m in range(n + 1):
                assert by_m[m] == count_N_lambda_m(lam, m)
                assert primitive[m] == bigL(lam, m)
                assert len(list(enumerate_N_lambda(lam, m))) == by_m[m]

    def test_canonical_words_are_least_rotations(self):
        for member in enumerate_N_lambda(Composition((3, 2))):
            assert member.word == NecklaceClass.of(member.word).canonical

    def test_imprimitive_square_listed(self):
        members = {m.word: m for m in enumerate_N_lambda(Composition((4, 4)), 2)}
        assert not members[W("02210221")].primitive

    def test_member_to_dict(self):
        member = require_N_lambda(W("00121"), Composition((4, 1)))
        assert member.to_dict() == {'lambda': '4,1', 'word': '00121', 'primitive': True, 'o': 2}

    def test_m_out_of_range(self):
        with pytest.raises(ValueError):
            list(enumerate_N_lambda(Composition((2, 1)), 4))

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [7, 8])
    def test_counts_match_closed_form_large(self, n):
        for lam in compositions(n):
            by_m = Counter(member.odd_count for member in enumerate_N_lambda(lam))
            for m in range(n + 1):
                assert by_m[m] == count_N_lambda_m(lam, m)


class TestPPat:
    def test_first_worked_example(self):
        s = W("321132202")
        assert pattern(s) == Permutation.parse("953286417")
        assert ppat_word(s) == Permutation.parse("782134965")

    def test_representative_does_not_matter(self):
        lam = Composition((3, 6))
        assert ppat(require_N_lambda(W("322023211"), lam)) == Permutation.parse("782134965")

    def test_square_example(self):
        s = W("02210221")
        assert pattern(s) == Permutation.parse("17532864")
        assert ppat(require_N_lambda(s, Composition((4, 4)))) == Permutation.parse("78213456")

    def test_square_example_rotations(self):
        for rotation in W("02210221").rotations():
            assert ppat_word(rotation) == Permutation.parse("78213456")

    @given(word_strategy(7, 2))
    def test_pattern_ranks_rotations_by_precedence(self, s):
        assume(is_primitive(s))
        rotations = s.rotations()
        order = sorted(range(s.n), key=lambda i: precedence_key(rotations[i]))
        assert [pattern(s).entries[i] for i in order] == list(range(1, s.n + 1))

    def test_pattern_rejects_higher_powers(self):
        with pytest.raises(ValueError):
            pattern(W("010101"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_every_rotation_gives_same_image(self, n):
        for lam in compositions(n):
            for member in enumerate_N_lambda(lam):
                image = ppat(member)
                assert all(ppat_word(r) == image for r in member.word.rotations())

    @pytest.mark.parametrize("n", range(1, 6))
    def test_lands_in_and_covers_cyclic_unimodal(self, n):
        for lam in compositions(n):
            cycles = set(enumerate_cyclic_lambda_unimodal(lam))
            images = {ppat(member) for member in enumerate_N_lambda(lam)}
            assert images == cycles

    @pytest.mark.parametrize("n", range(1, 6))
    def test_double_count(self, n):
        for lam in compositions(n):
            sizes = Counter(descents_outside(descent_set(p), lam) for p in enumerate_cyclic_lambda_unimodal(lam))
            for m in range(n + 1):
                expected = sum(binomial(lam.k, j) * sizes[m - j] for j in range(min(lam.k, m) + 1))
                assert len(list(enumerate_N_lambda(lam, m))) == expected


class TestPreimage:
    def test_figure_permutation(self):
        lam = Composition((3, 6))
        tau = Permutation.parse("782134965")
        outside = descents_outside(descent_set(tau), lam)
        assert outside == 3
        assert len(ppat_preimage(tau, lam, outside)) == 1
        fiber = ppat_preimage(tau, lam, outside + 1)
        assert len(fiber) == 2
        assert NecklaceClass.of(W("321132202")) in {member.necklace for member in fiber}
        assert all(ppat(member) == tau for member in fiber)
        assert ppat_preimage(tau, lam, outside - 1) == frozenset()

    def test_rejects_non_member(self):
        with pytest.raises(NotInCLambdaError):
            ppat_preimage(Permutation.parse("123"), Composition((3,)), 0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_fiber_sizes(self, n):
        for lam in compositions(n):
            for tau in enumerate_cyclic_lambda_unimodal(lam):
                outside = descents_outside(descent_set(tau), lam)
                for j in range(lam.k + 1):
                    fiber = ppat_preimage(tau, lam, outside + j)
                    assert len(fiber) == binomial(lam.k, j)
                    assert all(ppat(member) == tau for member in fiber)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_cut_words_lie_in_N_lambda(self, n):
        for lam in compositions(n):
            for tau in enumerate_cyclic_lambda_unimodal(lam):
                words = list(cut_words(tau, lam))
                assert len(words) == 2 ** lam.k
                for word in words:
                    assert in_N_lambda(word, lam)
                    assert ppat_word(word) == tau

    @pytest.mark.parametrize("n", range(1, 6))
    def test_preimages_split_by_odd_count(self, n):
        for lam in compositions(n):
            for tau in enumerate_cyclic_lambda_unimodal(lam):
                preimages = ppat_preimages(tau, lam)
                outside = descents_outside(descent_set(tau), lam)
                assert sorted(preimages) == list(range(outside, outside + lam.k + 1))
                for m in range(n + 1):
                    assert ppat_preimage(tau, lam, m) == preimages.get(m, frozenset())
                    assert all(member.odd_count == m for member in preimages.get(m, ()))
