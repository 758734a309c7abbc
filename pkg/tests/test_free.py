import pytest
from hypothesis import given, strategies as st

from sgap import FiniteRelation, FiniteSetoid, InvariantViolation
from sgap.errors import CarrierMismatch, IndexOutOfRange, PreconditionError
from sgap.families import family_semigroup
from sgap.free import (
    Word,
    all_words,
    check_generator_map,
    evaluate,
    extend_morphism,
    word_apart,
    word_concat,
    word_eq,
)

X, Y = 0, 1
GENS = FiniteSetoid.discrete(2)
BLIND = FiniteSetoid(FiniteRelation.identity(2), FiniteRelation.empty(2))

words = st.lists(st.integers(0, 1), min_size=1, max_size=6).map(lambda w: Word(w, GENS))


def w(*letters, gens=GENS):
    return Word(letters, gens)


class TestWords:
    def test_concat(self):
        assert word_concat(w(X), w(Y)) == w(X, Y)
        assert str(w(X, Y)) == "g0g1"

    @given(words, words, words)
    def test_associative(self, a, b, c):
        assert word_concat(word_concat(a, b), c) == word_concat(a, word_concat(b, c))

    @given(words, words)
    def test_length_adds(self, a, b):
        assert len(word_concat(a, b)) == len(a) + len(b)

    def test_empty_word(self):
        with pytest.raises(PreconditionError):
            Word((), GENS)

    def test_letter_range(self):
        with pytest.raises(IndexOutOfRange):
            w(2)

    def test_mixed_generators(self):
        with pytest.raises(CarrierMismatch):
            word_concat(w(X), w(X, gens=BLIND))


class TestApartness:
    def test_length(self):
        assert word_apart(w(X, Y), w(X), GENS)

    def test_same(self):
        assert not word_apart(w(X, Y), w(X, Y), GENS)
        assert word_eq(w(X, Y), w(X, Y), GENS)

    def test_blind_generators(self):
        assert not word_apart(w(X, Y, gens=BLIND), w(Y, X, gens=BLIND), BLIND)

    @given(words, words)
    def test_is_apartness(self, a, b):
        assert not (word_apart(a, b, GENS) and word_eq(a, b, GENS))
        assert word_apart(a, b, GENS) == word_apart(b, a, GENS)
        # discrete letters make word apartness the denial of equality
        assert word_apart(a, b, GENS) != word_eq(a, b, GENS)


class TestExtension:
    def test_z2(self, z2):
        assert extend_morphism([1, 1], [w(X, Y)], z2) == [0]

    def test_letters_map_to_generators(self, z3):
        assert extend_morphism([2, 1], [w(X), w(Y)], z3) == [2, 1]

    def test_left_zero_fold(self, leftzero2):
        assert extend_morphism([0, 1], [w(X, Y, X)], leftzero2) == [0]

    def test_all_sample_words(self):
        s = family_semigroup("fulltransform:2")
        sample = all_words(GENS, 4)
        values = extend_morphism([1, 2], sample, s)
        assert len(sample) == 30
        for word, v in zip(sample, values):
            assert v == evaluate(word, check_generator_map([1, 2], GENS, s), s)

    @given(words, words)
    def test_homomorphism(self, a, b):
        s = family_semigroup("fulltransform:2")
        f = check_generator_map([0, 2], GENS, s)
        ab = word_concat(a, b)
        assert evaluate(ab, f, s) == s.mul(evaluate(a, f, s), evaluate(b, f, s))

    def test_rejects_non_extensional_map(self):
        # apartness in the target that the blind generators do not have
        with pytest.raises(PreconditionError):
            check_generator_map([0, 1], BLIND, family_semigroup("cyclic:2"))

    def test_map_size(self, z2):
        with pytest.raises(CarrierMismatch):
            check_generator_map([0], GENS, z2)

    def test_map_range(self, z2):
        with pytest.raises(IndexOutOfRange):
            check_generator_map([0, 2], GENS, z2)

    def test_empty_sample(self, z2):
        assert extend_morphism([0, 1], [], z2) == []

    def test_invariant_error_type(self):
        assert issubclass(InvariantViolation, AssertionError)
