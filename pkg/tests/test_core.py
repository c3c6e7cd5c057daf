"""アルファベット・語リテラル・有限言語とシャッフル代数のテスト。"""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, lists, sampled_from, tuples

from core.alphabet import Alphabet, ParikhVector, Word
from core.language import FiniteLanguage, iter_parikh_vectors_upto, random_language, words_upto
from core.literals import format_word, parse_language_file, parse_word_literal, print_language_file
from core.shuffle import (
    concat_langs,
    find_missing_permutation,
    is_perm_closed,
    iter_shuffle_upto,
    parikh,
    perm_closure,
    perm_word,
    permutation_class_size,
    shuffle_langs,
    shuffle_words,
    star_upto,
)
from utils.errors import AlphabetMismatchError

AB = Alphabet(("a", "b"))
BOUND = 6

words_ab = lists(sampled_from(("a", "b")), max_size=3).map(tuple)
languages_ab = lists(words_ab, max_size=3).map(lambda members: FiniteLanguage(AB, frozenset(members)))


def word(alphabet: Alphabet, text: str) -> Word:
    return parse_word_literal(text, alphabet)


###################################################################################################
# アルファベットと語
###################################################################################################


@pytest.mark.parametrize("symbols", [(), ("a", "a"), ("a,b",), ("a b",), ("",), ("#x",)])
def test_alphabet_rejects_invalid_symbols(symbols):
    with pytest.raises(ValueError):
        Alphabet(symbols)


def test_alphabet_order_defines_parikh_coordinates(abc):
    assert abc.position("c") == 2
    assert parikh(word(abc, "c,a,c")) == ParikhVector(abc, (1, 0, 2))


def test_canonical_order_is_length_then_index(ab):
    language = FiniteLanguage.from_words(ab, [("b",), ("a", "a"), (), ("a",), ("b", "a")])
    assert [str(member) for member in language.words] == ["@", "a", "b", "a,a", "b,a"]


def test_word_concatenation_requires_same_alphabet(ab, abc):
    with pytest.raises(AlphabetMismatchError):
        word(ab, "a") + word(abc, "a")


def test_parikh_vector_canonical_word(abc):
    assert format_word(ParikhVector(abc, (2, 0, 1)).canonical_word()) == "a,a,c"


###################################################################################################
# 語リテラルと言語ファイル
###################################################################################################


def test_word_literal_epsilon_and_tokens(abc):
    assert parse_word_literal("@", abc).is_empty()
    assert parse_word_literal(" a, b ,c ", abc).symbols == ("a", "b", "c")
    assert format_word(Word(abc, ())) == "@"


@pytest.mark.parametrize("text", ["", "a,,b", "a,d", "a,"])
def test_word_literal_errors(abc, text):
    with pytest.raises(ValueError):
        parse_word_literal(text, abc)


def test_multi_character_symbol_tokens():
    alphabet = Alphabet(("st", "0b", "cb"))
    assert parse_word_literal("st,0b,st", alphabet).symbols == ("st", "0b", "st")


def test_language_file_is_canonical_and_skips_comments(ab):
    language = parse_language_file("# 例\nb,a\n@\na  # 末尾コメント\n\n", ab)
    assert print_language_file(language) == "@\na\nb,a\n"
    assert print_language_file(FiniteLanguage.empty(ab)) == ""


###################################################################################################
# 有限言語
###################################################################################################


def test_words_upto_counts(ab):
    assert len(words_upto(ab, 4)) == 31


def test_parikh_vectors_upto_order():
    assert list(iter_parikh_vectors_upto(2, 1)) == [(0, 0), (1, 0), (0, 1)]


def test_language_rejects_unknown_symbols(ab):
    with pytest.raises(ValueError):
        FiniteLanguage(ab, frozenset({("c",)}))


def test_random_language_is_seeded(ab):
    first = random_language(random.Random(7), ab, 4, 3)
    second = random_language(random.Random(7), ab, 4, 3)
    assert first == second
    assert first.max_length <= 3


###################################################################################################
# シャッフルと置換閉包
###################################################################################################


def test_shuffle_words_small(ab):
    assert {str(member) for member in shuffle_words(word(ab, "a,b"), word(ab, "b"))} == {"a,b,b", "b,a,b"}


def test_shuffle_of_ab_with_itself_excludes_abba(ab):
    square = shuffle_words(word(ab, "a,b"), word(ab, "a,b"))
    assert {str(member) for member in square} == {"a,a,b,b", "a,b,a,b"}
    assert ("a", "b", "b", "a") not in iter_shuffle_upto(FiniteLanguage.from_words(ab, [("a", "b")]), 4)


def test_perm_word_size(abc):
    assert len(perm_word(word(abc, "a,a,b,c"))) == 12
    assert permutation_class_size((2, 1, 1)) == 12


def test_perm_closure_and_missing_permutation(ab):
    language = FiniteLanguage.from_words(ab, [("a", "b")])
    assert not is_perm_closed(language)
    assert find_missing_permutation(language) == (("a", "b"), ("b", "a"))
    closed = perm_closure(language)
    assert is_perm_closed(closed)
    assert find_missing_permutation(closed) is None


def test_star_and_iterated_shuffle_contain_epsilon(ab):
    empty = FiniteLanguage.empty(ab)
    assert star_upto(empty, 3) == FiniteLanguage.epsilon(ab)
    assert iter_shuffle_upto(empty, 3) == FiniteLanguage.epsilon(ab)


def test_negative_bound_is_rejected(ab):
    with pytest.raises(ValueError):
        iter_shuffle_upto(FiniteLanguage.epsilon(ab), -1)


@given(tuples(languages_ab, languages_ab, languages_ab))
@settings(max_examples=60, deadline=None)
def test_shuffle_is_commutative_associative_and_distributive(operands):
    first, second, third = operands
    assert shuffle_langs(first, second) == shuffle_langs(second, first)
    assert shuffle_langs(shuffle_langs(first, second), third) == shuffle_langs(first, shuffle_langs(second, third))
    assert shuffle_langs(first, second | third) == shuffle_langs(first, second) | shuffle_langs(first, third)


@given(tuples(languages_ab, languages_ab))
@settings(max_examples=40, deadline=None)
def test_iterated_shuffle_laws(operands):
    first, second = operands

    def star(language):
        return iter_shuffle_upto(language, BOUND)

    epsilon = FiniteLanguage.epsilon(AB)
    assert star(first | second) == shuffle_langs(star(first), star(second), BOUND)
    assert star(star(first)) == star(first)
    left = star(shuffle_langs(first, star(second), BOUND))
    right = shuffle_langs(first, star(first | second), BOUND) | epsilon
    assert left == right


@given(tuples(languages_ab, languages_ab))
@settings(max_examples=40, deadline=None)
def test_parikh_image_is_a_morphism(operands):
    first, second = operands

    def vectors(language):
        return {parikh(member).counts for member in language}

    sums = {(x[0] + y[0], x[1] + y[1]) for x in vectors(first) for y in vectors(second)}
    assert vectors(shuffle_langs(first, second)) == sums
    assert vectors(concat_langs(first, second)) == sums


@given(languages_ab, integers(min_value=0, max_value=4))
@settings(max_examples=40, deadline=None)
def test_truncated_closures_are_monotone(language, bound):
    assert iter_shuffle_upto(language, bound) <= iter_shuffle_upto(language, bound + 1)
    assert star_upto(language, bound) <= perm_closure(iter_shuffle_upto(language, bound))
