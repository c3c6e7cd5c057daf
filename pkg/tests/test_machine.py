"""機械ファイル・受理判定・有界列挙・決定化・機械演算のテスト。"""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from core.alphabet import Alphabet, ParikhVector, Word
from core.language import FiniteLanguage, words_upto
from core.literals import parse_word_literal
from core.shuffle import is_perm_closed, perm_closure, perm_word, shuffle_langs
from machine.acceptance import (
    GjfaEnumeration,
    JfaEnumeration,
    fa_accepts,
    fa_language_upto,
    gjfa_accepts,
    gjfa_language_upto,
    gjfa_successors,
    jfa_accepts,
    jfa_language_upto,
    jfa_successors,
)
from machine.dfa import access_words, determinize, distinguishing_suffix, is_deterministic, minimize
from machine.generators import random_machine
from machine.machine_file import parse_machine, print_machine
from machine.model import GjfaConfig, JfaConfig, Machine, MachineKind, Rule
from machine.operations import (
    apply_homomorphism,
    binary_encode_gjfa,
    binary_homomorphism,
    concat_machines,
    finite_language_machine,
    letterize_machine,
    shuffle_product,
    star_machine,
    union_machines,
    word_to_jfa,
)
from utils.errors import AlphabetMismatchError, MachineFormatError, MachineKindError

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))


def word(alphabet: Alphabet, text: str) -> Word:
    return parse_word_literal(text, alphabet)


def language(alphabet: Alphabet, *texts: str) -> FiniteLanguage:
    return FiniteLanguage.from_words(alphabet, [word(alphabet, text).symbols for text in texts])


def single_symbol_machine(alphabet: Alphabet, symbol: str) -> Machine:
    return Machine(alphabet, ("p", "q"), (Rule("p", Word(alphabet, (symbol,)), "q"),), "p", frozenset({"q"}))


###################################################################################################
# 機械ファイル
###################################################################################################


def test_corpus_machines_parse_with_kinds(abc_loop, abcd_loop):
    assert abc_loop.kind is MachineKind.FINITE_MACHINE
    assert abc_loop.states == ("s", "r", "t")
    assert abcd_loop.kind is MachineKind.GENERAL_FINITE_MACHINE


def test_print_then_parse_is_identity(abc_loop, abcd_loop, elimination_sample):
    for machine in (abc_loop, abcd_loop, elimination_sample):
        assert parse_machine(print_machine(machine)) == machine


def test_printed_machine_has_fixed_line_order(abc_loop):
    lines = print_machine(abc_loop).splitlines()
    assert lines[:4] == ["alphabet: a b c", "states: s r t", "start: s", "final: s"]
    assert lines[4] == "rule: s a r"


@pytest.mark.parametrize(
    "text",
    [
        "states: s\nstart: s\n",
        "alphabet: a\nstart: s\n",
        "alphabet: a\nstates: s\n",
        "alphabet: a\nstates: s s\nstart: s\n",
        "alphabet: a\nstates: s\nstart: r\n",
        "alphabet: a\nstates: s\nstart: s\nfinal: r\n",
        "alphabet: a\nstates: s\nstart: s\nrule: s b s\n",
        "alphabet: a\nstates: s\nstart: s\nrule: s a r\n",
        "alphabet: a\nstates: s\nstart: s\nrule: s a\n",
        "alphabet: a\nstates: s\nstart: s\ncolor: red\n",
        "alphabet: a\nstates: s\nstart: s\nrule s a s\n",
    ],
)
def test_machine_file_errors(text):
    with pytest.raises(MachineFormatError):
        parse_machine(text)


def test_machine_file_error_reports_line_number():
    with pytest.raises(MachineFormatError) as excinfo:
        parse_machine("alphabet: a\nstates: s\nstart: s\n# c\nrule: s b s\n")
    assert excinfo.value.line_number == 5


def test_machine_without_rules_accepts_only_epsilon():
    machine = parse_machine("alphabet: a b\nstates: s\nstart: s\nfinal: s\n")
    epsilon = FiniteLanguage.epsilon(AB)
    assert fa_language_upto(machine, 3) == epsilon
    assert jfa_language_upto(machine, 3) == epsilon
    assert gjfa_language_upto(machine, 3) == epsilon


###################################################################################################
# 受理判定
###################################################################################################


def test_fa_acceptance(abc_loop):
    assert fa_accepts(abc_loop, word(ABC, "a,b,c,a,b,c"))
    assert not fa_accepts(abc_loop, word(ABC, "a,c,b"))
    assert fa_accepts(abc_loop, Word(ABC, ()))


def test_fa_acceptance_follows_epsilon_cycles():
    epsilon = Word(AB, ())
    rules = (Rule("p", epsilon, "q"), Rule("q", epsilon, "p"), Rule("q", Word(AB, ("a",)), "r"))
    machine = Machine(AB, ("p", "q", "r"), rules, "p", frozenset({"r"}))
    assert fa_accepts(machine, word(AB, "a"))
    assert not fa_accepts(machine, word(AB, "a,a"))


def test_jfa_acceptance(abc_loop):
    assert jfa_accepts(abc_loop, word(ABC, "a,a,b,b,c,c"))
    assert not jfa_accepts(abc_loop, word(ABC, "a,a,b"))


def test_jfa_acceptance_rejects_general_machine(abcd_loop):
    with pytest.raises(MachineKindError):
        jfa_accepts(abcd_loop, word(abcd_loop.alphabet, "a,b,c,d"))


def test_complementing_final_states_does_not_complement_jfa_language(contains_a, contains_b):
    bbab = word(AB, "b,b,a,b")
    assert jfa_accepts(contains_a, bbab)
    assert jfa_accepts(contains_b, bbab)
    assert jfa_accepts(contains_a, word(AB, "a,a"))
    assert not jfa_accepts(contains_b, word(AB, "a,a"))


def test_complementation_counterexample_at_bound_four(contains_a, contains_b):
    sigma = words_upto(AB, 4).members
    with_a = {member for member in sigma if "a" in member}
    with_b_or_empty = {member for member in sigma if "b" in member or not member}
    assert jfa_language_upto(contains_a, 4).members == with_a
    assert jfa_language_upto(contains_b, 4).members == with_b_or_empty
    assert with_a | with_b_or_empty == set(sigma)
    assert with_a & with_b_or_empty


def test_gjfa_acceptance(abcd_loop, ab_loop):
    alphabet = abcd_loop.alphabet
    assert gjfa_accepts(abcd_loop, word(alphabet, "a,b,c,d"))
    assert not gjfa_accepts(abcd_loop, word(alphabet, "b,a,c,d"))
    assert gjfa_accepts(abcd_loop, word(alphabet, "c,d,a,b"))
    assert gjfa_accepts(ab_loop, word(ab_loop.alphabet, "a,a,b,b"))
    assert not gjfa_accepts(ab_loop, word(ab_loop.alphabet, "a,b,b,a"))


def test_gjfa_rejects_word_with_foreign_factor():
    alphabet = Alphabet(("a", "b", "c", "d"))
    machine = Machine(alphabet, ("s",), (Rule("s", word(alphabet, "a,b"), "s"),), "s", frozenset({"s"}))
    assert not gjfa_accepts(machine, word(alphabet, "a,c,b,d"))


def test_jfa_successors_decrement_one_component(abc_loop):
    config = JfaConfig("s", ParikhVector(ABC, (1, 1, 0)))
    assert jfa_successors(abc_loop, config) == [JfaConfig("r", ParikhVector(ABC, (0, 1, 0)))]
    assert jfa_successors(abc_loop, JfaConfig("s", ParikhVector(ABC, (0, 1, 1)))) == []


def test_gjfa_successors_delete_every_occurrence(ab_loop):
    alphabet = ab_loop.alphabet
    successors = gjfa_successors(ab_loop, GjfaConfig("s", word(alphabet, "a,b,a,b")))
    assert {str(config.remaining) for config in successors} == {"a,b"}
    successors = gjfa_successors(ab_loop, GjfaConfig("s", word(alphabet, "a,a,b,b")))
    assert {str(config.remaining) for config in successors} == {"a,b"}


###################################################################################################
# 有界列挙
###################################################################################################


def test_bounded_languages_of_examples(abc_loop, abcd_loop, ab_loop):
    expected = perm_word(word(ABC, "a,b,c")) | FiniteLanguage.epsilon(ABC)
    assert jfa_language_upto(abc_loop, 3) == expected
    assert fa_language_upto(abcd_loop, 4) == language(abcd_loop.alphabet, "@", "a,b,c,d")
    assert gjfa_language_upto(ab_loop, 4) == language(ab_loop.alphabet, "@", "a,b", "a,a,b,b", "a,b,a,b")


def test_negative_bound_is_rejected(abc_loop):
    with pytest.raises(ValueError):
        fa_language_upto(abc_loop, -1)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_jfa_language_is_permutation_closure_of_fa_language(seed):
    machine = random_machine(random.Random(seed), ABC, 3)
    jfa_language = jfa_language_upto(machine, 5)
    assert jfa_language == perm_closure(fa_language_upto(machine, 5))
    assert is_perm_closed(jfa_language)
    assert fa_language_upto(machine, 5) <= gjfa_language_upto(machine, 5)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=20, deadline=None)
def test_enumeration_strategies_agree(seed):
    rng = random.Random(seed)
    machine = random_machine(rng, AB, 3)
    parikh_based = jfa_language_upto(machine, 5, strategy=JfaEnumeration.PARIKH)
    assert parikh_based == jfa_language_upto(machine, 5, strategy=JfaEnumeration.FILTER)

    general = Machine(
        machine.alphabet,
        machine.states,
        (*machine.rules, Rule(machine.start, word(AB, "a,b"), machine.states[-1])),
        machine.start,
        machine.finals,
    )
    insertion = gjfa_language_upto(general, 5, strategy=GjfaEnumeration.INSERTION)
    assert insertion == gjfa_language_upto(general, 5, strategy=GjfaEnumeration.FILTER)


###################################################################################################
# 決定化と最小化
###################################################################################################


def test_minimal_dfa_of_cyclic_example_has_sink(abc_loop):
    dfa = minimize(determinize(abc_loop))
    assert is_deterministic(dfa)
    assert len(dfa.states) == 4
    assert fa_language_upto(dfa, 8) == fa_language_upto(abc_loop, 8)


def test_empty_language_minimizes_to_single_sink():
    dfa = minimize(Machine(AB, ("s",), (), "s", frozenset()))
    assert len(dfa.states) == 1
    assert not dfa.finals


def test_determinize_rejects_general_machine(abcd_loop):
    with pytest.raises(MachineKindError):
        determinize(abcd_loop)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_fa_equivalent_machines_minimize_identically(seed):
    machine = random_machine(random.Random(seed), AB, 3)
    padded = concat_machines(machine, Machine(AB, ("z",), (), "z", frozenset({"z"})))
    assert fa_language_upto(padded, 6) == fa_language_upto(machine, 6)
    assert minimize(padded) == minimize(machine)


def test_access_words_and_distinguishing_suffix(a_star_b_star):
    dfa = minimize(a_star_b_star)
    words = access_words(dfa)
    assert words[dfa.start] == ()
    assert set(words.values()) == {(), ("b",), ("b", "a")}
    by_word = {symbols: state for state, symbols in words.items()}
    assert distinguishing_suffix(dfa, by_word[()], by_word[("b",)]) == ("a",)
    assert distinguishing_suffix(dfa, dfa.start, dfa.start) is None


###################################################################################################
# 機械演算
###################################################################################################


def test_shuffle_product_of_single_symbols():
    product = shuffle_product(single_symbol_machine(AB, "a"), single_symbol_machine(AB, "b"))
    assert fa_language_upto(product, 3) == language(AB, "a,b", "b,a")


def test_shuffle_product_matches_bounded_shuffle():
    ab_star = parse_machine("alphabet: a b c\nstates: p q\nstart: p\nfinal: p\nrule: p a q\nrule: q b p\n")
    c_star = parse_machine("alphabet: a b c\nstates: u\nstart: u\nfinal: u\nrule: u c u\n")
    expected = shuffle_langs(fa_language_upto(ab_star, 5), fa_language_upto(c_star, 5), 5)
    assert fa_language_upto(shuffle_product(ab_star, c_star), 5) == expected


def test_shuffle_with_epsilon_machine_is_identity(abc_loop):
    epsilon_machine = Machine(ABC, ("e",), (), "e", frozenset({"e"}))
    assert fa_language_upto(shuffle_product(abc_loop, epsilon_machine), 6) == fa_language_upto(abc_loop, 6)


def test_shuffle_product_requires_same_alphabet(abc_loop):
    with pytest.raises(AlphabetMismatchError):
        shuffle_product(abc_loop, single_symbol_machine(AB, "a"))


def test_union_concat_and_star_machines():
    first = single_symbol_machine(AB, "a")
    second = single_symbol_machine(AB, "b")
    assert fa_language_upto(union_machines(first, second), 2) == language(AB, "a", "b")
    assert fa_language_upto(concat_machines(first, second), 2) == language(AB, "a,b")
    assert fa_language_upto(star_machine(first), 3) == language(AB, "@", "a", "a,a", "a,a,a")


def test_word_to_jfa_languages():
    assert fa_language_upto(word_to_jfa(Word(AB, ())), 2) == FiniteLanguage.epsilon(AB)
    assert jfa_language_upto(word_to_jfa(word(AB, "a,b")), 2) == language(AB, "a,b", "b,a")
    assert jfa_language_upto(word_to_jfa(word(ABC, "a,b,c")), 3) == perm_word(word(ABC, "a,b,c"))


def test_finite_language_machine_accepts_exactly_the_language():
    members = language(ABC, "@", "a,b", "a,c", "b,b,b")
    machine = finite_language_machine(members)
    assert fa_language_upto(machine, 4) == members


def test_letterize_machine_keeps_fa_language(abcd_loop):
    letterized = letterize_machine(abcd_loop)
    assert letterized.kind is MachineKind.FINITE_MACHINE
    assert fa_language_upto(letterized, 8) == fa_language_upto(abcd_loop, 8)
    assert jfa_language_upto(letterized, 4) == perm_closure(gjfa_language_upto(abcd_loop, 4))


def test_binary_homomorphism_codes():
    table = binary_homomorphism(AB)
    assert table == {"a": ("1", "0", "1"), "b": ("1", "0", "0", "1")}
    assert apply_homomorphism(Word(AB, ()), table).is_empty()


def test_binary_encoding_preserves_gjfa_membership(abcd_loop):
    encoded, table = binary_encode_gjfa(abcd_loop)
    assert encoded.alphabet.symbols == ("0", "1")
    assert gjfa_accepts(encoded, apply_homomorphism(word(abcd_loop.alphabet, "a,b,c,d"), table))
    assert not gjfa_accepts(encoded, apply_homomorphism(word(abcd_loop.alphabet, "b,a,c,d"), table))


def test_binary_encoding_keeps_epsilon_rules():
    machine = Machine(AB, ("p", "q"), (Rule("p", Word(AB, ()), "q"),), "p", frozenset({"q"}))
    encoded, _ = binary_encode_gjfa(machine)
    assert encoded.rules[0].label.is_empty()


def test_random_machine_is_seeded():
    first = random_machine(random.Random(5), ABC, 4)
    assert first == random_machine(random.Random(5), ABC, 4)
    assert first.finals
    with pytest.raises(ValueError):
        random_machine(random.Random(5), ABC, 0)
