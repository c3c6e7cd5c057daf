"""式の構文解析・意味・変換のテスト。"""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from core.alphabet import Alphabet, Word
from core.language import FiniteLanguage
from core.shuffle import is_perm_closed, perm_closure
from expr.ast import Atom, Concat, EmptySet, Epsilon, IterShuffle, Shuffle, Star, Union, rebase_alphabet, union_all
from expr.generators import random_alpha_shuf, random_expr, random_regex
from expr.parser import infer_alphabet, parse_expr, parse_expr_file, print_expr, strip_expr_comments
from expr.semantics import ExprFlavor, classify, eval_upto, is_alpha_shuf, is_regular, star_height
from expr.thompson import thompson_machine
from expr.transforms import alpha_shuf_to_regex, finite_permclosed_to_alpha_shuf, regex_to_alpha_shuf
from machine.acceptance import fa_language_upto, jfa_language_upto
from machine.elimination import machine_to_regex
from utils.errors import ExprSyntaxError, FlavorError

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))

EXAMPLE_REGEX = (
    "((a.b*.a.b)*.((a.b*.a.a)+b).(a.b*.a.a)*.((a.b*.a.b)+b))*.(a.b*.a.b)*.((a.b*.a.a)+b).(a.b*.a.a)*"
)
EXAMPLE_ALPHA_SHUF = (
    "((a&b&*&a&b)&*&((a&b&*&a&a)+b)&(a&b&*&a&a)&*&((a&b&*&a&b)+b))&*"
    "&(a&b&*&a&b)&*&((a&b&*&a&a)+b)&(a&b&*&a&a)&*"
)


def texts(language: FiniteLanguage) -> list[str]:
    return [str(member) for member in language]


###################################################################################################
# 構文解析
###################################################################################################


def test_precedence_postfix_then_sequence_then_union():
    expr = parse_expr("a.b*+c&a&*", ABC)
    assert isinstance(expr, Union)
    assert isinstance(expr.left, Concat) and isinstance(expr.left.right, Star)
    assert isinstance(expr.right, Shuffle) and isinstance(expr.right.right, IterShuffle)


def test_word_atoms_and_constants():
    assert parse_expr("a,b", AB) == Atom(Word(AB, ("a", "b")))
    assert parse_expr("#E", AB) == EmptySet(AB)
    assert parse_expr("#e", AB) == Epsilon(AB)
    assert parse_expr("@", AB) == Epsilon(AB)


def test_print_then_parse_is_identity():
    rng = random.Random(3)
    for _ in range(30):
        expr = random_expr(rng, ABC)
        assert parse_expr(print_expr(expr), ABC) == expr


@pytest.mark.parametrize(("text", "position"), [("a+", 2), ("(a", 2), ("a d", 2), ("#x", 0), ("a)", 1)])
def test_syntax_errors_carry_position(text, position):
    with pytest.raises(ExprSyntaxError) as excinfo:
        parse_expr(text, ABC)
    assert excinfo.value.position == position


def test_alphabet_inference_and_expression_files():
    assert infer_alphabet("(b&a)&*").symbols == ("a", "b")
    assert infer_alphabet("#e").symbols == ("a",)
    assert strip_expr_comments("# from=regex\n(a\n+b)\n") == "(a +b)"
    assert parse_expr_file("# comment\na&b\n") == Shuffle(Atom(Word(AB, ("a",))), Atom(Word(AB, ("b",))))


###################################################################################################
# 種別と意味
###################################################################################################


@pytest.mark.parametrize(
    ("text", "flavor"),
    [
        ("a+b", ExprFlavor.ALPHA_SHUF),
        ("a,b&b", ExprFlavor.SHUF),
        ("a.b*", ExprFlavor.REGULAR),
        ("a.b&c", ExprFlavor.MIXED),
        ("#e", ExprFlavor.ALPHA_SHUF),
    ],
)
def test_classify_precedence(text, flavor):
    assert classify(parse_expr(text, ABC)) is flavor


def test_star_height():
    assert star_height(parse_expr("(a*.b)*+c", ABC)) == 2
    assert star_height(parse_expr("a&b", ABC)) == 0


def test_eval_upto_operators():
    assert texts(eval_upto(parse_expr("a,b&c", ABC), 3)) == ["a,b,c", "a,c,b", "c,a,b"]
    assert texts(eval_upto(parse_expr("(a,b)&*", AB), 4)) == ["@", "a,b", "a,a,b,b", "a,b,a,b"]
    assert texts(eval_upto(parse_expr("(a+b).a", AB), 2)) == ["a,a", "b,a"]
    assert eval_upto(parse_expr("#E*", AB), 3) == FiniteLanguage.epsilon(AB)


def test_eval_upto_truncates():
    assert eval_upto(parse_expr("a,a,a", AB), 2).is_empty()
    with pytest.raises(ValueError):
        eval_upto(parse_expr("a", AB), -1)


def test_union_all_of_nothing_is_empty_set():
    assert union_all(AB, []) == EmptySet(AB)


def test_rebase_alphabet_keeps_language():
    unary = parse_expr("(a,a)*", Alphabet(("a",)))
    rebased = rebase_alphabet(unary, AB)
    assert rebased.alphabet == AB
    assert texts(eval_upto(rebased, 4)) == ["@", "a,a", "a,a,a,a"]
    with pytest.raises(ValueError):
        rebase_alphabet(parse_expr("c", ABC), AB)


###################################################################################################
# 変換
###################################################################################################


def test_regex_to_alpha_shuf_rejects_shuffle():
    with pytest.raises(FlavorError):
        regex_to_alpha_shuf(parse_expr("a&b", AB))
    with pytest.raises(FlavorError):
        alpha_shuf_to_regex(parse_expr("a.b", AB))


def test_regex_to_alpha_shuf_letterizes_atoms():
    converted = regex_to_alpha_shuf(parse_expr("(a,b)*", AB))
    assert is_alpha_shuf(converted)
    assert texts(eval_upto(converted, 2)) == ["@", "a,b", "b,a"]


def test_regex_to_alpha_shuf_is_permutation_closure_on_seeded_samples():
    rng = random.Random(0)
    for _ in range(100):
        regex = random_regex(rng, ABC, depth=4)
        expected = perm_closure(eval_upto(regex, 6))
        assert eval_upto(regex_to_alpha_shuf(regex), 6) == expected


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=30, deadline=None)
def test_alpha_shuf_to_regex_language_has_same_permutation_closure(seed):
    expr = random_alpha_shuf(random.Random(seed), AB, depth=3)
    regex = alpha_shuf_to_regex(expr)
    assert is_regular(regex)
    assert perm_closure(eval_upto(regex, 5)) == eval_upto(expr, 5)


def test_finite_permclosed_to_alpha_shuf():
    language = perm_closure(FiniteLanguage.from_words(AB, [("a", "b"), ("b",)]))
    expr = finite_permclosed_to_alpha_shuf(language)
    assert star_height(expr) == 0
    assert eval_upto(expr, 3) == language
    with pytest.raises(ValueError):
        finite_permclosed_to_alpha_shuf(FiniteLanguage.from_words(AB, [("a", "b")]))


def test_thompson_machine_languages():
    regex = parse_expr("(a.b)*+b", AB)
    machine = thompson_machine(regex)
    assert fa_language_upto(machine, 4) == eval_upto(regex, 4)
    assert jfa_language_upto(machine, 4) == perm_closure(eval_upto(regex, 4))


def test_state_elimination_example_converts_to_alpha_shuf(elimination_sample):
    regex = machine_to_regex(elimination_sample)
    assert fa_language_upto(elimination_sample, 6) == eval_upto(parse_expr(EXAMPLE_REGEX, AB), 6)
    converted = regex_to_alpha_shuf(regex)
    expected = eval_upto(parse_expr(EXAMPLE_ALPHA_SHUF, AB), 6)
    assert eval_upto(converted, 6) == expected
    assert jfa_language_upto(elimination_sample, 6) == expected
    assert is_perm_closed(expected)
