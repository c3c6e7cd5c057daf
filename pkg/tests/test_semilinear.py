"""線形・半線形集合の演算と、α-SHUF式・機械との相互変換のテスト。"""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers, tuples

from core.alphabet import Alphabet, ParikhVector
from core.language import words_upto
from core.shuffle import parikh, shuffle_langs
from expr.ast import Epsilon, Shuffle, Union
from expr.generators import random_alpha_shuf
from expr.parser import parse_expr
from expr.semantics import eval_upto, star_height
from machine.acceptance import jfa_accepts
from machine.generators import random_machine
from machine.model import Machine
from semilinear.conversion import alpha_shuf_to_semilinear, nfa_to_semilinear, semilinear_to_normalform
from semilinear.model import LinearSet, SemilinearSet
from semilinear.operations import (
    find_bounded_difference,
    is_periodic_form,
    iter_box,
    sl_bounded_equal,
    sl_member,
    sl_prune,
    sl_simplify,
    sl_star,
    sl_sum,
    sl_union,
)
from semilinear.semilinear_file import parse_semilinear, print_semilinear
from utils.errors import FlavorError, MachineFormatError, ResourceLimitError

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))
ABCD = Alphabet(("a", "b", "c", "d"))

DIAGONAL = SemilinearSet(2, (LinearSet((0, 0), ((1, 1),)),))
EQUAL_COUNTS = SemilinearSet(3, (LinearSet((0, 0, 0), ((1, 1, 1),)),))

vectors_2d = tuples(integers(min_value=0, max_value=5), integers(min_value=0, max_value=5))


def all_equal(vector) -> bool:
    return len(set(vector)) == 1


###################################################################################################
# 型と所属判定
###################################################################################################


def test_linear_set_drops_zero_and_duplicate_periods():
    component = LinearSet((1, 0), ((0, 1), (0, 0), (0, 1)))
    assert component.periods == ((0, 1),)


def test_vectors_must_share_dimension_and_be_non_negative():
    with pytest.raises(ValueError):
        LinearSet((1, 0), ((1,),))
    with pytest.raises(ValueError):
        LinearSet((-1, 0))
    with pytest.raises(ValueError):
        SemilinearSet(3, (LinearSet((0, 0)),))


def test_components_are_sorted_and_deduplicated():
    semilinear = SemilinearSet(1, (LinearSet((2,)), LinearSet((1,)), LinearSet((2,))))
    assert [component.base for component in semilinear] == [(1,), (2,)]


def test_membership_examples():
    assert sl_member(DIAGONAL, (3, 3))
    assert not sl_member(DIAGONAL, (2, 3))
    assert sl_member(EQUAL_COUNTS, ParikhVector(ABC, (2, 2, 2)))


def test_membership_uses_combined_periods():
    semilinear = SemilinearSet(2, (LinearSet((1, 0), ((2, 0), (0, 3), (1, 1))),))
    assert sl_member(semilinear, (4, 4))
    assert not sl_member(semilinear, (0, 0))
    assert not sl_member(semilinear, (2, 0))


def test_membership_requires_matching_dimension():
    with pytest.raises(ValueError):
        sl_member(DIAGONAL, (1, 1, 1))


###################################################################################################
# 和・Minkowski和・閉包
###################################################################################################


def test_union_with_empty_set_is_identity():
    assert sl_union(SemilinearSet.empty(2), DIAGONAL) == DIAGONAL
    assert len(sl_union(SemilinearSet.singleton((1, 0)), SemilinearSet.singleton((0, 1)))) == 2


def test_union_requires_matching_dimension():
    with pytest.raises(ValueError):
        sl_union(DIAGONAL, EQUAL_COUNTS)


@given(vectors_2d)
@settings(max_examples=50, deadline=None)
def test_union_membership_distributes(vector):
    other = SemilinearSet(2, (LinearSet((1, 0), ((2, 0),)),))
    union = sl_union(DIAGONAL, other)
    assert sl_member(union, vector) == (sl_member(DIAGONAL, vector) or sl_member(other, vector))


def test_sum_of_singletons_and_zero():
    total = sl_sum(SemilinearSet.singleton((1, 0)), SemilinearSet.singleton((0, 1)))
    assert total == SemilinearSet.singleton((1, 1))
    assert sl_sum(DIAGONAL, SemilinearSet.zero(2)) == DIAGONAL


def test_sum_matches_parikh_image_of_shuffle():
    left = eval_upto(parse_expr("a,b", ABCD), 2)
    right = eval_upto(parse_expr("c,d", ABCD), 2)
    images = {parikh(member).counts for member in shuffle_langs(left, right)}
    total = sl_sum(SemilinearSet.singleton((1, 1, 0, 0)), SemilinearSet.singleton((0, 0, 1, 1)))
    assert images == {(1, 1, 1, 1)}
    assert all(sl_member(total, vector) == (vector in images) for vector in iter_box((1, 1, 1, 1)))


def test_star_examples():
    assert sl_star(SemilinearSet.zero(2)) == SemilinearSet.zero(2)
    starred = sl_star(SemilinearSet.singleton((1, 1, 1)))
    assert all(sl_member(starred, vector) == all_equal(vector) for vector in iter_box((4, 4, 4)))
    units = sl_union(SemilinearSet.singleton((1, 0)), SemilinearSet.singleton((0, 1)))
    assert all(sl_member(sl_star(units), vector) for vector in iter_box((6, 6)))


def test_star_of_empty_set_is_zero():
    assert sl_bounded_equal(sl_star(SemilinearSet.empty(2)), SemilinearSet.zero(2), 4)


def test_star_expansion_is_capped():
    generators = SemilinearSet(2, tuple(LinearSet((k, 1), ((1, 0),)) for k in range(1, 6)))
    with pytest.raises(ResourceLimitError) as excinfo:
        sl_star(generators, cap=8)
    assert (excinfo.value.cap_name, excinfo.value.limit) == ("star_components", 8)
    assert excinfo.value.actual > 8


@pytest.mark.parametrize("simplify", [False, True])
def test_star_is_idempotent_within_box(simplify):
    semilinear = sl_union(SemilinearSet.singleton((2, 0)), SemilinearSet(2, (LinearSet((1, 1), ((0, 2),)),)))
    once = sl_star(semilinear, simplify=simplify)
    assert sl_bounded_equal(sl_star(once, simplify=simplify), once, 6)


def test_simplify_keeps_the_set():
    semilinear = SemilinearSet(
        1, (LinearSet((0,)), LinearSet((1,), ((1,),)), LinearSet((2,), ((1,),)), LinearSet((3,)))
    )
    simplified = sl_simplify(semilinear)
    assert len(simplified) == 1
    assert sl_bounded_equal(simplified, semilinear, 10)
    assert len(sl_prune(semilinear)) == 2


###################################################################################################
# 有界比較と周期形
###################################################################################################


def test_bounded_equality():
    assert sl_bounded_equal(DIAGONAL, DIAGONAL, 5)
    assert not sl_bounded_equal(SemilinearSet.zero(1), SemilinearSet.empty(1), (1,))
    assert find_bounded_difference(SemilinearSet.zero(1), SemilinearSet.empty(1), 1) == (0,)
    with pytest.raises(ValueError):
        sl_bounded_equal(DIAGONAL, DIAGONAL, (1, 1, 1))


def test_periodic_form_examples():
    periodic, decomposition = is_periodic_form(SemilinearSet(2, (LinearSet((1, 0), ((2, 0), (0, 3))),)))
    assert periodic
    assert decomposition[0].period_of(0) == 2
    assert decomposition[0].period_of(1) == 3
    assert decomposition[0].to_linear() == LinearSet((1, 0), ((2, 0), (0, 3)))
    assert is_periodic_form(EQUAL_COUNTS) == (False, None)
    assert is_periodic_form(SemilinearSet.empty(2)) == (True, [])


def test_periodic_form_rejects_two_periods_on_one_coordinate():
    assert not is_periodic_form(SemilinearSet(1, (LinearSet((0,), ((2,), (3,))),)))[0]


###################################################################################################
# 半線形集合ファイル
###################################################################################################


def test_semilinear_file_round_trip():
    text = "alphabet: a b c\nbase: 1 0 2 ; periods: (1 1 0) (0 0 3)\nbase: 0 0 0\n"
    alphabet, semilinear = parse_semilinear(text)
    assert alphabet == ABC
    assert semilinear.components[1] == LinearSet((1, 0, 2), ((1, 1, 0), (0, 0, 3)))
    assert print_semilinear(semilinear, alphabet) == (
        "alphabet: a b c\nbase: 0 0 0 ; periods:\nbase: 1 0 2 ; periods: (0 0 3) (1 1 0)\n"
    )
    assert parse_semilinear(print_semilinear(semilinear, alphabet)) == (alphabet, semilinear)


@pytest.mark.parametrize(
    "text",
    [
        "base: 1 0\n",
        "alphabet: a b\nbase: 1\n",
        "alphabet: a b\nbase: 1 x\n",
        "alphabet: a b\nbase: 1 -1\n",
        "alphabet: a b\nbase: 1 0 ; gaps: (1 0)\n",
        "alphabet: a b\nbase: 1 0 ; periods: (1 0) junk\n",
        "alphabet: a b\nvector: 1 0\n",
        "# empty\n",
    ],
)
def test_semilinear_file_errors(text):
    with pytest.raises(MachineFormatError):
        parse_semilinear(text)


###################################################################################################
# 式・機械との変換
###################################################################################################


def test_compile_examples():
    assert sl_bounded_equal(alpha_shuf_to_semilinear(parse_expr("(a&b&c)&*", ABC)), EQUAL_COUNTS, 4)
    assert alpha_shuf_to_semilinear(parse_expr("#e", ABC)) == SemilinearSet.zero(3)
    assert alpha_shuf_to_semilinear(parse_expr("#E", ABC)).is_empty()


def test_compile_shuffle_of_words_matches_bounded_evaluation():
    expr = parse_expr("(a,b&c,d)&*", ABCD)
    images = {parikh(member).counts for member in eval_upto(expr, 8)}
    semilinear = alpha_shuf_to_semilinear(expr)
    assert all(sl_member(semilinear, vector) == (vector in images) for vector in iter_box((2, 2, 2, 2)))


def test_compile_rejects_regular_operators():
    with pytest.raises(FlavorError):
        alpha_shuf_to_semilinear(parse_expr("a.b", AB))


def test_normal_form_examples():
    assert semilinear_to_normalform(SemilinearSet.zero(3), ABC) == Epsilon(ABC)
    normal_form = semilinear_to_normalform(EQUAL_COUNTS, ABC)
    assert star_height(normal_form) == 1
    assert sl_bounded_equal(alpha_shuf_to_semilinear(normal_form), EQUAL_COUNTS, 3)
    two_terms = semilinear_to_normalform(sl_union(SemilinearSet.singleton((1, 0)), DIAGONAL), AB)
    assert isinstance(two_terms, Union)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=25, deadline=None)
def test_normal_form_round_trip(seed):
    expr = random_alpha_shuf(random.Random(seed), ABC, depth=3)
    semilinear = alpha_shuf_to_semilinear(expr)
    normal_form = semilinear_to_normalform(semilinear, ABC)
    assert star_height(normal_form) <= 1
    assert sl_bounded_equal(alpha_shuf_to_semilinear(normal_form), semilinear, 4)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=25, deadline=None)
def test_shuffle_compiles_to_sum(seed):
    rng = random.Random(seed)
    first = random_alpha_shuf(rng, AB, depth=2)
    second = random_alpha_shuf(rng, AB, depth=2)
    images = {parikh(member).counts for member in eval_upto(Shuffle(first, second), 4)}
    total = sl_sum(alpha_shuf_to_semilinear(first), alpha_shuf_to_semilinear(second))
    for vector in iter_box((4, 4)):
        if sum(vector) <= 4:
            assert sl_member(total, vector) == (vector in images)


def test_machine_image_examples(abc_loop):
    assert sl_bounded_equal(nfa_to_semilinear(abc_loop), EQUAL_COUNTS, 4)
    epsilon_only = Machine(AB, ("s",), (), "s", frozenset({"s"}))
    assert sl_bounded_equal(nfa_to_semilinear(epsilon_only), SemilinearSet.zero(2), 4)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=50, deadline=None)
def test_machine_image_agrees_with_jfa_acceptance(seed):
    rng = random.Random(seed)
    machine = random_machine(rng, ABC, rng.randint(1, 3))
    semilinear = nfa_to_semilinear(machine)
    for member in words_upto(ABC, 4):
        assert sl_member(semilinear, parikh(member)) == jfa_accepts(machine, member)
