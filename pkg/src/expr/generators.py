"""性質検査用のランダム式生成を提供する。乱数は呼び出し側の`random.Random`で固定する。"""

from __future__ import annotations

import random
from collections.abc import Callable

from consts.expr_constants import RANDOM_EXPR_DEFAULT_DEPTH
from core.alphabet import Alphabet, Word
from expr.ast import Atom, Concat, EmptySet, Epsilon, Expr, IterShuffle, Shuffle, Star, Union

_LEAF_PROBABILITY = 0.3
_BinaryFactory = Callable[[Expr, Expr], Expr]
_UnaryFactory = Callable[[Expr], Expr]


# 補助処理
def _random_leaf(rng: random.Random, alphabet: Alphabet, max_atom_length: int) -> Expr:
    roll = rng.random()
    if roll < 0.05:
        return EmptySet(alphabet)
    if roll < 0.15:
        return Epsilon(alphabet)
    length = rng.randint(1, max_atom_length)
    return Atom(Word(alphabet, tuple(rng.choice(alphabet.symbols) for _ in range(length))))


def _random_tree(
    rng: random.Random,
    alphabet: Alphabet,
    depth: int,
    binary: tuple[_BinaryFactory, ...],
    unary: tuple[_UnaryFactory, ...],
    max_atom_length: int,
) -> Expr:
    if depth <= 0 or rng.random() < _LEAF_PROBABILITY:
        return _random_leaf(rng, alphabet, max_atom_length)

    operators: list[_BinaryFactory | _UnaryFactory] = [*binary, *unary]
    operator = rng.choice(operators)
    if operator in unary:
        return operator(_random_tree(rng, alphabet, depth - 1, binary, unary, max_atom_length))
    left = _random_tree(rng, alphabet, depth - 1, binary, unary, max_atom_length)
    right = _random_tree(rng, alphabet, depth - 1, binary, unary, max_atom_length)
    return operator(left, right)


# メイン処理
def random_regex(
    rng: random.Random, alphabet: Alphabet, depth: int = RANDOM_EXPR_DEFAULT_DEPTH, max_atom_length: int = 2
) -> Expr:
    """和・連接・Kleene閉包だけからなるランダムな正規表現を返す。"""
    return _random_tree(rng, alphabet, depth, (Union, Concat), (Star,), max_atom_length)


def random_alpha_shuf(rng: random.Random, alphabet: Alphabet, depth: int = RANDOM_EXPR_DEFAULT_DEPTH) -> Expr:
    """和・シャッフル・反復シャッフルと単記号Atomだけからなるランダムなα-SHUF式を返す。"""
    return _random_tree(rng, alphabet, depth, (Union, Shuffle), (IterShuffle,), 1)


def random_expr(
    rng: random.Random, alphabet: Alphabet, depth: int = RANDOM_EXPR_DEFAULT_DEPTH, max_atom_length: int = 2
) -> Expr:
    """4種の演算子をすべて使うランダムな式を返す。"""
    return _random_tree(rng, alphabet, depth, (Union, Concat, Shuffle), (Star, IterShuffle), max_atom_length)
