"""式の種別判定・星の高さ・有界評価を提供する。"""

from __future__ import annotations

import logging
from enum import Enum

from core.language import FiniteLanguage
from core.shuffle import concat_langs, iter_shuffle_upto, shuffle_langs, star_upto
from expr.ast import (
    Atom,
    BinaryExpr,
    Concat,
    EmptySet,
    Epsilon,
    Expr,
    IterShuffle,
    Shuffle,
    Star,
    Union,
    iter_nodes,
)

logger = logging.getLogger(__name__)


class ExprFlavor(Enum):
    """式の種別。"""

    REGULAR = "regular"
    SHUF = "shuf"
    ALPHA_SHUF = "alpha-shuf"
    MIXED = "mixed"


# 補助処理
def is_regular(expr: Expr) -> bool:
    """シャッフル系ノードを含まなければ真。"""
    return not any(isinstance(node, Shuffle | IterShuffle) for node in iter_nodes(expr))


def is_shuf(expr: Expr) -> bool:
    """連接・Kleene閉包ノードを含まなければ真。"""
    return not any(isinstance(node, Concat | Star) for node in iter_nodes(expr))


def is_alpha_shuf(expr: Expr) -> bool:
    """SHUF式で、かつ全Atomが長さ1なら真。"""
    return is_shuf(expr) and all(len(node.word) == 1 for node in iter_nodes(expr) if isinstance(node, Atom))


# メイン処理
def classify(expr: Expr) -> ExprFlavor:
    """式の種別を返す。

    引数:
        expr: 対象の式。

    戻り値:
        ExprFlavor。

    補足:
        複数の種別に当てはまる式(演算子が和集合のみの式など)は
        AlphaShuf、Shuf、Regularの順に最初に当てはまるものを返す。
    """
    if is_alpha_shuf(expr):
        return ExprFlavor.ALPHA_SHUF
    if is_shuf(expr):
        return ExprFlavor.SHUF
    if is_regular(expr):
        return ExprFlavor.REGULAR
    return ExprFlavor.MIXED


def star_height(expr: Expr) -> int:
    """Kleene閉包と反復シャッフルの入れ子の最大深さを返す。"""
    if isinstance(expr, Star | IterShuffle):
        return 1 + star_height(expr.inner)
    if isinstance(expr, BinaryExpr):
        return max(star_height(expr.left), star_height(expr.right))
    return 0


def eval_upto(expr: Expr, max_length: int) -> FiniteLanguage:
    """式の言語を長さ`max_length`以下に切り詰めて返す。

    引数:
        expr: 対象の式。4種の演算子をすべて扱う。
        max_length: 長さ上限。0以上。

    戻り値:
        L(e) ∩ Σ^{≤n}。

    例外:
        ValueError: 長さ上限が負の場合。

    補足:
        全演算子が長さについて単調なので、各ノードで切り詰めても結果は変わらない。
    """
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    memo: dict[int, FiniteLanguage] = {}

    def evaluate(node: Expr) -> FiniteLanguage:
        key = id(node)
        if key in memo:
            return memo[key]

        alphabet = node.alphabet
        if isinstance(node, EmptySet):
            result = FiniteLanguage.empty(alphabet)
        elif isinstance(node, Epsilon):
            result = FiniteLanguage.epsilon(alphabet)
        elif isinstance(node, Atom):
            members = frozenset({node.word.symbols}) if len(node.word) <= max_length else frozenset()
            result = FiniteLanguage(alphabet, members)
        elif isinstance(node, Union):
            result = evaluate(node.left) | evaluate(node.right)
        elif isinstance(node, Concat):
            result = concat_langs(evaluate(node.left), evaluate(node.right), max_length)
        elif isinstance(node, Shuffle):
            result = shuffle_langs(evaluate(node.left), evaluate(node.right), max_length)
        elif isinstance(node, Star):
            result = star_upto(evaluate(node.inner), max_length)
        elif isinstance(node, IterShuffle):
            result = iter_shuffle_upto(evaluate(node.inner), max_length)
        else:
            raise TypeError(f"未対応の式ノードです。node={type(node).__name__}")

        memo[key] = result
        return result

    return evaluate(expr)
