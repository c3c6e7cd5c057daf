"""正規表現とα-SHUF式の相互変換、および有限置換閉言語からの式構成。"""

from __future__ import annotations

import logging

from core.alphabet import Word
from core.language import FiniteLanguage
from core.shuffle import is_perm_closed, parikh_counts
from expr.ast import Atom, Concat, Expr, IterShuffle, Shuffle, Star, letterized_shuffle, map_expr, union_left
from expr.semantics import classify, is_regular, is_shuf
from utils.errors import FlavorError

logger = logging.getLogger(__name__)


# 補助処理
def _letterize_leaf(node: Expr) -> Expr:
    if isinstance(node, Atom) and len(node.word) > 1:
        return letterized_shuffle(node.word)
    return node


def _keep_leaf(node: Expr) -> Expr:
    return node


# メイン処理
def regex_to_alpha_shuf(expr: Expr) -> Expr:
    """正規表現の連接をシャッフルへ、Kleene閉包を反復シャッフルへ置き換える。

    引数:
        expr: シャッフル系ノードを含まない式。

    戻り値:
        α-SHUF式。任意のnでeval_upto(結果, n) = perm(eval_upto(expr, n))。

    例外:
        FlavorError: シャッフル系ノードを含む場合。

    補足:
        長さ2以上のAtomは単記号のシャッフルへ分解する。
    """
    if not is_regular(expr):
        raise FlavorError(f"正規表現ではありません。flavor={classify(expr).value}")

    return map_expr(expr, _letterize_leaf, {Concat: Shuffle, Star: IterShuffle})


def alpha_shuf_to_regex(expr: Expr) -> Expr:
    """α-SHUF式(またはSHUF式)のシャッフルを連接へ、反復シャッフルをKleene閉包へ置き換える。"""
    if not is_shuf(expr):
        raise FlavorError(f"SHUF式ではありません。flavor={classify(expr).value}")

    return map_expr(expr, _keep_leaf, {Shuffle: Concat, IterShuffle: Star})


def finite_permclosed_to_alpha_shuf(language: FiniteLanguage) -> Expr:
    """有限の置換閉言語を反復シャッフルを含まないα-SHUF式で表す。

    引数:
        language: 置換閉な有限言語。

    戻り値:
        Parikh類ごとの代表語を単記号シャッフルにした式の和。空言語は∅。

    例外:
        ValueError: 置換閉でない場合。
    """
    if not is_perm_closed(language):
        raise ValueError(f"置換閉ではない言語です。size={len(language)}")

    alphabet = language.alphabet
    representatives: list[tuple[str, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for member in language.sorted_members():
        counts = parikh_counts(alphabet, member)
        if counts in seen:
            continue
        seen.add(counts)
        representatives.append(member)

    terms = [letterized_shuffle(Word(alphabet, member)) for member in representatives]
    return union_left(alphabet, terms)
