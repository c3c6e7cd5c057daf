"""α-SHUF式と半線形集合の相互変換(星の高さ1の和・シャッフル標準形)を提供する。"""

from __future__ import annotations

import logging

from consts.semilinear_constants import DEFAULT_STAR_COMPONENT_CAP
from core.alphabet import Alphabet, ParikhVector
from core.shuffle import parikh_counts
from expr.ast import (
    Atom,
    EmptySet,
    Epsilon,
    Expr,
    IterShuffle,
    Shuffle,
    Union,
    letterized_shuffle,
    union_left,
)
from expr.semantics import classify, is_shuf
from expr.transforms import regex_to_alpha_shuf
from machine.acceptance import require_finite_machine
from machine.elimination import machine_to_regex
from machine.model import Machine
from semilinear.model import SemilinearSet, Vector
from semilinear.operations import sl_simplify, sl_star, sl_sum, sl_union
from utils.errors import FlavorError

logger = logging.getLogger(__name__)


# 補助処理
def _canonical_shuffle(alphabet: Alphabet, vector: Vector) -> Expr:
    """ベクトルを持つ正準語(記号をアルファベット順に並べた語)の単記号シャッフル。"""
    return letterized_shuffle(ParikhVector(alphabet, vector).canonical_word())


# メイン処理
def alpha_shuf_to_semilinear(expr: Expr, star_cap: int = DEFAULT_STAR_COMPONENT_CAP) -> SemilinearSet:
    """α-SHUF式(またはSHUF式)の言語のParikh像を半線形集合へ変換する。

    引数:
        expr: 連接・Kleene閉包を含まない式。
        star_cap: 反復シャッフルの展開で許容する成分数の上限。

    戻り値:
        sl_member(結果, ψ(w)) ⟺ w ∈ perm(L(expr))となる半線形集合。

    例外:
        FlavorError: 連接・Kleene閉包を含む場合。
        ResourceLimitError: 反復シャッフルの展開が上限を超える場合。

    補足:
        ∅は空集合、εは{0⃗}、Atomは単元集合、和は成分の和、シャッフルはMinkowski和、
        反復シャッフルは閉包に写す。各段でsl_simplifyにより成分を減らす。
    """
    if not is_shuf(expr):
        raise FlavorError(f"α-SHUF式またはSHUF式ではありません。flavor={classify(expr).value}")

    alphabet = expr.alphabet
    dimension = len(alphabet)

    def compile_node(node: Expr) -> SemilinearSet:
        if isinstance(node, EmptySet):
            return SemilinearSet.empty(dimension)
        if isinstance(node, Epsilon):
            return SemilinearSet.zero(dimension)
        if isinstance(node, Atom):
            return SemilinearSet.singleton(parikh_counts(alphabet, node.word.symbols))
        if isinstance(node, Union):
            return sl_simplify(sl_union(compile_node(node.left), compile_node(node.right)))
        if isinstance(node, Shuffle):
            return sl_simplify(sl_sum(compile_node(node.left), compile_node(node.right)))
        if isinstance(node, IterShuffle):
            return sl_star(compile_node(node.inner), cap=star_cap, simplify=True)
        raise TypeError(f"未対応の式ノードです。node={type(node).__name__}")

    return compile_node(expr)


def semilinear_to_normalform(semilinear: SemilinearSet, alphabet: Alphabet) -> Expr:
    """半線形集合を星の高さ1以下の標準形α-SHUF式へ変換する。

    引数:
        semilinear: 半線形集合。
        alphabet: 座標順を与えるアルファベット。

    戻り値:
        成分L(v; v₁…v_m)ごとの項 F ⧢ (G₁ + … + G_m)^{⧢,*} の和。
        Fはvの正準語、Gᵢはvᵢの正準語の単記号シャッフル。vが0⃗なら項は反復シャッフルだけ、
        周期がなければFだけとなる。空集合は∅。
    """
    if len(alphabet) != semilinear.dimension:
        raise ValueError(f"アルファベットと次元が一致しません。alphabet={alphabet.symbols} 次元={semilinear.dimension}")

    terms: list[Expr] = []
    for component in semilinear.components:
        fixed = _canonical_shuffle(alphabet, component.base)
        if not component.periods:
            terms.append(fixed)
            continue
        generators = union_left(alphabet, [_canonical_shuffle(alphabet, period) for period in component.periods])
        iterated = IterShuffle(generators)
        terms.append(iterated if isinstance(fixed, Epsilon) else Shuffle(fixed, iterated))
    return union_left(alphabet, terms)


def nfa_to_semilinear(machine: Machine, star_cap: int = DEFAULT_STAR_COMPONENT_CAP) -> SemilinearSet:
    """有限機械のJFA言語のParikh像を求める。

    引数:
        machine: 有限機械。
        star_cap: 反復シャッフルの展開で許容する成分数の上限。

    戻り値:
        sl_member(結果, ψ(w)) ⟺ jfa_accepts(machine, w)となる半線形集合。

    例外:
        MachineKindError: 一般機械を渡した場合。

    補足:
        状態除去で正規表現を求め、α-SHUF式へ変換してからコンパイルする。
    """
    require_finite_machine(machine, "nfa_to_semilinear")
    logger.info("開始: 機械のParikh像を計算します。states=%s rules=%s", len(machine.states), len(machine.rules))
    result = alpha_shuf_to_semilinear(regex_to_alpha_shuf(machine_to_regex(machine)), star_cap)
    logger.info("終了: 機械のParikh像を計算しました。components=%s", len(result))
    return result
