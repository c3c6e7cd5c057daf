"""状態除去法による機械から正規表現への変換を提供する。"""

from __future__ import annotations

import logging

from core.alphabet import Alphabet, Word
from expr.ast import Atom, Concat, EmptySet, Epsilon, Expr, Star, Union
from machine.model import Machine

logger = logging.getLogger(__name__)

_OUTSIDE_START = None
_OUTSIDE_FINAL = ""


# 補助処理
def union_simplified(left: Expr, right: Expr) -> Expr:
    """∅を単位元として和を作る。同一の式はまとめる。"""
    if isinstance(left, EmptySet):
        return right
    if isinstance(right, EmptySet) or left == right:
        return left
    return Union(left, right)


def concat_simplified(left: Expr, right: Expr) -> Expr:
    """∅を零元、εを単位元として連接を作る。"""
    if isinstance(left, EmptySet) or isinstance(right, EmptySet):
        return EmptySet(left.alphabet)
    if isinstance(left, Epsilon):
        return right
    if isinstance(right, Epsilon):
        return left
    return Concat(left, right)


def star_simplified(inner: Expr) -> Expr:
    """∅*とε*をεに、二重の閉包を1つにまとめる。"""
    if isinstance(inner, EmptySet | Epsilon):
        return Epsilon(inner.alphabet)
    if isinstance(inner, Star):
        return inner
    return Star(inner)


def _label_expr(alphabet: Alphabet, symbols: tuple[str, ...]) -> Expr:
    if not symbols:
        return Epsilon(alphabet)
    return Atom(Word(alphabet, symbols))


# メイン処理
def machine_to_regex(machine: Machine) -> Expr:
    """機械のFA言語を表す正規表現を状態除去法で求める。

    引数:
        machine: 任意の(一般)有限機械。長さ2以上のラベルはそのままAtomになる。

    戻り値:
        L(結果) = L_FA(machine)となる正規表現。

    補足:
        外部の開始点と終了点を加え、状態を宣言順に1つずつ除去する。
        状態kを除去するときは各p, qについてR(p,q) += R(p,k)·R(k,k)*·R(k,q)とする。
    """
    alphabet = machine.alphabet
    edges: dict[tuple[str | None, str], Expr] = {}

    def add_edge(source: str | None, target: str, expr: Expr) -> None:
        key = (source, target)
        edges[key] = union_simplified(edges.get(key, EmptySet(alphabet)), expr)

    add_edge(_OUTSIDE_START, machine.start, Epsilon(alphabet))
    for rule in machine.rules:
        add_edge(rule.source, rule.target, _label_expr(alphabet, rule.label.symbols))
    for state in machine.states:
        if state in machine.finals:
            add_edge(state, _OUTSIDE_FINAL, Epsilon(alphabet))

    for state in machine.states:
        loop = star_simplified(edges.pop((state, state), EmptySet(alphabet)))
        incoming = [(source, expr) for (source, target), expr in edges.items() if target == state]
        outgoing = [(target, expr) for (source, target), expr in edges.items() if source == state]
        for source, _ in incoming:
            del edges[(source, state)]
        for target, _ in outgoing:
            del edges[(state, target)]
        for source, before in incoming:
            for target, after in outgoing:
                add_edge(source, target, concat_simplified(concat_simplified(before, loop), after))

    result = edges.get((_OUTSIDE_START, _OUTSIDE_FINAL), EmptySet(alphabet))
    logger.debug("完了: 状態除去で正規表現を求めました。states=%s", len(machine.states))
    return result
