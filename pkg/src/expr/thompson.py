"""式からThompson構成で有限機械を作る。シャッフルは連接、反復シャッフルはKleene閉包として読む。"""

from __future__ import annotations

import logging

from consts.machine_constants import THOMPSON_STATE_PREFIX
from core.alphabet import Word
from expr.ast import Atom, BinaryExpr, EmptySet, Epsilon, Expr, IterShuffle, Star, Union
from machine.model import Machine, Rule

logger = logging.getLogger(__name__)


class _ThompsonBuilder:
    def __init__(self, expr: Expr) -> None:
        self.alphabet = expr.alphabet
        self.states: list[str] = []
        self.rules: list[Rule] = []

    def new_state(self) -> str:
        state = f"{THOMPSON_STATE_PREFIX}{len(self.states)}"
        self.states.append(state)
        return state

    def link(self, source: str, symbols: tuple[str, ...], target: str) -> None:
        self.rules.append(Rule(source, Word(self.alphabet, symbols), target))

    def build(self, expr: Expr) -> tuple[str, str]:
        """部分式の(入口, 出口)を返す。"""
        if isinstance(expr, Union):
            start = self.new_state()
            left_start, left_end = self.build(expr.left)
            right_start, right_end = self.build(expr.right)
            end = self.new_state()
            self.link(start, (), left_start)
            self.link(start, (), right_start)
            self.link(left_end, (), end)
            self.link(right_end, (), end)
            return start, end

        if isinstance(expr, BinaryExpr):
            left_start, left_end = self.build(expr.left)
            right_start, right_end = self.build(expr.right)
            self.link(left_end, (), right_start)
            return left_start, right_end

        if isinstance(expr, Star | IterShuffle):
            start = self.new_state()
            inner_start, inner_end = self.build(expr.inner)
            end = self.new_state()
            self.link(start, (), inner_start)
            self.link(start, (), end)
            self.link(inner_end, (), inner_start)
            self.link(inner_end, (), end)
            return start, end

        start = self.new_state()
        if isinstance(expr, EmptySet):
            return start, self.new_state()
        if isinstance(expr, Epsilon):
            end = self.new_state()
            self.link(start, (), end)
            return start, end
        if isinstance(expr, Atom):
            current = start
            for symbol in expr.word.symbols:
                following = self.new_state()
                self.link(current, (symbol,), following)
                current = following
            return start, current
        raise TypeError(f"未対応の式ノードです。node={type(expr).__name__}")


def thompson_machine(expr: Expr) -> Machine:
    """式から有限機械を作る。

    引数:
        expr: 任意の式。

    戻り値:
        L_FA = L(e′)となる有限機械。e′はeのシャッフルを連接、反復シャッフルをKleene閉包に読み替えた式。
        したがってL_JFAはperm(L(e′))で、eがα-SHUF式ならL(e)に等しい。
    """
    builder = _ThompsonBuilder(expr)
    start, end = builder.build(expr)
    machine = Machine(builder.alphabet, tuple(builder.states), tuple(builder.rules), start, frozenset({end}))
    logger.debug("完了: Thompson構成で機械を作成しました。states=%s rules=%s", len(machine.states), len(machine.rules))
    return machine
