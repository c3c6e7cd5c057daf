"""3SATを有限機械のJFA受理判定へ帰着する。"""

from __future__ import annotations

import logging

from consts.reduction_constants import FALSE_SUFFIX, SAT_JFA_CLAUSE_SYMBOL_PREFIX, SAT_JFA_INITIAL_STATE, TRUE_SUFFIX
from core.alphabet import Alphabet, Word
from machine.model import Machine, Rule
from reductions.cnf import CnfFormula

logger = logging.getLogger(__name__)


def _assignment_state(variable: int, value: bool) -> str:
    return f"q{variable}{TRUE_SUFFIX if value else FALSE_SUFFIX}"


def sat_to_jfa(formula: CnfFormula) -> tuple[Machine, Word]:
    """論理式を表す有限機械と語c₁c₂…c_mを返す。

    引数:
        formula: 対象の論理式。

    戻り値:
        (機械M, 語w)。jfa_accepts(M, w)はφが充足可能なときに限り真。

    補足:
        q₀から各変数の真偽を表す状態q_i^T / q_i^Fをε規則で順に選ぶ。
        q_i^Tには x_i を含む節の記号、q_i^Fには ¬x_i を含む節の記号の自己ループを付ける。
        受理状態はq_n^Tとq_n^Fで、状態数は2n+1。
    """
    alphabet = Alphabet(tuple(f"{SAT_JFA_CLAUSE_SYMBOL_PREFIX}{j}" for j in range(1, formula.num_clauses + 1)))
    epsilon = Word(alphabet)

    states = [SAT_JFA_INITIAL_STATE]
    rules: list[Rule] = []
    previous = [SAT_JFA_INITIAL_STATE]
    for variable in range(1, formula.num_vars + 1):
        layer = [_assignment_state(variable, True), _assignment_state(variable, False)]
        states.extend(layer)
        rules.extend(Rule(source, epsilon, target) for source in previous for target in layer)
        for value, state in zip((True, False), layer, strict=True):
            for symbol, clause in zip(alphabet.symbols, formula.clauses, strict=True):
                if any(literal.variable == variable and literal.positive is value for literal in clause):
                    rules.append(Rule(state, Word(alphabet, (symbol,)), state))
        previous = layer

    machine = Machine(alphabet, tuple(states), tuple(rules), SAT_JFA_INITIAL_STATE, frozenset(previous))
    logger.debug("完了: 3SAT→JFAの機械を構成しました。states=%s rules=%s", len(states), len(rules))
    return machine, Word(alphabet, alphabet.symbols)
