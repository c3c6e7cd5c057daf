"""正則言語の可換性(置換閉性)の厳密判定を提供する。"""

from __future__ import annotations

import itertools
import logging

from core.alphabet import Word
from deciders.verdict import CommutativityWitness, Verdict
from machine.acceptance import require_finite_machine
from machine.dfa import access_words, distinguishing_suffix, minimize, run_dfa, transition_table
from machine.model import Machine

logger = logging.getLogger(__name__)


# メイン処理
def is_commutative_regular(machine: Machine) -> Verdict:
    """L_FA(machine)が可換(置換閉)か厳密に判定する。

    引数:
        machine: 有限機械。

    戻り値:
        最小DFAの全到達状態qと全記号対(a,b)でδ(q,ab) = δ(q,ba)ならYes。
        そうでなければNoで、(q,a,b)とabをbaに入れ替えた語の組を反例に持つ。

    例外:
        MachineKindError: 一般機械を渡した場合。

    補足:
        隣接互換が全置換を生成し、最小DFAではNerode同値な状態は等しいので判定は厳密。
    """
    require_finite_machine(machine, "is_commutative_regular")
    logger.info("開始: 可換性を判定します。states=%s", len(machine.states))

    dfa = minimize(machine)
    table = transition_table(dfa)
    accesses = access_words(dfa)
    symbols = dfa.alphabet.symbols

    for state in dfa.states:
        for first, second in itertools.combinations(symbols, 2):
            forward = run_dfa(table, state, (first, second))
            backward = run_dfa(table, state, (second, first))
            if forward == backward:
                continue

            suffix = distinguishing_suffix(dfa, forward, backward)
            if suffix is None:
                raise RuntimeError("最小DFAに同値な異なる状態があります。")
            prefix = accesses[state]
            forward_word = Word(dfa.alphabet, prefix + (first, second) + suffix)
            backward_word = Word(dfa.alphabet, prefix + (second, first) + suffix)
            forward_accepted = run_dfa(table, dfa.start, forward_word.symbols) in dfa.finals
            accepted, rejected = (forward_word, backward_word) if forward_accepted else (backward_word, forward_word)
            witness = CommutativityWitness(state, first, second, accepted, rejected)
            logger.info("終了: 非可換と判定しました。%s", witness)
            return Verdict.no(witness)

    logger.info("終了: 可換と判定しました。minimal_states=%s", len(dfa.states))
    return Verdict.yes()


def jfa_membership_of_regular(machine: Machine) -> Verdict:
    """L_FA(machine) ∈ JFA ∩ REG を判定する。正則言語ではJFA言語であることと可換性が同値。"""
    return is_commutative_regular(machine)
