"""EBC₂を固定のGJFAの受理判定へ帰着する。"""

from __future__ import annotations

import logging

from consts.reduction_constants import (
    C_BAR_TOKEN,
    C_TOKEN,
    EBC2_ONE_STATE,
    EBC2_OPEN_STATE,
    EBC2_READ_STATE,
    EBC2_ZERO_STATE,
    ONE_BAR_TOKEN,
    ONE_TOKEN,
    STAR_TOKEN,
    ZERO_BAR_TOKEN,
    ZERO_TOKEN,
)
from core.alphabet import Alphabet, Word
from machine.model import Machine, Rule
from reductions.ebc2 import Ebc2Instance

logger = logging.getLogger(__name__)

EBC2_GJFA_ALPHABET = Alphabet((ZERO_TOKEN, ONE_TOKEN, ZERO_BAR_TOKEN, ONE_BAR_TOKEN, STAR_TOKEN, C_TOKEN, C_BAR_TOKEN))
BAR_OF_BIT = {ZERO_TOKEN: ZERO_BAR_TOKEN, ONE_TOKEN: ONE_BAR_TOKEN}


def _rule(source: str, label: tuple[str, ...], target: str) -> Rule:
    return Rule(source, Word(EBC2_GJFA_ALPHABET, label), target)


def ebc2_fixed_machine() -> Machine:
    """EBC₂を解く固定のGJFAを返す。

    補足:
        qCで⋆cを削除してブロックを1つ開き、qDから
        ⋆ȳ(ブロック側)と⋆y(目標側)を交互に削除して1ビットずつ照合する。
        ⋆c̄を削除するとブロックが閉じてqCへ戻る。qCを訪れる間に次の2つが成り立つ。
        - 削除されるブロックはちょうど1つで、その全記号が削除される。
        - 目標側からは残りの先頭からそのブロックと同じビット列が削除される。
    """
    rules = (
        _rule(EBC2_OPEN_STATE, (STAR_TOKEN, C_TOKEN), EBC2_READ_STATE),
        _rule(EBC2_READ_STATE, (STAR_TOKEN, ZERO_BAR_TOKEN), EBC2_ZERO_STATE),
        _rule(EBC2_ZERO_STATE, (STAR_TOKEN, ZERO_TOKEN), EBC2_READ_STATE),
        _rule(EBC2_READ_STATE, (STAR_TOKEN, ONE_BAR_TOKEN), EBC2_ONE_STATE),
        _rule(EBC2_ONE_STATE, (STAR_TOKEN, ONE_TOKEN), EBC2_READ_STATE),
        _rule(EBC2_READ_STATE, (STAR_TOKEN, C_BAR_TOKEN), EBC2_OPEN_STATE),
    )
    states = (EBC2_OPEN_STATE, EBC2_READ_STATE, EBC2_ZERO_STATE, EBC2_ONE_STATE)
    return Machine(EBC2_GJFA_ALPHABET, states, rules, EBC2_OPEN_STATE, frozenset({EBC2_OPEN_STATE}))


def ebc2_to_word(instance: Ebc2Instance) -> Word:
    """問題例を語 w = ⋆^{|v|} v t₁ … t_k (t_i = ⋆^{|u_i|+2} c ū_i c̄) へ写す。"""
    symbols = [STAR_TOKEN] * len(instance.target)
    symbols.extend(instance.target.symbols)
    for block in instance.blocks:
        symbols.extend([STAR_TOKEN] * (len(block) + 2))
        symbols.append(C_TOKEN)
        symbols.extend(BAR_OF_BIT[bit] for bit in block.symbols)
        symbols.append(C_BAR_TOKEN)
    return Word(EBC2_GJFA_ALPHABET, tuple(symbols))
