"""帰着の出力(機械と語)を二値アルファベット上へ移す。"""

from __future__ import annotations

import logging

from core.alphabet import Word
from machine.model import Machine
from machine.operations import Homomorphism, apply_homomorphism, binary_encode_gjfa

logger = logging.getLogger(__name__)


def length_factor(table: Homomorphism) -> int:
    """準同型による語長の倍率の上限(最長の像の長さ)。"""
    return max((len(image) for image in table.values()), default=0)


def binary_wrap(machine: Machine, word: Word) -> tuple[Machine, Word]:
    """機械のラベルと語に同じ準同型hを適用する。

    引数:
        machine: 任意の(一般)有限機械。
        word: 機械と同じアルファベット上の語。

    戻り値:
        (符号化した機械M′, h(w))。w ∈ L_GJFA(M) ⟺ h(w) ∈ L_GJFA(M′)。
        i番目の記号の像は 1 0^i 1 なので |h(w)| ≤ (|Σ|+2)|w|。
    """
    machine.alphabet.require_same(word.alphabet)
    encoded_machine, table = binary_encode_gjfa(machine)
    encoded_word = apply_homomorphism(word, table)
    logger.debug(
        "完了: 二値符号化しました。length=%s encoded_length=%s factor=%s",
        len(word),
        len(encoded_word),
        length_factor(table),
    )
    return encoded_machine, encoded_word
