"""二値完全ブロック被覆(EBC₂)の問題例、入出力、全探索オラクルを提供する。"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement

from consts.alphabet_constants import EPSILON_LITERAL, LINE_SEPARATOR
from consts.machine_constants import KEY_SEPARATOR
from consts.reduction_constants import DEFAULT_EBC2_BLOCKS_CAP, EBC2_BLOCK_KEY, EBC2_TARGET_KEY
from core.alphabet import Word
from core.language import iter_words_upto
from core.literals import strip_comment
from machine.operations import BINARY_ALPHABET
from utils.errors import CapExceededError, MachineFormatError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ebc2Instance:
    """ブロックu₁…u_kを並べ替えて連接し目標vと一致させられるかを問う問題例。"""

    target: Word
    blocks: tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(self.blocks))
        BINARY_ALPHABET.require_same(self.target.alphabet)
        for block in self.blocks:
            BINARY_ALPHABET.require_same(block.alphabet)

    @classmethod
    def from_bits(cls, target: str, blocks: tuple[str, ...] | list[str] = ()) -> Ebc2Instance:
        """`"010"`のようなビット文字列から問題例を作る。"""
        return cls(_bits_to_word(target), tuple(_bits_to_word(block) for block in blocks))


@dataclass(frozen=True)
class Ebc2Result:
    """`order`はブロック番号(0始まり)を連接順に並べたもの。"""

    exists: bool
    order: tuple[int, ...] | None = None


# 補助処理
def _bits_to_word(bits: str) -> Word:
    if bits == EPSILON_LITERAL:
        return Word(BINARY_ALPHABET)
    return Word(BINARY_ALPHABET, tuple(bits))


def _word_to_bits(word: Word) -> str:
    return "".join(word.symbols) if word.symbols else EPSILON_LITERAL


# メイン処理
def brute_ebc2(instance: Ebc2Instance, cap: int = DEFAULT_EBC2_BLOCKS_CAP) -> Ebc2Result:
    """ブロックの並べ方を接頭辞で枝刈りしながら全て調べる。

    引数:
        instance: 問題例。
        cap: ブロック数の上限。

    戻り値:
        条件を満たす並べ方があればその順序を伴うEbc2Result。

    例外:
        CapExceededError: ブロック数が上限を超える場合(cap名は`ebc2_blocks`)。
    """
    blocks = [block.symbols for block in instance.blocks]
    if len(blocks) > cap:
        raise CapExceededError("ebc2_blocks", cap, len(blocks))

    target = instance.target.symbols
    if sum(len(block) for block in blocks) != len(target):
        return Ebc2Result(False)

    used = [False] * len(blocks)
    order: list[int] = []

    def extend(position: int) -> bool:
        if len(order) == len(blocks):
            return position == len(target)
        tried: set[tuple[str, ...]] = set()
        for index, block in enumerate(blocks):
            if used[index] or block in tried:
                continue
            tried.add(block)
            if target[position : position + len(block)] != block:
                continue
            used[index] = True
            order.append(index)
            if extend(position + len(block)):
                return True
            order.pop()
            used[index] = False
        return False

    if extend(0):
        return Ebc2Result(True, tuple(order))
    return Ebc2Result(False)


def parse_ebc2(text: str) -> Ebc2Instance:
    """`v: <bits>`の1行と、ブロックごとの`u: <bits>`行を読み込む。εは`@`。

    例外:
        MachineFormatError: 未知のキー、vの欠落や重複、0/1以外の記号。
    """
    target: Word | None = None
    blocks: list[Word] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw_line).strip()
        if not line:
            continue
        key, separator, value = line.partition(KEY_SEPARATOR)
        key, value = key.strip(), value.strip()
        if not separator or key not in (EBC2_TARGET_KEY, EBC2_BLOCK_KEY):
            message = f"`{EBC2_TARGET_KEY}:`または`{EBC2_BLOCK_KEY}:`で始まる行が必要です。"
            raise MachineFormatError(message, line_number)
        try:
            word = _bits_to_word(value)
        except ValueError as exc:
            raise MachineFormatError(f"ビット列に0/1以外の記号があります。value={value!r}", line_number) from exc

        if key == EBC2_TARGET_KEY:
            if target is not None:
                raise MachineFormatError("`v:`行が複数あります。", line_number)
            target = word
        else:
            blocks.append(word)

    if target is None:
        raise MachineFormatError("`v:`行がありません。")
    return Ebc2Instance(target, tuple(blocks))


def print_ebc2(instance: Ebc2Instance) -> str:
    lines = [f"{EBC2_TARGET_KEY}{KEY_SEPARATOR} {_word_to_bits(instance.target)}"]
    lines.extend(f"{EBC2_BLOCK_KEY}{KEY_SEPARATOR} {_word_to_bits(block)}" for block in instance.blocks)
    return LINE_SEPARATOR.join(lines) + LINE_SEPARATOR


def all_ebc2_instances(max_blocks: int, max_block_length: int) -> Iterator[Ebc2Instance]:
    """ブロック数`max_blocks`以下、各ブロック長`max_block_length`以下の問題例を列挙する。

    補足:
        ブロックは多重集合として数え、目標vは長さがブロック長の総和に等しいものだけを全て挙げる。
        長さが異なる目標は自明に偽となる。
    """
    candidates = [Word(BINARY_ALPHABET, symbols) for symbols in iter_words_upto(BINARY_ALPHABET, max_block_length)]
    for count in range(max_blocks + 1):
        for blocks in combinations_with_replacement(candidates, count):
            total = sum(len(block) for block in blocks)
            for symbols in iter_words_upto(BINARY_ALPHABET, total):
                if len(symbols) == total:
                    yield Ebc2Instance(Word(BINARY_ALPHABET, symbols), blocks)
