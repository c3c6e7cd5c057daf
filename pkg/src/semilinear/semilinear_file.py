"""半線形集合ファイルの読み書きを提供する。

形式:
    alphabet: a b c
    base: 1 0 2 ; periods: (1 1 0) (0 0 3)
1行1成分。成分のない行は空集合を表す。
"""

from __future__ import annotations

import logging
import re

from consts.alphabet_constants import LINE_SEPARATOR
from consts.machine_constants import ALPHABET_KEY, KEY_SEPARATOR
from consts.semilinear_constants import BASE_KEY, FIELD_SEPARATOR, PERIOD_CLOSE, PERIOD_OPEN, PERIODS_KEY
from core.alphabet import Alphabet
from core.literals import strip_comment
from semilinear.model import LinearSet, SemilinearSet, Vector
from utils.errors import MachineFormatError

logger = logging.getLogger(__name__)

_PERIOD_PATTERN = re.compile(
    re.escape(PERIOD_OPEN) + r"([^" + re.escape(PERIOD_CLOSE) + r"]*)" + re.escape(PERIOD_CLOSE)
)


# 補助処理
def _parse_integers(text: str, dimension: int, line_number: int) -> Vector:
    try:
        vector = tuple(int(entry) for entry in text.split())
    except ValueError as exc:
        raise MachineFormatError(f"整数として解釈できません。text={text!r}", line_number) from exc
    if len(vector) != dimension:
        raise MachineFormatError(f"ベクトルの次元が一致しません。vector={vector} 次元={dimension}", line_number)
    if any(entry < 0 for entry in vector):
        raise MachineFormatError(f"ベクトルに負の成分があります。vector={vector}", line_number)
    return vector


def _parse_component(line: str, dimension: int, line_number: int) -> LinearSet:
    base_part, separator, periods_part = line.partition(FIELD_SEPARATOR)
    base_key, _, base_text = base_part.partition(KEY_SEPARATOR)
    if base_key.strip() != BASE_KEY:
        raise MachineFormatError(f"成分行は`{BASE_KEY}{KEY_SEPARATOR}`で始まる必要があります。", line_number)
    base = _parse_integers(base_text, dimension, line_number)

    periods: list[Vector] = []
    if separator:
        periods_key, _, periods_text = periods_part.partition(KEY_SEPARATOR)
        if periods_key.strip() != PERIODS_KEY:
            raise MachineFormatError(f"周期は`{PERIODS_KEY}{KEY_SEPARATOR}`で指定してください。", line_number)
        periods = [_parse_integers(match, dimension, line_number) for match in _PERIOD_PATTERN.findall(periods_text)]
        if _PERIOD_PATTERN.sub("", periods_text).strip():
            raise MachineFormatError(f"周期の形式が不正です。text={periods_text.strip()!r}", line_number)
    return LinearSet(base, tuple(periods))


# メイン処理
def parse_semilinear(text: str) -> tuple[Alphabet, SemilinearSet]:
    """半線形集合ファイルを読み込み、アルファベットと集合を返す。

    例外:
        MachineFormatError: 形式誤り・次元の不一致・alphabet行の欠落。
    """
    alphabet: Alphabet | None = None
    components: list[LinearSet] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw_line)
        if not line:
            continue
        if alphabet is None:
            key, _, values = line.partition(KEY_SEPARATOR)
            if key.strip() != ALPHABET_KEY:
                raise MachineFormatError("先頭行はalphabet行である必要があります。", line_number)
            try:
                alphabet = Alphabet(tuple(values.split()))
            except ValueError as exc:
                raise MachineFormatError(str(exc), line_number) from exc
            continue
        components.append(_parse_component(line, len(alphabet), line_number))

    if alphabet is None:
        raise MachineFormatError("alphabet行がありません。")
    return alphabet, SemilinearSet(len(alphabet), tuple(components))


def print_semilinear(semilinear: SemilinearSet, alphabet: Alphabet) -> str:
    """半線形集合を正準順序の成分行へ変換する。"""
    if len(alphabet) != semilinear.dimension:
        raise ValueError(f"アルファベットと次元が一致しません。alphabet={alphabet.symbols} 次元={semilinear.dimension}")

    lines = [f"{ALPHABET_KEY}{KEY_SEPARATOR} {' '.join(alphabet.symbols)}"]
    for component in semilinear.components:
        base_text = " ".join(map(str, component.base))
        periods_text = " ".join(
            f"{PERIOD_OPEN}{' '.join(map(str, period))}{PERIOD_CLOSE}" for period in component.periods
        )
        fields = f"{BASE_KEY}{KEY_SEPARATOR} {base_text} {FIELD_SEPARATOR} {PERIODS_KEY}{KEY_SEPARATOR} {periods_text}"
        lines.append(fields.rstrip())
    return LINE_SEPARATOR.join(lines) + LINE_SEPARATOR
