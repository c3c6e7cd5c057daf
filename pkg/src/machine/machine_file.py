"""機械ファイル(行指向テキスト)の読み書きを提供する。"""

from __future__ import annotations

import logging

from consts.alphabet_constants import LINE_SEPARATOR
from consts.machine_constants import (
    ALPHABET_KEY,
    FINAL_KEY,
    KEY_SEPARATOR,
    RULE_FIELD_COUNT,
    RULE_KEY,
    START_KEY,
    STATES_KEY,
)
from core.alphabet import Alphabet
from core.literals import format_word, parse_word_literal, strip_comment
from machine.model import Machine, Rule
from utils.errors import MachineFormatError

logger = logging.getLogger(__name__)


# 補助処理
def split_key_line(line: str, line_number: int) -> tuple[str, list[str]]:
    """`key: v1 v2 ...`形式の行をキーと値の列へ分割する。"""
    key, separator, value = line.partition(KEY_SEPARATOR)
    if not separator:
        raise MachineFormatError(f"`キー{KEY_SEPARATOR} 値`の形式ではありません。line={line!r}", line_number)
    return key.strip(), value.split()


# メイン処理
def parse_machine(text: str) -> Machine:
    """機械ファイルのテキストを機械へ変換する。

    引数:
        text: 機械ファイルの内容。`#`以降はコメント。

    戻り値:
        読み込んだ機械。

    例外:
        MachineFormatError: 未宣言の状態・記号、開始状態の欠落、状態名の重複など。
    """
    alphabet: Alphabet | None = None
    states: list[str] | None = None
    start: str | None = None
    finals: list[str] = []
    rule_lines: list[tuple[int, list[str]]] = []

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw_line)
        if not line:
            continue

        key, values = split_key_line(line, line_number)
        if key == ALPHABET_KEY:
            if alphabet is not None:
                raise MachineFormatError("alphabet行が重複しています。", line_number)
            try:
                alphabet = Alphabet(tuple(values))
            except ValueError as exc:
                raise MachineFormatError(str(exc), line_number) from exc
        elif key == STATES_KEY:
            if states is not None:
                raise MachineFormatError("states行が重複しています。", line_number)
            if len(set(values)) != len(values):
                raise MachineFormatError(f"状態名が重複しています。states={values}", line_number)
            states = values
        elif key == START_KEY:
            if start is not None or len(values) != 1:
                raise MachineFormatError("start行は1行に1状態だけ指定してください。", line_number)
            start = values[0]
        elif key == FINAL_KEY:
            finals.extend(values)
        elif key == RULE_KEY:
            if len(values) != RULE_FIELD_COUNT:
                raise MachineFormatError(f"rule行は`元状態 ラベル 先状態`の3項目です。values={values}", line_number)
            rule_lines.append((line_number, values))
        else:
            raise MachineFormatError(f"未知のキーです。key={key!r}", line_number)

    if alphabet is None:
        raise MachineFormatError("alphabet行がありません。")
    if states is None:
        raise MachineFormatError("states行がありません。")
    if start is None:
        raise MachineFormatError("start行がありません。")

    declared = set(states)
    if start not in declared:
        raise MachineFormatError(f"開始状態が宣言されていません。start={start!r}")
    undeclared_finals = [state for state in finals if state not in declared]
    if undeclared_finals:
        raise MachineFormatError(f"受理状態が宣言されていません。final={undeclared_finals}")

    rules: list[Rule] = []
    for line_number, (source, label_text, target) in rule_lines:
        for state in (source, target):
            if state not in declared:
                raise MachineFormatError(f"規則の状態が宣言されていません。state={state!r}", line_number)
        try:
            label = parse_word_literal(label_text, alphabet)
        except ValueError as exc:
            raise MachineFormatError(str(exc), line_number) from exc
        rules.append(Rule(source, label, target))

    try:
        return Machine(alphabet, tuple(states), tuple(rules), start, frozenset(finals))
    except ValueError as exc:
        raise MachineFormatError(str(exc)) from exc


def print_machine(machine: Machine) -> str:
    """機械を機械ファイルのテキストへ変換する。受理状態は状態の宣言順に並べる。"""
    finals = [state for state in machine.states if state in machine.finals]
    lines = [
        f"{ALPHABET_KEY}{KEY_SEPARATOR} {' '.join(machine.alphabet.symbols)}",
        f"{STATES_KEY}{KEY_SEPARATOR} {' '.join(machine.states)}",
        f"{START_KEY}{KEY_SEPARATOR} {machine.start}",
        f"{FINAL_KEY}{KEY_SEPARATOR} {' '.join(finals)}".rstrip(),
    ]
    lines.extend(
        f"{RULE_KEY}{KEY_SEPARATOR} {rule.source} {format_word(rule.label)} {rule.target}" for rule in machine.rules
    )
    return LINE_SEPARATOR.join(lines) + LINE_SEPARATOR
