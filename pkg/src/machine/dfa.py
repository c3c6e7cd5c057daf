"""部分集合構成による決定化とMoore法による最小化を提供する。"""

from __future__ import annotations

import logging
from collections import deque

from consts.machine_constants import DFA_STATE_PREFIX, MIN_DFA_STATE_PREFIX
from core.alphabet import Word
from core.language import RawWord
from machine.acceptance import require_finite_machine
from machine.model import Machine, Rule

logger = logging.getLogger(__name__)

TransitionTable = dict[str, dict[str, str]]


# 補助処理
def is_deterministic(machine: Machine) -> bool:
    """ε規則がなく、各(状態, 記号)の遷移がちょうど1つなら真。"""
    if not machine.is_finite_machine():
        return False
    seen: set[tuple[str, str]] = set()
    for rule in machine.rules:
        if rule.label.is_empty():
            return False
        key = (rule.source, rule.label.symbols[0])
        if key in seen:
            return False
        seen.add(key)
    return len(seen) == len(machine.states) * len(machine.alphabet)


def transition_table(dfa: Machine) -> TransitionTable:
    """決定性完全機械の遷移表を返す。"""
    if not is_deterministic(dfa):
        raise ValueError("決定性完全機械ではありません。determinizeを先に適用してください。")

    table: TransitionTable = {state: {} for state in dfa.states}
    for rule in dfa.rules:
        table[rule.source][rule.label.symbols[0]] = rule.target
    return table


def run_dfa(table: TransitionTable, state: str, symbols: RawWord) -> str:
    """遷移表に沿って語を読み、到達状態を返す。"""
    for symbol in symbols:
        state = table[state][symbol]
    return state


def _build_dfa(machine: Machine, names: list[str], table: dict[int, dict[str, int]], finals: set[int]) -> Machine:
    alphabet = machine.alphabet
    rules = tuple(
        Rule(names[source], Word(alphabet, (symbol,)), names[table[source][symbol]])
        for source in range(len(names))
        for symbol in alphabet.symbols
    )
    return Machine(alphabet, tuple(names), rules, names[0], frozenset(names[i] for i in finals))


# メイン処理
def determinize(machine: Machine) -> Machine:
    """部分集合構成で決定性完全機械を作る。

    引数:
        machine: 有限機械。ε規則はε閉包で除去する。

    戻り値:
        決定性完全機械。状態名は開始状態からの幅優先の発見順に`d0, d1, ...`。
        空集合に対応する状態は到達した場合のみ現れ、吸収状態となる。

    例外:
        MachineKindError: 一般機械を渡した場合。
    """
    require_finite_machine(machine, "determinize")
    alphabet = machine.alphabet

    moves: dict[tuple[str, str], set[str]] = {}
    for rule in machine.rules:
        if not rule.label.is_empty():
            moves.setdefault((rule.source, rule.label.symbols[0]), set()).add(rule.target)

    initial = machine.epsilon_closure({machine.start})
    subsets = [initial]
    discovered = {initial: 0}
    table: dict[int, dict[str, int]] = {}
    finals: set[int] = set()

    position = 0
    while position < len(subsets):
        subset = subsets[position]
        if subset & machine.finals:
            finals.add(position)
        table[position] = {}
        for symbol in alphabet.symbols:
            targets: set[str] = set()
            for state in subset:
                targets |= moves.get((state, symbol), set())
            successor = machine.epsilon_closure(targets)
            if successor not in discovered:
                discovered[successor] = len(subsets)
                subsets.append(successor)
            table[position][symbol] = discovered[successor]
        position += 1

    names = [f"{DFA_STATE_PREFIX}{i}" for i in range(len(subsets))]
    logger.debug("完了: 決定化しました。states=%s", len(names))
    return _build_dfa(machine, names, table, finals)


def minimize(machine: Machine) -> Machine:
    """最小の決定性完全機械を返す。

    引数:
        machine: 有限機械。決定性完全でなければ先に決定化する。

    戻り値:
        最小DFA。状態名は開始状態からの幅優先(記号はアルファベット順)の発見順に`m0, m1, ...`。
        同じFA言語の機械は同一のMachineへ最小化される。

    例外:
        MachineKindError: 一般機械を渡した場合。

    補足:
        受理・非受理の2ブロックから始め、遷移先ブロックの組で分割できなくなるまで細分化する。
    """
    dfa = machine if is_deterministic(machine) else determinize(machine)
    table = transition_table(dfa)
    alphabet = dfa.alphabet

    reachable = _reachable_states(table, dfa.start, alphabet.symbols)
    block_of = {state: int(state in dfa.finals) for state in reachable}
    block_count = len(set(block_of.values()))
    while True:
        signatures: dict[tuple[int, ...], int] = {}
        refined: dict[str, int] = {}
        for state in reachable:
            signature = (block_of[state], *(block_of[table[state][symbol]] for symbol in alphabet.symbols))
            refined[state] = signatures.setdefault(signature, len(signatures))
        block_of = refined
        if len(signatures) == block_count:
            break
        block_count = len(signatures)

    order: list[int] = [block_of[dfa.start]]
    index_of = {order[0]: 0}
    representative = {block: state for state, block in block_of.items()}
    minimal_table: dict[int, dict[str, int]] = {}
    position = 0
    while position < len(order):
        state = representative[order[position]]
        minimal_table[position] = {}
        for symbol in alphabet.symbols:
            target_block = block_of[table[state][symbol]]
            if target_block not in index_of:
                index_of[target_block] = len(order)
                order.append(target_block)
            minimal_table[position][symbol] = index_of[target_block]
        position += 1

    finals = {index_of[block_of[state]] for state in reachable if state in dfa.finals}
    names = [f"{MIN_DFA_STATE_PREFIX}{i}" for i in range(len(order))]
    logger.debug("完了: 最小化しました。states=%s", len(names))
    return _build_dfa(dfa, names, minimal_table, finals)


def _reachable_states(table: TransitionTable, start: str, symbols: tuple[str, ...]) -> list[str]:
    reached = [start]
    seen = {start}
    position = 0
    while position < len(reached):
        for symbol in symbols:
            target = table[reached[position]][symbol]
            if target not in seen:
                seen.add(target)
                reached.append(target)
        position += 1
    return reached


def access_words(dfa: Machine) -> dict[str, RawWord]:
    """各到達可能状態への正準順序で最小のアクセス語を返す。"""
    table = transition_table(dfa)
    words: dict[str, RawWord] = {dfa.start: ()}
    queue = deque([dfa.start])
    while queue:
        state = queue.popleft()
        for symbol in dfa.alphabet.symbols:
            target = table[state][symbol]
            if target not in words:
                words[target] = words[state] + (symbol,)
                queue.append(target)
    return words


def distinguishing_suffix(dfa: Machine, left: str, right: str) -> RawWord | None:
    """2状態の一方だけを受理へ導く最短の接尾語を返す。同値ならNone。"""
    table = transition_table(dfa)
    start = (left, right)
    suffixes: dict[tuple[str, str], RawWord] = {start: ()}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        if (pair[0] in dfa.finals) != (pair[1] in dfa.finals):
            return suffixes[pair]
        for symbol in dfa.alphabet.symbols:
            successor = (table[pair[0]][symbol], table[pair[1]][symbol])
            if successor not in suffixes:
                suffixes[successor] = suffixes[pair] + (symbol,)
                queue.append(successor)
    return None
