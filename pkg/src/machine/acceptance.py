"""FA・JFA・GJFAの各意味での受理判定と有界列挙を提供する。"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterator
from enum import Enum

from consts.machine_constants import GJFA_ENCODING_BASE_CODEPOINT
from core.alphabet import Alphabet, ParikhVector, Word
from core.language import FiniteLanguage, RawWord, iter_words_upto
from core.shuffle import iter_distinct_permutations, parikh_counts
from machine.model import GjfaConfig, JfaConfig, Machine, MachineKind
from utils.errors import MachineKindError

logger = logging.getLogger(__name__)


class JfaEnumeration(Enum):
    """JFA言語の有界列挙の方式。"""

    PARIKH = "parikh"
    FILTER = "filter"


class GjfaEnumeration(Enum):
    """GJFA言語の有界列挙の方式。"""

    INSERTION = "insertion"
    FILTER = "filter"


# 補助処理
def require_finite_machine(machine: Machine, operation: str) -> None:
    """有限機械でなければMachineKindErrorを送出する。"""
    if machine.kind is not MachineKind.FINITE_MACHINE:
        raise MachineKindError(
            f"{operation}は有限機械(ラベル長1以下)専用です。一般機械にはgjfa_acceptsを使用してください。"
        )


def encode_symbols(alphabet: Alphabet, symbols: RawWord) -> str:
    """記号列を私用領域の1文字ずつの文字列へ写像する。部分語検索を文字列検索で行うため。"""
    index = alphabet.index
    return "".join(chr(GJFA_ENCODING_BASE_CODEPOINT + index[symbol]) for symbol in symbols)


def decode_symbols(alphabet: Alphabet, encoded: str) -> RawWord:
    return tuple(alphabet.symbols[ord(character) - GJFA_ENCODING_BASE_CODEPOINT] for character in encoded)


def iter_occurrences(text: str, factor: str) -> Iterator[int]:
    """`factor`の出現位置(重なりを含む)を列挙する。"""
    position = text.find(factor)
    while position != -1:
        yield position
        position = text.find(factor, position + 1)


def _encoded_rules(machine: Machine) -> dict[str, tuple[tuple[str, str], ...]]:
    """状態ごとに(符号化ラベル, 先状態)の組を返す。"""
    return {
        state: tuple((encode_symbols(machine.alphabet, rule.label.symbols), rule.target) for rule in rules)
        for state, rules in machine.outgoing.items()
    }


def _deletion_successors(
    encoded_rules: dict[str, tuple[tuple[str, str], ...]], state: str, remaining: str
) -> Iterator[tuple[str, str]]:
    """1回の跳躍ステップ(ラベルの任意の出現を削除して状態遷移)の後続構成を列挙する。"""
    for label, target in encoded_rules[state]:
        if not label:
            yield target, remaining
            continue
        for position in iter_occurrences(remaining, label):
            yield target, remaining[:position] + remaining[position + len(label) :]


def _deletable_characters(
    machine: Machine, encoded_rules: dict[str, tuple[tuple[str, str], ...]]
) -> dict[str, frozenset[str]]:
    """状態ごとに、そこから到達できる規則のラベルに現れる符号化文字の集合を返す。"""
    deletable: dict[str, frozenset[str]] = {}
    for state in machine.states:
        characters: set[str] = set()
        visited = {state}
        stack = [state]
        while stack:
            current = stack.pop()
            for label, target in encoded_rules[current]:
                characters.update(label)
                if target not in visited:
                    visited.add(target)
                    stack.append(target)
        deletable[state] = frozenset(characters)
    return deletable


# メイン処理
def fa_accepts(machine: Machine, word: Word) -> bool:
    """移動関係⇒による受理判定。(状態, 読み取り位置)の幅優先探索で判定する。"""
    machine.alphabet.require_same(word.alphabet)
    symbols = word.symbols
    start = (machine.start, 0)
    visited = {start}
    queue = deque([start])
    while queue:
        state, position = queue.popleft()
        if position == len(symbols) and state in machine.finals:
            return True
        for rule in machine.outgoing[state]:
            label = rule.label.symbols
            if symbols[position : position + len(label)] != label:
                continue
            successor = (rule.target, position + len(label))
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)
    return False


def jfa_accepts(machine: Machine, word: Word) -> bool:
    """跳躍関係による有限機械の受理判定。

    引数:
        machine: 有限機械。
        word: 判定対象の語。

    戻り値:
        (開始状態, ψ(w))から(受理状態, 0⃗)へ到達できれば真。

    例外:
        MachineKindError: 一般機械を渡した場合。

    補足:
        構成(状態, 残りのParikhベクトル)を訪問済み集合付きで探索する。
        構成数は|Q|·∏(countsᵢ+1)以下。
    """
    require_finite_machine(machine, "jfa_accepts")
    machine.alphabet.require_same(word.alphabet)
    alphabet = machine.alphabet
    index = alphabet.index

    start = (machine.start, parikh_counts(alphabet, word.symbols))
    visited = {start}
    stack = [start]
    while stack:
        state, remaining = stack.pop()
        if state in machine.finals and not any(remaining):
            return True
        for rule in machine.outgoing[state]:
            if rule.label.is_empty():
                successor = (rule.target, remaining)
            else:
                coordinate = index[rule.label.symbols[0]]
                if remaining[coordinate] == 0:
                    continue
                counts = list(remaining)
                counts[coordinate] -= 1
                successor = (rule.target, tuple(counts))
            if successor not in visited:
                visited.add(successor)
                stack.append(successor)
    return False


def jfa_successors(machine: Machine, config: JfaConfig) -> list[JfaConfig]:
    """JFA構成から1ステップで到達できる構成を規則の記載順に返す。"""
    require_finite_machine(machine, "jfa_successors")
    successors: list[JfaConfig] = []
    for rule in machine.outgoing[config.state]:
        if rule.label.is_empty():
            successors.append(JfaConfig(rule.target, config.remaining))
            continue
        coordinate = machine.alphabet.index[rule.label.symbols[0]]
        counts = list(config.remaining.counts)
        if counts[coordinate] == 0:
            continue
        counts[coordinate] -= 1
        successors.append(JfaConfig(rule.target, ParikhVector(machine.alphabet, tuple(counts))))
    return successors


def gjfa_successors(machine: Machine, config: GjfaConfig) -> list[GjfaConfig]:
    """GJFA構成から1回の跳躍ステップで到達できる構成を重複なく返す。"""
    machine.alphabet.require_same(config.remaining.alphabet)
    alphabet = machine.alphabet
    encoded = encode_symbols(alphabet, config.remaining.symbols)
    seen: set[tuple[str, str]] = set()
    successors: list[GjfaConfig] = []
    for target, remaining in _deletion_successors(_encoded_rules(machine), config.state, encoded):
        if (target, remaining) in seen:
            continue
        seen.add((target, remaining))
        successors.append(GjfaConfig(target, Word(alphabet, decode_symbols(alphabet, remaining))))
    return successors


def gjfa_accepts(machine: Machine, word: Word) -> bool:
    """一般跳躍関係↝による受理判定。

    引数:
        machine: 任意の(一般)有限機械。
        word: 判定対象の語。

    戻り値:
        (開始状態, w)から(受理状態, ε)へ到達できれば真。

    補足:
        各ステップでは任意の規則pyqと残りの語中のyの任意の出現を選び、その出現を削除する。
        訪問済み構成を記録するので連続するε規則は高々|Q|回しか辿らない。
        残りの語が、現在の状態から到達できるどの規則でも削除できない記号を含む構成は打ち切る。
    """
    machine.alphabet.require_same(word.alphabet)
    encoded_rules = _encoded_rules(machine)
    deletable = _deletable_characters(machine, encoded_rules)
    start = (machine.start, encode_symbols(machine.alphabet, word.symbols))
    if not set(start[1]) <= deletable[machine.start]:
        return False
    visited = {start}
    stack = [start]
    while stack:
        state, remaining = stack.pop()
        if not remaining and state in machine.finals:
            return True
        for successor in _deletion_successors(encoded_rules, state, remaining):
            if successor in visited:
                continue
            visited.add(successor)
            target, rest = successor
            if set(rest) <= deletable[target]:
                stack.append(successor)
    return False


def fa_language_upto(machine: Machine, max_length: int) -> FiniteLanguage:
    """FA言語を長さ`max_length`以下に切り詰めて返す。(状態, 生成済みの語)を前向きに探索する。"""
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    start: tuple[str, RawWord] = (machine.start, ())
    visited = {start}
    queue = deque([start])
    accepted: set[RawWord] = set()
    while queue:
        state, produced = queue.popleft()
        if state in machine.finals:
            accepted.add(produced)
        for rule in machine.outgoing[state]:
            extended = produced + rule.label.symbols
            if len(extended) > max_length:
                continue
            successor = (rule.target, extended)
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)
    return FiniteLanguage(machine.alphabet, frozenset(accepted))


def jfa_accepted_vectors_upto(machine: Machine, max_length: int) -> frozenset[tuple[int, ...]]:
    """JFAが受理する語のParikhベクトルのうち成分和が`max_length`以下のものを返す。"""
    require_finite_machine(machine, "jfa_accepted_vectors_upto")
    index = machine.alphabet.index
    zero = (0,) * len(machine.alphabet)
    start = (machine.start, zero)
    visited = {start}
    stack = [start]
    accepted: set[tuple[int, ...]] = set()
    while stack:
        state, consumed = stack.pop()
        if state in machine.finals:
            accepted.add(consumed)
        total = sum(consumed)
        for rule in machine.outgoing[state]:
            if rule.label.is_empty():
                successor = (rule.target, consumed)
            else:
                if total == max_length:
                    continue
                counts = list(consumed)
                counts[index[rule.label.symbols[0]]] += 1
                successor = (rule.target, tuple(counts))
            if successor not in visited:
                visited.add(successor)
                stack.append(successor)
    return frozenset(accepted)


def jfa_language_upto(
    machine: Machine, max_length: int, strategy: JfaEnumeration = JfaEnumeration.PARIKH
) -> FiniteLanguage:
    """JFA言語を長さ`max_length`以下に切り詰めて返す。

    引数:
        machine: 有限機械。
        max_length: 長さ上限。
        strategy: PARIKHは受理されるParikhベクトルを求めて置換類へ展開する。
            FILTERはΣ^{≤n}をjfa_acceptsで選別する。両者の結果は一致する。

    戻り値:
        L_JFA(M) ∩ Σ^{≤n}。

    例外:
        MachineKindError: 一般機械を渡した場合。
    """
    require_finite_machine(machine, "jfa_language_upto")
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    alphabet = machine.alphabet
    if strategy is JfaEnumeration.FILTER:
        members = frozenset(
            symbols
            for symbols in iter_words_upto(alphabet, max_length)
            if jfa_accepts(machine, Word(alphabet, symbols))
        )
        return FiniteLanguage(alphabet, members)

    members_set: set[RawWord] = set()
    for counts in jfa_accepted_vectors_upto(machine, max_length):
        members_set.update(iter_distinct_permutations(alphabet, counts))
    return FiniteLanguage(alphabet, frozenset(members_set))


def gjfa_language_upto(
    machine: Machine, max_length: int, strategy: GjfaEnumeration = GjfaEnumeration.INSERTION
) -> FiniteLanguage:
    """GJFA言語を長さ`max_length`以下に切り詰めて返す。

    引数:
        machine: 任意の(一般)有限機械。
        max_length: 長さ上限。
        strategy: INSERTIONは(受理状態, ε)から規則を逆向きに辿り、ラベルを任意の位置へ挿入して語を生成する。
            FILTERはΣ^{≤n}をgjfa_acceptsで選別する。両者の結果は一致する。

    戻り値:
        L_GJFA(M) ∩ Σ^{≤n}。
    """
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    alphabet = machine.alphabet
    if strategy is GjfaEnumeration.FILTER:
        members = frozenset(
            symbols
            for symbols in iter_words_upto(alphabet, max_length)
            if gjfa_accepts(machine, Word(alphabet, symbols))
        )
        return FiniteLanguage(alphabet, members)

    incoming: dict[str, list[tuple[str, str]]] = {state: [] for state in machine.states}
    for rule in machine.rules:
        incoming[rule.target].append((encode_symbols(alphabet, rule.label.symbols), rule.source))

    starts = [(state, "") for state in machine.states if state in machine.finals]
    visited = set(starts)
    stack = list(starts)
    accepted: set[str] = set()
    while stack:
        state, produced = stack.pop()
        if state == machine.start:
            accepted.add(produced)
        for label, source in incoming[state]:
            if len(produced) + len(label) > max_length:
                continue
            for position in range(len(produced) + 1):
                predecessor = (source, produced[:position] + label + produced[position:])
                if predecessor not in visited:
                    visited.add(predecessor)
                    stack.append(predecessor)
    return FiniteLanguage(alphabet, frozenset(decode_symbols(alphabet, encoded) for encoded in accepted))
