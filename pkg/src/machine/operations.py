"""機械の合成(シャッフル積・和・連接・閉包)と語・ラベルの変換を提供する。"""

from __future__ import annotations

import logging
from collections import deque

from consts.machine_constants import (
    BINARY_ONE,
    BINARY_ZERO,
    LEFT_OPERAND_PREFIX,
    LETTERIZE_STATE_SEPARATOR,
    PRODUCT_STATE_SEPARATOR,
    RIGHT_OPERAND_PREFIX,
    STAR_START_STATE,
    UNION_START_STATE,
    WORD_PATH_STATE_PREFIX,
)
from core.alphabet import Alphabet, Word
from core.language import FiniteLanguage, RawWord
from machine.acceptance import require_finite_machine
from machine.model import Machine, Rule

logger = logging.getLogger(__name__)

BINARY_ALPHABET = Alphabet((BINARY_ZERO, BINARY_ONE))

Homomorphism = dict[str, RawWord]


# 補助処理
def _epsilon(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def _require_same_alphabet(left: Machine, right: Machine) -> None:
    left.alphabet.require_same(right.alphabet)


# メイン処理
def shuffle_product(left: Machine, right: Machine) -> Machine:
    """2つの有限機械のシャッフル積を返す。

    引数:
        left: 有限機械。
        right: 有限機械。

    戻り値:
        状態が`p|q`の組で、各ステップでどちらか一方だけが進む機械。
        L_FA = L_FA(left) ⧢ L_FA(right)。開始状態から到達できる組だけを含む。

    例外:
        AlphabetMismatchError: アルファベットが異なる場合。
        MachineKindError: 一般機械を渡した場合。
    """
    _require_same_alphabet(left, right)
    require_finite_machine(left, "shuffle_product")
    require_finite_machine(right, "shuffle_product")

    def name(pair: tuple[str, str]) -> str:
        return f"{pair[0]}{PRODUCT_STATE_SEPARATOR}{pair[1]}"

    start = (left.start, right.start)
    order = [start]
    seen = {start}
    rules: list[Rule] = []
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        successors = [(rule.label, (rule.target, pair[1])) for rule in left.outgoing[pair[0]]]
        successors.extend((rule.label, (pair[0], rule.target)) for rule in right.outgoing[pair[1]])
        for label, target in successors:
            rules.append(Rule(name(pair), label, name(target)))
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)

    finals = frozenset(name(pair) for pair in order if pair[0] in left.finals and pair[1] in right.finals)
    return Machine(left.alphabet, tuple(name(pair) for pair in order), tuple(rules), name(start), finals)


def union_machines(left: Machine, right: Machine) -> Machine:
    """新しい開始状態からε規則で両機械へ分岐する機械を返す。"""
    _require_same_alphabet(left, right)
    first = left.renamed(LEFT_OPERAND_PREFIX)
    second = right.renamed(RIGHT_OPERAND_PREFIX)
    epsilon = _epsilon(left.alphabet)
    rules = (
        Rule(UNION_START_STATE, epsilon, first.start),
        Rule(UNION_START_STATE, epsilon, second.start),
        *first.rules,
        *second.rules,
    )
    return Machine(
        left.alphabet,
        (UNION_START_STATE, *first.states, *second.states),
        rules,
        UNION_START_STATE,
        first.finals | second.finals,
    )


def concat_machines(left: Machine, right: Machine) -> Machine:
    """左の受理状態から右の開始状態へε規則で繋いだ機械を返す。"""
    _require_same_alphabet(left, right)
    first = left.renamed(LEFT_OPERAND_PREFIX)
    second = right.renamed(RIGHT_OPERAND_PREFIX)
    epsilon = _epsilon(left.alphabet)
    links = tuple(Rule(state, epsilon, second.start) for state in first.states if state in first.finals)
    return Machine(
        left.alphabet,
        (*first.states, *second.states),
        (*first.rules, *links, *second.rules),
        first.start,
        second.finals,
    )


def star_machine(machine: Machine) -> Machine:
    """Kleene閉包の機械を返す。

    補足:
        有限機械に対してはL_JFA(結果) = L_JFA(machine)^{⧢,*}となる。
    """
    inner = machine.renamed(LEFT_OPERAND_PREFIX)
    epsilon = _epsilon(machine.alphabet)
    loops = tuple(Rule(state, epsilon, STAR_START_STATE) for state in inner.states if state in inner.finals)
    return Machine(
        machine.alphabet,
        (STAR_START_STATE, *inner.states),
        (Rule(STAR_START_STATE, epsilon, inner.start), *inner.rules, *loops),
        STAR_START_STATE,
        frozenset({STAR_START_STATE}),
    )


def word_to_jfa(word: Word) -> Machine:
    """語の記号を順に読む経路機械を返す。JFA言語はperm(w)。"""
    states = tuple(f"{WORD_PATH_STATE_PREFIX}{i}" for i in range(len(word) + 1))
    rules = tuple(
        Rule(states[i], Word(word.alphabet, (symbol,)), states[i + 1]) for i, symbol in enumerate(word.symbols)
    )
    return Machine(word.alphabet, states, rules, states[0], frozenset({states[-1]}))


def finite_language_machine(language: FiniteLanguage) -> Machine:
    """有限言語の語を共通接頭辞で共有する木状の機械を返す。FA言語は`language`に等しい。"""
    alphabet = language.alphabet
    names: dict[RawWord, str] = {(): f"{WORD_PATH_STATE_PREFIX}0"}
    rules: list[Rule] = []
    for symbols in language.sorted_members():
        for length in range(1, len(symbols) + 1):
            prefix = symbols[:length]
            if prefix in names:
                continue
            names[prefix] = f"{WORD_PATH_STATE_PREFIX}{len(names)}"
            rules.append(Rule(names[prefix[:-1]], Word(alphabet, (prefix[-1],)), names[prefix]))
    finals = frozenset(names[symbols] for symbols in language.sorted_members())
    return Machine(alphabet, tuple(names.values()), tuple(rules), names[()], finals)


def letterize_machine(machine: Machine) -> Machine:
    """長さ2以上のラベルを1記号ずつの規則の鎖に分解した有限機械を返す。

    補足:
        FA言語は変わらない。perm(L_GJFA(machine)) = L_JFA(結果)。
    """
    alphabet = machine.alphabet
    states = list(machine.states)
    rules: list[Rule] = []
    for rule_index, rule in enumerate(machine.rules):
        if len(rule.label) <= 1:
            rules.append(rule)
            continue
        chain = [rule.source]
        for position in range(1, len(rule.label)):
            intermediate = LETTERIZE_STATE_SEPARATOR.join((rule.source, str(rule_index), str(position)))
            states.append(intermediate)
            chain.append(intermediate)
        chain.append(rule.target)
        for position, symbol in enumerate(rule.label.symbols):
            rules.append(Rule(chain[position], Word(alphabet, (symbol,)), chain[position + 1]))
    return Machine(alphabet, tuple(states), tuple(rules), machine.start, machine.finals)


def binary_homomorphism(alphabet: Alphabet) -> Homomorphism:
    """i番目(1始まり)の記号を1 0^i 1へ写す準同型の表を返す。"""
    return {
        symbol: (BINARY_ONE, *([BINARY_ZERO] * position), BINARY_ONE)
        for position, symbol in enumerate(alphabet.symbols, start=1)
    }


def apply_homomorphism(word: Word, table: Homomorphism, target: Alphabet = BINARY_ALPHABET) -> Word:
    """語に準同型を適用する。h(ε) = ε。"""
    symbols: list[str] = []
    for symbol in word.symbols:
        symbols.extend(table[symbol])
    return Word(target, tuple(symbols))


def binary_encode_gjfa(machine: Machine) -> tuple[Machine, Homomorphism]:
    """規則のラベルを二値符号化した{0,1}上の機械と準同型の表を返す。

    引数:
        machine: 任意の(一般)有限機械。

    戻り値:
        (符号化した機械, 準同型の表)。w ∈ L_GJFA(M) ⟺ h(w) ∈ L_GJFA(M′)。

    例外:
        なし。
    """
    table = binary_homomorphism(machine.alphabet)
    rules = tuple(
        Rule(rule.source, apply_homomorphism(rule.label, table), rule.target) for rule in machine.rules
    )
    encoded = Machine(BINARY_ALPHABET, machine.states, rules, machine.start, machine.finals)
    logger.debug("完了: 二値符号化しました。symbols=%s rules=%s", len(table), len(rules))
    return encoded, table
