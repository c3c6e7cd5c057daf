"""有限機械と探索構成の型を定義する。"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from consts.alphabet_constants import COMMENT_MARK
from core.alphabet import Alphabet, ParikhVector, Word


class MachineKind(Enum):
    """全ラベルが長さ1以下ならFINITE_MACHINE、それ以外はGENERAL_FINITE_MACHINE。"""

    FINITE_MACHINE = "finite"
    GENERAL_FINITE_MACHINE = "general"


@dataclass(frozen=True)
class Rule:
    """規則 p y → q。ラベルyはεでもよい。"""

    source: str
    label: Word
    target: str


# 補助処理
def validate_state_name(name: str) -> None:
    if not isinstance(name, str) or not name:
        raise ValueError(f"状態名は空でない文字列である必要があります。name={name!r}")
    if any(character.isspace() for character in name) or COMMENT_MARK in name:
        raise ValueError(f"状態名に空白や`#`は使用できません。name={name!r}")


@dataclass(frozen=True)
class Machine:
    """(一般)有限機械。FA・JFA・GJFAのいずれの意味でも解釈できる。"""

    alphabet: Alphabet
    states: tuple[str, ...]
    rules: tuple[Rule, ...]
    start: str
    finals: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "finals", frozenset(self.finals))

        for name in self.states:
            validate_state_name(name)
        if len(set(self.states)) != len(self.states):
            raise ValueError(f"状態名が重複しています。states={self.states}")

        known = set(self.states)
        if self.start not in known:
            raise ValueError(f"開始状態が状態集合にありません。start={self.start!r}")

        unknown_finals = sorted(self.finals - known)
        if unknown_finals:
            raise ValueError(f"受理状態が状態集合にありません。finals={unknown_finals}")

        for rule in self.rules:
            if rule.source not in known or rule.target not in known:
                raise ValueError(f"規則の端点が状態集合にありません。rule={rule.source}->{rule.target}")
            self.alphabet.require_same(rule.label.alphabet)

    @property
    def kind(self) -> MachineKind:
        if all(len(rule.label) <= 1 for rule in self.rules):
            return MachineKind.FINITE_MACHINE
        return MachineKind.GENERAL_FINITE_MACHINE

    def is_finite_machine(self) -> bool:
        return self.kind is MachineKind.FINITE_MACHINE

    @cached_property
    def outgoing(self) -> dict[str, tuple[Rule, ...]]:
        """状態ごとの出力規則(規則の記載順)。"""
        grouped: dict[str, list[Rule]] = defaultdict(list)
        for rule in self.rules:
            grouped[rule.source].append(rule)
        return {state: tuple(grouped.get(state, ())) for state in self.states}

    def epsilon_closure(self, states: frozenset[str] | set[str]) -> frozenset[str]:
        """ε規則のみで到達できる状態の集合を返す。"""
        closure = set(states)
        stack = list(states)
        while stack:
            state = stack.pop()
            for rule in self.outgoing[state]:
                if rule.label.is_empty() and rule.target not in closure:
                    closure.add(rule.target)
                    stack.append(rule.target)
        return frozenset(closure)

    def renamed(self, prefix: str) -> Machine:
        """全状態名に接頭辞を付けた機械を返す。"""
        return Machine(
            self.alphabet,
            tuple(prefix + state for state in self.states),
            tuple(Rule(prefix + rule.source, rule.label, prefix + rule.target) for rule in self.rules),
            prefix + self.start,
            frozenset(prefix + state for state in self.finals),
        )


@dataclass(frozen=True)
class JfaConfig:
    """JFA探索の構成(状態, 残りのParikhベクトル)。"""

    state: str
    remaining: ParikhVector


@dataclass(frozen=True)
class GjfaConfig:
    """GJFA探索の構成(状態, 残りの語)。"""

    state: str
    remaining: Word
