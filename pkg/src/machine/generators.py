"""性質検査用のランダム有限機械生成を提供する。"""

from __future__ import annotations

import random

from core.alphabet import Alphabet, Word
from machine.model import Machine, Rule

_RANDOM_STATE_PREFIX = "q"


def random_machine(
    rng: random.Random,
    alphabet: Alphabet,
    state_count: int,
    rule_probability: float = 0.4,
    epsilon_probability: float = 0.1,
) -> Machine:
    """ランダムな有限機械を返す。

    引数:
        rng: 乱数生成器。
        alphabet: 機械のアルファベット。
        state_count: 状態数。1以上。
        rule_probability: 各(元状態, 記号, 先状態)に規則を置く確率。
        epsilon_probability: 各(元状態, 先状態)にε規則を置く確率。

    戻り値:
        状態`q0`を開始状態とする有限機械。受理状態は1つ以上。
    """
    if state_count < 1:
        raise ValueError(f"状態数は1以上である必要があります。state_count={state_count}")

    states = tuple(f"{_RANDOM_STATE_PREFIX}{i}" for i in range(state_count))
    rules: list[Rule] = []
    for source in states:
        for target in states:
            if source != target and rng.random() < epsilon_probability:
                rules.append(Rule(source, Word(alphabet, ()), target))
            for symbol in alphabet.symbols:
                if rng.random() < rule_probability:
                    rules.append(Rule(source, Word(alphabet, (symbol,)), target))

    finals = {state for state in states if rng.random() < 0.4}
    if not finals:
        finals.add(rng.choice(states))
    return Machine(alphabet, states, tuple(rules), states[0], frozenset(finals))
