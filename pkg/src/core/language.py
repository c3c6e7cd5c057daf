"""明示的に列挙された有限言語の型と有界列挙を提供する。"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from core.alphabet import Alphabet, Word

RawWord = tuple[str, ...]


@dataclass(frozen=True)
class FiniteLanguage:
    """1つのアルファベット上の有限な語の集合。

    語は記号タプルの集合として保持し、取り出し時は正準順序
    (長さ、次に記号番号の辞書式)で`Word`として返す。
    """

    alphabet: Alphabet
    members: frozenset[RawWord]

    def __post_init__(self) -> None:
        members = frozenset(tuple(member) for member in self.members)
        object.__setattr__(self, "members", members)
        known = self.alphabet.index
        for member in members:
            for symbol in member:
                if symbol not in known:
                    raise ValueError(
                        f"未登録の記号を含む語です。symbol={symbol!r} alphabet={self.alphabet.symbols}"
                    )

    @classmethod
    def empty(cls, alphabet: Alphabet) -> FiniteLanguage:
        return cls(alphabet, frozenset())

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> FiniteLanguage:
        return cls(alphabet, frozenset({()}))

    @classmethod
    def from_words(cls, alphabet: Alphabet, words: Iterable[Word | RawWord]) -> FiniteLanguage:
        """`Word`または記号タプルの列から言語を作成する。"""
        members: set[RawWord] = set()
        for word in words:
            if isinstance(word, Word):
                alphabet.require_same(word.alphabet)
                members.add(word.symbols)
            else:
                members.add(tuple(word))
        return cls(alphabet, frozenset(members))

    @cached_property
    def words(self) -> tuple[Word, ...]:
        """正準順序に並べた語の一覧。"""
        return tuple(Word(self.alphabet, member) for member in self.sorted_members())

    def sorted_members(self) -> list[RawWord]:
        return sorted(self.members, key=self.alphabet.sort_key)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, word: object) -> bool:
        if isinstance(word, Word):
            return word.alphabet == self.alphabet and word.symbols in self.members
        if isinstance(word, tuple):
            return word in self.members
        return False

    def _combine(self, other: FiniteLanguage, members: frozenset[RawWord]) -> FiniteLanguage:
        self.alphabet.require_same(other.alphabet)
        return FiniteLanguage(self.alphabet, members)

    def __or__(self, other: FiniteLanguage) -> FiniteLanguage:
        return self._combine(other, self.members | other.members)

    def __and__(self, other: FiniteLanguage) -> FiniteLanguage:
        return self._combine(other, self.members & other.members)

    def __sub__(self, other: FiniteLanguage) -> FiniteLanguage:
        return self._combine(other, self.members - other.members)

    def __le__(self, other: FiniteLanguage) -> bool:
        self.alphabet.require_same(other.alphabet)
        return self.members <= other.members

    def truncate(self, max_length: int) -> FiniteLanguage:
        """長さが`max_length`以下の語だけを残す。"""
        return FiniteLanguage(self.alphabet, frozenset(m for m in self.members if len(m) <= max_length))

    @property
    def max_length(self) -> int:
        """最長語の長さ。空言語では0。"""
        return max((len(member) for member in self.members), default=0)

    def is_empty(self) -> bool:
        return not self.members


def iter_words_upto(alphabet: Alphabet, max_length: int) -> Iterator[RawWord]:
    """Σ^{≤n}の語を正準順序で列挙する。"""
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    for length in range(max_length + 1):
        yield from itertools.product(alphabet.symbols, repeat=length)


def words_upto(alphabet: Alphabet, max_length: int) -> FiniteLanguage:
    """Σ^{≤n}全体を有限言語として返す。"""
    return FiniteLanguage(alphabet, frozenset(iter_words_upto(alphabet, max_length)))


def iter_parikh_vectors_upto(dimension: int, max_total: int) -> Iterator[tuple[int, ...]]:
    """成分和が`max_total`以下の非負整数ベクトルを和の昇順・辞書式で列挙する。"""
    for total in range(max_total + 1):
        yield from _compositions(dimension, total)


def _compositions(dimension: int, total: int) -> Iterator[tuple[int, ...]]:
    if dimension == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in _compositions(dimension - 1, total - head):
            yield (head, *tail)


def random_language(rng: random.Random, alphabet: Alphabet, max_words: int, max_length: int) -> FiniteLanguage:
    """長さ`max_length`以下の語を最大`max_words`個選んだランダムな有限言語を返す。空言語もありうる。"""
    if max_words < 0:
        raise ValueError(f"語数の上限は0以上である必要があります。max_words={max_words}")
    members = {
        tuple(rng.choice(alphabet.symbols) for _ in range(rng.randint(0, max_length)))
        for _ in range(rng.randint(0, max_words))
    }
    return FiniteLanguage(alphabet, frozenset(members))
