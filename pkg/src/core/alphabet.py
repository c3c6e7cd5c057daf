"""アルファベット・語・Parikhベクトルの基本型を定義する。"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from consts.alphabet_constants import EPSILON_LITERAL, RESERVED_CHARACTERS, WORD_SEPARATOR
from utils.errors import AlphabetMismatchError


# 補助処理
def validate_symbol_token(token: str) -> None:
    """記号トークンが空白・予約文字を含まない非空文字列か確認する。

    引数:
        token: 確認対象のトークン。

    戻り値:
        なし。

    例外:
        TypeError: 文字列でない場合。
        ValueError: 空、空白を含む、または予約文字を含む場合。
    """
    if not isinstance(token, str):
        raise TypeError(f"記号トークンは文字列である必要があります。token={token!r}")

    if not token:
        raise ValueError("記号トークンが空です。")

    if any(character.isspace() for character in token):
        raise ValueError(f"記号トークンに空白は使用できません。token={token!r}")

    reserved = sorted(set(token) & RESERVED_CHARACTERS)
    if reserved:
        raise ValueError(f"記号トークンに予約文字は使用できません。token={token!r} 予約文字={''.join(reserved)}")


@dataclass(frozen=True)
class Alphabet:
    """順序付きの有限アルファベット。並び順がParikh座標の順序を決める。"""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise ValueError("アルファベットが空です。")

        for symbol in symbols:
            validate_symbol_token(symbol)

        if len(set(symbols)) != len(symbols):
            raise ValueError(f"アルファベットに重複した記号があります。symbols={symbols}")

    @cached_property
    def index(self) -> dict[str, int]:
        """記号から座標番号への対応表。"""
        return {symbol: position for position, symbol in enumerate(self.symbols)}

    def position(self, symbol: str) -> int:
        """記号の座標番号を返す。未登録の記号はValueError。"""
        try:
            return self.index[symbol]
        except KeyError as exc:
            raise ValueError(f"アルファベットに存在しない記号です。symbol={symbol!r} alphabet={self.symbols}") from exc

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.index

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def require_same(self, other: Alphabet) -> None:
        """他方と同一のアルファベットでなければAlphabetMismatchErrorを送出する。"""
        if self != other:
            raise AlphabetMismatchError(f"アルファベットが一致しません。left={self.symbols} right={other.symbols}")

    def sort_key(self, symbols: tuple[str, ...]) -> tuple[int, tuple[int, ...]]:
        """語の正準順序(長さ、次に記号番号の辞書式)のキーを返す。"""
        index = self.index
        return len(symbols), tuple(index[symbol] for symbol in symbols)


@dataclass(frozen=True)
class Word:
    """アルファベット上の語。空の記号列はεを表す。"""

    alphabet: Alphabet
    symbols: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        unknown = [symbol for symbol in symbols if symbol not in self.alphabet]
        if unknown:
            raise ValueError(
                f"アルファベットに存在しない記号を含む語です。unknown={unknown} alphabet={self.alphabet.symbols}"
            )

    @property
    def length(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __add__(self, other: Word) -> Word:
        self.alphabet.require_same(other.alphabet)
        return Word(self.alphabet, self.symbols + other.symbols)

    def is_empty(self) -> bool:
        return not self.symbols

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return self.alphabet.sort_key(self.symbols)

    def __str__(self) -> str:
        if not self.symbols:
            return EPSILON_LITERAL
        return WORD_SEPARATOR.join(self.symbols)


@dataclass(frozen=True)
class ParikhVector:
    """語の可換像。各記号の出現回数をアルファベット順に並べたもの。"""

    alphabet: Alphabet
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        counts = tuple(self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != len(self.alphabet):
            raise ValueError(f"Parikhベクトルの次元が一致しません。counts={counts} 次元={len(self.alphabet)}")

        if any(count < 0 for count in counts):
            raise ValueError(f"Parikhベクトルに負の成分があります。counts={counts}")

    @classmethod
    def zero(cls, alphabet: Alphabet) -> ParikhVector:
        return cls(alphabet, (0,) * len(alphabet))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: ParikhVector) -> ParikhVector:
        self.alphabet.require_same(other.alphabet)
        summed = tuple(left + right for left, right in zip(self.counts, other.counts, strict=True))
        return ParikhVector(self.alphabet, summed)

    def canonical_word(self) -> Word:
        """記号をアルファベット順に重複度分並べた代表語を返す。"""
        symbols: list[str] = []
        for symbol, count in zip(self.alphabet.symbols, self.counts, strict=True):
            symbols.extend([symbol] * count)
        return Word(self.alphabet, tuple(symbols))
