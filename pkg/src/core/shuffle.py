"""有限言語上のシャッフル・置換閉包の演算を提供する。"""

from __future__ import annotations

import logging
import math
from collections import Counter
from collections.abc import Callable, Iterator

from core.alphabet import Alphabet, ParikhVector, Word
from core.language import FiniteLanguage, RawWord

logger = logging.getLogger(__name__)


# 補助処理
def parikh_counts(alphabet: Alphabet, symbols: RawWord) -> tuple[int, ...]:
    """記号タプルの出現回数をアルファベット順に数える。"""
    counts = [0] * len(alphabet)
    index = alphabet.index
    for symbol in symbols:
        counts[index[symbol]] += 1
    return tuple(counts)


def _shuffle_raw(left: RawWord, right: RawWord) -> frozenset[RawWord]:
    """2つの記号タプルのシャッフルを漸化式とメモ化で求める。"""
    memo: dict[tuple[int, int], frozenset[RawWord]] = {}

    def suffixes(i: int, j: int) -> frozenset[RawWord]:
        key = (i, j)
        if key in memo:
            return memo[key]
        if i == len(left):
            result = frozenset({right[j:]})
        elif j == len(right):
            result = frozenset({left[i:]})
        else:
            head_left = left[i]
            head_right = right[j]
            result = frozenset((head_left, *rest) for rest in suffixes(i + 1, j)) | frozenset(
                (head_right, *rest) for rest in suffixes(i, j + 1)
            )
        memo[key] = result
        return result

    return suffixes(0, 0)


def iter_distinct_permutations(alphabet: Alphabet, counts: tuple[int, ...]) -> Iterator[RawWord]:
    """指定した出現回数を持つ語(Parikh類)を辞書式に重複なく列挙する。"""
    remaining = list(counts)
    total = sum(remaining)
    prefix: list[str] = []

    def extend() -> Iterator[RawWord]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for position, symbol in enumerate(alphabet.symbols):
            if remaining[position] == 0:
                continue
            remaining[position] -= 1
            prefix.append(symbol)
            yield from extend()
            prefix.pop()
            remaining[position] += 1

    yield from extend()


def permutation_class_size(counts: tuple[int, ...]) -> int:
    """Parikh類の大きさ(多項係数)を返す。"""
    size = math.factorial(sum(counts))
    for count in counts:
        size //= math.factorial(count)
    return size


# メイン処理
def parikh(word: Word) -> ParikhVector:
    """語のParikhベクトルを返す。"""
    return ParikhVector(word.alphabet, parikh_counts(word.alphabet, word.symbols))


def shuffle_words(left: Word, right: Word) -> FiniteLanguage:
    """2語のシャッフル(すべてのインタリーブ)を返す。

    引数:
        left: 左の語。
        right: 右の語。

    戻り値:
        インタリーブ全体の有限言語。要素数は二項係数C(|u|+|v|,|u|)以下。

    例外:
        AlphabetMismatchError: アルファベットが異なる場合。
    """
    left.alphabet.require_same(right.alphabet)
    return FiniteLanguage(left.alphabet, _shuffle_raw(left.symbols, right.symbols))


def shuffle_langs(left: FiniteLanguage, right: FiniteLanguage, max_length: int | None = None) -> FiniteLanguage:
    """2言語のシャッフルを返す。`max_length`指定時はその長さを超える組を省く。"""
    left.alphabet.require_same(right.alphabet)
    members: set[RawWord] = set()
    for left_member in left.members:
        for right_member in right.members:
            if max_length is not None and len(left_member) + len(right_member) > max_length:
                continue
            members.update(_shuffle_raw(left_member, right_member))
    return FiniteLanguage(left.alphabet, frozenset(members))


def concat_langs(left: FiniteLanguage, right: FiniteLanguage, max_length: int | None = None) -> FiniteLanguage:
    """2言語の連接を返す。`max_length`指定時はその長さを超える組を省く。"""
    left.alphabet.require_same(right.alphabet)
    members = frozenset(
        left_member + right_member
        for left_member in left.members
        for right_member in right.members
        if max_length is None or len(left_member) + len(right_member) <= max_length
    )
    return FiniteLanguage(left.alphabet, members)


def star_upto(language: FiniteLanguage, max_length: int) -> FiniteLanguage:
    """Kleene閉包を長さ`max_length`以下に切り詰めて返す。"""
    return _closure_upto(language, max_length, lambda prefix, member: frozenset({prefix + member}))


def iter_shuffle_upto(language: FiniteLanguage, max_length: int) -> FiniteLanguage:
    """反復シャッフルを長さ`max_length`以下に切り詰めて返す。

    引数:
        language: 対象の有限言語。
        max_length: 長さ上限。0以上。

    戻り値:
        (⋃_k L^{⧢,k}) ∩ Σ^{≤n}。εを必ず含む。

    例外:
        ValueError: 長さ上限が負の場合。

    補足:
        新しい語が現れなくなるまで既知の語とLの語をシャッフルする。
        切り詰めた全体集合が有限なので必ず停止する。
    """
    return _closure_upto(language, max_length, _shuffle_raw)


def _closure_upto(
    language: FiniteLanguage, max_length: int, combine: Callable[[RawWord, RawWord], frozenset[RawWord]]
) -> FiniteLanguage:
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    generators = [member for member in language.members if member and len(member) <= max_length]
    reached: set[RawWord] = {()}
    frontier: set[RawWord] = {()}
    while frontier:
        discovered: set[RawWord] = set()
        for prefix in frontier:
            for member in generators:
                if len(prefix) + len(member) > max_length:
                    continue
                discovered.update(combine(prefix, member))
        frontier = discovered - reached
        reached |= frontier
    return FiniteLanguage(language.alphabet, frozenset(reached))


def perm_word(word: Word) -> FiniteLanguage:
    """語のすべての置換を返す。"""
    counts = parikh_counts(word.alphabet, word.symbols)
    return FiniteLanguage(word.alphabet, frozenset(iter_distinct_permutations(word.alphabet, counts)))


def perm_closure(language: FiniteLanguage) -> FiniteLanguage:
    """言語の置換閉包perm(L)を返す。"""
    alphabet = language.alphabet
    classes = {parikh_counts(alphabet, member) for member in language.members}
    members: set[RawWord] = set()
    for counts in classes:
        members.update(iter_distinct_permutations(alphabet, counts))
    return FiniteLanguage(alphabet, frozenset(members))


def is_perm_closed(language: FiniteLanguage) -> bool:
    """perm(L) = Lか判定する。Parikh類ごとに要素数と多項係数を比べる。"""
    class_sizes = Counter(parikh_counts(language.alphabet, member) for member in language.members)
    return all(size == permutation_class_size(counts) for counts, size in class_sizes.items())


def find_missing_permutation(language: FiniteLanguage) -> tuple[RawWord, RawWord] | None:
    """Lに含まれる語と、その置換のうちLに含まれない語の組を正準順序で最初の1組返す。"""
    alphabet = language.alphabet
    class_sizes = Counter(parikh_counts(alphabet, member) for member in language.members)
    for member in language.sorted_members():
        counts = parikh_counts(alphabet, member)
        if class_sizes[counts] == permutation_class_size(counts):
            continue
        for candidate in iter_distinct_permutations(alphabet, counts):
            if candidate not in language.members:
                return member, candidate
    return None
