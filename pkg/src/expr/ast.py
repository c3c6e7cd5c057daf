"""正規表現・SHUF式・α-SHUF式で共有する構文木を定義する。"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass

from core.alphabet import Alphabet, Word


class Expr:
    """式ノードの基底型。すべての部分木は1つのアルファベットを共有する。"""

    __slots__ = ()

    @property
    def alphabet(self) -> Alphabet:
        raise NotImplementedError

    def children(self) -> tuple[Expr, ...]:
        return ()


@dataclass(frozen=True)
class EmptySet(Expr):
    """空集合∅。"""

    language_alphabet: Alphabet

    @property
    def alphabet(self) -> Alphabet:
        return self.language_alphabet


@dataclass(frozen=True)
class Epsilon(Expr):
    """空語のみからなる言語{ε}。"""

    language_alphabet: Alphabet

    @property
    def alphabet(self) -> Alphabet:
        return self.language_alphabet


@dataclass(frozen=True)
class Atom(Expr):
    """長さ1以上の語1つからなる言語。"""

    word: Word

    def __post_init__(self) -> None:
        if self.word.is_empty():
            raise ValueError("Atomの語は長さ1以上である必要があります。εにはEpsilonを使用してください。")

    @property
    def alphabet(self) -> Alphabet:
        return self.word.alphabet


@dataclass(frozen=True)
class BinaryExpr(Expr):
    left: Expr
    right: Expr

    def __post_init__(self) -> None:
        self.left.alphabet.require_same(self.right.alphabet)

    @property
    def alphabet(self) -> Alphabet:
        return self.left.alphabet

    def children(self) -> tuple[Expr, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class UnaryExpr(Expr):
    inner: Expr

    @property
    def alphabet(self) -> Alphabet:
        return self.inner.alphabet

    def children(self) -> tuple[Expr, ...]:
        return (self.inner,)


class Union(BinaryExpr):
    """和集合。"""


class Concat(BinaryExpr):
    """連接。"""


class Shuffle(BinaryExpr):
    """シャッフル。"""


class Star(UnaryExpr):
    """Kleene閉包。"""


class IterShuffle(UnaryExpr):
    """反復シャッフル。"""


# 補助処理
def _fold_balanced(
    items: Sequence[Expr], combine: Callable[[Expr, Expr], Expr], empty: Callable[[], Expr]
) -> Expr:
    """2分木の深さを対数に抑えて畳み込む。"""
    if not items:
        return empty()
    layer = list(items)
    while len(layer) > 1:
        paired = [combine(layer[i], layer[i + 1]) for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            paired.append(layer[-1])
        layer = paired
    return layer[0]


def _fold_left(items: Sequence[Expr], combine: Callable[[Expr, Expr], Expr], empty: Callable[[], Expr]) -> Expr:
    if not items:
        return empty()
    result = items[0]
    for item in items[1:]:
        result = combine(result, item)
    return result


# メイン処理
def union_all(alphabet: Alphabet, items: Sequence[Expr]) -> Expr:
    """式の和を平衡木として作る。空列は∅。"""
    return _fold_balanced(items, Union, lambda: EmptySet(alphabet))


def union_left(alphabet: Alphabet, items: Sequence[Expr]) -> Expr:
    """式の和を左結合で作る。空列は∅。"""
    return _fold_left(items, Union, lambda: EmptySet(alphabet))


def letterized_shuffle(word: Word) -> Expr:
    """語a₁…aₙを単記号Atomのシャッフルa₁⧢…⧢aₙへ変換する。εはEpsilon。"""
    letters = [Atom(Word(word.alphabet, (symbol,))) for symbol in word.symbols]
    return _fold_balanced(letters, Shuffle, lambda: Epsilon(word.alphabet))


def iter_nodes(expr: Expr) -> Iterator[Expr]:
    """前順で全ノードを列挙する。深い木でも再帰しない。"""
    stack = [expr]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def map_expr(expr: Expr, leaf: Callable[[Expr], Expr], node_types: dict[type, type] | None = None) -> Expr:
    """葉を`leaf`で置き換え、内部ノードの型を`node_types`に従って付け替えた式を返す。"""
    mapping = node_types or {}
    if isinstance(expr, BinaryExpr):
        node_type = mapping.get(type(expr), type(expr))
        return node_type(map_expr(expr.left, leaf, mapping), map_expr(expr.right, leaf, mapping))
    if isinstance(expr, UnaryExpr):
        node_type = mapping.get(type(expr), type(expr))
        return node_type(map_expr(expr.inner, leaf, mapping))
    return leaf(expr)


def rebase_alphabet(expr: Expr, alphabet: Alphabet) -> Expr:
    """式を記号を包含する別のアルファベット上へ付け替える。

    引数:
        expr: 対象の式。
        alphabet: 新しいアルファベット。元のすべての記号を含む必要がある。

    戻り値:
        同じ構造で新しいアルファベットを共有する式。

    例外:
        ValueError: 新しいアルファベットに存在しない記号がある場合。
    """
    missing = [symbol for symbol in expr.alphabet.symbols if symbol not in alphabet]
    if missing:
        raise ValueError(f"付け替え先のアルファベットに存在しない記号があります。missing={missing}")

    def rebase_leaf(node: Expr) -> Expr:
        if isinstance(node, EmptySet):
            return EmptySet(alphabet)
        if isinstance(node, Epsilon):
            return Epsilon(alphabet)
        if isinstance(node, Atom):
            return Atom(Word(alphabet, node.word.symbols))
        raise TypeError(f"未対応の式ノードです。node={type(node).__name__}")

    return map_expr(expr, rebase_leaf)
