"""式テキストの構文解析と出力を提供する。

文法(優先順位の高い順):
    後置 `*`(Kleene閉包)と `&*`(反復シャッフル)
    中置 `.`(連接)と `&`(シャッフル)。同順位・左結合
    中置 `+`(和集合)
原子は語リテラル(`a` や `a,b`)、`#E`(∅)、`#e` と `@`(ε)、括弧。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from consts.alphabet_constants import EPSILON_LITERAL, RESERVED_CHARACTERS, WORD_SEPARATOR
from consts.expr_constants import (
    CLOSE_PAREN,
    CONCAT_OPERATOR,
    DEFAULT_INFERRED_SYMBOL,
    EMPTY_SET_SUFFIX,
    EMPTY_SET_TEXT,
    EPSILON_SUFFIX,
    EPSILON_TEXT,
    EXPRESSION_MARK,
    EXPR_FILE_COMMENT_PREFIX,
    ITER_SHUFFLE_OPERATOR,
    OPEN_PAREN,
    SHUFFLE_OPERATOR,
    STAR_OPERATOR,
    UNION_OPERATOR,
)
from core.alphabet import Alphabet, Word
from expr.ast import Atom, Concat, EmptySet, Epsilon, Expr, IterShuffle, Shuffle, Star, Union
from utils.errors import ExprSyntaxError

logger = logging.getLogger(__name__)


class TokenKind(Enum):
    SYMBOL = "symbol"
    COMMA = "comma"
    EMPTY_SET = "empty_set"
    EPSILON = "epsilon"
    UNION = "union"
    CONCAT = "concat"
    SHUFFLE = "shuffle"
    STAR = "star"
    ITER_SHUFFLE = "iter_shuffle"
    OPEN = "open"
    CLOSE = "close"
    END = "end"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    position: int


_SINGLE_CHARACTER_TOKENS = {
    UNION_OPERATOR: TokenKind.UNION,
    CONCAT_OPERATOR: TokenKind.CONCAT,
    STAR_OPERATOR: TokenKind.STAR,
    OPEN_PAREN: TokenKind.OPEN,
    CLOSE_PAREN: TokenKind.CLOSE,
    WORD_SEPARATOR: TokenKind.COMMA,
    EPSILON_LITERAL: TokenKind.EPSILON,
}


# 補助処理
def tokenize(text: str) -> list[Token]:
    """式テキストをトークン列へ分割する。"""
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        character = text[position]
        if character.isspace():
            position += 1
            continue

        if text.startswith(ITER_SHUFFLE_OPERATOR, position):
            tokens.append(Token(TokenKind.ITER_SHUFFLE, ITER_SHUFFLE_OPERATOR, position))
            position += len(ITER_SHUFFLE_OPERATOR)
            continue

        if character == SHUFFLE_OPERATOR:
            tokens.append(Token(TokenKind.SHUFFLE, character, position))
            position += 1
            continue

        if character == EXPRESSION_MARK:
            suffix = text[position + 1 : position + 2]
            if suffix == EMPTY_SET_SUFFIX:
                tokens.append(Token(TokenKind.EMPTY_SET, EMPTY_SET_TEXT, position))
            elif suffix == EPSILON_SUFFIX:
                tokens.append(Token(TokenKind.EPSILON, EPSILON_TEXT, position))
            else:
                raise ExprSyntaxError(f"`#`の後には`E`か`e`が必要です。text={text!r}", position)
            position += 2
            continue

        if character in _SINGLE_CHARACTER_TOKENS:
            tokens.append(Token(_SINGLE_CHARACTER_TOKENS[character], character, position))
            position += 1
            continue

        start = position
        while position < len(text) and not text[position].isspace() and text[position] not in RESERVED_CHARACTERS:
            position += 1
        tokens.append(Token(TokenKind.SYMBOL, text[start:position], start))

    tokens.append(Token(TokenKind.END, "", len(text)))
    return tokens


class _ExprParser:
    """再帰下降の構文解析器。"""

    def __init__(self, text: str, alphabet: Alphabet) -> None:
        self.text = text
        self.alphabet = alphabet
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        token = self.current
        if token.kind is not kind:
            raise ExprSyntaxError(f"`{kind.value}`が必要です。実際={token.text or '終端'!r}", token.position)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.parse_union()
        if self.current.kind is not TokenKind.END:
            raise ExprSyntaxError(f"解釈できないトークンです。token={self.current.text!r}", self.current.position)
        return expr

    def parse_union(self) -> Expr:
        expr = self.parse_sequence()
        while self.current.kind is TokenKind.UNION:
            self.advance()
            expr = Union(expr, self.parse_sequence())
        return expr

    def parse_sequence(self) -> Expr:
        expr = self.parse_postfix()
        while self.current.kind in (TokenKind.CONCAT, TokenKind.SHUFFLE):
            operator = self.advance()
            right = self.parse_postfix()
            expr = Concat(expr, right) if operator.kind is TokenKind.CONCAT else Shuffle(expr, right)
        return expr

    def parse_postfix(self) -> Expr:
        expr = self.parse_primary()
        while self.current.kind in (TokenKind.STAR, TokenKind.ITER_SHUFFLE):
            operator = self.advance()
            expr = Star(expr) if operator.kind is TokenKind.STAR else IterShuffle(expr)
        return expr

    def parse_primary(self) -> Expr:
        token = self.current
        if token.kind is TokenKind.OPEN:
            self.advance()
            expr = self.parse_union()
            self.expect(TokenKind.CLOSE)
            return expr

        if token.kind is TokenKind.EMPTY_SET:
            self.advance()
            return EmptySet(self.alphabet)

        if token.kind is TokenKind.EPSILON:
            self.advance()
            return Epsilon(self.alphabet)

        if token.kind is TokenKind.SYMBOL:
            return self.parse_word_atom()

        raise ExprSyntaxError(f"式の原子が必要です。実際={token.text or '終端'!r}", token.position)

    def parse_word_atom(self) -> Expr:
        symbols = [self.parse_symbol()]
        while self.current.kind is TokenKind.COMMA:
            self.advance()
            symbols.append(self.parse_symbol())
        return Atom(Word(self.alphabet, tuple(symbols)))

    def parse_symbol(self) -> str:
        token = self.expect(TokenKind.SYMBOL)
        if token.text not in self.alphabet:
            raise ExprSyntaxError(
                f"アルファベットに存在しない記号です。symbol={token.text!r} alphabet={self.alphabet.symbols}",
                token.position,
            )
        return token.text


# メイン処理
def parse_expr(text: str, alphabet: Alphabet) -> Expr:
    """式テキストを構文木へ変換する。

    引数:
        text: 式テキスト。
        alphabet: 式のアルファベット。

    戻り値:
        構文木。

    例外:
        ExprSyntaxError: 構文誤り・未登録の記号・予約文字の誤用。位置を保持する。
    """
    return _ExprParser(text, alphabet).parse()


def print_expr(expr: Expr) -> str:
    """構文木を完全括弧付きのテキストへ変換する。parse_exprで同じ構文木に戻る。"""
    if isinstance(expr, EmptySet):
        return EMPTY_SET_TEXT
    if isinstance(expr, Epsilon):
        return EPSILON_TEXT
    if isinstance(expr, Atom):
        return WORD_SEPARATOR.join(expr.word.symbols)
    if isinstance(expr, Union):
        return f"{OPEN_PAREN}{print_expr(expr.left)}{UNION_OPERATOR}{print_expr(expr.right)}{CLOSE_PAREN}"
    if isinstance(expr, Concat):
        return f"{OPEN_PAREN}{print_expr(expr.left)}{CONCAT_OPERATOR}{print_expr(expr.right)}{CLOSE_PAREN}"
    if isinstance(expr, Shuffle):
        return f"{OPEN_PAREN}{print_expr(expr.left)}{SHUFFLE_OPERATOR}{print_expr(expr.right)}{CLOSE_PAREN}"
    if isinstance(expr, Star):
        return f"{print_expr(expr.inner)}{STAR_OPERATOR}"
    if isinstance(expr, IterShuffle):
        return f"{print_expr(expr.inner)}{ITER_SHUFFLE_OPERATOR}"
    raise TypeError(f"未対応の式ノードです。node={type(expr).__name__}")


def infer_alphabet(text: str) -> Alphabet:
    """式テキストに現れる記号を整列してアルファベットとする。記号がなければ既定記号1つ。"""
    symbols = sorted({token.text for token in tokenize(text) if token.kind is TokenKind.SYMBOL})
    return Alphabet(tuple(symbols) or (DEFAULT_INFERRED_SYMBOL,))


def strip_expr_comments(text: str) -> str:
    """式ファイルから`# `で始まるコメント行を除いた本文を返す。"""
    lines = [line for line in text.splitlines() if not line.lstrip().startswith(EXPR_FILE_COMMENT_PREFIX)]
    return " ".join(line.strip() for line in lines if line.strip())


def parse_expr_file(text: str, alphabet: Alphabet | None = None) -> Expr:
    """式ファイルを読み込む。アルファベットを省略した場合は本文から推定する。"""
    body = strip_expr_comments(text)
    return parse_expr(body, alphabet or infer_alphabet(body))
