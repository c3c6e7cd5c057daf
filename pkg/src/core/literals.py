"""語リテラルと言語ファイルの読み書きを提供する。"""

from __future__ import annotations

import logging

from consts.alphabet_constants import COMMENT_MARK, EPSILON_LITERAL, LINE_SEPARATOR, WORD_SEPARATOR
from core.alphabet import Alphabet, Word
from core.language import FiniteLanguage

logger = logging.getLogger(__name__)


# 補助処理
def strip_comment(line: str) -> str:
    """`#`以降を除去し前後の空白を落とす。"""
    return line.split(COMMENT_MARK, 1)[0].strip()


# メイン処理
def parse_word_literal(text: str, alphabet: Alphabet) -> Word:
    """語リテラル(`a,b,c`、εは`@`)を語へ変換する。

    引数:
        text: 語リテラル。
        alphabet: 語のアルファベット。

    戻り値:
        変換した語。

    例外:
        ValueError: 空トークン、未登録の記号、または予約文字を含む場合。
    """
    literal = text.strip()
    if literal == EPSILON_LITERAL:
        return Word(alphabet, ())

    if not literal:
        raise ValueError("語リテラルが空です。εは`@`で指定してください。")

    tokens = tuple(token.strip() for token in literal.split(WORD_SEPARATOR))
    for token in tokens:
        if not token:
            raise ValueError(f"語リテラルに空のトークンがあります。text={text!r}")
        if token not in alphabet:
            raise ValueError(f"アルファベットに存在しない記号です。token={token!r} alphabet={alphabet.symbols}")
    return Word(alphabet, tokens)


def format_word(word: Word) -> str:
    """語を語リテラルへ変換する。"""
    return str(word)


def parse_language_file(text: str, alphabet: Alphabet) -> FiniteLanguage:
    """1行1語の言語ファイルを読み込む。`#`以降はコメント。"""
    words: list[Word] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        literal = strip_comment(line)
        if not literal:
            continue
        try:
            words.append(parse_word_literal(literal, alphabet))
        except ValueError:
            logger.exception("異常: 言語ファイルの語を解釈できません。line=%s", line_number)
            raise
    return FiniteLanguage.from_words(alphabet, words)


def print_language_file(language: FiniteLanguage) -> str:
    """言語を正準順序の1行1語テキストへ変換する。空言語は空文字列。"""
    return "".join(format_word(word) + LINE_SEPARATOR for word in language.words)
