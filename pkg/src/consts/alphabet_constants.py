"""アルファベット・語リテラル・言語ファイルに関する定数を定義する。"""

# 記号トークンに含めてはならない予約文字。
RESERVED_CHARACTERS = frozenset(",@#()+.*&")

WORD_SEPARATOR = ","
EPSILON_LITERAL = "@"
COMMENT_MARK = "#"
LINE_SEPARATOR = "\n"
