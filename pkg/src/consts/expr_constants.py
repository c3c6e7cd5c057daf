"""式の構文に関する定数を定義する。"""

EMPTY_SET_TEXT = "#E"
EPSILON_TEXT = "#e"
EXPRESSION_MARK = "#"
EMPTY_SET_SUFFIX = "E"
EPSILON_SUFFIX = "e"

UNION_OPERATOR = "+"
CONCAT_OPERATOR = "."
SHUFFLE_OPERATOR = "&"
STAR_OPERATOR = "*"
ITER_SHUFFLE_OPERATOR = "&*"
OPEN_PAREN = "("
CLOSE_PAREN = ")"

# ランダム式生成の既定深さ。
RANDOM_EXPR_DEFAULT_DEPTH = 4

# 式ファイルのコメント行の接頭辞。`#E`・`#e`と異なり空白を伴う。
EXPR_FILE_COMMENT_PREFIX = "# "

# 記号を1つも含まない式からアルファベットを推定する際の既定記号。
DEFAULT_INFERRED_SYMBOL = "a"
