"""機械ファイル形式と機械構成に関する定数を定義する。"""

ALPHABET_KEY = "alphabet"
STATES_KEY = "states"
START_KEY = "start"
FINAL_KEY = "final"
RULE_KEY = "rule"
KEY_SEPARATOR = ":"
RULE_FIELD_COUNT = 3

# 決定化・最小化で生成する状態名の接頭辞。
DFA_STATE_PREFIX = "d"
MIN_DFA_STATE_PREFIX = "m"
THOMPSON_STATE_PREFIX = "t"
WORD_PATH_STATE_PREFIX = "p"
PRODUCT_STATE_SEPARATOR = "|"
LETTERIZE_STATE_SEPARATOR = "~"
UNION_START_STATE = "u_start"
STAR_START_STATE = "k_start"
LEFT_OPERAND_PREFIX = "1_"
RIGHT_OPERAND_PREFIX = "2_"

# 二値符号化の記号。
BINARY_ZERO = "0"
BINARY_ONE = "1"

# GJFA探索で記号を1文字へ写像する際の先頭コードポイント(私用領域)。
GJFA_ENCODING_BASE_CODEPOINT = 0xE000
