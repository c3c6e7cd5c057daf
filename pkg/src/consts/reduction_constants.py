"""帰着構成とオラクルに関する定数を定義する。"""

DEFAULT_SAT_VARS_CAP = 20
DEFAULT_EBC2_BLOCKS_CAP = 8
DEFAULT_SM_VARS_CAP = 6
DEFAULT_GJFA_VARS_CAP = 4
DEFAULT_GJFA_CLAUSES_CAP = 4

CLAUSE_SIZE = 3

DIMACS_COMMENT_MARK = "c"
DIMACS_PROBLEM_MARK = "p"
DIMACS_FORMAT_NAME = "cnf"
DIMACS_CLAUSE_TERMINATOR = 0

EBC2_TARGET_KEY = "v"
EBC2_BLOCK_KEY = "u"

# 3SAT→JFA(全変数を順に割り当てる機械)の記号と状態名。
SAT_JFA_CLAUSE_SYMBOL_PREFIX = "c"
SAT_JFA_INITIAL_STATE = "q0"
TRUE_SUFFIX = "T"
FALSE_SUFFIX = "F"

# 固定GJFAで使用するトークン。
STAR_TOKEN = "st"
STAR_BAR_TOKEN = "stb"
HASH_TOKEN = "hash"
HASH_BAR_TOKEN = "hashb"
ZERO_TOKEN = "0"
ONE_TOKEN = "1"
ZERO_BAR_TOKEN = "0b"
ONE_BAR_TOKEN = "1b"
C_TOKEN = "c"
C_BAR_TOKEN = "cb"
C_TRUE_TOKEN = "cT"
C_FALSE_TOKEN = "cF"

# 単項正規表現の記号。
UNARY_SYMBOL = "a"
PAIRING_SYMBOL = "b"

# 二値符号化後の長さ係数の上限(11トークンのアルファベット)。
BINARY_LENGTH_FACTOR_LIMIT = 13

# EBC₂を解く固定GJFAの状態名。
EBC2_OPEN_STATE = "qC"
EBC2_READ_STATE = "qD"
EBC2_ZERO_STATE = "q0"
EBC2_ONE_STATE = "q1"

# 3SATを解く固定GJFAの状態名。真偽別の状態には接尾辞T/Fを付ける。
SAT_GJFA_VARIABLE_STATE = "qA"
SAT_GJFA_LITERAL_STATE = "qB"
SAT_GJFA_CODE_STATE = "qC"
SAT_GJFA_ZERO_STATE = "q0"
SAT_GJFA_ONE_STATE = "q1"
SAT_GJFA_SKIP_STATE = "qD"
SAT_GJFA_NONE_LEFT_STATE = "qE"
SAT_GJFA_ONE_LEFT_STATE = "qF"
SAT_GJFA_TWO_LEFT_STATE = "qG"
