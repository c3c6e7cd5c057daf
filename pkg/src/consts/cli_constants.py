"""コマンドライン処理に関する定数を定義する。"""

DEFAULT_LENGTH_BOUND = 6
DEFAULT_BOX_BOUND = 6
DEFAULT_SEED = 0
DEFAULT_SELFTEST_JOBS = 1
CORPUS_DIRECTORY_NAME = "corpus"
CORPUS_EXPECTATION_FILE_NAME = "regression.txt"

EXIT_SUCCESS = 0
EXIT_NEGATIVE = 1
EXIT_USAGE_ERROR = 2
EXIT_CAP_EXCEEDED = 3

CAPS_ITEM_SEPARATOR = ","
CAPS_VALUE_SEPARATOR = "="

MANIFEST_FILE_NAME = "manifest.txt"
MACHINE_FILE_NAME = "machine.txt"
WORD_FILE_NAME = "word.txt"
EXPR_FILE_NAME = "expr.txt"
MANIFEST_SEPARATOR = ": "

OUTPUT_FORMATS = ("plain", "machine-file", "language-file", "semilinear-file")
DEFAULT_OUTPUT_FORMAT = "language-file"

# selftestの検査数。(quick, full)の順。
SELFTEST_REGEX_SAMPLES = (20, 100)
SELFTEST_LAW_SAMPLES = (20, 100)
SELFTEST_ROUND_TRIP_SAMPLES = (10, 50)
SELFTEST_COMMUTATIVITY_SAMPLES = (20, 100)
SELFTEST_SAT_JFA_RANDOM_SAMPLES = (10, 50)
SELFTEST_SAT_GJFA_RANDOM_SAMPLES = (0, 20)
SELFTEST_LAW_ALPHABET = ("a", "b")
SELFTEST_RANDOM_ALPHABET = ("a", "b", "c")
SELFTEST_EVAL_BOUND = 6
SELFTEST_FAILURE_DETAIL_LIMIT = 3
REGRESSION_PASS_MARK = "ok"
REGRESSION_FAIL_MARK = "FAIL"
