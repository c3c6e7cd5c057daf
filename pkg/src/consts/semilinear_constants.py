"""半線形集合の演算とファイル形式に関する定数を定義する。"""

# sl_starの展開で許容する成分数の上限。
DEFAULT_STAR_COMPONENT_CAP = 2**16

BASE_KEY = "base"
PERIODS_KEY = "periods"
FIELD_SEPARATOR = ";"
PERIOD_OPEN = "("
PERIOD_CLOSE = ")"
