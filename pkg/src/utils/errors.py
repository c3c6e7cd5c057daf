"""呼び出し側で区別が必要な例外型を定義する。"""

from __future__ import annotations


class AlphabetMismatchError(ValueError):
    """異なるアルファベット上の値を組み合わせた場合の例外。"""


class FlavorError(ValueError):
    """式の種別(正規・SHUF・α-SHUF)が変換の前提を満たさない場合の例外。"""


class MachineKindError(ValueError):
    """一般機械を有限機械専用の処理へ渡した場合の例外。"""


class ExprSyntaxError(ValueError):
    """式テキストの構文誤り。`position`は0始まりの文字位置。"""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} 位置={position}")
        self.position = position


class MachineFormatError(ValueError):
    """機械ファイル・半線形ファイルなど行指向ファイルの形式誤り。"""

    def __init__(self, message: str, line_number: int | None = None) -> None:
        detail = message if line_number is None else f"{message} 行={line_number}"
        super().__init__(detail)
        self.line_number = line_number


class CapExceededError(ValueError):
    """設定上限を超える入力を受け取った場合の例外。"""

    def __init__(self, cap_name: str, limit: int, actual: int) -> None:
        super().__init__(f"上限を超えています。cap={cap_name} 上限={limit} 実際={actual}")
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual


class ResourceLimitError(RuntimeError):
    """展開結果が資源上限を超える場合の例外。入力ではなく計算途中の規模で判定する。"""

    def __init__(self, cap_name: str, limit: int, actual: int) -> None:
        super().__init__(f"展開結果が上限を超えます。cap={cap_name} 上限={limit} 実際={actual}")
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
