"""コマンドライン引数の定義。"""

from __future__ import annotations

import argparse
from pathlib import Path

from consts.cli_constants import (
    DEFAULT_BOX_BOUND,
    DEFAULT_LENGTH_BOUND,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_SELFTEST_JOBS,
    OUTPUT_FORMATS,
)

MODES = ("fa", "jfa", "gjfa")
CONVERT_SOURCES = ("regex", "alpha-shuf", "machine")
CONVERT_TARGETS = ("alpha-shuf", "regex", "machine", "semilinear", "normal-form")
CHECK_KINDS = ("commutative", "perm-closed", "jfa-and-reg", "disjoint")
REDUCTION_KINDS = ("sat-jfa", "sat-nonreg", "sat-noncomm", "sat-gjfa", "ebc2", "sm-expr")
SELFTEST_LEVELS = ("quick", "full")


class UsageError(Exception):
    """引数の誤り。終了コード2に対応する。"""


class _Parser(argparse.ArgumentParser):
    """argparseの既定の終了処理(sys.exit)の代わりにUsageErrorを送出する。"""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _add_expr_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alphabet", default=None, help="式のアルファベット(`a,b,c`)。省略時は式から推定する。")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jumping-automata", description="跳躍有限オートマトンとシャッフル式のツールキット。")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="乱数を使う検査のシード。")
    parser.add_argument("--bound", type=int, default=DEFAULT_LENGTH_BOUND, help="有界判定・列挙の長さ上限。")
    parser.add_argument("--box", type=int, default=DEFAULT_BOX_BOUND, help="半線形集合の比較に使う座標ごとの上限。")
    parser.add_argument("--caps", default=None, help="上限の上書き(`sat_vars=10,gjfa_vars=3`)。")
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default=DEFAULT_OUTPUT_FORMAT, help="列挙結果の出力形式。")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    member = subparsers.add_parser("member", help="語の受理判定。")
    member.add_argument("--mode", choices=MODES, required=True)
    member.add_argument("-m", "--machine", type=Path, required=True, help="機械ファイル。")
    member.add_argument("-w", "--word", required=True, help="語リテラル(`a,b,c`、εは`@`)。")

    enumerate_parser = subparsers.add_parser("enumerate", help="言語の有界列挙。")
    enumerate_parser.add_argument("--mode", choices=MODES, default="fa")
    source = enumerate_parser.add_mutually_exclusive_group(required=True)
    source.add_argument("-m", "--machine", type=Path, help="機械ファイル。")
    source.add_argument("--expr", help="式テキスト。")
    _add_expr_source(enumerate_parser)
    enumerate_parser.add_argument("-n", type=int, default=None, help="長さ上限。省略時は--bound。")

    convert = subparsers.add_parser("convert", help="式・機械・半線形集合の変換。")
    convert.add_argument("--from", dest="source_kind", choices=CONVERT_SOURCES, required=True)
    convert.add_argument("--to", dest="target_kind", choices=CONVERT_TARGETS, required=True)
    convert.add_argument("input", help="式テキスト、または機械ファイルのパス(--from machine)。")
    _add_expr_source(convert)

    check = subparsers.add_parser("check", help="可換性・置換閉性・交差の判定。")
    check.add_argument("--what", choices=CHECK_KINDS, required=True)
    check_source = check.add_mutually_exclusive_group(required=True)
    check_source.add_argument("-m", "--machine", type=Path, help="機械ファイル。")
    check_source.add_argument("--expr", help="式テキスト(perm-closedのみ)。")
    _add_expr_source(check)
    check.add_argument("--mode", choices=MODES, default="jfa", help="perm-closedで機械を読む意味。")
    check.add_argument("--other", type=Path, default=None, help="disjointの相手の機械ファイル。")
    check.add_argument("-w", "--word", default=None, help="disjointの相手をperm(w)とする語リテラル。")
    check.add_argument("-n", type=int, default=None, help="長さ上限。省略時は--bound。")

    reduce = subparsers.add_parser("reduce", help="帰着構成のファイルを出力する。")
    reduce.add_argument("--kind", choices=REDUCTION_KINDS, required=True)
    reduce.add_argument("--binary", action="store_true", help="機械と語を{0,1}上へ符号化する。")
    reduce.add_argument("--out", type=Path, required=True, help="出力ディレクトリ。")
    reduce.add_argument("instance", type=Path, help="DIMACSファイル、またはEBC₂ファイル(--kind ebc2)。")

    selftest = subparsers.add_parser("selftest", help="性質検査と回帰コーパスを実行する。")
    selftest.add_argument("--level", choices=SELFTEST_LEVELS, default="quick")
    selftest.add_argument("--jobs", type=int, default=DEFAULT_SELFTEST_JOBS, help="並列実行するプロセス数。")
    selftest.add_argument("--corpus", type=Path, default=None, help="回帰コーパスのディレクトリ。")
    return parser


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """引数を解析する。誤りはUsageError。"""
    return build_parser().parse_args(argv)
