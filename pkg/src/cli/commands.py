"""サブコマンドの実装と終了コードへの対応付けを提供する。"""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable
from multiprocessing import queues
from pathlib import Path

from cli.config import Caps, CliConfig
from cli.parser import UsageError, parse_arguments
from cli.selftest import format_report, run_selftest
from consts.alphabet_constants import LINE_SEPARATOR, WORD_SEPARATOR
from consts.cli_constants import (
    EXIT_CAP_EXCEEDED,
    EXIT_NEGATIVE,
    EXIT_SUCCESS,
    EXIT_USAGE_ERROR,
    EXPR_FILE_NAME,
    MACHINE_FILE_NAME,
    MANIFEST_FILE_NAME,
    MANIFEST_SEPARATOR,
    WORD_FILE_NAME,
)
from consts.expr_constants import EXPR_FILE_COMMENT_PREFIX
from core.alphabet import Alphabet, Word
from core.language import FiniteLanguage
from core.literals import format_word, parse_word_literal, print_language_file
from core.shuffle import parikh_counts
from deciders.bounded import LanguageSource, Semantics, is_perm_closed_bounded, jfa_disjointness_bounded
from deciders.commutativity import is_commutative_regular, jfa_membership_of_regular
from deciders.verdict import Verdict
from expr.ast import Expr
from expr.parser import infer_alphabet, parse_expr, print_expr
from expr.semantics import is_alpha_shuf, is_regular
from expr.thompson import thompson_machine
from expr.transforms import alpha_shuf_to_regex, regex_to_alpha_shuf
from machine.acceptance import fa_accepts, gjfa_accepts, jfa_accepts
from machine.elimination import machine_to_regex
from machine.machine_file import parse_machine, print_machine
from machine.model import Machine
from machine.operations import binary_homomorphism, finite_language_machine, word_to_jfa
from reductions.binary import binary_wrap, length_factor
from reductions.cnf import CnfFormula, brute_sat, parse_dimacs
from reductions.ebc2 import Ebc2Instance, brute_ebc2, parse_ebc2
from reductions.ebc2_gjfa import ebc2_fixed_machine, ebc2_to_word
from reductions.hardness import build_noncommutativity_nfa, build_nonregularity_jfa, stockmeyer_meyer_expr
from reductions.sat_gjfa import sat_fixed_gjfa, sat_to_gjfa_word
from reductions.sat_jfa import sat_to_jfa
from semilinear.conversion import alpha_shuf_to_semilinear, nfa_to_semilinear, semilinear_to_normalform
from semilinear.model import LinearSet, SemilinearSet
from semilinear.semilinear_file import print_semilinear
from utils.errors import CapExceededError, FlavorError, ResourceLimitError

logger = logging.getLogger(__name__)

WORD_PRODUCING_KINDS = ("sat-jfa", "sat-gjfa", "ebc2")


# 補助処理
def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError:
        logger.warning("異常: 入力ファイルを読み込めません。path=%s", path)
        raise


def _load_machine(path: Path) -> Machine:
    return parse_machine(_read_text(path))


def _load_expr(text: str, alphabet_option: str | None) -> Expr:
    alphabet = Alphabet(tuple(alphabet_option.split(WORD_SEPARATOR))) if alphabet_option else infer_alphabet(text)
    return parse_expr(text, alphabet)


def _bound(args: argparse.Namespace, config: CliConfig) -> int:
    bound = config.length_bound if args.n is None else args.n
    if bound < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。n={bound}")
    return bound


def _emit_verdict(verdict: Verdict) -> int:
    print(verdict)
    return EXIT_SUCCESS if verdict.is_positive else EXIT_NEGATIVE


def _format_language(language: FiniteLanguage, config: CliConfig, bound: int) -> str:
    """列挙結果を`--format`に従ってテキストにする。"""
    if config.output_format == "machine-file":
        return print_machine(finite_language_machine(language))
    if config.output_format == "semilinear-file":
        vectors = {parikh_counts(language.alphabet, symbols) for symbols in language.members}
        components = [LinearSet(vector) for vector in vectors]
        return print_semilinear(SemilinearSet(len(language.alphabet), tuple(components)), language.alphabet)
    if config.output_format == "plain":
        header = f"{EXPR_FILE_COMMENT_PREFIX}bound={bound} words={len(language)}{LINE_SEPARATOR}"
        return header + print_language_file(language)
    return print_language_file(language)


def _provenance(*items: str) -> str:
    return EXPR_FILE_COMMENT_PREFIX + " ".join(items) + LINE_SEPARATOR


def _format_expr(expr: Expr, header: str) -> str:
    return header + print_expr(expr) + LINE_SEPARATOR


def _manifest(entries: list[tuple[str, object]]) -> str:
    return "".join(f"{key}{MANIFEST_SEPARATOR}{value}{LINE_SEPARATOR}" for key, value in entries)


def _skipped_oracle(exc: CapExceededError) -> list[tuple[str, object]]:
    logger.warning("異常: オラクルの上限を超えたため省略します。cap=%s actual=%s", exc.cap_name, exc.actual)
    return [("oracle", f"skipped (cap {exc.cap_name})")]


def _sat_oracle(formula: CnfFormula, config: CliConfig) -> list[tuple[str, object]]:
    try:
        result = brute_sat(formula, config.caps.sat_vars)
    except CapExceededError as exc:
        return _skipped_oracle(exc)
    entries: list[tuple[str, object]] = [("oracle", "satisfiable" if result.satisfiable else "unsatisfiable")]
    if result.assignment is not None:
        entries.append(("assignment", WORD_SEPARATOR.join(str(int(value)) for value in result.assignment)))
    return entries


def _ebc2_oracle(instance: Ebc2Instance, caps: Caps) -> list[tuple[str, object]]:
    try:
        result = brute_ebc2(instance, caps.ebc2_blocks)
    except CapExceededError as exc:
        return _skipped_oracle(exc)
    entries: list[tuple[str, object]] = [("oracle", "exists" if result.exists else "none")]
    if result.order is not None:
        entries.append(("order", WORD_SEPARATOR.join(map(str, result.order)) or "@"))
    return entries



# メイン処理
def cmd_member(args: argparse.Namespace, config: CliConfig) -> int:
    """語の受理判定。受理ならyesで0、拒否ならnoで1。"""
    machine = _load_machine(args.machine)
    word = parse_word_literal(args.word, machine.alphabet)
    accepts: Callable[[Machine, Word], bool] = {"fa": fa_accepts, "jfa": jfa_accepts, "gjfa": gjfa_accepts}[args.mode]
    accepted = accepts(machine, word)
    print("yes" if accepted else "no")
    return EXIT_SUCCESS if accepted else EXIT_NEGATIVE


def cmd_enumerate(args: argparse.Namespace, config: CliConfig) -> int:
    """言語を長さ上限まで正準順序で列挙する。"""
    bound = _bound(args, config)
    if args.machine is not None:
        source = LanguageSource.from_machine(_load_machine(args.machine), Semantics(args.mode))
    else:
        source = LanguageSource.from_expr(_load_expr(args.expr, args.alphabet))

    logger.info("開始: 言語を列挙します。mode=%s bound=%s", args.mode, bound)
    language = source.slice_upto(bound)
    logger.info("終了: 言語を列挙しました。words=%s", len(language))
    sys.stdout.write(_format_language(language, config, bound))
    return EXIT_SUCCESS


def _convert_expr(expr: Expr, source_kind: str, target_kind: str, config: CliConfig) -> str:
    if source_kind == "regex" and not is_regular(expr):
        raise FlavorError("--from regexには連接・和・Kleene閉包だけの式を指定してください。")
    if source_kind == "alpha-shuf" and not is_alpha_shuf(expr):
        raise FlavorError("--from alpha-shufには単記号・和・シャッフル・反復シャッフルだけの式を指定してください。")

    header = _provenance(f"from={source_kind}", f"to={target_kind}")
    alpha_shuf = regex_to_alpha_shuf(expr) if source_kind == "regex" else expr
    if target_kind == "alpha-shuf":
        return _format_expr(alpha_shuf, header)
    if target_kind == "regex":
        return _format_expr(expr if source_kind == "regex" else alpha_shuf_to_regex(expr), header)
    if target_kind == "machine":
        return header + print_machine(thompson_machine(expr))

    semilinear = alpha_shuf_to_semilinear(alpha_shuf, config.caps.star_components)
    if target_kind == "semilinear":
        return header + print_semilinear(semilinear, expr.alphabet)
    return _format_expr(semilinear_to_normalform(semilinear, expr.alphabet), header)


def _convert_machine(machine: Machine, target_kind: str, config: CliConfig) -> str:
    header = _provenance("from=machine", f"to={target_kind}")
    if target_kind == "machine":
        return header + print_machine(machine)
    if target_kind == "regex":
        return _format_expr(machine_to_regex(machine), header)
    if target_kind == "alpha-shuf":
        return _format_expr(regex_to_alpha_shuf(machine_to_regex(machine)), header)

    semilinear = nfa_to_semilinear(machine, config.caps.star_components)
    if target_kind == "semilinear":
        return header + print_semilinear(semilinear, machine.alphabet)
    return _format_expr(semilinear_to_normalform(semilinear, machine.alphabet), header)


def cmd_convert(args: argparse.Namespace, config: CliConfig) -> int:
    """式・機械を別の表現へ変換する。出力の先頭に変換元・変換先のコメント行を付ける。"""
    if args.source_kind == "machine":
        text = _convert_machine(_load_machine(Path(args.input)), args.target_kind, config)
    else:
        text = _convert_expr(_load_expr(args.input, args.alphabet), args.source_kind, args.target_kind, config)
    sys.stdout.write(text)
    return EXIT_SUCCESS


def cmd_check(args: argparse.Namespace, config: CliConfig) -> int:
    """判定結果をYes・No・BoundedYes(上限)で出力する。Noなら終了コード1。"""
    if args.what == "perm-closed":
        if args.machine is not None:
            source = LanguageSource.from_machine(_load_machine(args.machine), Semantics(args.mode))
        else:
            source = LanguageSource.from_expr(_load_expr(args.expr, args.alphabet))
        return _emit_verdict(is_perm_closed_bounded(source, _bound(args, config)))

    if args.machine is None:
        raise UsageError(f"--what {args.what}には-m(機械ファイル)が必要です。")
    machine = _load_machine(args.machine)
    if args.what == "commutative":
        return _emit_verdict(is_commutative_regular(machine))
    if args.what == "jfa-and-reg":
        return _emit_verdict(jfa_membership_of_regular(machine))

    if (args.other is None) == (args.word is None):
        raise UsageError("--what disjointには--otherか-wのどちらか一方が必要です。")
    other = _load_machine(args.other) if args.other is not None else word_to_jfa(
        parse_word_literal(args.word, machine.alphabet)
    )
    return _emit_verdict(jfa_disjointness_bounded(machine, other, _bound(args, config)))


def cmd_reduce(args: argparse.Namespace, config: CliConfig) -> int:
    """帰着構成を出力ディレクトリへ書き出し、オラクルの結果を含むマニフェストを標準出力にも出す。

    補足:
        オラクルの上限超過では構成物を書き出し、マニフェストへ省略を記録する。構成側の上限超過は中断する。
    """
    if args.binary and args.kind not in WORD_PRODUCING_KINDS:
        raise UsageError(f"--binaryは{', '.join(WORD_PRODUCING_KINDS)}でのみ使用できます。kind={args.kind}")

    instance_text = _read_text(args.instance)
    caps = config.caps
    entries: list[tuple[str, object]] = [("kind", args.kind), ("instance", args.instance.name), ("caps", caps)]
    machine: Machine | None = None
    word: Word | None = None
    expr: Expr | None = None

    logger.info("開始: 帰着構成を作成します。kind=%s instance=%s", args.kind, args.instance)
    if args.kind == "ebc2":
        instance = parse_ebc2(instance_text)
        entries.append(("blocks", len(instance.blocks)))
        machine, word = ebc2_fixed_machine(), ebc2_to_word(instance)
        entries.extend(_ebc2_oracle(instance, caps))
    else:
        formula = parse_dimacs(instance_text)
        entries.extend((("vars", formula.num_vars), ("clauses", formula.num_clauses)))
        if args.kind == "sat-jfa":
            machine, word = sat_to_jfa(formula)
        elif args.kind == "sat-gjfa":
            machine = sat_fixed_gjfa()
            word = sat_to_gjfa_word(formula, vars_cap=caps.gjfa_vars, clauses_cap=caps.gjfa_clauses)
        elif args.kind == "sat-nonreg":
            machine = build_nonregularity_jfa(formula, caps.sm_vars)
        elif args.kind == "sat-noncomm":
            machine = build_noncommutativity_nfa(formula, caps.sm_vars)
        else:
            expr = stockmeyer_meyer_expr(formula, caps.sm_vars)
        entries.extend(_sat_oracle(formula, config))

    if args.binary and machine is not None and word is not None:
        entries.append(("length_factor", length_factor(binary_homomorphism(machine.alphabet))))
        entries.append(("original_word_length", len(word)))
        machine, word = binary_wrap(machine, word)
    entries.append(("binary", "yes" if args.binary else "no"))

    args.out.mkdir(parents=True, exist_ok=True)
    if machine is not None:
        entries.extend((("states", len(machine.states)), ("rules", len(machine.rules))))
        (args.out / MACHINE_FILE_NAME).write_text(print_machine(machine), encoding="utf-8")
    if word is not None:
        entries.append(("word_length", len(word)))
        (args.out / WORD_FILE_NAME).write_text(format_word(word) + LINE_SEPARATOR, encoding="utf-8")
    if expr is not None:
        header = _provenance(f"kind={args.kind}", f"instance={args.instance.name}")
        (args.out / EXPR_FILE_NAME).write_text(_format_expr(expr, header), encoding="utf-8")

    manifest = _manifest(entries)
    (args.out / MANIFEST_FILE_NAME).write_text(manifest, encoding="utf-8")
    sys.stdout.write(manifest)
    logger.info("終了: 帰着構成を作成しました。out=%s", args.out)
    return EXIT_SUCCESS


def cmd_selftest(args: argparse.Namespace, config: CliConfig, log_queue: queues.Queue | None = None) -> int:
    """性質検査を実行して結果を出力する。全項目が成功したときだけ0。"""
    if args.jobs < 1:
        raise ValueError(f"並列数は1以上である必要があります。jobs={args.jobs}")
    results = run_selftest(config, args.level, args.jobs, args.corpus, log_queue)
    sys.stdout.write(format_report(results, config, args.level))
    return EXIT_SUCCESS if all(result.passed for result in results) else EXIT_NEGATIVE


COMMANDS: dict[str, Callable[[argparse.Namespace, CliConfig], int]] = {
    "member": cmd_member,
    "enumerate": cmd_enumerate,
    "convert": cmd_convert,
    "check": cmd_check,
    "reduce": cmd_reduce,
}


def run(argv: list[str] | None = None, log_queue: queues.Queue | None = None) -> int:
    """引数を解析してサブコマンドを実行し、終了コードを返す。

    戻り値:
        0: 成功・肯定の判定。1: 否定の判定・selftestの失敗。
        2: 引数・入力の誤り。3: 上限超過。

    補足:
        判定結果は標準出力、診断は標準エラー出力へ1行で出す。
    """
    try:
        args = parse_arguments(argv)
        config = CliConfig.from_namespace(args)
        if args.command == "selftest":
            return cmd_selftest(args, config, log_queue)
        return COMMANDS[args.command](args, config)
    except (CapExceededError, ResourceLimitError) as exc:
        logger.warning("異常: 上限を超えたため中断しました。cap=%s", exc.cap_name)
        print(f"error: cap exceeded: {exc.cap_name} (limit={exc.limit}, actual={exc.actual})", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except (UsageError, ValueError, OSError) as exc:
        logger.warning("異常: 入力を処理できません。%s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE_ERROR
