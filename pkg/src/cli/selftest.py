"""性質検査と回帰コーパスをまとめて実行するselftestを提供する。

各検査は`SuiteContext`だけを受け取る関数で、乱数はシードと検査番号から作る。
並列実行しても報告は検査の定義順に並ぶため、同じシードなら出力は一致する。
"""

from __future__ import annotations

import logging
import random
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from multiprocessing import queues
from pathlib import Path

from cli.config import CliConfig
from consts.alphabet_constants import COMMENT_MARK, LINE_SEPARATOR
from consts.cli_constants import (
    CORPUS_EXPECTATION_FILE_NAME,
    REGRESSION_FAIL_MARK,
    REGRESSION_PASS_MARK,
    SELFTEST_COMMUTATIVITY_SAMPLES,
    SELFTEST_EVAL_BOUND,
    SELFTEST_FAILURE_DETAIL_LIMIT,
    SELFTEST_LAW_ALPHABET,
    SELFTEST_LAW_SAMPLES,
    SELFTEST_RANDOM_ALPHABET,
    SELFTEST_REGEX_SAMPLES,
    SELFTEST_ROUND_TRIP_SAMPLES,
    SELFTEST_SAT_GJFA_RANDOM_SAMPLES,
    SELFTEST_SAT_JFA_RANDOM_SAMPLES,
)
from consts.reduction_constants import BINARY_LENGTH_FACTOR_LIMIT
from core.alphabet import Alphabet, Word
from core.language import FiniteLanguage, random_language, words_upto
from core.literals import parse_word_literal
from core.shuffle import concat_langs, iter_shuffle_upto, parikh_counts, perm_closure, shuffle_langs
from deciders.bounded import LanguageSource, Semantics, is_perm_closed_bounded
from deciders.commutativity import is_commutative_regular
from expr.generators import random_alpha_shuf, random_regex
from expr.parser import parse_expr
from expr.semantics import eval_upto, star_height
from expr.transforms import regex_to_alpha_shuf
from machine.acceptance import (
    fa_accepts,
    fa_language_upto,
    gjfa_accepts,
    gjfa_language_upto,
    jfa_accepts,
    jfa_language_upto,
)
from machine.dfa import minimize
from machine.elimination import machine_to_regex
from machine.generators import random_machine
from machine.machine_file import parse_machine
from machine.model import Machine
from machine.operations import binary_homomorphism
from reductions.binary import binary_wrap, length_factor
from reductions.cnf import CnfFormula, all_formulas, brute_sat, random_formula
from reductions.ebc2 import Ebc2Instance, all_ebc2_instances, brute_ebc2
from reductions.ebc2_gjfa import ebc2_fixed_machine, ebc2_to_word
from reductions.hardness import PAIRING_ALPHABET, build_noncommutativity_nfa, build_nonregularity_jfa
from reductions.sat_gjfa import sat_fixed_gjfa, sat_to_gjfa_word
from reductions.sat_jfa import sat_to_jfa
from semilinear.conversion import alpha_shuf_to_semilinear, semilinear_to_normalform
from semilinear.operations import sl_bounded_equal
from utils.logging_config import configure_queue_logging
from utils.path_utils import get_corpus_directory

logger = logging.getLogger(__name__)

LEVEL_INDEX = {"quick": 0, "full": 1}
LAW_BOUND = SELFTEST_EVAL_BOUND
HARDNESS_BOUND = 4


@dataclass(frozen=True)
class SuiteContext:
    """検査関数へ渡す設定。プロセス間で受け渡すため値だけを持つ。"""

    config: CliConfig
    level: str
    corpus: Path
    suite_index: int

    @property
    def is_full(self) -> bool:
        return self.level == "full"

    def samples(self, counts: tuple[int, int]) -> int:
        return counts[LEVEL_INDEX[self.level]]

    def rng(self) -> random.Random:
        return random.Random(self.config.seed * 1000 + self.suite_index)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    checked: int
    failures: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


class _Tally:
    """検査件数と失敗内容を集計する。"""

    def __init__(self, name: str) -> None:
        self.name = name
        self.checked = 0
        self.failures: list[str] = []

    def check(self, ok: bool, detail: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(detail)

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, self.checked, tuple(self.failures))


# 補助処理
def _load_corpus_machine(context: SuiteContext, file_name: str) -> Machine:
    return parse_machine((context.corpus / file_name).read_text(encoding="utf-8"))


def _formulas(max_vars: int, max_clauses: int) -> Iterator[CnfFormula]:
    for num_vars in range(1, max_vars + 1):
        for num_clauses in range(1, max_clauses + 1):
            yield from all_formulas(num_vars, num_clauses)


def _vectors(language: FiniteLanguage) -> frozenset[tuple[int, ...]]:
    return frozenset(parikh_counts(language.alphabet, member) for member in language.members)


def _sums(left: frozenset[tuple[int, ...]], right: frozenset[tuple[int, ...]]) -> frozenset[tuple[int, ...]]:
    return frozenset(tuple(a + b for a, b in zip(first, second, strict=True)) for first in left for second in right)


def _describe(instance: Ebc2Instance) -> str:
    return f"v={instance.target} blocks={[str(block) for block in instance.blocks]}"


def _regression_line(context: SuiteContext, fields: list[str]) -> tuple[bool, str]:
    """回帰コーパスの1行を実行し、(一致したか, 実際の値)を返す。"""
    kind = fields[0]
    if kind == "member" and len(fields) == 5:
        mode, file_name, literal, expected = fields[1:]
        machine = _load_corpus_machine(context, file_name)
        accepts = {"fa": fa_accepts, "jfa": jfa_accepts, "gjfa": gjfa_accepts}[mode]
        actual = "yes" if accepts(machine, parse_word_literal(literal, machine.alphabet)) else "no"
        return actual == expected, actual
    if kind == "count" and len(fields) == 5:
        mode, file_name, bound, expected = fields[1:]
        machine = _load_corpus_machine(context, file_name)
        enumerate_upto = {"fa": fa_language_upto, "jfa": jfa_language_upto, "gjfa": gjfa_language_upto}[mode]
        actual = str(len(enumerate_upto(machine, int(bound))))
        return actual == expected, actual
    if kind == "commutative" and len(fields) == 3:
        file_name, expected = fields[1:]
        actual = is_commutative_regular(_load_corpus_machine(context, file_name)).answer.value
        return actual == expected, actual
    raise ValueError(f"回帰コーパスの行を解釈できません。fields={fields}")


# メイン処理
def suite_corpus(context: SuiteContext) -> SuiteResult:
    """回帰コーパス(機械ファイルと期待値ファイル)を照合する。"""
    tally = _Tally("corpus")
    expectation_path = context.corpus / CORPUS_EXPECTATION_FILE_NAME
    lines = expectation_path.read_text(encoding="utf-8").splitlines()
    for line_number, raw_line in enumerate(lines, start=1):
        fields = raw_line.split(COMMENT_MARK, 1)[0].split()
        if not fields:
            continue
        try:
            ok, actual = _regression_line(context, fields)
        except (ValueError, KeyError, OSError) as exc:
            ok, actual = False, f"error: {exc}"
        tally.check(ok, f"line {line_number}: {' '.join(fields)} -> {actual}")
    if tally.checked == 0:
        tally.check(False, f"{expectation_path.name}: 検査行がありません。")
    return tally.result()


def suite_examples(context: SuiteContext) -> SuiteResult:
    """代表例の言語を厳密な集合として照合する。"""
    tally = _Tally("examples")
    abc_loop = _load_corpus_machine(context, "abc_loop.txt")
    abc = abc_loop.alphabet

    fa_expected = FiniteLanguage(abc, frozenset(("a", "b", "c") * k for k in range(4)))
    tally.check(fa_language_upto(abc_loop, 9) == fa_expected, "abc_loop: fa_language_upto(9)")
    balanced = frozenset(
        member for member in words_upto(abc, 6).members if len({member.count(symbol) for symbol in abc}) == 1
    )
    tally.check(jfa_language_upto(abc_loop, 6) == FiniteLanguage(abc, balanced), "abc_loop: jfa_language_upto(6)")

    abcd_loop = _load_corpus_machine(context, "abcd_loop.txt")
    bacd = Word(abcd_loop.alphabet, ("b", "a", "c", "d"))
    acbd = ("a", "c", "b", "d")
    tally.check(not gjfa_accepts(abcd_loop, bacd), "abcd_loop: bacd")
    shuffle_expr = parse_expr("(a,b&c,d)&*", abcd_loop.alphabet)
    separated = eval_upto(shuffle_expr, 4).members - gjfa_language_upto(abcd_loop, 4).members
    tally.check(acbd in separated, "abcd_loop: acbd")

    ab_loop = _load_corpus_machine(context, "ab_loop.txt")
    loop_slice = gjfa_language_upto(ab_loop, 2).members
    tally.check(("a", "b") in loop_slice and ("b", "a") not in loop_slice, "ab_loop: ab / ba")

    contains_a = _load_corpus_machine(context, "contains_a.txt")
    contains_b = _load_corpus_machine(context, "contains_b.txt")
    ab = contains_a.alphabet
    all_words = words_upto(ab, 4).members
    with_a = frozenset(member for member in all_words if "a" in member)
    with_b = frozenset(member for member in all_words if "b" in member) | {()}
    tally.check(jfa_language_upto(contains_a, 4).members == with_a, "contains_a: jfa_language_upto(4)")
    tally.check(jfa_language_upto(contains_b, 4).members == with_b, "contains_b: jfa_language_upto(4)")

    elimination_sample = _load_corpus_machine(context, "elimination_sample.txt")
    converted = regex_to_alpha_shuf(machine_to_regex(elimination_sample))
    tally.check(
        eval_upto(converted, SELFTEST_EVAL_BOUND) == jfa_language_upto(elimination_sample, SELFTEST_EVAL_BOUND),
        "elimination_sample: regex_to_alpha_shuf(machine_to_regex)",
    )
    return tally.result()


def suite_regex_to_alpha_shuf(context: SuiteContext) -> SuiteResult:
    """正規表現の変換結果が元の言語の置換閉包と一致するか確かめる。"""
    tally = _Tally("regex-to-alpha-shuf")
    rng = context.rng()
    alphabet = Alphabet(SELFTEST_RANDOM_ALPHABET)
    for sample in range(context.samples(SELFTEST_REGEX_SAMPLES)):
        regex = random_regex(rng, alphabet)
        expected = perm_closure(eval_upto(regex, SELFTEST_EVAL_BOUND))
        actual = eval_upto(regex_to_alpha_shuf(regex), SELFTEST_EVAL_BOUND)
        tally.check(actual == expected, f"sample {sample}")
    return tally.result()


def suite_shuffle_laws(context: SuiteContext) -> SuiteResult:
    """シャッフルの代数法則とParikh写像の準同型性を有界に確かめる。"""
    tally = _Tally("shuffle-laws")
    rng = context.rng()
    alphabet = Alphabet(SELFTEST_LAW_ALPHABET)
    n = LAW_BOUND
    epsilon = FiniteLanguage.epsilon(alphabet)

    def star(language: FiniteLanguage) -> FiniteLanguage:
        return iter_shuffle_upto(language, n)

    def shuffle(left: FiniteLanguage, right: FiniteLanguage) -> FiniteLanguage:
        return shuffle_langs(left, right, n)

    for sample in range(context.samples(SELFTEST_LAW_SAMPLES)):
        first, second, third = (random_language(rng, alphabet, 3, 2) for _ in range(3))
        laws = {
            "commutative": shuffle(first, second) == shuffle(second, first),
            "associative": shuffle(shuffle(first, second), third) == shuffle(first, shuffle(second, third)),
            "distributive": shuffle(first, second | third) == shuffle(first, second) | shuffle(first, third),
            "star-of-union": star(first | second) == shuffle(star(first), star(second)),
            "star-idempotent": star(star(first)) == star(first),
            "star-absorb": star(shuffle(first, star(second))) == shuffle(first, star(first | second)) | epsilon,
            "parikh-shuffle": _vectors(shuffle_langs(first, second)) == _sums(_vectors(first), _vectors(second)),
            "parikh-concat": _vectors(concat_langs(first, second)) == _vectors(shuffle_langs(first, second)),
        }
        for law, ok in laws.items():
            tally.check(ok, f"sample {sample}: {law}")
    return tally.result()


def suite_round_trip(context: SuiteContext) -> SuiteResult:
    """α-SHUF式 → 半線形集合 → 標準形 → 半線形集合の往復を有界に確かめる。"""
    tally = _Tally("semilinear-round-trip")
    rng = context.rng()
    alphabet = Alphabet(SELFTEST_RANDOM_ALPHABET)
    star_cap = context.config.caps.star_components
    for sample in range(context.samples(SELFTEST_ROUND_TRIP_SAMPLES)):
        expr = random_alpha_shuf(rng, alphabet)
        semilinear = alpha_shuf_to_semilinear(expr, star_cap)
        normal_form = semilinear_to_normalform(semilinear, alphabet)
        tally.check(star_height(normal_form) <= 1, f"sample {sample}: star_height")
        recompiled = alpha_shuf_to_semilinear(normal_form, star_cap)
        tally.check(
            sl_bounded_equal(semilinear, recompiled, context.config.box_bound), f"sample {sample}: bounded_equal"
        )
    return tally.result()


def suite_commutativity(context: SuiteContext) -> SuiteResult:
    """可換性判定を有界の置換閉性と比べる。

    補足:
        列挙長は最小DFAの状態数の2倍と`length_bound`の小さい方に抑える。
        反例の語がこの長さに収まる場合だけ、有界判定にも反例が現れることを要求する。
    """
    tally = _Tally("commutativity")
    rng = context.rng()
    for sample in range(context.samples(SELFTEST_COMMUTATIVITY_SAMPLES)):
        alphabet = Alphabet(SELFTEST_RANDOM_ALPHABET[: rng.randint(1, len(SELFTEST_RANDOM_ALPHABET))])
        machine = random_machine(rng, alphabet, rng.randint(1, 4))
        bound = min(2 * len(minimize(machine).states), context.config.length_bound)
        exact = is_commutative_regular(machine)
        bounded = is_perm_closed_bounded(LanguageSource.from_machine(machine, Semantics.FA), bound)
        detail = f"sample {sample}: bound={bound} exact={exact} bounded={bounded}"
        if exact.is_positive:
            tally.check(bounded.is_positive, detail)
            continue
        witness = exact.witness
        tally.check(fa_accepts(machine, witness.accepted) and not fa_accepts(machine, witness.rejected), detail)
        if len(witness.accepted) <= bound:
            tally.check(not bounded.is_positive, detail)
    for file_name, expected in (("a_star_b_star.txt", False), ("sigma_star.txt", True), ("unary.txt", True)):
        verdict = is_commutative_regular(_load_corpus_machine(context, file_name))
        tally.check(verdict.is_positive == expected, f"{file_name}: {verdict}")
    return tally.result()


def suite_sat_jfa(context: SuiteContext) -> SuiteResult:
    """3SAT → JFAの帰着を全数と乱択でオラクルと比べる。"""
    tally = _Tally("sat-jfa")
    sat_cap = context.config.caps.sat_vars
    limit = 3 if context.is_full else 2

    def check(formula: CnfFormula) -> None:
        machine, word = sat_to_jfa(formula)
        ok = jfa_accepts(machine, word) == brute_sat(formula, sat_cap).satisfiable
        tally.check(ok and len(machine.states) == 2 * formula.num_vars + 1, str(formula))

    for formula in _formulas(limit, limit):
        check(formula)
    rng = context.rng()
    for _ in range(context.samples(SELFTEST_SAT_JFA_RANDOM_SAMPLES)):
        check(random_formula(rng, rng.randint(1, 6), rng.randint(1, 8)))
    return tally.result()


def suite_ebc2(context: SuiteContext) -> SuiteResult:
    """EBC₂ → 固定GJFAの帰着を、二値符号化の前後でオラクルと比べる。"""
    tally = _Tally("ebc2")
    machine = ebc2_fixed_machine()
    cap = context.config.caps.ebc2_blocks
    for instance in all_ebc2_instances(3 if context.is_full else 2, 2):
        expected = brute_ebc2(instance, cap).exists
        word = ebc2_to_word(instance)
        tally.check(gjfa_accepts(machine, word) == expected, f"plain: {_describe(instance)}")
        encoded_machine, encoded_word = binary_wrap(machine, word)
        tally.check(gjfa_accepts(encoded_machine, encoded_word) == expected, f"binary: {_describe(instance)}")
    return tally.result()


def suite_sat_gjfa(context: SuiteContext) -> SuiteResult:
    """3SAT → 固定GJFAの帰着をオラクルと比べ、二値符号化の語長を確かめる。"""
    tally = _Tally("sat-gjfa")
    machine = sat_fixed_gjfa()
    caps = context.config.caps
    factor = length_factor(binary_homomorphism(machine.alphabet))
    tally.check(factor <= BINARY_LENGTH_FACTOR_LIMIT, f"length_factor={factor}")

    def check(formula: CnfFormula) -> None:
        word = sat_to_gjfa_word(formula, vars_cap=caps.gjfa_vars, clauses_cap=caps.gjfa_clauses)
        _, encoded_word = binary_wrap(machine, word)
        ok = gjfa_accepts(machine, word) == brute_sat(formula, caps.sat_vars).satisfiable
        tally.check(ok and len(encoded_word) <= BINARY_LENGTH_FACTOR_LIMIT * len(word), str(formula))

    for formula in _formulas(2, 2):
        check(formula)
    rng = context.rng()
    for _ in range(context.samples(SELFTEST_SAT_GJFA_RANDOM_SAMPLES)):
        check(random_formula(rng, rng.randint(1, 4), rng.randint(1, 4)))
    return tally.result()


def suite_hardness(context: SuiteContext) -> SuiteResult:
    """非可換性・非正規性の困難性構成をオラクルと比べる。"""
    tally = _Tally("hardness")
    cap = context.config.caps.sm_vars
    universe = words_upto(PAIRING_ALPHABET, HARDNESS_BOUND)
    for formula in _formulas(2, 2 if context.is_full else 1):
        unsatisfiable = not brute_sat(formula, context.config.caps.sat_vars).satisfiable
        commutative = is_commutative_regular(build_noncommutativity_nfa(formula, cap)).is_positive
        tally.check(commutative == unsatisfiable, f"noncommutativity: {formula}")
        full = jfa_language_upto(build_nonregularity_jfa(formula, cap), HARDNESS_BOUND) == universe
        tally.check(full == unsatisfiable, f"nonregularity: {formula}")
    return tally.result()


SUITES: tuple[tuple[str, Callable[[SuiteContext], SuiteResult]], ...] = (
    ("corpus", suite_corpus),
    ("examples", suite_examples),
    ("regex-to-alpha-shuf", suite_regex_to_alpha_shuf),
    ("shuffle-laws", suite_shuffle_laws),
    ("semilinear-round-trip", suite_round_trip),
    ("commutativity", suite_commutativity),
    ("sat-jfa", suite_sat_jfa),
    ("ebc2", suite_ebc2),
    ("sat-gjfa", suite_sat_gjfa),
    ("hardness", suite_hardness),
)


def _run_suite(context: SuiteContext) -> SuiteResult:
    """1つの検査を実行する。例外は失敗として報告へ載せる。"""
    name, suite = SUITES[context.suite_index]
    logger.info("開始: 検査を実行します。suite=%s level=%s", name, context.level)
    try:
        result = suite(context)
    except Exception as exc:
        logger.exception("異常: 検査が例外で終了しました。suite=%s", name)
        return SuiteResult(name, 0, (f"error: {type(exc).__name__}: {exc}",))
    logger.info("終了: 検査を実行しました。suite=%s checked=%s failures=%s", name, result.checked, len(result.failures))
    return result


def run_selftest(
    config: CliConfig,
    level: str,
    jobs: int = 1,
    corpus: Path | None = None,
    log_queue: queues.Queue | None = None,
) -> list[SuiteResult]:
    """全検査を実行し、定義順に結果を返す。

    引数:
        config: シード・上限を含む設定。
        level: `quick`または`full`。
        jobs: 並列実行するプロセス数。1なら同じプロセスで順に実行する。
        corpus: 回帰コーパスのディレクトリ。省略時は`<project_root>/corpus`。
        log_queue: ワーカープロセスのログを集約するキュー。

    戻り値:
        検査ごとの結果。並列数によらず順序は一定。
    """
    if level not in LEVEL_INDEX:
        raise ValueError(f"未対応の検査水準です。level={level!r} 候補={tuple(LEVEL_INDEX)}")
    contexts = [
        SuiteContext(config, level, corpus or get_corpus_directory(), suite_index) for suite_index in range(len(SUITES))
    ]
    if jobs == 1:
        return [_run_suite(context) for context in contexts]

    initializer = configure_queue_logging if log_queue is not None else None
    initargs = (log_queue,) if log_queue is not None else ()
    with ProcessPoolExecutor(max_workers=jobs, initializer=initializer, initargs=initargs) as executor:
        return list(executor.map(_run_suite, contexts))


def format_report(results: list[SuiteResult], config: CliConfig, level: str) -> str:
    """結果を決定的なテキスト報告にする。失敗は検査ごとに先頭の数件だけ載せる。"""
    lines = [f"# selftest level={level} seed={config.seed} box={config.box_bound} caps={config.caps}"]
    for result in results:
        mark = REGRESSION_PASS_MARK if result.passed else REGRESSION_FAIL_MARK
        lines.append(f"{mark} {result.name} checked={result.checked} failures={len(result.failures)}")
        lines.extend(f"  - {detail}" for detail in result.failures[:SELFTEST_FAILURE_DETAIL_LIMIT])
    passed = sum(result.passed for result in results)
    lines.append(f"# passed {passed}/{len(results)}")
    return LINE_SEPARATOR.join(lines) + LINE_SEPARATOR
