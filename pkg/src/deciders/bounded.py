"""長さ上限付きの判定(有界オラクル)を提供する。"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from core.alphabet import Alphabet, Word
from core.language import FiniteLanguage
from core.shuffle import find_missing_permutation
from deciders.verdict import PermutationWitness, Verdict
from expr.ast import Expr
from expr.semantics import eval_upto
from machine.acceptance import fa_language_upto, gjfa_language_upto, jfa_language_upto, require_finite_machine
from machine.model import Machine

logger = logging.getLogger(__name__)


class Semantics(Enum):
    """機械の解釈。"""

    FA = "fa"
    JFA = "jfa"
    GJFA = "gjfa"


@dataclass(frozen=True)
class LanguageSource:
    """有界列挙できる言語の入力元。(機械, 解釈)または式のどちらか一方を持つ。"""

    machine: Machine | None = None
    semantics: Semantics | None = None
    expr: Expr | None = None

    def __post_init__(self) -> None:
        if (self.machine is None) == (self.expr is None):
            raise ValueError("機械と式のどちらか一方だけを指定してください。")
        if self.machine is not None and self.semantics is None:
            raise ValueError("機械には解釈(fa/jfa/gjfa)の指定が必要です。")

    @classmethod
    def from_machine(cls, machine: Machine, semantics: Semantics) -> LanguageSource:
        return cls(machine=machine, semantics=semantics)

    @classmethod
    def from_expr(cls, expr: Expr) -> LanguageSource:
        return cls(expr=expr)

    @property
    def alphabet(self) -> Alphabet:
        if self.machine is not None:
            return self.machine.alphabet
        return self.expr.alphabet

    def slice_upto(self, max_length: int) -> FiniteLanguage:
        """長さ`max_length`以下の部分を列挙する。"""
        if self.expr is not None:
            return eval_upto(self.expr, max_length)
        if self.semantics is Semantics.FA:
            return fa_language_upto(self.machine, max_length)
        if self.semantics is Semantics.JFA:
            return jfa_language_upto(self.machine, max_length)
        return gjfa_language_upto(self.machine, max_length)


# メイン処理
def is_perm_closed_bounded(source: LanguageSource, max_length: int) -> Verdict:
    """長さ`max_length`以下の部分が置換閉か判定する。

    引数:
        source: 言語の入力元。
        max_length: 長さ上限。

    戻り値:
        部分が置換閉ならBoundedYes(上限付き)。そうでなければNoと
        (言語に属する語, 属さない置換)の反例。置換は長さを保つのでNoは厳密な反証。
    """
    logger.info("開始: 有界の置換閉性を判定します。bound=%s", max_length)
    language = source.slice_upto(max_length)
    missing = find_missing_permutation(language)
    if missing is None:
        logger.info("終了: 上限内で置換閉です。bound=%s words=%s", max_length, len(language))
        return Verdict.bounded_yes(max_length)

    present, absent = missing
    witness = PermutationWitness(Word(language.alphabet, present), Word(language.alphabet, absent))
    logger.info("終了: 置換閉ではありません。%s", witness)
    return Verdict.no(witness, bound=max_length)


def jfa_disjointness_bounded(left: Machine, right: Machine, max_length: int) -> Verdict:
    """2つのJFA言語が長さ`max_length`以下で交わらないか判定する。

    戻り値:
        共通の語があればNoとその語(正準順序で最初のもの)。なければBoundedYes。
    """
    require_finite_machine(left, "jfa_disjointness_bounded")
    require_finite_machine(right, "jfa_disjointness_bounded")
    left.alphabet.require_same(right.alphabet)

    common = jfa_language_upto(left, max_length) & jfa_language_upto(right, max_length)
    if common.is_empty():
        return Verdict.bounded_yes(max_length)
    return Verdict.no(common.words[0], bound=max_length)
