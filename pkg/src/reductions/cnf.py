"""3-CNF論理式の型、DIMACS形式の入出力、全探索の充足可能性オラクルを提供する。"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from consts.alphabet_constants import LINE_SEPARATOR
from consts.reduction_constants import (
    CLAUSE_SIZE,
    DEFAULT_SAT_VARS_CAP,
    DIMACS_CLAUSE_TERMINATOR,
    DIMACS_COMMENT_MARK,
    DIMACS_FORMAT_NAME,
    DIMACS_PROBLEM_MARK,
)
from utils.errors import CapExceededError, MachineFormatError

logger = logging.getLogger(__name__)

Assignment = tuple[bool, ...]


@dataclass(frozen=True, order=True)
class Literal:
    """変数番号(1始まり)と極性の組。"""

    variable: int
    positive: bool = True

    def __post_init__(self) -> None:
        if self.variable < 1:
            raise ValueError(f"変数番号は1以上である必要があります。variable={self.variable}")

    def evaluate(self, assignment: Assignment) -> bool:
        return assignment[self.variable - 1] is self.positive

    def to_dimacs(self) -> int:
        return self.variable if self.positive else -self.variable

    @classmethod
    def from_dimacs(cls, value: int) -> Literal:
        return cls(abs(value), value > 0)

    def __str__(self) -> str:
        return f"x{self.variable}" if self.positive else f"¬x{self.variable}"


Clause = tuple[Literal, ...]


@dataclass(frozen=True)
class CnfFormula:
    """各節がちょうど3リテラルの論理式 φ = C₁ ∧ … ∧ C_m。"""

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self) -> None:
        clauses = tuple(tuple(clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.num_vars < 1:
            raise ValueError(f"変数の個数は1以上である必要があります。num_vars={self.num_vars}")
        if not clauses:
            raise ValueError("節が1つもありません。")

        for position, clause in enumerate(clauses, start=1):
            if len(clause) != CLAUSE_SIZE:
                raise ValueError(f"節のリテラル数が{CLAUSE_SIZE}ではありません。clause={position} size={len(clause)}")
            out_of_range = [literal.variable for literal in clause if literal.variable > self.num_vars]
            if out_of_range:
                raise ValueError(
                    f"変数番号が範囲外です。clause={position} variables={out_of_range} num_vars={self.num_vars}"
                )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def evaluate(self, assignment: Assignment) -> bool:
        """割当てのもとで全ての節が充足されれば真。"""
        if len(assignment) != self.num_vars:
            raise ValueError(f"割当ての長さが変数の数と異なります。length={len(assignment)} num_vars={self.num_vars}")
        return all(any(literal.evaluate(assignment) for literal in clause) for clause in self.clauses)

    def occurrences(self, variable: int) -> int:
        """変数が(極性を問わず)現れる回数。"""
        return sum(literal.variable == variable for clause in self.clauses for literal in clause)

    def __str__(self) -> str:
        return " ∧ ".join("(" + " ∨ ".join(str(literal) for literal in clause) + ")" for clause in self.clauses)


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    assignment: Assignment | None = None


# 補助処理
def require_vars_cap(formula: CnfFormula, cap_name: str, limit: int) -> None:
    """変数の個数が上限を超えればCapExceededErrorを送出する。"""
    if formula.num_vars > limit:
        raise CapExceededError(cap_name, limit, formula.num_vars)


def all_literals(num_vars: int) -> list[Literal]:
    """x1, ¬x1, x2, ¬x2, … の順にリテラルを返す。"""
    return [Literal(variable, positive) for variable in range(1, num_vars + 1) for positive in (True, False)]


# メイン処理
def brute_sat(formula: CnfFormula, cap: int = DEFAULT_SAT_VARS_CAP) -> SatResult:
    """2ⁿ通りの割当てを全て調べて充足可能性を判定する。

    引数:
        formula: 対象の論理式。
        cap: 変数の個数の上限。

    戻り値:
        充足可能なら最初に見つかった割当て(全偽から辞書式順)を伴うSatResult。

    例外:
        CapExceededError: 変数の個数が上限を超える場合(cap名は`sat_vars`)。
    """
    require_vars_cap(formula, "sat_vars", cap)
    for assignment in product((False, True), repeat=formula.num_vars):
        if formula.evaluate(assignment):
            return SatResult(True, assignment)
    return SatResult(False)


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS形式(`p cnf n m`の見出しと、0で終わる符号付き整数の節)を読み込む。

    例外:
        MachineFormatError: 見出しの欠落、整数でない字句、節の個数の不一致など。
    """
    num_vars: int | None = None
    declared_clauses = 0
    clauses: list[Clause] = []
    pending: list[Literal] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        fields = raw_line.split()
        if not fields or fields[0] == DIMACS_COMMENT_MARK:
            continue

        if fields[0] == DIMACS_PROBLEM_MARK:
            if len(fields) != 4 or fields[1] != DIMACS_FORMAT_NAME:
                raise MachineFormatError(f"見出し行は`p {DIMACS_FORMAT_NAME} n m`の形式です。", line_number)
            try:
                num_vars, declared_clauses = int(fields[2]), int(fields[3])
            except ValueError as exc:
                raise MachineFormatError("見出し行の変数・節の個数が整数ではありません。", line_number) from exc
            continue

        if num_vars is None:
            raise MachineFormatError("節より前に見出し行が必要です。", line_number)
        for field in fields:
            try:
                value = int(field)
            except ValueError as exc:
                raise MachineFormatError(f"リテラルが整数ではありません。token={field!r}", line_number) from exc
            if value == DIMACS_CLAUSE_TERMINATOR:
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(Literal.from_dimacs(value))

    if num_vars is None:
        raise MachineFormatError("見出し行がありません。")
    if pending:
        raise MachineFormatError("最後の節が0で終わっていません。")
    if len(clauses) != declared_clauses:
        raise MachineFormatError(f"節の個数が見出しと一致しません。declared={declared_clauses} actual={len(clauses)}")

    try:
        return CnfFormula(num_vars, tuple(clauses))
    except ValueError as exc:
        raise MachineFormatError(str(exc)) from exc


def print_dimacs(formula: CnfFormula) -> str:
    lines = [f"{DIMACS_PROBLEM_MARK} {DIMACS_FORMAT_NAME} {formula.num_vars} {formula.num_clauses}"]
    for clause in formula.clauses:
        values = [str(literal.to_dimacs()) for literal in clause]
        lines.append(" ".join([*values, str(DIMACS_CLAUSE_TERMINATOR)]))
    return LINE_SEPARATOR.join(lines) + LINE_SEPARATOR


def all_formulas(num_vars: int, num_clauses: int) -> Iterator[CnfFormula]:
    """変数n個・節m個の論理式を全て列挙する。

    補足:
        節はリテラルの多重集合(同じリテラルの重複を許す)、論理式は節の多重集合として数える。
        節やリテラルの並べ替えは充足可能性にも各構成の受理にも影響しない。
    """
    clauses = list(combinations_with_replacement(all_literals(num_vars), CLAUSE_SIZE))
    for chosen in combinations_with_replacement(clauses, num_clauses):
        yield CnfFormula(num_vars, chosen)


def random_formula(rng: random.Random, num_vars: int, num_clauses: int) -> CnfFormula:
    """各リテラルの変数と極性を一様に選んだ論理式を返す。"""
    clauses = tuple(
        tuple(Literal(rng.randint(1, num_vars), rng.random() < 0.5) for _ in range(CLAUSE_SIZE))
        for _ in range(num_clauses)
    )
    return CnfFormula(num_vars, clauses)
