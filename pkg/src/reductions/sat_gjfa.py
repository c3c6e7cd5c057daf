"""3SATを固定のGJFAの受理判定へ帰着する。"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from consts.reduction_constants import (
    C_BAR_TOKEN,
    C_FALSE_TOKEN,
    C_TRUE_TOKEN,
    DEFAULT_GJFA_CLAUSES_CAP,
    DEFAULT_GJFA_VARS_CAP,
    FALSE_SUFFIX,
    HASH_BAR_TOKEN,
    HASH_TOKEN,
    ONE_BAR_TOKEN,
    ONE_TOKEN,
    SAT_GJFA_CODE_STATE,
    SAT_GJFA_LITERAL_STATE,
    SAT_GJFA_NONE_LEFT_STATE,
    SAT_GJFA_ONE_LEFT_STATE,
    SAT_GJFA_ONE_STATE,
    SAT_GJFA_SKIP_STATE,
    SAT_GJFA_TWO_LEFT_STATE,
    SAT_GJFA_VARIABLE_STATE,
    SAT_GJFA_ZERO_STATE,
    STAR_BAR_TOKEN,
    STAR_TOKEN,
    TRUE_SUFFIX,
    ZERO_BAR_TOKEN,
    ZERO_TOKEN,
)
from core.alphabet import Alphabet, Word
from machine.model import Machine, Rule
from reductions.cnf import CnfFormula, require_vars_cap
from utils.errors import CapExceededError

logger = logging.getLogger(__name__)

SAT_GJFA_ALPHABET = Alphabet(
    (
        ZERO_TOKEN,
        ONE_TOKEN,
        ZERO_BAR_TOKEN,
        ONE_BAR_TOKEN,
        C_TRUE_TOKEN,
        C_FALSE_TOKEN,
        C_BAR_TOKEN,
        STAR_TOKEN,
        HASH_TOKEN,
        STAR_BAR_TOKEN,
        HASH_BAR_TOKEN,
    )
)
BIT_TOKENS = {"0": ZERO_TOKEN, "1": ONE_TOKEN}
BAR_BIT_TOKENS = {"0": ZERO_BAR_TOKEN, "1": ONE_BAR_TOKEN}


@dataclass(frozen=True)
class SatGjfaLayout:
    """語の配置に必要な値。`codes[i-1]`は変数x_iの符号(長さLのビット列)。"""

    num_vars: int
    num_clauses: int
    occurrences: tuple[int, ...]
    code_length: int
    codes: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "occurrences", tuple(self.occurrences))
        object.__setattr__(self, "codes", tuple(self.codes))
        if len(self.occurrences) != self.num_vars or len(self.codes) != self.num_vars:
            raise ValueError(f"出現回数と符号の個数は変数の個数と一致する必要があります。num_vars={self.num_vars}")
        if sum(self.occurrences) != 3 * self.num_clauses:
            raise ValueError(f"出現回数の総和が3mではありません。occurrences={self.occurrences} m={self.num_clauses}")
        if (self.num_vars - 1).bit_length() != self.code_length:
            raise ValueError(f"符号長は⌈log₂ n⌉である必要があります。code_length={self.code_length}")
        if any(len(code) != self.code_length or set(code) - set(BIT_TOKENS) for code in self.codes):
            raise ValueError(f"符号は長さLのビット列である必要があります。codes={self.codes}")
        if len(set(self.codes)) != len(self.codes):
            raise ValueError(f"符号が重複しています。codes={self.codes}")

    @classmethod
    def for_formula(cls, formula: CnfFormula) -> SatGjfaLayout:
        """符号をi−1の2進表記(L桁、0詰め)とした配置を返す。L = ⌈log₂ n⌉、n=1ならL=0。"""
        code_length = (formula.num_vars - 1).bit_length()
        codes = tuple(
            format(variable - 1, "b").zfill(code_length) if code_length else ""
            for variable in range(1, formula.num_vars + 1)
        )
        occurrences = tuple(formula.occurrences(variable) for variable in range(1, formula.num_vars + 1))
        return cls(formula.num_vars, formula.num_clauses, occurrences, code_length, codes)


# 補助処理
def _rule(source: str, label: tuple[str, ...], target: str) -> Rule:
    return Rule(source, Word(SAT_GJFA_ALPHABET, label), target)


def _first_phase_rules(value_suffix: str, literal_token: str) -> list[Rule]:
    """真偽Xを選んだ変数について、Xで充足されるリテラルを削除する規則。"""
    literal_state = SAT_GJFA_LITERAL_STATE + value_suffix
    code_state = SAT_GJFA_CODE_STATE + value_suffix
    rules = [
        _rule(SAT_GJFA_VARIABLE_STATE, (STAR_TOKEN, HASH_TOKEN), literal_state),
        _rule(literal_state, (STAR_BAR_TOKEN, literal_token), code_state),
    ]
    for bit_state, bit, bar in (
        (SAT_GJFA_ZERO_STATE + value_suffix, ZERO_TOKEN, ZERO_BAR_TOKEN),
        (SAT_GJFA_ONE_STATE + value_suffix, ONE_TOKEN, ONE_BAR_TOKEN),
    ):
        rules.append(_rule(code_state, (STAR_BAR_TOKEN, bar), bit_state))
        rules.append(_rule(bit_state, (STAR_TOKEN, bit), code_state))
    rules.append(_rule(code_state, (STAR_BAR_TOKEN, C_BAR_TOKEN), literal_state))
    rules.append(_rule(literal_state, (), SAT_GJFA_SKIP_STATE))
    return rules


def _second_phase_rules() -> list[Rule]:
    """#̄区切りの各節について、残っているc_T/c_Fが2個以下であることを左から確かめる規則。

    qE・qF・qGはその区間で読み取るc_T/c_Fの残り個数0・1・2を表す。
    """
    none_left, one_left, two_left = SAT_GJFA_NONE_LEFT_STATE, SAT_GJFA_ONE_LEFT_STATE, SAT_GJFA_TWO_LEFT_STATE
    # ⋆⋆は第1段階で削除されたリテラルの分だけ余る⋆を消費する。
    rules = [_rule(none_left, (STAR_TOKEN, STAR_TOKEN), none_left)]
    for state in (none_left, one_left, two_left):
        rules.extend(
            _rule(state, (STAR_TOKEN, token), state)
            for token in (STAR_BAR_TOKEN, ZERO_BAR_TOKEN, ONE_BAR_TOKEN, C_BAR_TOKEN)
        )
    for source, target in ((two_left, one_left), (one_left, none_left)):
        rules.extend(_rule(source, (STAR_TOKEN, token), target) for token in (C_TRUE_TOKEN, C_FALSE_TOKEN))
    rules.extend(_rule(none_left, (STAR_TOKEN, HASH_BAR_TOKEN), target) for target in (none_left, one_left, two_left))
    return rules


# メイン処理
def sat_fixed_gjfa() -> Machine:
    """3SATを解く固定のGJFAを返す。

    補足:
        第1段階はqAで⋆#を削除して次の変数へ進み、qB^Xで真偽Xを選ぶ。
        Xで充足されるリテラルの区間⋆̄c_X ū_i c̄を、補助語の符号u_iと1ビットずつ照合しながら削除する。
        qDでは残った符号を読み飛ばし、次の変数(qA)か第2段階(qE)へ進む。
        第2段階は残りの語を左から読み、各節で削除されなかったリテラルが2個以下であることを確かめる。
    """
    states = [SAT_GJFA_VARIABLE_STATE]
    rules: list[Rule] = []
    for value_suffix, literal_token in ((TRUE_SUFFIX, C_TRUE_TOKEN), (FALSE_SUFFIX, C_FALSE_TOKEN)):
        states.extend(
            prefix + value_suffix
            for prefix in (SAT_GJFA_LITERAL_STATE, SAT_GJFA_CODE_STATE, SAT_GJFA_ZERO_STATE, SAT_GJFA_ONE_STATE)
        )
        rules.extend(_first_phase_rules(value_suffix, literal_token))

    states.extend((SAT_GJFA_SKIP_STATE, SAT_GJFA_NONE_LEFT_STATE, SAT_GJFA_ONE_LEFT_STATE, SAT_GJFA_TWO_LEFT_STATE))
    rules.extend(
        (
            _rule(SAT_GJFA_SKIP_STATE, (STAR_TOKEN, ZERO_TOKEN), SAT_GJFA_SKIP_STATE),
            _rule(SAT_GJFA_SKIP_STATE, (STAR_TOKEN, ONE_TOKEN), SAT_GJFA_SKIP_STATE),
            _rule(SAT_GJFA_SKIP_STATE, (), SAT_GJFA_NONE_LEFT_STATE),
            _rule(SAT_GJFA_SKIP_STATE, (), SAT_GJFA_VARIABLE_STATE),
        )
    )
    rules.extend(_second_phase_rules())
    return Machine(
        SAT_GJFA_ALPHABET,
        tuple(states),
        tuple(rules),
        SAT_GJFA_VARIABLE_STATE,
        frozenset({SAT_GJFA_NONE_LEFT_STATE}),
    )


def sat_to_gjfa_word(
    formula: CnfFormula,
    layout: SatGjfaLayout | None = None,
    vars_cap: int = DEFAULT_GJFA_VARS_CAP,
    clauses_cap: int = DEFAULT_GJFA_CLAUSES_CAP,
) -> Word:
    """論理式を語 w = w_aux · w_φ へ写す。

    引数:
        formula: 対象の論理式。
        layout: 語の配置。省略時はSatGjfaLayout.for_formula(formula)。
        vars_cap: 変数の個数の上限。
        clauses_cap: 節の個数の上限。

    戻り値:
        w_aux = ⋆^{n+3mL} # u₁^{p₁} # … # u_n^{p_n}、
        w_φ = ⋆^{m+6m(L+2)} #̄ t₁ … #̄ t_m。
        t_jは各リテラルについて⋆̄^{L+2}の後に c_T ū_i c̄(x_i)または c_F ū_i c̄(¬x_i)を並べたもの。

    例外:
        CapExceededError: 変数・節の個数が上限を超える場合(cap名は`gjfa_vars`・`gjfa_clauses`)。
    """
    require_vars_cap(formula, "gjfa_vars", vars_cap)
    if formula.num_clauses > clauses_cap:
        raise CapExceededError("gjfa_clauses", clauses_cap, formula.num_clauses)
    layout = layout or SatGjfaLayout.for_formula(formula)
    code_length = layout.code_length

    symbols = [STAR_TOKEN] * (layout.num_vars + 3 * layout.num_clauses * code_length)
    for code, count in zip(layout.codes, layout.occurrences, strict=True):
        symbols.append(HASH_TOKEN)
        symbols.extend(BIT_TOKENS[bit] for bit in code * count)

    symbols.extend([STAR_TOKEN] * (layout.num_clauses + 6 * layout.num_clauses * (code_length + 2)))
    for clause in formula.clauses:
        symbols.append(HASH_BAR_TOKEN)
        for literal in clause:
            symbols.extend([STAR_BAR_TOKEN] * (code_length + 2))
            symbols.append(C_TRUE_TOKEN if literal.positive else C_FALSE_TOKEN)
            symbols.extend(BAR_BIT_TOKENS[bit] for bit in layout.codes[literal.variable - 1])
            symbols.append(C_BAR_TOKEN)
    return Word(SAT_GJFA_ALPHABET, tuple(symbols))
