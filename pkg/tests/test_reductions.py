"""論理式・EBC₂の入出力とオラクル、および各帰着構成の正しさのテスト。"""

from __future__ import annotations

import itertools
import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis.strategies import integers

from consts.reduction_constants import BINARY_LENGTH_FACTOR_LIMIT
from core.alphabet import Word
from core.language import words_upto
from deciders.commutativity import is_commutative_regular
from deciders.verdict import VerdictAnswer
from machine.acceptance import fa_accepts, gjfa_accepts, gjfa_successors, jfa_accepts, jfa_language_upto
from machine.machine_file import parse_machine, print_machine
from machine.model import GjfaConfig, MachineKind
from machine.operations import binary_homomorphism
from reductions.binary import binary_wrap, length_factor
from reductions.cnf import CnfFormula, Literal, all_formulas, brute_sat, parse_dimacs, print_dimacs, random_formula
from reductions.ebc2 import Ebc2Instance, all_ebc2_instances, brute_ebc2, parse_ebc2, print_ebc2
from reductions.ebc2_gjfa import ebc2_fixed_machine, ebc2_to_word
from reductions.hardness import (
    PAIRING_ALPHABET,
    build_noncommutativity_nfa,
    build_nonregularity_jfa,
    first_primes,
    period_of,
    stockmeyer_meyer_expr,
    unary_lengths_upto,
)
from reductions.sat_gjfa import SAT_GJFA_ALPHABET, SatGjfaLayout, sat_fixed_gjfa, sat_to_gjfa_word
from reductions.sat_jfa import sat_to_jfa
from utils.errors import CapExceededError, MachineFormatError

SINGLE_TRUE = CnfFormula(1, ((Literal(1), Literal(1), Literal(1)),))
CONTRADICTION = CnfFormula(
    1, ((Literal(1), Literal(1), Literal(1)), (Literal(1, False), Literal(1, False), Literal(1, False)))
)
TWO_VARIABLES = CnfFormula(2, ((Literal(1), Literal(1), Literal(2)),))


def formulas_upto(max_vars: int, max_clauses: int):
    for num_vars in range(1, max_vars + 1):
        for num_clauses in range(1, max_clauses + 1):
            yield from all_formulas(num_vars, num_clauses)


def truth_table_sat(formula: CnfFormula) -> bool:
    clauses = [[literal.to_dimacs() for literal in clause] for clause in formula.clauses]
    for bits in itertools.product((False, True), repeat=formula.num_vars):
        if all(any(bits[abs(value) - 1] == (value > 0) for value in clause) for clause in clauses):
            return True
    return False


###################################################################################################
# 論理式
###################################################################################################


def test_brute_sat_examples():
    result = brute_sat(SINGLE_TRUE)
    assert result.satisfiable
    assert result.assignment == (True,)
    assert not brute_sat(CONTRADICTION).satisfiable


def test_brute_sat_cap():
    with pytest.raises(CapExceededError) as excinfo:
        brute_sat(TWO_VARIABLES, cap=1)
    assert (excinfo.value.cap_name, excinfo.value.limit, excinfo.value.actual) == ("sat_vars", 1, 2)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=50, deadline=None)
def test_brute_sat_agrees_with_truth_table(seed):
    formula = random_formula(random.Random(seed), 3, 4)
    result = brute_sat(formula)
    assert result.satisfiable == truth_table_sat(formula)
    if result.satisfiable:
        assert formula.evaluate(result.assignment)


@pytest.mark.parametrize(
    ("num_vars", "clauses"),
    [
        (0, ((Literal(1), Literal(1), Literal(1)),)),
        (1, ()),
        (1, ((Literal(1), Literal(1)),)),
        (1, ((Literal(1), Literal(1), Literal(2)),)),
    ],
)
def test_formula_validation(num_vars, clauses):
    with pytest.raises(ValueError):
        CnfFormula(num_vars, clauses)


def test_dimacs_round_trip():
    text = "c 例\np cnf 2 2\n1 -2 2 0\n-1 -1\n-2 0\n"
    formula = parse_dimacs(text)
    assert formula.clauses[1] == (Literal(1, False), Literal(1, False), Literal(2, False))
    assert print_dimacs(formula) == "p cnf 2 2\n1 -2 2 0\n-1 -1 -2 0\n"
    assert parse_dimacs(print_dimacs(formula)) == formula


@pytest.mark.parametrize(
    "text",
    [
        "1 2 3 0\n",
        "p cnf 1\n",
        "p dnf 1 1\n1 1 1 0\n",
        "p cnf 1 1\n1 x 1 0\n",
        "p cnf 1 1\n1 1 1\n",
        "p cnf 1 2\n1 1 1 0\n",
    ],
)
def test_dimacs_errors(text):
    with pytest.raises(MachineFormatError):
        parse_dimacs(text)


def test_all_formulas_counts_multisets():
    assert len(list(all_formulas(1, 1))) == 4
    assert len(list(all_formulas(2, 1))) == 20


###################################################################################################
# EBC₂
###################################################################################################


@pytest.mark.parametrize(
    ("target", "blocks", "order"),
    [("01", ("0", "1"), (0, 1)), ("10", ("0", "1"), (1, 0)), ("010", ("00", "1"), None), ("@", (), ())],
)
def test_brute_ebc2_examples(target, blocks, order):
    result = brute_ebc2(Ebc2Instance.from_bits(target, blocks))
    assert result.exists == (order is not None)
    assert result.order == order


def test_brute_ebc2_cap():
    with pytest.raises(CapExceededError):
        brute_ebc2(Ebc2Instance.from_bits("000", ("0", "0", "0")), cap=2)


def test_ebc2_file_round_trip():
    instance = parse_ebc2("# 例\nv: 010\nu: 01\nu: 0\nu: @\n")
    assert instance == Ebc2Instance.from_bits("010", ("01", "0", "@"))
    assert parse_ebc2(print_ebc2(instance)) == instance


@pytest.mark.parametrize("text", ["u: 0\n", "v: 0\nv: 1\n", "v: 02\n", "w: 0\n", "v 0\n"])
def test_ebc2_file_errors(text):
    with pytest.raises(MachineFormatError):
        parse_ebc2(text)


def test_ebc2_gjfa_examples():
    machine = ebc2_fixed_machine()
    assert machine.states == ("qC", "qD", "q0", "q1")
    assert machine.kind is MachineKind.GENERAL_FINITE_MACHINE
    assert gjfa_accepts(machine, ebc2_to_word(Ebc2Instance.from_bits("01", ("0", "1"))))
    assert not gjfa_accepts(machine, ebc2_to_word(Ebc2Instance.from_bits("010", ("00", "1"))))
    empty = ebc2_to_word(Ebc2Instance.from_bits("@"))
    assert empty.is_empty()
    assert gjfa_accepts(machine, empty)


def test_ebc2_word_layout():
    word = ebc2_to_word(Ebc2Instance.from_bits("01", ("1",)))
    assert str(word) == "st,st,0,1,st,st,st,c,1b,cb"


def test_each_return_to_open_state_consumes_one_block_and_matching_prefix():
    instance = Ebc2Instance.from_bits("0110", ("01", "1", "0"))
    machine = ebc2_fixed_machine()
    start = GjfaConfig(machine.start, ebc2_to_word(instance))
    returned: set[GjfaConfig] = set()
    seen = {start}
    queue = deque([start])
    while queue:
        config = queue.popleft()
        for successor in gjfa_successors(machine, config):
            if successor.state == machine.start:
                returned.add(successor)
            elif successor not in seen:
                seen.add(successor)
                queue.append(successor)

    target_bits = "".join(instance.target.symbols)
    expected = set()
    for index, block in enumerate(instance.blocks):
        bits = "".join(block.symbols)
        if target_bits.startswith(bits):
            rest = tuple("".join(other.symbols) or "@" for i, other in enumerate(instance.blocks) if i != index)
            reduced = Ebc2Instance.from_bits(target_bits[len(bits) :] or "@", rest)
            expected.add(GjfaConfig(machine.start, ebc2_to_word(reduced)))
    assert len(expected) == 2
    assert returned == expected


@pytest.mark.slow
def test_ebc2_gjfa_agrees_with_oracle_exhaustively():
    machine = ebc2_fixed_machine()
    for instance in all_ebc2_instances(3, 2):
        assert gjfa_accepts(machine, ebc2_to_word(instance)) == brute_ebc2(instance).exists, print_ebc2(instance)


def test_ebc2_gjfa_agrees_with_oracle_on_small_instances():
    machine = ebc2_fixed_machine()
    for instance in all_ebc2_instances(2, 2):
        assert gjfa_accepts(machine, ebc2_to_word(instance)) == brute_ebc2(instance).exists, print_ebc2(instance)


###################################################################################################
# 3SAT→JFA
###################################################################################################


def test_sat_jfa_examples():
    machine, word = sat_to_jfa(SINGLE_TRUE)
    assert len(machine.states) == 3
    assert str(word) == "c1"
    assert jfa_accepts(machine, word)
    machine, word = sat_to_jfa(CONTRADICTION)
    assert str(word) == "c1,c2"
    assert not jfa_accepts(machine, word)


def test_sat_jfa_agrees_with_oracle_on_small_formulas():
    for formula in formulas_upto(2, 2):
        machine, word = sat_to_jfa(formula)
        assert len(machine.states) == 2 * formula.num_vars + 1
        assert jfa_accepts(machine, word) == brute_sat(formula).satisfiable, str(formula)


@pytest.mark.slow
def test_sat_jfa_agrees_with_oracle_exhaustively():
    for formula in formulas_upto(3, 3):
        machine, word = sat_to_jfa(formula)
        assert jfa_accepts(machine, word) == brute_sat(formula).satisfiable, str(formula)


@given(integers(min_value=0, max_value=10_000))
@settings(max_examples=50, deadline=None)
def test_sat_jfa_agrees_with_oracle_on_random_formulas(seed):
    rng = random.Random(seed)
    formula = random_formula(rng, rng.randint(1, 6), rng.randint(1, 8))
    machine, word = sat_to_jfa(formula)
    assert jfa_accepts(machine, word) == brute_sat(formula).satisfiable


def test_generated_machines_survive_machine_file_round_trip():
    for machine in (sat_to_jfa(TWO_VARIABLES)[0], ebc2_fixed_machine(), sat_fixed_gjfa()):
        assert parse_machine(print_machine(machine)) == machine


###################################################################################################
# 3SAT→固定GJFA
###################################################################################################


def test_sat_gjfa_layout():
    layout = SatGjfaLayout.for_formula(CnfFormula(3, ((Literal(1), Literal(2), Literal(3)),)))
    assert layout.code_length == 2
    assert layout.codes == ("00", "01", "10")
    assert layout.occurrences == (1, 1, 1)
    assert SatGjfaLayout.for_formula(SINGLE_TRUE).codes == ("",)


def test_sat_gjfa_layout_rejects_duplicate_codes():
    with pytest.raises(ValueError):
        SatGjfaLayout(2, 1, (2, 1), 1, ("0", "0"))


def test_sat_gjfa_word_length():
    word = sat_to_gjfa_word(TWO_VARIABLES)
    n, m, code_length = 2, 1, 1
    auxiliary = (n + 3 * m * code_length) + n + 3 * m * code_length
    clause_part = (m + 6 * m * (code_length + 2)) + m + 3 * m * (2 * code_length + 4)
    assert len(word) == auxiliary + clause_part
    assert word.symbols[auxiliary] == "st"
    assert word.symbols[auxiliary - 1] == "1"


def test_sat_gjfa_examples():
    machine = sat_fixed_gjfa()
    assert machine.start == "qA"
    assert machine.finals == frozenset({"qE"})
    assert len(machine.states) == 13
    assert gjfa_accepts(machine, sat_to_gjfa_word(TWO_VARIABLES))
    assert gjfa_accepts(machine, sat_to_gjfa_word(SINGLE_TRUE))
    assert not gjfa_accepts(machine, sat_to_gjfa_word(CONTRADICTION))


def test_sat_gjfa_word_caps():
    with pytest.raises(CapExceededError):
        sat_to_gjfa_word(TWO_VARIABLES, vars_cap=1)
    with pytest.raises(CapExceededError):
        sat_to_gjfa_word(CONTRADICTION, clauses_cap=1)


@pytest.mark.slow
def test_sat_gjfa_agrees_with_oracle_exhaustively():
    machine = sat_fixed_gjfa()
    for formula in formulas_upto(2, 2):
        assert gjfa_accepts(machine, sat_to_gjfa_word(formula)) == brute_sat(formula).satisfiable, str(formula)


def test_sat_gjfa_agrees_with_oracle_on_single_clauses():
    machine = sat_fixed_gjfa()
    for formula in formulas_upto(2, 1):
        assert gjfa_accepts(machine, sat_to_gjfa_word(formula)) == brute_sat(formula).satisfiable, str(formula)


###################################################################################################
# 二値符号化
###################################################################################################


def test_length_factor_of_sat_gjfa_alphabet():
    assert len(SAT_GJFA_ALPHABET) == 11
    assert length_factor(binary_homomorphism(SAT_GJFA_ALPHABET)) <= BINARY_LENGTH_FACTOR_LIMIT


def test_binary_wrap_preserves_ebc2_verdicts():
    machine = ebc2_fixed_machine()
    for bits, blocks in (("01", ("0", "1")), ("010", ("00", "1")), ("10", ("1", "0"))):
        instance = Ebc2Instance.from_bits(bits, blocks)
        word = ebc2_to_word(instance)
        encoded_machine, encoded_word = binary_wrap(machine, word)
        assert encoded_machine.alphabet.symbols == ("0", "1")
        assert gjfa_accepts(encoded_machine, encoded_word) == brute_ebc2(instance).exists
        assert len(encoded_word) <= (len(machine.alphabet) + 2) * len(word)


def test_binary_wrap_of_empty_word():
    _, encoded = binary_wrap(ebc2_fixed_machine(), Word(ebc2_fixed_machine().alphabet))
    assert encoded.is_empty()


###################################################################################################
# 単項正規表現と非正則性・非可換性
###################################################################################################


def test_first_primes():
    assert first_primes(4) == [2, 3, 5, 7]
    assert period_of(TWO_VARIABLES) == 6


def test_stockmeyer_meyer_examples():
    period = period_of(CONTRADICTION)
    assert unary_lengths_upto(stockmeyer_meyer_expr(CONTRADICTION), 2 * period) == frozenset(range(2 * period + 1))
    lengths = unary_lengths_upto(stockmeyer_meyer_expr(SINGLE_TRUE), 2 * period)
    assert 0 in lengths
    assert 1 not in lengths
    assert 3 not in lengths


def test_stockmeyer_meyer_agrees_with_oracle():
    for formula in formulas_upto(2, 2):
        period = period_of(formula)
        lengths = unary_lengths_upto(stockmeyer_meyer_expr(formula), 2 * period)
        missing = set(range(2 * period + 1)) - lengths
        satisfiable = brute_sat(formula).satisfiable
        assert bool(missing) == satisfiable, str(formula)
        assert any(period <= length < 2 * period for length in missing) == satisfiable, str(formula)


def test_stockmeyer_meyer_cap():
    with pytest.raises(CapExceededError):
        stockmeyer_meyer_expr(TWO_VARIABLES, cap=1)


def test_nonregularity_gadget():
    everything = words_upto(PAIRING_ALPHABET, 4)
    assert jfa_language_upto(build_nonregularity_jfa(CONTRADICTION), 4) == everything
    satisfiable_slice = jfa_language_upto(build_nonregularity_jfa(SINGLE_TRUE), 4)
    assert satisfiable_slice <= everything
    assert ("a",) not in satisfiable_slice
    assert ("a", "b") in satisfiable_slice


def test_noncommutativity_gadget():
    assert is_commutative_regular(build_noncommutativity_nfa(CONTRADICTION)).answer is VerdictAnswer.YES
    machine = build_noncommutativity_nfa(SINGLE_TRUE)
    verdict = is_commutative_regular(machine)
    assert verdict.answer is VerdictAnswer.NO
    assert fa_accepts(machine, verdict.witness.accepted)
    assert not fa_accepts(machine, verdict.witness.rejected)
    assert fa_accepts(machine, Word(PAIRING_ALPHABET, ("a", "a", "b")))
    assert not fa_accepts(machine, Word(PAIRING_ALPHABET, ("b", "a")))
