"""単項正規表現による3SATの符号化と、それを使う非正規性・非可換性の困難性ガジェット。"""

from __future__ import annotations

import logging
from math import prod

from consts.reduction_constants import DEFAULT_SM_VARS_CAP, PAIRING_SYMBOL, UNARY_SYMBOL
from core.alphabet import Alphabet, Word
from expr.ast import (
    Atom,
    BinaryExpr,
    Concat,
    EmptySet,
    Epsilon,
    Expr,
    IterShuffle,
    Shuffle,
    Star,
    UnaryExpr,
    Union,
    iter_nodes,
    rebase_alphabet,
    union_all,
)
from expr.thompson import thompson_machine
from expr.transforms import regex_to_alpha_shuf
from machine.model import Machine
from machine.operations import shuffle_product, union_machines
from reductions.cnf import CnfFormula, require_vars_cap

logger = logging.getLogger(__name__)

UNARY_ALPHABET = Alphabet((UNARY_SYMBOL,))
PAIRING_ALPHABET = Alphabet((UNARY_SYMBOL, PAIRING_SYMBOL))


# 補助処理
def first_primes(count: int) -> list[int]:
    primes: list[int] = []
    candidate = 2
    while len(primes) < count:
        if all(candidate % prime for prime in primes):
            primes.append(candidate)
        candidate += 1
    return primes


def _residue_class(alphabet: Alphabet, residue: int, period: int) -> Expr:
    """長さが`residue`(mod `period`)の語 a^r (a^p)* を表す式。"""
    loop = Star(Atom(Word(alphabet, (UNARY_SYMBOL,) * period)))
    if residue == 0:
        return loop
    return Concat(Atom(Word(alphabet, (UNARY_SYMBOL,) * residue)), loop)


def _crt_residue(targets: dict[int, int]) -> int:
    """各素数pについて r ≡ targets[p] (mod p) を満たす最小の r ≥ 0。"""
    modulus = prod(targets)
    return next(r for r in range(modulus) if all(r % prime == value for prime, value in targets.items()))


def _falsifying_residues(formula: CnfFormula, primes: list[int]) -> list[tuple[int, int]]:
    """節ごとに、その節を偽にする部分割当てを表す(剰余, 法)を返す。恒真な節は除く。"""
    classes: list[tuple[int, int]] = []
    for clause in formula.clauses:
        forced: dict[int, bool] = {}
        tautology = False
        for literal in clause:
            value = not literal.positive
            if forced.setdefault(literal.variable, value) is not value:
                tautology = True
        if tautology:
            continue
        targets = {primes[variable - 1]: int(value) for variable, value in forced.items()}
        classes.append((_crt_residue(targets), prod(targets)))
    return classes


# メイン処理
def stockmeyer_meyer_expr(formula: CnfFormula, cap: int = DEFAULT_SM_VARS_CAP) -> Expr:
    """{a}上の正規表現E_φを返す。L(E_φ) ≠ {a}* となるのはφが充足可能なときに限る。

    引数:
        formula: 対象の論理式。
        cap: 変数の個数の上限。

    戻り値:
        最初のn個の素数p₁…p_nについて、長さℓは ℓ mod p_i = 1 を x_i が真と読む割当てを表す。
        E_φは(ある i で ℓ mod p_i ∉ {0,1} となる無効な長さ)と(ある節を偽にする長さ)の和で、
        補集合は充足割当てを表す長さの全体になる。長さ0は全て偽の割当て。

    例外:
        CapExceededError: 変数の個数が上限を超える場合(cap名は`sm_vars`)。

    補足:
        L(E_φ)の周期は∏p_iの約数なので、長さ0..2·∏p_iで全体性と補集合の無限性を判定できる。
    """
    require_vars_cap(formula, "sm_vars", cap)
    primes = first_primes(formula.num_vars)

    terms = [
        _residue_class(UNARY_ALPHABET, residue, prime)
        for prime in primes
        for residue in range(2, prime)
    ]
    terms.extend(
        _residue_class(UNARY_ALPHABET, residue, period) for residue, period in _falsifying_residues(formula, primes)
    )
    expr = union_all(UNARY_ALPHABET, terms)
    logger.debug("完了: 単項正規表現を構成しました。primes=%s terms=%s", primes, len(terms))
    return expr


def period_of(formula: CnfFormula) -> int:
    """E_φの長さ集合の周期(最初のn個の素数の積)。"""
    return prod(first_primes(formula.num_vars))


def unary_lengths_upto(expr: Expr, max_length: int) -> frozenset[int]:
    """式の言語に属する語の長さのうち`max_length`以下のものを返す。単項の式ではこれが言語そのもの。"""
    if max_length < 0:
        raise ValueError(f"長さ上限は0以上である必要があります。max_length={max_length}")

    memo: dict[int, frozenset[int]] = {}

    def evaluate(node: Expr) -> frozenset[int]:
        if isinstance(node, EmptySet):
            return frozenset()
        if isinstance(node, Epsilon):
            return frozenset({0})
        if isinstance(node, Atom):
            return frozenset({len(node.word)} if len(node.word) <= max_length else ())
        if isinstance(node, Union):
            return memo[id(node.left)] | memo[id(node.right)]
        if isinstance(node, BinaryExpr):
            return frozenset(
                left + right
                for left in memo[id(node.left)]
                for right in memo[id(node.right)]
                if left + right <= max_length
            )
        if isinstance(node, UnaryExpr):
            reached = {0}
            frontier = [0]
            steps = [length for length in memo[id(node.inner)] if length > 0]
            while frontier:
                current = frontier.pop()
                for step in steps:
                    following = current + step
                    if following <= max_length and following not in reached:
                        reached.add(following)
                        frontier.append(following)
            return frozenset(reached)
        raise TypeError(f"未対応の式ノードです。node={type(node).__name__}")

    for node in reversed(list(iter_nodes(expr))):
        if id(node) not in memo:
            memo[id(node)] = evaluate(node)
    return memo[id(expr)]


def build_nonregularity_jfa(formula: CnfFormula, cap: int = DEFAULT_SM_VARS_CAP) -> Machine:
    """L_φ = (b^{⧢,*} ⧢ Ê_φ) ∪ (a ⧢ b)^{⧢,*} をJFA言語とする有限機械を返す。

    引数:
        formula: 対象の論理式。
        cap: 変数の個数の上限。

    戻り値:
        Ê_φはE_φを{a,b}上へ移してα-SHUF式にしたもの。φが充足不能ならL_φ = {a,b}*。
        充足可能なら充足割当てを表す長さℓについて、|w|_a = ℓ かつ |w|_b ≠ ℓ の語がL_φに属さない。
    """
    rebased = rebase_alphabet(stockmeyer_meyer_expr(formula, cap), PAIRING_ALPHABET)
    letter_a = Atom(Word(PAIRING_ALPHABET, (UNARY_SYMBOL,)))
    letter_b = Atom(Word(PAIRING_ALPHABET, (PAIRING_SYMBOL,)))
    expr = Union(
        Shuffle(IterShuffle(letter_b), regex_to_alpha_shuf(rebased)),
        IterShuffle(Shuffle(letter_a, letter_b)),
    )
    return thompson_machine(expr)


def build_noncommutativity_nfa(formula: CnfFormula, cap: int = DEFAULT_SM_VARS_CAP) -> Machine:
    """L′_φ = ({b}* ⧢ L(E_φ)) ∪ {a}*{b} をFA言語とする有限機械を返す。

    戻り値:
        φが充足不能ならL′_φ = {a,b}*で可換。充足可能なら充足割当てを表す長さkについて
        a^k b ∈ L′_φ かつ b a^k ∉ L′_φ で非可換。
    """
    rebased = rebase_alphabet(stockmeyer_meyer_expr(formula, cap), PAIRING_ALPHABET)
    letter_a = Atom(Word(PAIRING_ALPHABET, (UNARY_SYMBOL,)))
    letter_b = Atom(Word(PAIRING_ALPHABET, (PAIRING_SYMBOL,)))
    shuffled = shuffle_product(thompson_machine(Star(letter_b)), thompson_machine(rebased))
    return union_machines(shuffled, thompson_machine(Concat(Star(letter_a), letter_b)))
