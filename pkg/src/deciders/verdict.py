"""判定結果(Yes / No / BoundedYes)と反例の型を定義する。"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from core.alphabet import Word


class VerdictAnswer(Enum):
    """YES・NOは厳密な手続きだけが返す。BOUNDED_YESは必ず上限を伴う。"""

    YES = "Yes"
    NO = "No"
    BOUNDED_YES = "BoundedYes"


@dataclass(frozen=True)
class CommutativityWitness:
    """最小DFAの状態qと記号a, bでδ(q,ab) ≠ δ(q,ba)となる組、および具体的な語の組。

    `accepted`は言語に属し、`rejected`はabとbaを入れ替えた語で言語に属さない。
    """

    state: str
    first: str
    second: str
    accepted: Word
    rejected: Word

    def __str__(self) -> str:
        return (
            f"state={self.state} pair={self.first},{self.second} accepted={self.accepted} rejected={self.rejected}"
        )


@dataclass(frozen=True)
class PermutationWitness:
    """言語に属する語と、その置換のうち言語に属さない語の組。"""

    present: Word
    absent: Word

    def __str__(self) -> str:
        return f"present={self.present} absent={self.absent}"


Witness = CommutativityWitness | PermutationWitness | Word


@dataclass(frozen=True)
class Verdict:
    answer: VerdictAnswer
    witness: Witness | None = None
    bound: int | None = None

    def __post_init__(self) -> None:
        if self.answer is VerdictAnswer.BOUNDED_YES and self.bound is None:
            raise ValueError("BoundedYesには上限が必要です。")

    @classmethod
    def yes(cls) -> Verdict:
        return cls(VerdictAnswer.YES)

    @classmethod
    def no(cls, witness: Witness | None = None, bound: int | None = None) -> Verdict:
        return cls(VerdictAnswer.NO, witness, bound)

    @classmethod
    def bounded_yes(cls, bound: int) -> Verdict:
        return cls(VerdictAnswer.BOUNDED_YES, None, bound)

    @property
    def is_positive(self) -> bool:
        return self.answer is not VerdictAnswer.NO

    def __str__(self) -> str:
        if self.answer is VerdictAnswer.BOUNDED_YES:
            return f"{self.answer.value}({self.bound})"
        parts = [self.answer.value]
        if self.bound is not None:
            parts.append(f"bound={self.bound}")
        if self.witness is not None:
            parts.append(f"witness: {self.witness}")
        return " ".join(parts)
