"""回帰コーパスの機械と共通のアルファベットを提供するフィクスチャ。"""

from __future__ import annotations

import pytest

from core.alphabet import Alphabet
from machine.machine_file import parse_machine
from machine.model import Machine
from utils.path_utils import get_corpus_directory


def load_corpus_machine(file_name: str) -> Machine:
    return parse_machine((get_corpus_directory() / file_name).read_text(encoding="utf-8"))


@pytest.fixture
def ab() -> Alphabet:
    return Alphabet(("a", "b"))


@pytest.fixture
def abc() -> Alphabet:
    return Alphabet(("a", "b", "c"))


@pytest.fixture
def abc_loop() -> Machine:
    return load_corpus_machine("abc_loop.txt")


@pytest.fixture
def abcd_loop() -> Machine:
    return load_corpus_machine("abcd_loop.txt")


@pytest.fixture
def contains_a() -> Machine:
    return load_corpus_machine("contains_a.txt")


@pytest.fixture
def contains_b() -> Machine:
    return load_corpus_machine("contains_b.txt")


@pytest.fixture
def elimination_sample() -> Machine:
    return load_corpus_machine("elimination_sample.txt")


@pytest.fixture
def ab_loop() -> Machine:
    return load_corpus_machine("ab_loop.txt")


@pytest.fixture
def a_star_b_star() -> Machine:
    return load_corpus_machine("a_star_b_star.txt")


@pytest.fixture
def sigma_star() -> Machine:
    return load_corpus_machine("sigma_star.txt")


@pytest.fixture
def unary() -> Machine:
    return load_corpus_machine("unary.txt")
