"""ℕ^k上の線形集合・半線形集合の型を定義する。"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from core.alphabet import ParikhVector

Vector = tuple[int, ...]


# 補助処理
def as_vector(value: ParikhVector | Sequence[int]) -> Vector:
    """ParikhVectorまたは整数列を整数タプルへ変換する。"""
    if isinstance(value, ParikhVector):
        return value.counts
    return tuple(int(entry) for entry in value)


def add_vectors(left: Vector, right: Vector) -> Vector:
    return tuple(a + b for a, b in zip(left, right, strict=True))


def subtract_vectors(left: Vector, right: Vector) -> Vector | None:
    """left − rightを返す。負の成分が出る場合はNone。"""
    difference = tuple(a - b for a, b in zip(left, right, strict=True))
    if any(entry < 0 for entry in difference):
        return None
    return difference


def _validate_vector(vector: Vector, dimension: int) -> None:
    if len(vector) != dimension:
        raise ValueError(f"ベクトルの次元が一致しません。vector={vector} 次元={dimension}")
    if any(entry < 0 for entry in vector):
        raise ValueError(f"ベクトルに負の成分があります。vector={vector}")


@dataclass(frozen=True)
class LinearSet:
    """線形集合 {v + k₁v₁ + … + k_mv_m : kᵢ ∈ ℕ}。

    周期は重複と零ベクトルを除き、辞書式に整列して保持する。
    """

    base: Vector
    periods: tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        base = as_vector(self.base)
        object.__setattr__(self, "base", base)
        periods = sorted({vector for vector in map(as_vector, self.periods) if any(vector)})
        object.__setattr__(self, "periods", tuple(periods))
        for vector in (base, *periods):
            _validate_vector(vector, len(base))

    @property
    def dimension(self) -> int:
        return len(self.base)

    def sort_key(self) -> tuple[Vector, tuple[Vector, ...]]:
        return self.base, self.periods


@dataclass(frozen=True)
class SemilinearSet:
    """線形集合の有限和。成分は(基底, 周期)の順に整列し、構文的に等しい成分は1つにまとめる。"""

    dimension: int
    components: tuple[LinearSet, ...] = ()

    def __post_init__(self) -> None:
        if self.dimension < 1:
            raise ValueError(f"次元は1以上である必要があります。dimension={self.dimension}")
        for component in self.components:
            if component.dimension != self.dimension:
                raise ValueError(
                    f"成分の次元が一致しません。component={component.dimension} dimension={self.dimension}"
                )
        components = sorted(set(self.components), key=LinearSet.sort_key)
        object.__setattr__(self, "components", tuple(components))

    @classmethod
    def empty(cls, dimension: int) -> SemilinearSet:
        return cls(dimension, ())

    @classmethod
    def zero(cls, dimension: int) -> SemilinearSet:
        """零ベクトルだけからなる集合{0⃗}。"""
        return cls(dimension, (LinearSet((0,) * dimension),))

    @classmethod
    def singleton(cls, vector: ParikhVector | Sequence[int]) -> SemilinearSet:
        base = as_vector(vector)
        return cls(len(base), (LinearSet(base),))

    @classmethod
    def from_components(cls, dimension: int, components: Iterable[LinearSet]) -> SemilinearSet:
        return cls(dimension, tuple(components))

    def __iter__(self) -> Iterator[LinearSet]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def is_empty(self) -> bool:
        return not self.components


@dataclass(frozen=True)
class PeriodicLinear:
    """周期がすべて単位方向の線形集合。`unit_periods`は(座標, n(a))の組。"""

    base: Vector
    unit_periods: tuple[tuple[int, int], ...]

    def period_of(self, coordinate: int) -> int | None:
        """座標の周期n(a)を返す。周期を持たない座標はNone。"""
        for unit_coordinate, period in self.unit_periods:
            if unit_coordinate == coordinate:
                return period
        return None

    def to_linear(self) -> LinearSet:
        periods = []
        for coordinate, period in self.unit_periods:
            vector = [0] * len(self.base)
            vector[coordinate] = period
            periods.append(tuple(vector))
        return LinearSet(self.base, tuple(periods))
