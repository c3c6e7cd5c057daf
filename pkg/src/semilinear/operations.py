"""半線形集合の所属判定・和・Minkowski和・閉包・有界比較を提供する。"""

from __future__ import annotations

import itertools
import logging
from collections.abc import Iterator, Sequence
from functools import lru_cache

from consts.semilinear_constants import DEFAULT_STAR_COMPONENT_CAP
from core.alphabet import ParikhVector
from semilinear.model import LinearSet, PeriodicLinear, SemilinearSet, Vector, add_vectors, as_vector, subtract_vectors
from utils.errors import ResourceLimitError

logger = logging.getLogger(__name__)


# 補助処理
def _require_dimension(left: SemilinearSet, right: SemilinearSet) -> None:
    if left.dimension != right.dimension:
        raise ValueError(f"半線形集合の次元が一致しません。left={left.dimension} right={right.dimension}")


@lru_cache(maxsize=65536)
def _span_contains(periods: tuple[Vector, ...], residual: Vector) -> bool:
    """residualが周期の非負整数結合で表せるか判定する。

    補足:
        周期を順に見て「もう1回使う」か「次の周期へ進む」かを選ぶ深さ優先探索。
        成分がすべて非負なので(周期番号, 残差)の組は有限で、訪問済み集合により厳密に停止する。
    """
    start = (0, residual)
    visited = {start}
    stack = [start]
    while stack:
        position, remaining = stack.pop()
        if not any(remaining):
            return True
        if position == len(periods):
            continue
        successors = [(position + 1, remaining)]
        reduced = subtract_vectors(remaining, periods[position])
        if reduced is not None:
            successors.append((position, reduced))
        for successor in successors:
            if successor not in visited:
                visited.add(successor)
                stack.append(successor)
    return False


def linear_member(component: LinearSet, vector: Vector) -> bool:
    """線形集合への所属判定。"""
    residual = subtract_vectors(vector, component.base)
    if residual is None:
        return False
    return _span_contains(component.periods, residual)


def linear_contains(outer: LinearSet, inner: LinearSet) -> bool:
    """innerの基底がouterに属し、innerの各周期がouterの周期の非負整数結合なら真(inner ⊆ outerの十分条件)。"""
    if not linear_member(outer, inner.base):
        return False
    return all(_span_contains(outer.periods, period) for period in inner.periods)


def _star_component(component: LinearSet) -> tuple[LinearSet, ...]:
    """L(c;P)^{⧢,*} = {0⃗} ∪ L(c; P∪{c})。c = 0⃗ や P = ∅ の場合は1成分にまとまる。"""
    zero = (0,) * component.dimension
    if not any(component.base):
        return (LinearSet(zero, component.periods),)
    if not component.periods:
        return (LinearSet(zero, (component.base,)),)
    return (LinearSet(zero), LinearSet(component.base, (*component.periods, component.base)))


def sl_merge(semilinear: SemilinearSet) -> SemilinearSet:
    """L(b;Q) と L(b+c; Q∪{c}) の組を L(b; Q∪{c}) へまとめる操作を不動点まで繰り返す。"""
    components = set(semilinear.components)
    changed = True
    while changed:
        changed = False
        for component in sorted(components, key=LinearSet.sort_key):
            for period in component.periods:
                smaller_base = subtract_vectors(component.base, period)
                if smaller_base is None:
                    continue
                reduced_periods = tuple(p for p in component.periods if p != period)
                partner = LinearSet(smaller_base, reduced_periods)
                if partner in components:
                    components.discard(partner)
                    components.discard(component)
                    components.add(LinearSet(smaller_base, component.periods))
                    changed = True
                    break
            if changed:
                break
    return SemilinearSet(semilinear.dimension, tuple(components))


# メイン処理
def sl_member(semilinear: SemilinearSet, vector: ParikhVector | Sequence[int]) -> bool:
    """半線形集合への所属判定。

    引数:
        semilinear: 半線形集合。
        vector: 判定するベクトル。

    戻り値:
        いずれかの成分に属すれば真。

    例外:
        ValueError: 次元が一致しない場合。
    """
    point = as_vector(vector)
    if len(point) != semilinear.dimension:
        raise ValueError(f"ベクトルの次元が一致しません。vector={point} 次元={semilinear.dimension}")
    return any(linear_member(component, point) for component in semilinear.components)


def sl_union(left: SemilinearSet, right: SemilinearSet) -> SemilinearSet:
    """成分の列を連結して整列する。"""
    _require_dimension(left, right)
    return SemilinearSet(left.dimension, left.components + right.components)


def sl_sum(left: SemilinearSet, right: SemilinearSet) -> SemilinearSet:
    """Minkowski和。成分ごとにL(b+b′, P∪P′)を作る。"""
    _require_dimension(left, right)
    components = tuple(
        LinearSet(add_vectors(first.base, second.base), first.periods + second.periods)
        for first in left.components
        for second in right.components
    )
    return SemilinearSet(left.dimension, components)


def sl_prune(semilinear: SemilinearSet) -> SemilinearSet:
    """他の成分に構文的に包含される成分を除く。集合としては変わらない。"""
    components = list(semilinear.components)
    kept = [True] * len(components)
    for i, component in enumerate(components):
        for j, other in enumerate(components):
            if i != j and kept[j] and linear_contains(other, component):
                kept[i] = False
                break
    return SemilinearSet(semilinear.dimension, tuple(c for c, keep in zip(components, kept, strict=True) if keep))


def sl_simplify(semilinear: SemilinearSet) -> SemilinearSet:
    """sl_mergeとsl_pruneを順に適用する。集合としては変わらない。"""
    return sl_prune(sl_merge(semilinear))


def sl_star(
    semilinear: SemilinearSet, cap: int = DEFAULT_STAR_COMPONENT_CAP, simplify: bool = False
) -> SemilinearSet:
    """反復シャッフルに対応する閉包を返す。

    引数:
        semilinear: 半線形集合。
        cap: 展開中に許容する成分数の上限。
        simplify: 真なら和を1成分ずつ畳み込むたびにsl_simplifyで成分を減らす。

    戻り値:
        成分ごとの閉包 {0⃗} ∪ L(c; P∪{c}) のMinkowski和を展開した半線形集合。
        simplifyが偽なら成分数は高々2^{成分数}。

    例外:
        ResourceLimitError: 展開の成分数が上限を超える場合。
    """
    dimension = semilinear.dimension
    stars = [_star_component(component) for component in semilinear.components]
    if not simplify:
        expected = 1
        for star in stars:
            expected *= len(star)
        if expected > cap:
            logger.warning("異常: 閉包の展開が上限を超えます。components=%s cap=%s", expected, cap)
            raise ResourceLimitError("star_components", cap, expected)
        components = (
            LinearSet(
                tuple(map(sum, zip(*(part.base for part in choice), strict=True))) if choice else (0,) * dimension,
                tuple(period for part in choice for period in part.periods),
            )
            for choice in itertools.product(*stars)
        )
        return SemilinearSet(dimension, tuple(components))

    result = SemilinearSet.zero(dimension)
    for star in stars:
        result = sl_simplify(sl_sum(result, SemilinearSet(dimension, star)))
        if len(result) > cap:
            logger.warning("異常: 閉包の展開が上限を超えます。components=%s cap=%s", len(result), cap)
            raise ResourceLimitError("star_components", cap, len(result))
    return result


def iter_box(box: Sequence[int]) -> Iterator[Vector]:
    """各座標0..bᵢの格子点を列挙する。"""
    return itertools.product(*(range(bound + 1) for bound in box))


def sl_bounded_equal(left: SemilinearSet, right: SemilinearSet, box: int | Sequence[int]) -> bool:
    """箱[0,b₁]×…×[0,b_k]の全点で所属が一致するか判定する。箱の外については何も主張しない。"""
    _require_dimension(left, right)
    bounds = (box,) * left.dimension if isinstance(box, int) else tuple(box)
    if len(bounds) != left.dimension:
        raise ValueError(f"箱の次元が一致しません。box={bounds} 次元={left.dimension}")
    return all(sl_member(left, point) == sl_member(right, point) for point in iter_box(bounds))


def find_bounded_difference(left: SemilinearSet, right: SemilinearSet, box: int | Sequence[int]) -> Vector | None:
    """箱の中で所属が食い違う最初の点を返す。"""
    _require_dimension(left, right)
    bounds = (box,) * left.dimension if isinstance(box, int) else tuple(box)
    for point in iter_box(bounds):
        if sl_member(left, point) != sl_member(right, point):
            return point
    return None


def is_periodic_form(semilinear: SemilinearSet) -> tuple[bool, list[PeriodicLinear] | None]:
    """全成分の周期が単位方向(1座標のみ正)で、座標ごとに高々1つなら真とその分解を返す。

    補足:
        構文的な判定であり、偽は非正則性の証明ではない。
    """
    decomposition: list[PeriodicLinear] = []
    for component in semilinear.components:
        unit_periods: list[tuple[int, int]] = []
        for period in component.periods:
            support = [coordinate for coordinate, entry in enumerate(period) if entry]
            if len(support) != 1:
                return False, None
            unit_periods.append((support[0], period[support[0]]))
        coordinates = [coordinate for coordinate, _ in unit_periods]
        if len(set(coordinates)) != len(coordinates):
            return False, None
        decomposition.append(PeriodicLinear(component.base, tuple(sorted(unit_periods))))
    return True, decomposition
