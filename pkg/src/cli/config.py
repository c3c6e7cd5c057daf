"""コマンドラインの実行時設定を定義する。"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, fields, replace

from consts.cli_constants import (
    CAPS_ITEM_SEPARATOR,
    CAPS_VALUE_SEPARATOR,
    DEFAULT_BOX_BOUND,
    DEFAULT_LENGTH_BOUND,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    OUTPUT_FORMATS,
)
from consts.reduction_constants import (
    DEFAULT_EBC2_BLOCKS_CAP,
    DEFAULT_GJFA_CLAUSES_CAP,
    DEFAULT_GJFA_VARS_CAP,
    DEFAULT_SAT_VARS_CAP,
    DEFAULT_SM_VARS_CAP,
)
from consts.semilinear_constants import DEFAULT_STAR_COMPONENT_CAP


@dataclass(frozen=True)
class Caps:
    """帰着・オラクル・半線形展開の上限。"""

    sat_vars: int = DEFAULT_SAT_VARS_CAP
    ebc2_blocks: int = DEFAULT_EBC2_BLOCKS_CAP
    sm_vars: int = DEFAULT_SM_VARS_CAP
    gjfa_vars: int = DEFAULT_GJFA_VARS_CAP
    gjfa_clauses: int = DEFAULT_GJFA_CLAUSES_CAP
    star_components: int = DEFAULT_STAR_COMPONENT_CAP

    def __str__(self) -> str:
        return CAPS_ITEM_SEPARATOR.join(
            f"{item.name}{CAPS_VALUE_SEPARATOR}{getattr(self, item.name)}" for item in fields(self)
        )


@dataclass(frozen=True)
class CliConfig:
    """全サブコマンドで共有する設定。同じ設定とシードなら出力は決定的。"""

    length_bound: int = DEFAULT_LENGTH_BOUND
    box_bound: int = DEFAULT_BOX_BOUND
    caps: Caps = Caps()
    seed: int = DEFAULT_SEED
    output_format: str = DEFAULT_OUTPUT_FORMAT

    def __post_init__(self) -> None:
        if self.length_bound < 0:
            raise ValueError(f"長さ上限は0以上である必要があります。bound={self.length_bound}")
        if self.box_bound < 0:
            raise ValueError(f"箱の上限は0以上である必要があります。box={self.box_bound}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"未対応の出力形式です。format={self.output_format!r} 候補={OUTPUT_FORMATS}")

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> CliConfig:
        return cls(
            length_bound=args.bound,
            box_bound=args.box,
            caps=parse_caps(args.caps),
            seed=args.seed,
            output_format=args.format,
        )


def parse_caps(text: str | None, base: Caps | None = None) -> Caps:
    """`sat_vars=10,ebc2_blocks=6`形式の指定を既定値へ上書きしたCapsを返す。

    例外:
        ValueError: 未知のキー、`=`の欠落、0未満や整数でない値。
    """
    caps = base or Caps()
    if not text:
        return caps

    known = {item.name for item in fields(Caps)}
    overrides: dict[str, int] = {}
    for item in text.split(CAPS_ITEM_SEPARATOR):
        if not item.strip():
            continue
        key, separator, value = item.partition(CAPS_VALUE_SEPARATOR)
        key = key.strip()
        if not separator:
            raise ValueError(f"上限の指定は`キー{CAPS_VALUE_SEPARATOR}値`の形式です。item={item!r}")
        if key not in known:
            raise ValueError(f"未知の上限です。key={key!r} 候補={sorted(known)}")
        try:
            limit = int(value)
        except ValueError as exc:
            raise ValueError(f"上限の値が整数ではありません。key={key} value={value!r}") from exc
        if limit < 0:
            raise ValueError(f"上限の値は0以上である必要があります。key={key} value={limit}")
        overrides[key] = limit
    return replace(caps, **overrides)
