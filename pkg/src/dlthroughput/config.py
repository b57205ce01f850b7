"""Evaluation configuration: which cycle, which PHY cells, which channel."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import DomainError
from .frames import Window, check_ber
from .params import STATION_COUNTS, Standard


class FlavorKind(str, enum.Enum):
    SU = "SU"          # one station per cycle, legacy UL BAck
    MU_AC4 = "MU_AC4"  # 11ac DL MU-MIMO to 4, sequential legacy BAck/BAR
    MU_AX = "MU_AX"    # 11ax DL MU to n, simultaneous UL BAcks


class UlMode(str, enum.Enum):
    MU_MIMO = "MU_MIMO"
    OFDMA = "OFDMA"
    LEGACY = "LEGACY"


@dataclass(frozen=True)
class EvalConfig:
    """Everything needed to evaluate or optimize one cycle, except the plan."""

    standard: Standard
    kind: FlavorKind
    n: int
    mcs: int
    ber: float = 0.0
    msdu_bytes: int = 1500
    window: Window | None = None
    ul_mode: UlMode | None = None
    reserve_tf_slot: bool = True

    def __post_init__(self):
        std = Standard(str(getattr(self.standard, "value", self.standard)).upper())
        kind = FlavorKind(str(getattr(self.kind, "value", self.kind)).upper())
        object.__setattr__(self, "standard", std)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "ber", check_ber(self.ber))
        if isinstance(self.mcs, bool) or int(self.mcs) != self.mcs or not 0 <= int(self.mcs) <= 11:
            raise DomainError(f"mcs must be in 0..11, got {self.mcs!r}")
        object.__setattr__(self, "mcs", int(self.mcs))
        if int(self.msdu_bytes) != self.msdu_bytes or self.msdu_bytes < 1:
            raise DomainError(f"MSDU size must be a positive integer, got {self.msdu_bytes!r}")
        object.__setattr__(self, "msdu_bytes", int(self.msdu_bytes))

        window = Window.parse(self.window) if self.window is not None else (
            Window.W256 if std is Standard.AX else Window.W64)
        if self.ul_mode is None:
            ul = UlMode.MU_MIMO if kind is FlavorKind.MU_AX else UlMode.LEGACY
        else:
            ul = UlMode(str(getattr(self.ul_mode, "value", self.ul_mode)).upper())
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "ul_mode", ul)

        if std is Standard.AC:
            if window is not Window.W64:
                raise DomainError("11ac is limited to a 64-MPDU window")
            if kind is FlavorKind.MU_AX:
                raise DomainError("MU_AX flavors require 11ax")
        if kind is FlavorKind.SU:
            if self.n != 1:
                raise DomainError(f"SU cycles serve one station, got n={self.n}")
            if ul is not UlMode.LEGACY:
                raise DomainError("SU cycles acknowledge in legacy mode")
        elif kind is FlavorKind.MU_AC4:
            if std is not Standard.AC or self.n != 4:
                raise DomainError("MU_AC4 is 11ac with n=4")
            if ul is not UlMode.LEGACY:
                raise DomainError("11ac acknowledges in legacy mode")
        else:
            if self.n not in STATION_COUNTS[1:]:
                raise DomainError(f"MU_AX group size must be one of {STATION_COUNTS[1:]}, got {self.n}")
            if ul is UlMode.LEGACY:
                raise DomainError("MU_AX acknowledges with UL MU-MIMO or OFDMA")

    def with_(self, **changes) -> "EvalConfig":
        return replace(self, **changes)

    @property
    def label(self) -> str:
        if self.kind is FlavorKind.SU:
            return f"SU_{self.standard.value}(1)"
        if self.kind is FlavorKind.MU_AC4:
            return "MU_AC(4)"
        return f"MU_AX({self.n})"
