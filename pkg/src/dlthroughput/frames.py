"""Two-level aggregation geometry: MSDUs inside MPDUs inside an A-MPDU."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InfeasiblePlan, InvalidValue, MpduTooLarge, MsduTooLarge
from .params import FramingLimits, Standard

_DEFAULT_LIMITS = FramingLimits()


class Window(str, enum.Enum):
    """Block-ack window; also the cap on MPDUs per A-MPDU."""

    W64 = "W64"
    W256 = "W256"

    @property
    def size(self) -> int:
        return 64 if self is Window.W64 else 256

    @classmethod
    def parse(cls, value) -> "Window":
        if isinstance(value, Window):
            return value
        text = str(value).upper().lstrip("W")
        return cls("W" + text)


@dataclass(frozen=True)
class MsduProfile:
    l_data_bytes: int
    len_bytes: int

    @property
    def payload_bits(self) -> int:
        return 8 * self.l_data_bytes


def msdu_profile(l_data_bytes: int, limits: FramingLimits = _DEFAULT_LIMITS) -> MsduProfile:
    """MSDU plus its 14-byte subheader, padded to a multiple of 4 bytes."""
    if isinstance(l_data_bytes, bool) or int(l_data_bytes) != l_data_bytes or l_data_bytes < 1:
        raise InvalidValue(f"MSDU size must be a positive integer, got {l_data_bytes!r}")
    l_data_bytes = int(l_data_bytes)
    length = 4 * math.ceil((l_data_bytes + limits.subheader_bytes) / 4)
    return MsduProfile(l_data_bytes, length)


def mpdu_bytes(profile: MsduProfile, y: int, limits: FramingLimits = _DEFAULT_LIMITS) -> int:
    return 4 * math.ceil((limits.mpdu_overhead_bytes + y * profile.len_bytes) / 4)


def mpdu_bits(profile: MsduProfile, y: int, limits: FramingLimits = _DEFAULT_LIMITS) -> int:
    """Length in bits of one MPDU carrying ``y`` MSDUs (always a multiple of 32)."""
    if y < 1:
        raise InvalidValue(f"an MPDU carries at least one MSDU, got y={y}")
    body = limits.mpdu_overhead_bytes + y * profile.len_bytes
    if body > limits.mpdu_max_bytes:
        raise MpduTooLarge(f"{y} MSDUs of {profile.l_data_bytes} B make a {body}-byte MPDU "
                           f"(limit {limits.mpdu_max_bytes})")
    return 8 * mpdu_bytes(profile, y, limits)


def max_msdus_per_mpdu(profile: MsduProfile, limits: FramingLimits = _DEFAULT_LIMITS) -> int:
    y_max = (limits.mpdu_max_bytes - limits.mpdu_overhead_bytes) // profile.len_bytes
    if y_max < 1:
        raise MsduTooLarge(f"an MSDU of {profile.l_data_bytes} B does not fit in one MPDU")
    return y_max


def check_ber(ber: float) -> float:
    ber = float(ber)
    if not (0.0 <= ber < 1.0) or math.isnan(ber):
        raise InvalidValue(f"BER must lie in [0, 1), got {ber}")
    return ber


def mpdu_success_probability(c_bits: int, ber: float) -> float:
    """(1 - ber) ** c_bits, evaluated in log space."""
    ber = check_ber(ber)
    if c_bits < 0:
        raise InvalidValue("bit count must be >= 0")
    if ber == 0.0:
        return 1.0
    return math.exp(c_bits * math.log1p(-ber))


@dataclass(frozen=True)
class AmpduPlan:
    """X MPDUs with Y_i MSDUs each, in transmission order."""

    y_per_mpdu: tuple[int, ...]
    window: Window = Window.W64
    standard: Standard = Standard.AX

    def __post_init__(self):
        object.__setattr__(self, "y_per_mpdu", tuple(int(y) for y in self.y_per_mpdu))
        object.__setattr__(self, "window", Window.parse(self.window))
        object.__setattr__(self, "standard", Standard(self.standard))
        if not self.y_per_mpdu:
            raise InvalidValue("a plan holds at least one MPDU")
        if min(self.y_per_mpdu) < 1:
            raise InvalidValue("every MPDU carries at least one MSDU")

    @property
    def x_mpdus(self) -> int:
        return len(self.y_per_mpdu)

    @property
    def total_msdus(self) -> int:
        return sum(self.y_per_mpdu)

    @property
    def is_near_equal(self) -> bool:
        return max(self.y_per_mpdu) - min(self.y_per_mpdu) <= 1

    @classmethod
    def near_equal(cls, x: int, total_msdus: int, **kw) -> "AmpduPlan":
        """Spread ``total_msdus`` over ``x`` MPDUs; the first ones take the extra MSDU."""
        if x < 1 or total_msdus < x:
            raise InvalidValue(f"cannot spread {total_msdus} MSDUs over {x} MPDUs")
        base, extra = divmod(total_msdus, x)
        return cls((base + 1,) * extra + (base,) * (x - extra), **kw)

    @classmethod
    def uniform(cls, x: int, y: int, **kw) -> "AmpduPlan":
        return cls((y,) * x, **kw)

    def profile_string(self) -> str:
        """Compact run-length form, e.g. ``72*7+3*6``."""
        runs: list[list[int]] = []
        for y in self.y_per_mpdu:
            if runs and runs[-1][1] == y:
                runs[-1][0] += 1
            else:
                runs.append([1, y])
        return "+".join(f"{n}*{y}" for n, y in runs)

    @classmethod
    def from_profile_string(cls, text: str, **kw) -> "AmpduPlan":
        """Inverse of :meth:`profile_string`; a bare ``Y`` term means one MPDU."""
        ys: list[int] = []
        try:
            for term in text.replace(" ", "").split("+"):
                count, _, y = term.rpartition("*")
                ys += [int(y)] * (int(count) if count else 1)
        except ValueError as exc:
            raise InvalidValue(f"bad plan string {text!r}") from exc
        return cls(tuple(ys), **kw)


def plan_bits(plan: AmpduPlan, profile: MsduProfile, limits: FramingLimits = _DEFAULT_LIMITS) -> list[int]:
    return [mpdu_bits(profile, y, limits) for y in plan.y_per_mpdu]


def check_plan_framing(plan: AmpduPlan, profile: MsduProfile, max_mpdus: int,
                       limits: FramingLimits = _DEFAULT_LIMITS, extra_bytes: int = 0) -> list[int]:
    """Validate MPDU count, MPDU size and A-MPDU byte cap; return per-MPDU bits."""
    if plan.x_mpdus > max_mpdus:
        raise InfeasiblePlan(f"{plan.x_mpdus} MPDUs exceed the cap of {max_mpdus}")
    try:
        bits = plan_bits(plan, profile, limits)
    except MpduTooLarge as exc:
        raise InfeasiblePlan(str(exc)) from exc
    total_bytes = sum(bits) // 8 + extra_bytes
    cap = limits.ampdu_max_bytes(plan.standard)
    if total_bytes > cap:
        raise InfeasiblePlan(f"A-MPDU of {total_bytes} B exceeds {cap} B")
    return bits


def expected_goodput_bits(plan: AmpduPlan, profile: MsduProfile, ber: float,
                          limits: FramingLimits = _DEFAULT_LIMITS) -> float:
    """Expected MSDU payload bits delivered by one A-MPDU (all-or-nothing per MPDU)."""
    ber = check_ber(ber)
    total = 0.0
    for y in plan.y_per_mpdu:
        c = mpdu_bits(profile, y, limits)
        total += 8 * y * profile.l_data_bytes * mpdu_success_probability(c, ber)
    return total


def goodput_per_mpdu(profile: MsduProfile, ys: Sequence[int], ber: float,
                     limits: FramingLimits = _DEFAULT_LIMITS) -> list[float]:
    return [8 * y * profile.l_data_bytes * mpdu_success_probability(mpdu_bits(profile, y, limits), ber)
            for y in ys]
