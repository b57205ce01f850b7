"""Monte-Carlo check of the expected-goodput model.

Random numbers come from numpy's PCG64 generator seeded with ``TrialSpec.seed``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidValue
from .frames import AmpduPlan, MsduProfile, check_ber, mpdu_bits, mpdu_success_probability
from .params import FramingLimits

PRNG = "numpy.random.PCG64"


@dataclass(frozen=True)
class TrialSpec:
    plan: AmpduPlan
    profile: MsduProfile
    ber: float
    trials: int
    seed: int = 0

    def __post_init__(self):
        check_ber(self.ber)
        if int(self.trials) < 1:
            raise InvalidValue("trials must be >= 1")


def _payloads(spec: TrialSpec, limits: FramingLimits):
    ys = np.asarray(spec.plan.y_per_mpdu)
    bits = np.array([mpdu_bits(spec.profile, int(y), limits) for y in ys])
    return 8 * ys * spec.profile.l_data_bytes, bits


def _summary(samples: np.ndarray) -> tuple[float, float]:
    mean = float(samples.mean())
    if samples.size < 2:
        return mean, 0.0
    return mean, float(samples.std(ddof=1) / np.sqrt(samples.size))


def simulate_goodput(spec: TrialSpec, limits: FramingLimits = FramingLimits()) -> tuple[float, float]:
    """Mean delivered payload bits per A-MPDU and its standard error.

    Each MPDU survives with probability (1 - ber) ** C_i, drawn once per MPDU.
    """
    payload, bits = _payloads(spec, limits)
    p = np.array([mpdu_success_probability(int(c), spec.ber) for c in bits])
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    ok = rng.random((spec.trials, len(p))) < p
    return _summary(ok.astype(float) @ payload)


def simulate_goodput_per_bit(spec: TrialSpec, limits: FramingLimits = FramingLimits(),
                             bits_override: list[int] | None = None) -> tuple[float, float]:
    """Reference: corrupt every bit independently; an MPDU is lost if any bit flips.

    Only sensible for tiny MPDUs; ``bits_override`` replaces the true MPDU
    lengths so that the equivalence can be checked at small C.
    """
    payload, bits = _payloads(spec, limits)
    if bits_override is not None:
        bits = np.asarray(bits_override)
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    total = np.zeros(spec.trials)
    for pay, c in zip(payload, bits):
        flips = rng.random((spec.trials, int(c))) < spec.ber
        total += pay * ~flips.any(axis=1)
    return _summary(total)
