"""Flat result records and their CSV/JSON serialization.

Durations (``*_us``) and rates (``*_mbps``) are rounded to one decimal when a
record is built, so a written file parses back into identical records.
"""

from __future__ import annotations

import csv
import io
import json
import typing
from dataclasses import asdict, dataclass, fields

from .planner import PlanReport


def _r1(v: float) -> float:
    return round(float(v), 1)


@dataclass(frozen=True)
class SweepRecord:
    stations: int
    flavor: str
    standard: str
    kind: str
    n: int
    m: int
    window: str
    ul_mode: str
    mcs: int
    ber: float
    msdu_bytes: int
    throughput_mbps: float
    cycle_us: float
    access_delay_us: float
    x_opt: int
    msdus_per_ampdu: int
    y_profile: str
    searched: int

    @classmethod
    def from_report(cls, stations: int, ber: float, msdu_bytes: int, rep: PlanReport) -> "SweepRecord":
        f, res = rep.flavor, rep.result
        cfg = res.config
        return cls(
            stations=stations,
            flavor=f.label,
            standard=f.standard.value,
            kind=f.kind.value,
            n=f.n,
            m=f.m,
            window=cfg.window.value,
            ul_mode=cfg.ul_mode.value,
            mcs=rep.mcs,
            ber=float(ber),
            msdu_bytes=int(msdu_bytes),
            throughput_mbps=_r1(res.throughput_mbps),
            cycle_us=_r1(res.cycle_us),
            access_delay_us=_r1(rep.access_delay_us),
            x_opt=res.plan.x_mpdus,
            msdus_per_ampdu=res.plan.total_msdus,
            y_profile=res.plan.profile_string(),
            searched=rep.searched,
        )


@dataclass(frozen=True)
class MpduCountRecord:
    """Best plan at a fixed MPDU count (throughput vs X curves)."""

    n: int
    mcs: int
    ber: float
    msdu_bytes: int
    window: str
    ul_mode: str
    x: int
    total_msdus: int
    y_profile: str
    throughput_mbps: float


def header(cls) -> list[str]:
    return [f.name for f in fields(cls)]


def _fmt(name: str, value) -> str:
    if name.endswith(("_us", "_mbps")):
        return f"{value:.1f}"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def to_csv(records, cls=None) -> str:
    cls = cls or type(records[0])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header(cls))
    for r in records:
        w.writerow([_fmt(k, v) for k, v in asdict(r).items()])
    return buf.getvalue()


def to_json(records) -> str:
    return json.dumps([asdict(r) for r in records], indent=1) + "\n"


def _coerce(cls, row: dict):
    hints = typing.get_type_hints(cls)
    return cls(**{k: hints[k](v) for k, v in row.items()})


def from_csv(text: str, cls):
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != header(cls):
        raise ValueError(f"unexpected CSV header: {reader.fieldnames}")
    return [_coerce(cls, row) for row in reader]


def from_json(text: str, cls):
    return [_coerce(cls, row) for row in json.loads(text)]


def dump(records, fmt: str, cls=None) -> str:
    if fmt == "json":
        return to_json(records)
    return to_csv(records, cls)
