"""MAC/PHY constants and the PHY rate/preamble tables.

Everything the throughput equations consume lives here. Rate tables are data,
shipped as ``data/phy_tables.csv`` (one record per cell), so alternate
guard-interval or channel configurations can be loaded without code changes.
"""

from __future__ import annotations

import csv
import enum
import io
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, TextIO, Union

from .errors import (
    DomainError,
    InvalidValue,
    MissingEntry,
    TableInconsistent,
    TableParseError,
)

TABLES_ENV_VAR = "DLTHROUGHPUT_TABLES"

STATION_COUNTS = (1, 4, 8, 16, 32, 64)
MCS_RANGE = range(12)


class Standard(str, enum.Enum):
    AC = "AC"
    AX = "AX"


class Mode(str, enum.Enum):
    SU = "SU"
    MU = "MU"


class Link(str, enum.Enum):
    DL_DATA = "DL_DATA"
    UL_BACK_MUMIMO = "UL_BACK_MUMIMO"
    UL_BACK_OFDMA = "UL_BACK_OFDMA"
    UL_BACK_LEGACY = "UL_BACK_LEGACY"


@dataclass(frozen=True)
class MacTiming:
    """Best Effort access-category timing, all durations in microseconds.

    ``backoff_avg_us`` defaults to 67.5 = 7.5 slots, i.e. (CW_min - 1)/2 slots
    without rounding the slot count up.
    """

    aifs_us: float = 43.0
    sifs_us: float = 16.0
    slot_us: float = 9.0
    cw_min: int = 16
    backoff_avg_us: float = 67.5
    pe_mu_us: float = 16.0
    pe_su_us: float = 0.0
    service_tail_bits: int = 22

    def __post_init__(self):
        for name in ("aifs_us", "sifs_us", "slot_us", "backoff_avg_us", "pe_mu_us", "pe_su_us"):
            if getattr(self, name) < 0:
                raise InvalidValue(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.cw_min < 1:
            raise InvalidValue(f"cw_min must be >= 1, got {self.cw_min}")
        if self.service_tail_bits < 0:
            raise InvalidValue("service_tail_bits must be >= 0")


@dataclass(frozen=True)
class SymbolDurations:
    dl_sym_us: float = 13.6
    ul_sym_us: float = 14.4
    legacy_sym_us: float = 4.0

    def __post_init__(self):
        for name in ("dl_sym_us", "ul_sym_us", "legacy_sym_us"):
            if getattr(self, name) <= 0:
                raise InvalidValue(f"{name} must be > 0")


@dataclass(frozen=True)
class ControlFrameSizes:
    back_64_bytes: int = 30
    back_256_bytes: int = 54
    bar_bytes: int = 24
    # TF body (33 B) plus MAC header, FCS and delimiter, 4-byte aligned, minus O_M
    tf_mpdu_overhead_bytes: int = 72
    he_ctrl_elem_bytes: int = 4
    # a TF is used from this many data MPDUs on; below it, HE control elements
    tf_min_mpdus: int = 19

    def __post_init__(self):
        if self.back_256_bytes <= self.back_64_bytes:
            raise InvalidValue("a 256-window BAck must be larger than a 64-window BAck")


@dataclass(frozen=True)
class FramingLimits:
    """Aggregation geometry and the PPDU airtime limit.

    ``cap_includes_access`` selects what the 5484 us limit is charged against:
    ``True`` counts AIFS + average backoff + DL preamble + A-MPDU airtime,
    ``False`` only DL preamble + A-MPDU airtime.
    """

    mac_header_bytes: int = 28
    delimiter_bytes: int = 4
    fcs_bytes: int = 4
    subheader_bytes: int = 14
    mpdu_max_bytes: int = 11454
    ampdu_max_bytes_ac: int = 1_048_575
    ampdu_max_bytes_ax: int = 4_194_304
    ppdu_max_us: float = 5484.0
    cap_includes_access: bool = True

    @property
    def mpdu_overhead_bytes(self) -> int:
        return self.mac_header_bytes + self.delimiter_bytes + self.fcs_bytes

    def ampdu_max_bytes(self, standard: Standard) -> int:
        return self.ampdu_max_bytes_ax if Standard(standard) is Standard.AX else self.ampdu_max_bytes_ac


@dataclass(frozen=True)
class PhyEntry:
    standard: Standard
    mode: Mode
    link: Link
    stations: int
    mcs: int
    rate_mbps: float | None
    preamble_us: float | None
    available: bool

    @property
    def key(self):
        return (self.standard, self.mode, self.link, self.stations, self.mcs)


Key = tuple  # (standard, mode, link, stations, mcs)


@dataclass(frozen=True)
class ParameterSet:
    """Immutable bundle of every constant and table the model consumes."""

    entries: Mapping[Key, PhyEntry]
    timing: MacTiming = field(default_factory=MacTiming)
    symbols: SymbolDurations = field(default_factory=SymbolDurations)
    frames: ControlFrameSizes = field(default_factory=ControlFrameSizes)
    limits: FramingLimits = field(default_factory=FramingLimits)
    source: str = "<memory>"


def table_layout() -> Iterator[Key]:
    """Yield every key the rate tables must cover, N/A cells included."""
    for std in Standard:
        for link in (Link.DL_DATA, Link.UL_BACK_LEGACY):
            for mcs in MCS_RANGE:
                yield (std, Mode.SU, link, 1, mcs)
    for n in STATION_COUNTS[1:]:
        for link in (Link.DL_DATA, Link.UL_BACK_MUMIMO, Link.UL_BACK_OFDMA):
            for mcs in MCS_RANGE:
                yield (Standard.AX, Mode.MU, link, n, mcs)
    for link in (Link.DL_DATA, Link.UL_BACK_LEGACY):
        for mcs in MCS_RANGE:
            yield (Standard.AC, Mode.MU, link, 4, mcs)


def normalize_key(key) -> Key:
    """Coerce a (standard, mode, link, stations, mcs) tuple to enum form."""
    try:
        standard, mode, link, stations, mcs = key
    except (TypeError, ValueError):
        raise DomainError(f"key must be a 5-tuple, got {key!r}") from None
    try:
        standard = Standard(str(getattr(standard, "value", standard)).upper())
        mode = Mode(str(getattr(mode, "value", mode)).upper())
        link = Link(str(getattr(link, "value", link)).upper())
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    if isinstance(stations, bool) or int(stations) != stations or int(stations) not in STATION_COUNTS:
        raise DomainError(f"stations must be one of {STATION_COUNTS}, got {stations!r}")
    if isinstance(mcs, bool) or int(mcs) != mcs or int(mcs) not in MCS_RANGE:
        raise DomainError(f"mcs must be in 0..11, got {mcs!r}")
    return (standard, mode, link, int(stations), int(mcs))


def _parse_value(text: str):
    text = text.strip()
    if text.upper() in ("NA", "N/A", ""):
        return None
    return float(text)


def _open_source(source) -> tuple[TextIO, str, bool]:
    if isinstance(source, (str, os.PathLike)):
        path = Path(source)
        return path.open(newline=""), str(path), True
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return source, getattr(source, "name", "<stream>"), False
    # any other iterable of lines
    return io.StringIO("".join(line if line.endswith("\n") else line + "\n" for line in source)), "<lines>", False


def _scan(source) -> tuple[dict, list[tuple[str, str]], str]:
    """Parse table records; return (entries, problems, name).

    ``problems`` lists (kind, message) pairs, kind being one of ``parse``,
    ``invalid``, ``duplicate``, ``missing``, ``monotonic``, ``unexpected``.
    """
    handle, name, owned = _open_source(source)
    entries: dict[Key, PhyEntry] = {}
    problems: list[tuple[str, str]] = []
    try:
        rows = [(i, line) for i, line in enumerate(handle, start=1)]
    finally:
        if owned:
            handle.close()
    header_seen = False
    for lineno, line in rows:
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = next(csv.reader([stripped]))
        if not header_seen:
            header_seen = True
            if fields and fields[0].strip().lower() == "standard":
                continue
        if len(fields) != 7:
            problems.append(("parse", f"line {lineno}: expected 7 fields, got {len(fields)}"))
            continue
        try:
            key = normalize_key((fields[0], fields[1], fields[2], int(fields[3]), int(fields[4])))
            rate = _parse_value(fields[5])
            pre = _parse_value(fields[6])
        except (DomainError, ValueError) as exc:
            problems.append(("parse", f"line {lineno}: {exc}"))
            continue
        if (rate is None) != (pre is None):
            problems.append(("parse", f"line {lineno}: rate and preamble must both be NA or both numeric"))
            continue
        if rate is not None and (rate <= 0 or pre <= 0):
            problems.append(("invalid", f"line {lineno}: rate and preamble must be positive ({rate}, {pre})"))
            continue
        if key in entries:
            problems.append(("duplicate", f"line {lineno}: duplicate entry for {_fmt_key(key)}"))
            continue
        entries[key] = PhyEntry(*key, rate_mbps=rate, preamble_us=pre, available=rate is not None)

    layout = list(table_layout())
    expected = set(layout)
    for key in layout:
        if key not in entries:
            problems.append(("missing", f"missing entry for {_fmt_key(key)}"))
    for key in entries:
        if key not in expected:
            problems.append(("unexpected", f"entry outside the table layout: {_fmt_key(key)}"))

    columns: dict[tuple, list[PhyEntry]] = {}
    for entry in entries.values():
        columns.setdefault(entry.key[:4], []).append(entry)
    for col, col_entries in sorted(columns.items(), key=lambda kv: _fmt_key(kv[0] + (0,))):
        avail = sorted((e for e in col_entries if e.available), key=lambda e: e.mcs)
        for prev, cur in zip(avail, avail[1:]):
            if cur.rate_mbps < prev.rate_mbps:
                problems.append((
                    "monotonic",
                    f"rate decreases from MCS{prev.mcs} ({prev.rate_mbps}) to MCS{cur.mcs} "
                    f"({cur.rate_mbps}) in {_fmt_key(col + (cur.mcs,))}",
                ))
    return entries, problems, name


def _fmt_key(key) -> str:
    std, mode, link, n, mcs = key
    return f"{getattr(std, 'value', std)}/{getattr(mode, 'value', mode)}/{getattr(link, 'value', link)}/n={n}/MCS{mcs}"


def check_tables(source) -> list[str]:
    """Return every invariant violation found in a table source (empty if clean)."""
    _, problems, _ = _scan(source)
    return [msg for _, msg in problems]


def load_tables(source=None, **overrides) -> ParameterSet:
    """Load and validate a rate table, returning a :class:`ParameterSet`.

    ``source`` may be a path, an open text stream or an iterable of lines.
    ``None`` means the path in ``$DLTHROUGHPUT_TABLES`` or the shipped table.
    Keyword overrides (``timing=``, ``symbols=``, ``frames=``, ``limits=``) replace
    the default constant groups.
    """
    if source is None:
        source = default_table_path()
    entries, problems, name = _scan(source)
    by_kind: dict[str, list[str]] = {}
    for kind, msg in problems:
        by_kind.setdefault(kind, []).append(msg)
    if "parse" in by_kind:
        raise TableParseError(by_kind["parse"])
    if "invalid" in by_kind:
        raise InvalidValue("; ".join(by_kind["invalid"]))
    if "missing" in by_kind:
        raise MissingEntry("; ".join(by_kind["missing"]))
    for kind in ("duplicate", "unexpected", "monotonic"):
        if kind in by_kind:
            raise TableInconsistent("; ".join(by_kind[kind]))
    return ParameterSet(entries=MappingProxyType(entries), source=name, **overrides)


def default_table_path() -> Path:
    env = os.environ.get(TABLES_ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("dlthroughput") / "data" / "phy_tables.csv"))


@lru_cache(maxsize=None)
def _default_parameters(path: str) -> ParameterSet:
    return load_tables(path)


def default_parameters() -> ParameterSet:
    """The shipped (or ``$DLTHROUGHPUT_TABLES``) parameter set, loaded once."""
    return _default_parameters(str(default_table_path()))


def lookup(params: ParameterSet, key) -> PhyEntry:
    """Return the table entry for ``key``.

    Keys inside the enumerated domain but absent from the table layout (for
    example an 11ac 8-station MU cell) come back as an unavailable entry.
    """
    key = normalize_key(key)
    entry = params.entries.get(key)
    if entry is None:
        return PhyEntry(*key, rate_mbps=None, preamble_us=None, available=False)
    return entry


def iter_entries(params: ParameterSet) -> Iterable[PhyEntry]:
    return params.entries.values()
