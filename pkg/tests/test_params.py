import io

import pytest

from dlthroughput.errors import DomainError, InvalidValue, MissingEntry, TableInconsistent, TableParseError
from dlthroughput.params import (
    TABLES_ENV_VAR,
    FramingLimits,
    Link,
    MacTiming,
    Mode,
    Standard,
    check_tables,
    default_parameters,
    load_tables,
    lookup,
    table_layout,
)


def _rewrite(lines, match, new):
    return [new if line.startswith(match) else line for line in lines]


@pytest.mark.parametrize("key, rate, pre", [
    (("AX", "SU", "DL_DATA", 1, 11), 1201.0, 43.2),
    (("AX", "MU", "UL_BACK_OFDMA", 4, 9), 216.7, 64.8),
    (("AX", "MU", "DL_DATA", 64, 9), 50.0, 88.8),
    (("AC", "MU", "UL_BACK_LEGACY", 4, 3), 48.0, 20.0),
    (("AX", "MU", "DL_DATA", 4, 0), None, 72.8),
    (("AX", "MU", "DL_DATA", 4, 2), None, 68.8),
])
def test_lookup_values(params, key, rate, pre):
    e = lookup(params, key)
    assert e.available
    if rate is not None:
        assert e.rate_mbps == rate
    assert e.preamble_us == pre


@pytest.mark.parametrize("key", [
    ("AC", "SU", "DL_DATA", 1, 10),
    ("AX", "MU", "DL_DATA", 64, 11),
    ("AX", "MU", "UL_BACK_OFDMA", 16, 10),
    ("AX", "MU", "UL_BACK_OFDMA", 32, 11),
    ("AC", "MU", "DL_DATA", 8, 3),  # outside the layout but inside the key domain
])
def test_unavailable_cells(params, key):
    assert not lookup(params, key).available


@pytest.mark.parametrize("key", [
    ("AX", "SU", "DL_DATA", 2, 0),
    ("AX", "SU", "DL_DATA", 1, 12),
    ("BE", "SU", "DL_DATA", 1, 0),
    ("AX", "SU", "DL_DATA"),
])
def test_lookup_domain(params, key):
    with pytest.raises(DomainError):
        lookup(params, key)


def test_shipped_tables_clean(params):
    assert check_tables(params.source) == []
    assert len(params.entries) == len(list(table_layout())) == 252


def test_rates_nondecreasing(params):
    cols = {}
    for e in params.entries.values():
        if e.available:
            cols.setdefault(e.key[:4], []).append((e.mcs, e.rate_mbps))
    for col in cols.values():
        rates = [r for _, r in sorted(col)]
        assert rates == sorted(rates)


def test_default_constants(params):
    t, s, f, lim = params.timing, params.symbols, params.frames, params.limits
    assert (t.aifs_us, t.sifs_us, t.backoff_avg_us, t.service_tail_bits) == (43.0, 16.0, 67.5, 22)
    assert t.backoff_avg_us == (t.cw_min - 1) / 2 * t.slot_us
    assert (s.dl_sym_us, s.ul_sym_us, s.legacy_sym_us) == (13.6, 14.4, 4.0)
    assert (f.back_64_bytes, f.back_256_bytes, f.bar_bytes) == (30, 54, 24)
    assert lim.mpdu_overhead_bytes == 36
    assert (t.pe_mu_us, t.pe_su_us) == (16.0, 0.0)


def test_monotonic_violation(table_lines):
    lines = _rewrite(table_lines, "AX,SU,DL_DATA,1,5,", "AX,SU,DL_DATA,1,5,400.0,43.2\n")
    problems = check_tables(lines)
    assert any("MCS4" in p and "MCS5" in p for p in problems)
    with pytest.raises(TableInconsistent):
        load_tables(lines)


def test_missing_rows(table_lines):
    lines = [l for l in table_lines if ",64," not in l]
    problems = check_tables(lines)
    assert sum("missing" in p for p in problems) == 3 * 12
    with pytest.raises(MissingEntry):
        load_tables(lines)


def test_duplicate_and_parse_errors(table_lines):
    with pytest.raises(TableInconsistent):
        load_tables(table_lines + [table_lines[-1]])
    with pytest.raises(TableParseError) as exc:
        load_tables(table_lines + ["AX,SU,DL_DATA,1\n", "AX,SU,DL_DATA,one,0,1,1\n"])
    assert len(exc.value.problems) == 2
    assert all(p.startswith("line ") for p in exc.value.problems)


def test_negative_value(table_lines):
    lines = _rewrite(table_lines, "AX,SU,DL_DATA,1,0,", "AX,SU,DL_DATA,1,0,72.1,-1\n")
    with pytest.raises(InvalidValue):
        load_tables(lines)


def test_stream_and_overrides(table_lines):
    p = load_tables(io.StringIO("".join(table_lines)), limits=FramingLimits(cap_includes_access=False))
    assert p.limits.cap_includes_access is False
    assert lookup(p, (Standard.AX, Mode.MU, Link.DL_DATA, 8, 11)).available


def test_bad_timing():
    with pytest.raises(InvalidValue):
        MacTiming(sifs_us=-1)
    with pytest.raises(InvalidValue):
        MacTiming(cw_min=0)


def test_env_var(tmp_path, monkeypatch, table_lines):
    alt = tmp_path / "t.csv"
    alt.write_text("".join(_rewrite(table_lines, "AX,SU,DL_DATA,1,11,", "AX,SU,DL_DATA,1,11,1300.0,43.2\n")))
    monkeypatch.setenv(TABLES_ENV_VAR, str(alt))
    assert lookup(default_parameters(), ("AX", "SU", "DL_DATA", 1, 11)).rate_mbps == 1300.0
    monkeypatch.delenv(TABLES_ENV_VAR)
    assert lookup(default_parameters(), ("AX", "SU", "DL_DATA", 1, 11)).rate_mbps == 1201.0
