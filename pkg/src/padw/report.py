"""Line-oriented tables and ``key=value`` records for analysis reports."""

from __future__ import annotations

from fractions import Fraction

from .analysis import CRWitnessRow, GrowthModulusReport, WitnessReport
from .errors import ParseError

WITNESS_KEYS = (
    "nu", "p_nu", "alpha", "k", "n", "s_n",
    "diff_ord_num", "diff_ord_den", "predicted_ord_num", "predicted_ord_den",
    "bracket_unit",
)
GROWTH_KEYS = (
    "prime", "t_num", "t_den", "value_ord_num", "value_ord_den",
    "argmax", "scan_bound", "tail_ord_num", "tail_ord_den",
)


def fmt_q(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _pairs(d: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in d.items())


def witness_record(row: CRWitnessRow) -> str:
    return _pairs({
        "nu": row.nu, "p_nu": row.p_nu, "alpha": row.alpha, "k": row.k,
        "n": row.n, "s_n": row.s_n,
        "diff_ord_num": row.diff_ord.numerator,
        "diff_ord_den": row.diff_ord.denominator,
        "predicted_ord_num": row.predicted_ord.numerator,
        "predicted_ord_den": row.predicted_ord.denominator,
        "bracket_unit": "true" if row.bracket_unit else "false",
    })


def growth_record(rep: GrowthModulusReport) -> str:
    return _pairs({
        "prime": rep.prime,
        "t_num": rep.t.numerator, "t_den": rep.t.denominator,
        "value_ord_num": rep.value_ord.numerator,
        "value_ord_den": rep.value_ord.denominator,
        "argmax": ",".join(map(str, rep.argmax)),
        "scan_bound": rep.scan_bound,
        "tail_ord_num": rep.tail_ord.numerator,
        "tail_ord_den": rep.tail_ord.denominator,
    })


def parse_record(line: str) -> dict:
    """Split one record into a dict of strings, keeping key order."""
    out = {}
    for tok in line.split():
        key, sep, val = tok.partition("=")
        if not sep or not key or key in out:
            raise ParseError(f"bad record token {tok!r}")
        out[key] = val
    return out


def parse_witness_records(text: str) -> list[CRWitnessRow]:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        d = parse_record(line)
        if tuple(d) != WITNESS_KEYS:
            raise ParseError(f"unexpected witness keys {tuple(d)}")
        try:
            rows.append(CRWitnessRow(
                nu=int(d["nu"]), p_nu=int(d["p_nu"]), alpha=int(d["alpha"]),
                k=int(d["k"]), n=int(d["n"]), s_n=int(d["s_n"]),
                diff_ord=Fraction(int(d["diff_ord_num"]), int(d["diff_ord_den"])),
                predicted_ord=Fraction(int(d["predicted_ord_num"]),
                                       int(d["predicted_ord_den"])),
                bracket_unit={"true": True, "false": False}[d["bracket_unit"]],
            ))
        except (KeyError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad witness record {line!r}") from exc
    return rows


def parse_growth_record(line: str) -> GrowthModulusReport:
    d = parse_record(line)
    if tuple(d) != GROWTH_KEYS:
        raise ParseError(f"unexpected growth keys {tuple(d)}")
    try:
        return GrowthModulusReport(
            prime=int(d["prime"]),
            t=Fraction(int(d["t_num"]), int(d["t_den"])),
            value_ord=Fraction(int(d["value_ord_num"]), int(d["value_ord_den"])),
            argmax=tuple(int(a) for a in d["argmax"].split(",")),
            scan_bound=int(d["scan_bound"]),
            tail_ord=Fraction(int(d["tail_ord_num"]), int(d["tail_ord_den"])),
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad growth record {line!r}") from exc


def witness_table(rep: WitnessReport) -> str:
    lines = [f"# p={rep.prime} nu={rep.nu} k={rep.k}",
             "alpha n s_n diff_ord predicted_ord bracket_ord bracket_unit"]
    for r in rep.rows:
        lines.append(f"{r.alpha} {r.n} {r.s_n} {fmt_q(r.diff_ord)} "
                     f"{fmt_q(r.predicted_ord)} {fmt_q(r.bracket_ord)} "
                     f"{'yes' if r.bracket_unit else 'no'}")
    lines.append(f"lower_bound |a_(n+p_nu) - a_n| >= {rep.prime}^(-{fmt_q(rep.max_diff_ord)})")
    return "\n".join(lines)


def growth_table(rep: GrowthModulusReport) -> str:
    return "\n".join([
        f"prime {rep.prime}",
        f"t {fmt_q(rep.t)}",
        f"value_ord {fmt_q(rep.value_ord)}",
        f"argmax {','.join(map(str, rep.argmax))}",
        f"scan_bound {rep.scan_bound}",
        f"tail_ord {fmt_q(rep.tail_ord)}",
        f"certified {'yes' if rep.certified else 'no'}",
    ])
