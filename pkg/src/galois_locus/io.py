"""Curve files, run configuration and report rendering."""

from __future__ import annotations

import csv
import io as _io
import json
import re
from dataclasses import dataclass, field as dc_field

from . import __version__
from .curves import (PlaneCurve, intersection_multiplicity, singular_points, tangent_line)
from .fields import FieldSpec, make_field
from .galois import LocusResult
from .parametrized import RationalMap
from .polys import ParseError, format_hompoly, parse_binform, parse_expression, parse_hompoly

SCHEMA_VERSION = 1
CSV_COLUMNS = ["point", "on_curve", "degree", "automorphisms", "m_used", "m_max", "verdict",
               "certificate", "engine", "witness", "ramification", "notes"]
FORMATS = ("json", "csv", "text")


@dataclass
class RunConfig:
    command: str
    curve: str | None = None
    q: int | None = None
    poly_file: str | None = None
    param_file: str | None = None
    m_max: int = 4
    certify_bound: bool = False
    fmt: str = "text"
    out: str | None = None
    threads: int = 1
    caps: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        sources = [x for x in (self.curve, self.poly_file, self.param_file) if x]
        if len(sources) != 1:
            raise ValueError("give exactly one of --curve, --poly-file, --param-file")
        if self.m_max < 1 or self.threads < 1:
            raise ValueError("--mmax and --threads must be positive")
        if any(v <= 0 for v in self.caps.values()):
            raise ValueError("caps must be positive")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")


_HEADER = re.compile(r"^\s*p\s*=\s*(\d+)\s+k\s*=\s*(\d+)(?:\s+modulus\s*=\s*(.+?))?\s*$")


def parse_header(line: str, lineno: int = 1) -> FieldSpec:
    """``p=<p> k=<k> [modulus=<poly in x>]``."""
    m = _HEADER.match(line)
    if not m:
        raise ParseError("expected header 'p=<p> k=<k> [modulus=<poly in x>]'", lineno, 1)
    p, k = int(m.group(1)), int(m.group(2))
    modulus = None
    try:
        if m.group(3):
            prime = make_field(p, 1)
            terms = parse_expression(m.group(3), prime, ("x",), lineno)
            deg = max(e[0] for e in terms) if terms else 0
            modulus = [terms.get((i,), 0) for i in range(deg + 1)]
        return make_field(p, k, modulus)
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from exc


def _content_lines(text: str):
    out = []
    for n, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((n, body))
    return out


def read_curve_text(text: str, kind: str):
    """Parse a curve file; ``kind`` is 'implicit' or 'param'."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty curve file", 1, 1)
    n0, head = lines[0]
    F = parse_header(head, n0)
    if len(lines) != 2:
        where = lines[2][0] if len(lines) > 2 else n0 + 1
        raise ParseError("expected exactly one curve line after the header", where, 1)
    n1, body = lines[1]
    if kind == "implicit":
        return PlaneCurve(parse_hompoly(body, F, n1))
    parts = body.split("|")
    if len(parts) != 3:
        raise ParseError("expected three '|'-separated binary forms", n1, 1)
    forms = []
    col = 1
    for part in parts:
        forms.append(parse_binform(part, F, n1, col))
        col += len(part) + 1
    if len({f.d for f in forms}) != 1:
        raise ParseError("components must have a common degree", n1, 1)
    return RationalMap(tuple(forms))


def read_curve_file(path: str, kind: str):
    with open(path, encoding="utf-8") as fh:
        return read_curve_text(fh.read(), kind)


# --- reports -----------------------------------------------------------------

def field_header(F: FieldSpec) -> dict:
    return {"p": F.p, "k": F.k, "q": F.q, "modulus": F.modulus_str()}


def locus_report(result: LocusResult, curve_label: str, degree: int, config: RunConfig) -> dict:
    rows = [r.to_dict() for r in result.reports]
    return {
        "schema_version": SCHEMA_VERSION,
        "header": {
            "curve": curve_label,
            "field": field_header(result.base),
            "degree": degree,
            "m_max": result.m_max,
            "certify_bound": config.certify_bound,
            "caps": dict(sorted(config.caps.items())),
            "tool_version": __version__,
        },
        "rows": rows,
        "summary": {
            "rows": len(rows),
            "counts": result.counts,
            "locus_is_plane": result.flag,
        },
    }


def analyze_curve(C: PlaneCurve, label: str, m_max: int = 2) -> dict:
    sing = singular_points(C, m_max)
    rational = C.rational_points()
    sing_pts = {s.point for s in sing}
    smooth = [P for P in rational if P not in sing_pts]
    tangency = {}
    for P in smooth:
        tangency[repr(P)] = intersection_multiplicity(C, tangent_line(C, P), P)
    return {
        "schema_version": SCHEMA_VERSION,
        "curve": label,
        "equation": format_hompoly(C.F),
        "field": field_header(C.field),
        "degree": C.degree,
        "singular_scan_m_max": m_max,
        "smooth": not sing,
        "singular_points": [{"point": repr(s.point), "multiplicity": s.multiplicity,
                             "field_degree": s.field_of_definition} for s in sing],
        "rational_points": len(rational),
        "rational_smooth_points": len(smooth),
        "tangency": tangency,
    }


def _cell(v):
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return v


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        if "rows" not in report:
            raise ValueError("csv output is only available for galois reports")
        buf = _io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in report["rows"]:
            w.writerow({k: _cell(row[k]) for k in CSV_COLUMNS})
        return buf.getvalue()
    return render_text(report)


def render_text(report: dict) -> str:
    out = []
    if "rows" in report:
        h = report["header"]
        f = h["field"]
        out.append(f"# curve: {h['curve']}  degree {h['degree']}")
        out.append(f"# field: GF({f['q']}) modulus {f['modulus']}  m_max={h['m_max']}"
                   f"  certify_bound={h['certify_bound']}")
        for r in report["rows"]:
            extra = f"  witness={r['witness']}" if r["witness"] else ""
            out.append(f"{r['point']:<28} {'on ' if r['on_curve'] else 'off'} deg={r['degree']}"
                       f" aut={r['automorphisms']} m={r['m_used']} {r['verdict']}"
                       f" ({r['certificate']}){extra}")
        s = report["summary"]
        counts = ", ".join(f"{k}={v}" for k, v in s["counts"].items())
        out.append(f"# summary: {s['rows']} points, {counts}, locus_is_plane={s['locus_is_plane']}")
    elif "checks" in report:
        out.append(f"# verify-facts: {report['curve']}")
        for c in report["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            detail = f": {c['detail']}" if c["detail"] else ""
            out.append(f"[{mark}] {c['name']} ({c['checked']} checked){detail}")
        out.append(f"# overall: {'PASS' if report['passed'] else 'FAIL'}")
    else:
        f = report["field"]
        out.append(f"# curve: {report['curve']}")
        out.append(f"equation: {report['equation']} = 0 over GF({f['q']}) modulus {f['modulus']}")
        out.append(f"degree: {report['degree']}")
        out.append(f"smooth (scan m<={report['singular_scan_m_max']}): {report['smooth']}")
        for s in report["singular_points"]:
            out.append(f"singular point {s['point']} multiplicity {s['multiplicity']}"
                       f" field degree {s['field_degree']}")
        out.append(f"rational points: {report['rational_points']}"
                   f" (smooth: {report['rational_smooth_points']})")
        for P, I in report["tangency"].items():
            out.append(f"I_P(C, T_P C) at {P}: {I}")
    return "\n".join(out) + "\n"
