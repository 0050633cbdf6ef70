"""Command-line front end: ``galois-locus {analyze,galois,verify-facts}``.

Exit codes: 0 success (whatever the verdicts), 1 a verify-facts check
failed, 2 input error, 3 cap exceeded, 4 unsupported curve class.
"""

from __future__ import annotations

import argparse
import os
import sys

from .catalog import CATALOG, get_entry
from .curves import CurveError
from .facts import verify_facts
from .fields import CapExceeded, FieldError
from .galois import DEFAULT_M_MAX, SEARCH_FIELD_CAP, UnsupportedCurve, galois_locus
from .io import (FORMATS, RunConfig, analyze_curve, locus_report, read_curve_file, render)
from .parametrized import ParametrizationError, implicit_curve
from .polys import ParseError

EXIT_OK, EXIT_FACTS, EXIT_INPUT, EXIT_CAP, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("GALOIS_LOCUS_THREADS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="galois-locus",
                                 description="Galois points of plane curves over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in [("analyze", "degree, singularities, rational points, tangency table"),
                        ("galois", "sweep P^2(F_q) and decide every point"),
                        ("verify-facts", "pass/fail ledger of the structural facts")]:
        p = sub.add_parser(name, help=help_)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--curve", choices=sorted(CATALOG), help="catalog curve")
        src.add_argument("--poly-file", help="implicit curve file")
        if name != "verify-facts":
            src.add_argument("--param-file", help="parametrization file")
        p.add_argument("--q", type=int, help="field order for catalog curves")
        p.add_argument("--mmax", type=int, default=DEFAULT_M_MAX, help="extension bound m_max")
        p.add_argument("--search-cap", type=int, default=SEARCH_FIELD_CAP,
                       help="largest field order searched for deck transformations")
        p.add_argument("--certify-bound", action="store_true",
                       help="report an exhausted search as NOT_GALOIS (bound-certified)")
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--threads", type=int, default=_default_threads())
    return ap


def _config(args) -> RunConfig:
    return RunConfig(command=args.command, curve=args.curve, q=args.q,
                     poly_file=args.poly_file, param_file=getattr(args, "param_file", None),
                     m_max=args.mmax, certify_bound=args.certify_bound, fmt=args.fmt,
                     out=args.out, threads=args.threads,
                     caps={"search_field_order": args.search_cap})


def _load(cfg: RunConfig):
    """(label, galois input, implicit curve or None, catalog entry or None)."""
    if cfg.curve:
        entry = get_entry(cfg.curve, cfg.q)
        label = f"{entry.name}" + (f" q={entry.params['q']}" if "q" in entry.params else "")
        return label, entry.galois_input(), entry.curve, entry
    if cfg.poly_file:
        C = read_curve_file(cfg.poly_file, "implicit")
        return cfg.poly_file, C, C, None
    pi = read_curve_file(cfg.param_file, "param")
    return cfg.param_file, pi, None, None


def run(cfg: RunConfig) -> tuple[int, str]:
    label, curve, implicit, entry = _load(cfg)
    if cfg.command == "analyze":
        C = implicit if implicit is not None else implicit_curve(curve)
        report = analyze_curve(C, label)
        return EXIT_OK, render(report, cfg.fmt)
    if cfg.command == "galois":
        result = galois_locus(curve, m_max=cfg.m_max, threads=cfg.threads,
                              certify_bound=cfg.certify_bound,
                              search_cap=cfg.caps["search_field_order"])
        degree = curve.degree
        report = locus_report(result, label, degree, cfg)
        return EXIT_OK, render(report, cfg.fmt)
    if entry is None:
        raise UnsupportedCurve("verify-facts runs on catalog curves")
    ledger = verify_facts(entry, m_max=cfg.m_max)
    text = render(ledger.to_dict(), cfg.fmt if cfg.fmt != "csv" else "text")
    return (EXIT_OK if ledger.passed else EXIT_FACTS), text


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        code, text = run(cfg)
    except ParseError as exc:
        print(f"galois-locus: parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"galois-locus: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except UnsupportedCurve as exc:
        print(f"galois-locus: unsupported curve: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (OSError, KeyError, ValueError, FieldError, CurveError, ParametrizationError) as exc:
        print(f"galois-locus: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
