#!/usr/bin/env python3
"""Sweep P^2(F_q) for each catalog curve and print verdict counts and timing."""

import argparse
import time

from galois_locus.catalog import get_entry
from galois_locus.galois import galois_locus

RUNS = [("hermitian", 9, 4), ("klein", None, 4), ("ballico-hefez", 3, 2), ("ballico-hefez", 4, 3)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    for name, q, m_max in RUNS:
        entry = get_entry(name, q)
        t0 = time.perf_counter()
        res = galois_locus(entry.galois_input(), m_max=m_max, threads=args.threads)
        dt = time.perf_counter() - t0
        shapes = {}
        for r in res.reports:
            key = ("on" if r.on_curve else "off", r.degree, r.automorphisms, r.m_used)
            shapes[key] = shapes.get(key, 0) + 1
        label = name + (f" q={q}" if q else "")
        print(f"{label:<18} m_max={m_max} {res.counts} flag={res.flag} {dt:.2f}s")
        for key, n in sorted(shapes.items()):
            print(f"    {key[0]:<3} degree={key[1]} automorphisms={key[2]} m={key[3]}: {n}")


if __name__ == "__main__":
    main()
