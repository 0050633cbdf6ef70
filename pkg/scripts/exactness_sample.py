#!/usr/bin/env python3
"""Decide sampled centers of P^2(GF(q^2)) minus P^2(GF(q)); none should be Galois."""

import argparse
import random
import time

from galois_locus.catalog import get_entry
from galois_locus.fields import extension
from galois_locus.galois import Verdict, is_galois_point
from galois_locus.geometry import enumerate_plane


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--curve", default="ballico-hefez", choices=["ballico-hefez", "hermitian"])
    ap.add_argument("--q", type=int)
    ap.add_argument("--n", type=int, default=20)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--mmax", type=int, default=4)
    ap.add_argument("--certify-bound", action="store_true")
    args = ap.parse_args()
    entry = get_entry(args.curve, args.q)
    F = entry.field
    W = extension(F, 2)
    pts = [P for P in enumerate_plane(W) if not P.is_rational_over(F)]
    sample = random.Random(args.seed).sample(pts, args.n)
    t0 = time.perf_counter()
    galois = 0
    for P in sample:
        r = is_galois_point(entry.galois_input(), P, args.mmax, args.certify_bound)
        galois += r.verdict is Verdict.GALOIS
        print(f"{P!r:<36} {r.verdict.value:<12} {r.certificate:<16} {r.witness or ''}")
    print(f"# {args.n} centers, {galois} GALOIS, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
