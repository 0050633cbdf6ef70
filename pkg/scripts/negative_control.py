#!/usr/bin/env python3
"""Perturb the Ballico-Hefez parametrization and report whether the locus stays the plane."""

import argparse

from galois_locus.catalog import ballico_hefez, mutate
from galois_locus.galois import Verdict, galois_locus


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--seeds", type=int, default=6)
    ap.add_argument("--mmax", type=int, default=2)
    args = ap.parse_args()
    entry = ballico_hefez(args.q)
    for seed in range(args.seeds):
        pi = mutate(entry, seed=seed)
        res = galois_locus(pi, m_max=args.mmax)
        wit = sum(r.verdict is Verdict.NOT_GALOIS and r.certificate == "filter-witness"
                  for r in res.reports)
        print(f"seed {seed}: {pi}")
        print(f"    flag={res.flag} {res.counts} filter witnesses={wit}")


if __name__ == "__main__":
    main()
