#!/usr/bin/env python3
"""Order of the branch tangent along each branch of a Ballico-Hefez curve.

Branches are taken over GF(q^m); rational and non-rational branches are
tallied separately.
"""

import argparse

from galois_locus.catalog import ballico_hefez
from galois_locus.fields import extension
from galois_locus.parametrized import branch_tangent, local_expansion_order
from galois_locus.polys import enumerate_p1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=3)
    ap.add_argument("--m", type=int, default=2)
    args = ap.parse_args()
    pi = ballico_hefez(args.q).parametrization
    F = pi.field
    tally = {}
    for b in enumerate_p1(extension(F, args.m)):
        o = local_expansion_order(pi, b, branch_tangent(pi, b))
        key = (b.degree_of_definition(F), o)
        tally[key] = tally.get(key, 0) + 1
    print(f"ballico-hefez q={args.q}, d={pi.degree}, branches over GF({F.q}^{args.m})")
    for (deg, o), n in sorted(tally.items()):
        print(f"    field degree {deg}: order {o} at {n} branches")


if __name__ == "__main__":
    main()
