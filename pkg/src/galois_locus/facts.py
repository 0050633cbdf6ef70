"""Pass/fail ledger of the structural facts behind a catalog curve."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .catalog import CatalogEntry
from .curves import (bezout_line_sum, euler_defect, intersection_multiplicity, multiplicity,
                     singular_points, tangent_line)
from .fields import extension
from .galois import (CurveProjection, NotGaloisError, ParamProjection, Verdict,
                     fiber_uniformity_filter, galois_locus, is_group, stabilizer_order,
                     verify_covering_structure)
from .geometry import ProjLine, ProjPoint
from .parametrized import (ParametrizationError, branch_ramification, branch_tangent,
                           compose_projection, fiber, fiber_size, local_expansion_order)
from .polys import P1Point, enumerate_p1


@dataclass
class FactCheck:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.name} ({self.checked} checked){': ' + self.detail if self.detail else ''}"


@dataclass
class FactLedger:
    curve: str
    checks: list[FactCheck] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, failures, checked, detail=""):
        if failures:
            detail = (detail + "; " if detail else "") + "failures: " + ", ".join(failures[:5])
        self.checks.append(FactCheck(name, not failures, checked, detail))

    def to_dict(self) -> dict:
        return {"curve": self.curve, "passed": self.passed,
                "checks": [vars(c) for c in self.checks]}


def _branch_of(pi, Q: ProjPoint) -> P1Point:
    pts = fiber(pi, Q, 1)
    if len(pts) != 1:
        raise ValueError(f"{Q!r} has {len(pts)} rational branches")
    return pts[0]


def verify_facts(entry: CatalogEntry, m_max: int = 4, lines: int = 100, seed: int = 0,
                 locus=None) -> FactLedger:
    C = entry.curve
    pi = entry.parametrization
    q = C.field
    d = C.degree
    p = q.p
    led = FactLedger(" ".join([entry.name] + [f"{k}={v}" for k, v in entry.params.items()]))
    sing = singular_points(C, 1)
    sing_pts = {r.point for r in sing}
    rational = C.rational_points()
    smooth = [P for P in rational if P not in sing_pts]

    led.add("euler relation X F_X + Y F_Y + Z F_Z = d F", [] if euler_defect(C).is_zero()
            else ["nonzero defect"], 1)

    # total flex
    table = {}
    bad = []
    for P in smooth:
        I = intersection_multiplicity(C, tangent_line(C, P), P)
        table[repr(P)] = I
        if I != d:
            bad.append(f"{P!r}: I={I}")
    led.add("total flex: I_P(C, T_P C) = d at rational smooth points", bad, len(smooth),
            f"d={d}, values={sorted(set(table.values()))}")

    # branches over rational points versus multiplicity
    if pi is not None:
        bad = []
        for Q in rational:
            n_br = fiber_size(pi, Q)
            m = multiplicity(C, Q)
            if n_br != m:
                bad.append(f"{Q!r}: branches={n_br}, m={m}")
        led.add("branch count: #pi^-1(Q) = m(Q) at rational points", bad, len(rational))
        bad = [repr(pi_pt) for pi_pt in enumerate_p1(pi.field)
               if ProjPoint.from_codes(q, pi.image_codes(pi_pt)) in sing_pts]
        led.add("rational branches map to smooth points", bad, q.q + 1)
        pd = [] if d % p else [f"p={p} divides d={d}"]
        led.add("p does not divide d", pd, 1, f"p={p}, d={d}")

    # Bezout for lines
    rng = random.Random(seed)
    bad = []
    for _ in range(lines):
        while True:
            coeffs = [rng.randrange(q.q) for _ in range(3)]
            if any(coeffs):
                break
        ell = ProjLine.from_codes(q, coeffs)
        total, m = bezout_line_sum(C, ell, m_cap=12)
        if total != d:
            bad.append(f"{ell!r}: {total}")
    led.add("Bezout: line multiplicities sum to d", bad, lines)

    # Galois centers
    if locus is None:
        locus = galois_locus(entry.galois_input(), m_max=m_max)
    galois = [r for r in locus.reports if r.verdict is Verdict.GALOIS]

    bad = []
    n_on = 0
    for r in galois:
        P = r.point
        if not r.on_curve or P in sing_pts:
            continue
        n_on += 1
        I = intersection_multiplicity(C, tangent_line(C, P), P)
        try:
            e = _center_index(entry, P)
        except ValueError as exc:
            bad.append(f"{P!r}: {exc}")
            continue
        if e != I - 1:
            bad.append(f"{P!r}: e={e}, I={I}")
    led.add("e_P = I_P(C, T_P C) - 1 at rational on-curve Galois centers", bad, n_on)

    bad = []
    for r in galois:
        res = fiber_uniformity_filter(entry.galois_input(), m_max=2, center=r.point)
        if not res.passed:
            bad.append(f"{r.point!r}: {res.witness}")
    led.add("fiber uniformity at Galois centers", bad, len(galois))

    bad = [repr(r.point) for r in galois if r.group and not is_group(r.group)]
    led.add("deck sets are groups", bad, len(galois))

    bad = []
    n_tot = 0
    for r in galois:
        for R, e in _total_points(entry, r):
            n_tot += 1
            st = stabilizer_order(r.group, R)
            if st != e:
                bad.append(f"{r.point!r}: |G_R|={st}, e={e}")
    led.add("stabilizer order = index at total ramification points", bad, n_tot)

    if pi is not None:
        # d - 1 = q' * ell with q' the p-part; the tangent order is >= q' at every
        # branch, equal to d at rational branches (total flex) and to q' elsewhere
        qp = 1
        while (d - 1) % (qp * p) == 0:
            qp *= p
        bad = []
        orders = {}
        W2 = extension(pi.field, 2)
        branches = enumerate_p1(W2)
        for t0 in branches:
            try:
                o = local_expansion_order(pi, t0, branch_tangent(pi, t0))
            except ParametrizationError:
                bad.append(f"{t0!r}: singular branch")
                continue
            rat = t0.degree_of_definition(pi.field) == 1
            orders.setdefault("rational" if rat else "other", set()).add(o)
            if o < qp or o != (d if rat else qp):
                bad.append(f"{t0!r}: {o}")
        led.add("branch tangent order: >= q', = d at rational branches, = q' otherwise",
                bad, len(branches),
                f"q'={qp}, orders={ {k: sorted(v) for k, v in sorted(orders.items())} }")

        bad = []
        clauses = {}
        checked = 0
        for r in galois:
            phi = compose_projection(pi, r.point)
            try:
                st = verify_covering_structure(phi, m_max, r.group if r.group else None)
            except NotGaloisError:
                continue
            checked += 1
            clauses[st.clause] = clauses.get(st.clause, 0) + 1
            if not st.holds:
                bad.append(f"{r.point!r}: clause {st.clause}")
        led.add("covering structure of Galois coverings of P^1", bad, checked,
                f"clauses={dict(sorted(clauses.items()))}")
    return led


def _center_index(entry: CatalogEntry, P: ProjPoint) -> int:
    """Ramification index at P of the projection from P itself, computed
    on the covering (not from the tangent)."""
    pi = entry.parametrization
    if pi is not None:
        phi = compose_projection(pi, P)
        return branch_ramification(phi, _branch_of(pi, P))
    proj = CurveProjection(entry.curve, P)
    T = tangent_line(entry.curve, P)
    # direction (x0:y0) with N (x0, y0, 0) on T
    W = proj.base
    a = linalg.dot(W, T.c, linalg.matvec(W, proj.N, [1, 0, 0]))
    b = linalg.dot(W, T.c, linalg.matvec(W, proj.N, [0, 1, 0]))
    target = (0, 1) if not b else (1, W.div(W.neg(a), b))
    B = proj.fiber_form(W, target)
    return B.root_multiplicity(P1Point.from_codes(W, 0, 1))


def _total_points(entry: CatalogEntry, report):
    """Totally ramified points over rational targets, in the group's coordinates."""
    if not report.group:
        return []
    W = report.group[0].field
    n = report.degree
    out = []
    if entry.parametrization is not None and report.engine == "mobius":
        proj = ParamProjection(entry.parametrization, report.point)
        for target in proj.targets(W):
            B = proj.fiber_form(W, target)
            roots = B.roots()
            if len(roots) == 1 and roots[0][1] == n:
                out.append((roots[0][0], n))
        return out
    proj = CurveProjection(entry.curve, report.point)
    for target in proj.targets(W):
        B = proj.fiber_form(W, target)
        roots = B.roots()
        if len(roots) == 1 and roots[0][1] == n:
            s, t = roots[0][0].c
            out.append(((W.mul(s, target[0]), W.mul(s, target[1]), t), n))
    return out
