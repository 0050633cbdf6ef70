"""Galois points by deck-transformation counting.

A degree-n covering of curves is Galois iff it has n deck
transformations.  Two engines find them:

* parametrized rational curves: the projection is a covering
  phi: P^1 -> P^1 and deck transformations are Moebius maps with
  phi o sigma = phi;
* smooth plane curves: Galois-group elements act as central homologies
  with center P, i.e. after moving P to (0:0:1) as
  sigma(X:Y:Z) = (X:Y:aX+bY+cZ) with F o sigma = lambda F.

Searches run over GF(q^m), m = 1..m_max, where q is the order of the
field carrying both curve and center.  A search at level m is complete
for transformations defined over GF(q^m).  NOT_GALOIS needs a witness
(a fiber with unequal ramification indices) or, with ``certify_bound``,
an exhausted search, which is reported as bound-certified.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Sequence, Union

from . import linalg
from .curves import CurveError, PlaneCurve, centered_form, singular_points
from .fields import FIELD_CAP, CapExceeded, FieldSpec, common_field, extension
from .geometry import PLANE_CAP, ProjPoint, enumerate_plane, pencil_directions
from .polys import (BinForm, HomPoly3, P1Point, _distinct_roots, _trim, enumerate_p1)
from .parametrized import ParametrizationError, RationalMap, compose_projection, fiber_form

DEFAULT_M_MAX = 4
SEARCH_FIELD_CAP = 2**16
FILTER_TARGET_CAP = 2**13
BRUTE_FORCE_CAP = 2 * 10**5
# note on coverings of degree < 3 and on catalog curves of degree < 4
BELOW_MIN_DEGREE = "below-paper-degree"

CurveInput = Union[PlaneCurve, RationalMap]


class UnsupportedCurve(ValueError):
    """The curve class has no Galois engine (e.g. singular implicit input)."""


class NotGaloisError(ValueError):
    pass


class Verdict(str, Enum):
    GALOIS = "GALOIS"
    NOT_GALOIS = "NOT_GALOIS"
    INCONCLUSIVE = "INCONCLUSIVE"


# --- transformations --------------------------------------------------------

@dataclass(frozen=True)
class MobiusTransform:
    """(s:t) -> (a s + b t : c s + d t), entries as codes, first nonzero entry 1."""

    field: FieldSpec
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def make(cls, field: FieldSpec, a: int, b: int, c: int, d: int) -> "MobiusTransform":
        F = field
        if not F.sub(F.mul(a, d), F.mul(b, c)):
            raise ValueError("singular Moebius matrix")
        a, b, c, d = linalg.normalize(F, (a, b, c, d))
        return cls(F, a, b, c, d)

    @classmethod
    def identity(cls, field: FieldSpec) -> "MobiusTransform":
        return cls(field, 1, 0, 0, 1)

    def apply(self, P: P1Point) -> P1Point:
        F = self.field
        s, t = P.embed(F).c
        return P1Point.from_codes(F, F.add(F.mul(self.a, s), F.mul(self.b, t)),
                                  F.add(F.mul(self.c, s), F.mul(self.d, t)))

    def compose(self, other: "MobiusTransform") -> "MobiusTransform":
        """self o other."""
        M = linalg.matmul(self.field, [[self.a, self.b], [self.c, self.d]],
                          [[other.a, other.b], [other.c, other.d]])
        return MobiusTransform.make(self.field, M[0][0], M[0][1], M[1][0], M[1][1])

    def inverse(self) -> "MobiusTransform":
        F = self.field
        return MobiusTransform.make(F, self.d, F.neg(self.b), F.neg(self.c), self.a)

    def __repr__(self):
        f = self.field.format_code
        return f"[[{f(self.a)}, {f(self.b)}], [{f(self.c)}, {f(self.d)}]]"


@dataclass(frozen=True)
class CentralHomology:
    """(X:Y:Z) -> (X:Y:aX+bY+cZ) in coordinates where the center is (0:0:1)."""

    field: FieldSpec
    a: int
    b: int
    c: int

    @classmethod
    def identity(cls, field: FieldSpec) -> "CentralHomology":
        return cls(field, 0, 0, 1)

    def matrix(self):
        return [[1, 0, 0], [0, 1, 0], [self.a, self.b, self.c]]

    def apply_codes(self, pt):
        F = self.field
        x, y, z = pt
        return (x, y, F.add(F.add(F.mul(self.a, x), F.mul(self.b, y)), F.mul(self.c, z)))

    def compose(self, other: "CentralHomology") -> "CentralHomology":
        """self o other."""
        F = self.field
        return CentralHomology(F, F.add(self.a, F.mul(self.c, other.a)),
                               F.add(self.b, F.mul(self.c, other.b)),
                               F.mul(self.c, other.c))

    def inverse(self) -> "CentralHomology":
        F = self.field
        ci = F.inv(self.c)
        return CentralHomology(F, F.neg(F.mul(self.a, ci)), F.neg(F.mul(self.b, ci)), ci)

    def stabilizes_pencil(self) -> bool:
        """Fixes (0:0:1) and maps every line through it to itself."""
        for x0, y0 in [(1, 0), (0, 1), (1, 1)]:
            img = self.apply_codes((x0, y0, 0))
            if img[:2] != (x0, y0):
                return False
        return bool(self.c)

    def __repr__(self):
        f = self.field.format_code
        return f"Z -> {f(self.a)}*X + {f(self.b)}*Y + {f(self.c)}*Z"


def is_group(elements: Sequence) -> bool:
    """Closure under composition and inverse, identity included."""
    S = set(elements)
    if not S:
        return False
    any_el = next(iter(S))
    ident = type(any_el).identity(any_el.field)
    if ident not in S:
        return False
    for g in S:
        if g.inverse() not in S:
            return False
        for h in S:
            if g.compose(h) not in S:
                return False
    return True


def stabilizer_order(group: Sequence, point) -> int:
    """Number of group elements fixing ``point`` (P1Point, or centered code triple)."""
    n = 0
    for g in group:
        if isinstance(g, MobiusTransform):
            if g.apply(point) == point.embed(g.field):
                n += 1
        else:
            img = linalg.normalize(g.field, g.apply_codes(point))
            if img == linalg.normalize(g.field, point):
                n += 1
    return n


# --- projections as coverings of P^1 ------------------------------------------

class _Projection:
    """A covering of P^1 given by projecting from a center.

    ``base`` carries both curve and center; search levels m count degrees
    over ``curve_field``, and only m with GF(q^m) containing ``base`` occur.
    """

    degree: int
    base: FieldSpec
    curve_field: FieldSpec
    on_curve: bool

    def levels(self, m_max: int, cap: int = SEARCH_FIELD_CAP):
        return search_levels(self.curve_field, self.base, m_max, cap)

    def fiber_form(self, W: FieldSpec, target: tuple[int, int]) -> BinForm:
        raise NotImplementedError

    def targets(self, W: FieldSpec):
        raise NotImplementedError


class ParamProjection(_Projection):
    def __init__(self, pi: RationalMap, center: ProjPoint):
        self.base = common_field(pi.field, center.field)
        self.curve_field = pi.field
        self.pi = pi.embed(self.base)
        self.center = center.embed(self.base)
        self.phi = compose_projection(self.pi, self.center)
        self.degree = self.phi.degree
        self.on_curve = fiber_form(self.pi, self.center).d > 0
        self._emb: dict = {}

    def phi_over(self, W: FieldSpec) -> RationalMap:
        if W not in self._emb:
            self._emb[W] = self.phi.embed(W)
        return self._emb[W]

    def fiber_form(self, W, target):
        u, v = self.phi_over(W).components
        w0, w1 = target
        return u.scale(w1) - v.scale(w0)

    def targets(self, W):
        return [pt.c for pt in enumerate_p1(W)]

    def describe_target(self, W, target) -> str:
        return repr(P1Point.from_codes(W, *target))


class CurveProjection(_Projection):
    """Projection of a smooth plane curve from a point, in centered coordinates."""

    def __init__(self, C: PlaneCurve, center: ProjPoint):
        self.base = common_field(C.field, center.field)
        self.curve_field = C.field
        self.curve = C
        self.center = center.embed(self.base)
        self.G, self.N = centered_form(C.F, self.center)
        self.on_curve = C.contains(self.center)
        self.degree = C.degree - (1 if self.on_curve else 0)
        self._emb: dict = {}

    def G_over(self, W: FieldSpec) -> HomPoly3:
        if W not in self._emb:
            self._emb[W] = self.G.embed(W)
        return self._emb[W]

    def line_poly(self, W, x0, y0) -> list[int]:
        """G(x0, y0, z) as a polynomial in z (codes, constant term first)."""
        G = self.G_over(W)
        d = G.d
        coeffs = [0] * (d + 1)
        for (i, j, k), c in G.terms.items():
            coeffs[k] = W.add(coeffs[k], W.mul(c, W.mul(W.pow(x0, i), W.pow(y0, j))))
        return coeffs

    def fiber_form(self, W, target):
        # B(s, t) = G(s x0, s y0, t): coefficient of s^(d-k) t^k is line_poly[k]
        x0, y0 = target
        lp = self.line_poly(W, x0, y0)
        d = len(lp) - 1
        c = [lp[d - i] for i in range(d + 1)]
        if self.on_curve:
            if c[0]:
                raise CurveError("center is not on the curve after all")
            return BinForm.from_codes(W, d - 1, c[1:])
        return BinForm.from_codes(W, d, c)

    def targets(self, W):
        return pencil_directions(W)

    def describe_target(self, W, target) -> str:
        return repr(P1Point.from_codes(W, *target))


def make_projection(curve: CurveInput, center: ProjPoint) -> _Projection:
    if isinstance(curve, RationalMap):
        if len(curve.components) != 3:
            raise UnsupportedCurve("expected a plane parametrization")
        return ParamProjection(curve, center)
    if isinstance(curve, PlaneCurve):
        if curve.contains(center):
            from .curves import is_smooth_point

            if not is_smooth_point(curve, center):
                raise UnsupportedCurve("center is a singular point of an implicit curve")
        return CurveProjection(curve, center)
    raise UnsupportedCurve(f"unsupported curve input {type(curve).__name__}")


# --- fiber uniformity -------------------------------------------------------------

@dataclass
class FilterResult:
    passed: bool
    levels_checked: int
    witness: dict | None = None
    nontrivial_fibers: dict = dc_field(default_factory=dict)


def search_levels(curve_field: FieldSpec, base: FieldSpec, m_max: int,
                  cap: int = SEARCH_FIELD_CAP) -> list[tuple[int, FieldSpec]]:
    """(m, GF(q^m)) for m <= m_max with GF(q^m) containing ``base``, q = |curve_field|,
    stopping before the first field above ``cap``."""
    out = []
    for m in range(1, m_max + 1):
        if (curve_field.k * m) % base.k:
            continue
        W = extension(curve_field, m)
        if W.q > cap:
            break
        out.append((m, W))
    return out


def _filter_levels(proj: _Projection, levels, record: bool = True) -> FilterResult:
    """Profiles of fibers over every W-rational target, for (m, W) in ``levels``."""
    checked = 0
    nontrivial = {}
    for m, W in levels:
        if W.q + 1 > FILTER_TARGET_CAP and checked:
            break
        for target in proj.targets(W):
            prof = proj.fiber_form(W, target).multiplicity_profile()
            if len(set(prof)) > 1:
                return FilterResult(False, m, {
                    "target": proj.describe_target(W, target),
                    "level": m,
                    "profile": prof,
                }, nontrivial)
            if record and not checked and prof and prof[0] > 1:
                nontrivial[proj.describe_target(W, target)] = prof
        checked = m
    return FilterResult(True, checked, None, nontrivial)


def fiber_uniformity_filter(source, m_max: int = 1, center: ProjPoint | None = None) -> FilterResult:
    """Check that every fiber over a GF(q^m)-target (m <= m_max) has equal
    ramification indices.  ``source`` is a covering RationalMap P^1 -> P^1,
    or a curve input together with ``center``.  Failure certifies NOT_GALOIS.
    """
    if center is not None:
        proj = make_projection(source, center)
    elif isinstance(source, RationalMap) and len(source.components) == 2:
        proj = _CoveringOnly(source)
    elif isinstance(source, _Projection):
        proj = source
    else:
        raise TypeError("need a covering, or a curve with a center")
    levels = proj.levels(m_max, FIELD_CAP)
    if not levels:
        raise ValueError(f"no level m <= {m_max} contains the field of the center")
    return _filter_levels(proj, levels)


class _CoveringOnly(_Projection):
    def __init__(self, phi: RationalMap):
        self.base = phi.field
        self.curve_field = phi.field
        self.phi = phi
        self.degree = phi.degree
        self.on_curve = False

    def fiber_form(self, W, target):
        u, v = self.phi.embed(W).components
        return u.scale(target[1]) - v.scale(target[0])

    def targets(self, W):
        return [pt.c for pt in enumerate_p1(W)]

    def describe_target(self, W, target):
        return repr(P1Point.from_codes(W, *target))


# --- Moebius search ----------------------------------------------------------------

def _mobius_from_points(F, xs, ys):
    """The unique Moebius map sending three distinct points xs to ys (codes)."""
    def frame(pts):
        (p1, p2, p3) = pts
        det = F.sub(F.mul(p1[0], p2[1]), F.mul(p2[0], p1[1]))
        # l1 p1 + l2 p2 = p3
        l1 = F.div(F.sub(F.mul(p3[0], p2[1]), F.mul(p2[0], p3[1])), det)
        l2 = F.div(F.sub(F.mul(p1[0], p3[1]), F.mul(p3[0], p1[1])), det)
        return [[F.mul(l1, p1[0]), F.mul(l2, p2[0])], [F.mul(l1, p1[1]), F.mul(l2, p2[1])]]

    A = frame(xs)
    B = frame(ys)
    detA = F.sub(F.mul(A[0][0], A[1][1]), F.mul(A[0][1], A[1][0]))
    Ainv = [[F.div(A[1][1], detA), F.div(F.neg(A[0][1]), detA)],
            [F.div(F.neg(A[1][0]), detA), F.div(A[0][0], detA)]]
    M = linalg.matmul(F, B, Ainv)
    return M[0][0], M[0][1], M[1][0], M[1][1]


def _is_deck(phi: RationalMap, a, b, c, d) -> bool:
    u, v = phi.components
    us, vs = u.substitute(a, b, c, d), v.substitute(a, b, c, d)
    return (us * v - vs * u).is_zero()


def mobius_search_at(phi: RationalMap, W: FieldSpec) -> list[MobiusTransform]:
    """All Moebius maps over W with phi o sigma = phi.

    sigma is fixed by the images of (0:1), (1:0), (1:1), and each image is a
    W-rational point of the fiber through its preimage.
    """
    if W.q > SEARCH_FIELD_CAP:
        raise CapExceeded(f"Moebius search over {W!r} exceeds the cap")
    phiW = phi.embed(W)
    u, v = phiW.components
    xs = [(0, 1), (1, 0), (1, 1)]
    fibers = []
    for x in xs:
        w = linalg.normalize(W, [u.eval_codes(*x), v.eval_codes(*x)])
        G = u.scale(w[1]) - v.scale(w[0])
        fibers.append([pt.c for pt, _ in G.roots()])
    found = []
    seen = set()
    for ys in itertools.product(*fibers):
        if len(set(ys)) < 3:
            continue
        a, b, c, d = _mobius_from_points(W, xs, ys)
        if _is_deck(phiW, a, b, c, d):
            T = MobiusTransform.make(W, a, b, c, d)
            if T not in seen:
                seen.add(T)
                found.append(T)
    return found


def mobius_automorphisms(phi: RationalMap, m_max: int = DEFAULT_M_MAX) -> list[MobiusTransform]:
    """Deck transformations of phi over the first GF(q^m), m <= m_max, that
    supplies deg(phi) of them (otherwise the largest group found)."""
    return _mobius_escalate(phi, search_levels(phi.field, phi.field, m_max))[0]


def _mobius_escalate(phi: RationalMap, levels):
    """Returns (group, m of the group, last m searched, every level searched)."""
    if not levels:
        raise CapExceeded(f"no search level within the cap for {phi.field!r}")
    best: list = []
    best_m = 0
    reached = 0
    for m, W in levels:
        group = mobius_search_at(phi, W)
        reached = m
        if len(group) > len(best):
            best, best_m = group, m
        if len(group) >= phi.degree:
            break
    return best, best_m, reached, True


def mobius_bruteforce(phi: RationalMap, W: FieldSpec) -> list[MobiusTransform]:
    """Oracle: scan all of PGL(2, W)."""
    phiW = phi.embed(W)
    if W.q**3 > BRUTE_FORCE_CAP * 50:
        raise CapExceeded("PGL(2) scan too large")
    out = []
    q = W.q
    for a, b in [(1, b) for b in range(q)] + [(0, 1)]:
        for c in range(q):
            for d in range(q):
                if not W.sub(W.mul(a, d), W.mul(b, c)):
                    continue
                if _is_deck(phiW, a, b, c, d):
                    out.append(MobiusTransform.make(W, a, b, c, d))
    return out


# --- homology search -----------------------------------------------------------------

def _is_homology_automorphism(G: HomPoly3, a, b, c) -> bool:
    H = G.linear_substitute([[1, 0, 0], [0, 1, 0], [a, b, c]])
    F = G.field
    lam = None
    if set(H.terms) != set(G.terms):
        return False
    for e, v in G.terms.items():
        r = F.div(H.terms[e], v)
        if lam is None:
            lam = r
        elif r != lam:
            return False
    return True


def homology_search_at(proj: CurveProjection, W: FieldSpec) -> list[CentralHomology] | None:
    """All homologies over W; None if W has too few rational curve points to
    pin candidates down (caller escalates or brute-forces)."""
    if W.q > SEARCH_FIELD_CAP:
        raise CapExceeded(f"homology search over {W!r} exceeds the cap")
    GW = proj.G_over(W)
    line1 = None
    line2 = None
    samples = []
    for (x0, y0) in pencil_directions(W):
        lp = _trim(proj.line_poly(W, x0, y0))
        if len(lp) <= 1:
            continue
        roots = _distinct_roots(W, lp)
        if not roots:
            continue
        samples.extend((x0, y0, z) for z in roots[:2])
        if line1 is None and len(roots) >= 2:
            line1 = (x0, y0, roots)
        elif line2 is None:
            line2 = (x0, y0, roots)
        if line1 and line2 and len(samples) >= 8:
            break
    if line1 is None or line2 is None:
        return None
    x0, y0, r1 = line1
    x1, y1, r2 = line2
    z1, z2, z3 = r1[0], r1[1], r2[0]
    det = W.sub(W.mul(x0, y1), W.mul(x1, y0))
    found = []
    seen = set()
    for w1, w2 in itertools.permutations(r1, 2):
        c = W.div(W.sub(w1, w2), W.sub(z1, z2))
        s1 = W.sub(w1, W.mul(c, z1))
        for w3 in r2:
            s2 = W.sub(w3, W.mul(c, z3))
            a = W.div(W.sub(W.mul(s1, y1), W.mul(s2, y0)), det)
            b = W.div(W.sub(W.mul(x0, s2), W.mul(x1, s1)), det)
            if (a, b, c) in seen:
                continue
            seen.add((a, b, c))
            if any(GW.eval_codes(x, y, W.add(W.add(W.mul(a, x), W.mul(b, y)), W.mul(c, z)))
                   for x, y, z in samples):
                continue
            if _is_homology_automorphism(GW, a, b, c):
                found.append(CentralHomology(W, a, b, c))
    return found


def homology_bruteforce(proj: CurveProjection, W: FieldSpec) -> list[CentralHomology]:
    """Oracle: scan every (a, b, c) with c != 0."""
    if W.q**3 > BRUTE_FORCE_CAP * 50:
        raise CapExceeded("homology scan too large")
    GW = proj.G_over(W)
    out = []
    for a in range(W.q):
        for b in range(W.q):
            for c in range(1, W.q):
                if _is_homology_automorphism(GW, a, b, c):
                    out.append(CentralHomology(W, a, b, c))
    return out


def _homology_escalate(proj: CurveProjection, levels):
    """Returns (group, m of the group, last m searched, every level searched).

    A level whose field has too few rational curve points for the
    constrained search falls back to the full scan when that is small
    enough; otherwise it is skipped.  Skipped levels still count as covered
    when a searched level's field contains theirs.
    """
    if not levels:
        raise CapExceeded(f"no search level within the cap for {proj.base!r}")
    best: list = []
    best_m = 0
    reached = 0
    skipped = []
    searched = []
    for m, W in levels:
        group = homology_search_at(proj, W)
        if group is None:
            if W.q**3 <= BRUTE_FORCE_CAP:
                group = homology_bruteforce(proj, W)
            else:
                skipped.append(m)
                continue
        searched.append(m)
        reached = m
        if len(group) > len(best):
            best, best_m = group, m
        if len(group) >= proj.degree:
            break
    if not best:
        m0, W0 = levels[0]
        best, best_m = [CentralHomology.identity(W0)], m0
    complete = all(any(m2 % m1 == 0 for m2 in searched) for m1 in skipped)
    return best, best_m, reached, complete


def _smooth_bound(C: PlaneCurve, wanted: int) -> int:
    m = 0
    for j in range(1, wanted + 1):
        W = extension(C.field, j)
        if W.q**2 + W.q + 1 > PLANE_CAP // 8:
            break
        m = j
    return max(m, 1)


def homology_automorphisms(C: PlaneCurve, P: ProjPoint, m_max: int = DEFAULT_M_MAX,
                           smooth_m: int = 2) -> list[CentralHomology]:
    """Central homologies with center P preserving C, found over the first
    GF(q^m), m <= m_max, that supplies the covering degree (else the best
    level).  Returned in centered coordinates (P at (0:0:1))."""
    _require_smooth(C, smooth_m)
    proj = CurveProjection(C, P)
    return _homology_escalate(proj, proj.levels(m_max))[0]


def _require_smooth(C: PlaneCurve, smooth_m: int) -> int:
    bound = _smooth_bound(C, smooth_m)
    if singular_points(C, bound):
        raise UnsupportedCurve("implicit curve is singular; supply a parametrization")
    return bound


# --- reports ---------------------------------------------------------------------------

@dataclass
class GaloisReport:
    point: ProjPoint
    on_curve: bool
    degree: int
    automorphisms: int
    m_used: int
    m_max: int
    verdict: Verdict
    certificate: str
    engine: str
    witness: dict | None = None
    ramification: dict = dc_field(default_factory=dict)
    notes: list[str] = dc_field(default_factory=list)
    group: list = dc_field(default_factory=list, repr=False)

    @property
    def is_galois(self) -> bool:
        return self.verdict is Verdict.GALOIS

    def to_dict(self) -> dict:
        return {
            "point": repr(self.point),
            "on_curve": self.on_curve,
            "degree": self.degree,
            "automorphisms": self.automorphisms,
            "m_used": self.m_used,
            "m_max": self.m_max,
            "verdict": self.verdict.value,
            "certificate": self.certificate,
            "engine": self.engine,
            "witness": self.witness,
            "ramification": self.ramification,
            "notes": list(self.notes),
        }


def is_galois_point(curve: CurveInput, P: ProjPoint, m_max: int = DEFAULT_M_MAX,
                    certify_bound: bool = False, smooth_m: int = 2,
                    search_cap: int = SEARCH_FIELD_CAP) -> GaloisReport:
    """Decide whether the projection of ``curve`` from P is Galois.

    Searches GF(q^m) for m <= m_max with |GF(q^m)| <= ``search_cap``;
    ``certify_bound`` turns an exhausted search into NOT_GALOIS.
    """
    notes = []
    if isinstance(curve, PlaneCurve):
        bound = _require_smooth(curve, smooth_m)
        notes.append(f"smooth-engine: Galois elements taken as central homologies; "
                     f"smoothness checked over extensions m<={bound}")
        engine = "homology"
    elif isinstance(curve, RationalMap):
        engine = "mobius"
    else:
        raise UnsupportedCurve(f"unsupported curve input {type(curve).__name__}")
    try:
        proj = make_projection(curve, P)
    except ParametrizationError as exc:
        raise UnsupportedCurve(str(exc)) from exc
    n = proj.degree
    center = proj.center
    if n < 3:
        notes.append(BELOW_MIN_DEGREE)

    def report(verdict, count, m_used, cert, witness=None, group=()):
        return GaloisReport(center, proj.on_curve, n, count, m_used, m_max, verdict, cert,
                            engine, witness, first.nontrivial_fibers, notes, list(group))

    levels = proj.levels(m_max, search_cap)
    wanted = proj.levels(m_max, cap=FIELD_CAP**4)
    if not levels:
        raise CapExceeded(f"no search level within the cap for {proj.base!r}")
    first = _filter_levels(proj, levels[:1])
    if not first.passed:
        notes.append("deck search skipped")
        return report(Verdict.NOT_GALOIS, 0, 0, "filter-witness", first.witness)
    if n <= 1:
        return report(Verdict.GALOIS, 1, levels[0][0], "trivial-degree")

    if engine == "mobius":
        group, m_used, reached, complete = _mobius_escalate(proj.phi, levels)
    else:
        group, m_used, reached, complete = _homology_escalate(proj, levels)
    count = len(group)
    if count == n:
        return report(Verdict.GALOIS, count, m_used, "deck-count", group=group)
    if count > n:
        raise RuntimeError(f"found {count} deck transformations for a degree-{n} covering")
    if n == 2 and proj.base.p != 2:
        notes.append("degree-2 covering in odd characteristic is Galois")
        return report(Verdict.GALOIS, count, m_used, "degree-2", group=group)
    later = _filter_levels(proj, [lv for lv in levels[1:] if lv[0] <= reached], record=False)
    if not later.passed:
        return report(Verdict.NOT_GALOIS, count, m_used, "filter-witness", later.witness, group)
    exhausted = complete and len(levels) == len(wanted)
    if not exhausted:
        notes.append(f"search incomplete: levels above m={reached} exceed the cap or lack points")
    if certify_bound and exhausted:
        return report(Verdict.NOT_GALOIS, count, reached, "bound-certified", group=group)
    return report(Verdict.INCONCLUSIVE, count, reached, "search-exhausted" if exhausted
                  else "search-capped", group=group)


@dataclass
class LocusResult:
    base: FieldSpec
    reports: list[GaloisReport]
    m_max: int

    @property
    def counts(self) -> dict[str, int]:
        out = {v.value: 0 for v in Verdict}
        for r in self.reports:
            out[r.verdict.value] += 1
        return out

    @property
    def flag(self) -> bool:
        """True iff every rational point of the plane is Galois."""
        q = self.base.q
        galois = sum(1 for r in self.reports if r.is_galois)
        return len(self.reports) == q * q + q + 1 and galois == len(self.reports)

    @property
    def galois_points(self) -> list[ProjPoint]:
        return [r.point for r in self.reports if r.is_galois]


def curve_field(curve: CurveInput) -> FieldSpec:
    return curve.field


def galois_locus(curve: CurveInput, m_max: int = DEFAULT_M_MAX,
                 points: Sequence[ProjPoint] | None = None, threads: int | None = None,
                 certify_bound: bool = False, smooth_m: int = 2,
                 search_cap: int = SEARCH_FIELD_CAP) -> LocusResult:
    """Sweep the rational points of P^2 (or ``points``) in deterministic order."""
    base = curve_field(curve)
    pts = list(points) if points is not None else enumerate_plane(base)
    if threads is None:
        threads = int(os.environ.get("GALOIS_LOCUS_THREADS", "1") or 1)
    if isinstance(curve, PlaneCurve):
        _require_smooth(curve, smooth_m)

    def one(P):
        return is_galois_point(curve, P, m_max, certify_bound, smooth_m, search_cap)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(one, pts))
    else:
        reports = [one(P) for P in pts]
    return LocusResult(base, reports, m_max)


# --- covering structure ---------------------------------------------------------------

@dataclass
class CoveringStructure:
    degree: int
    p_part: int
    ell: int
    clause: str
    total_point: P1Point
    second_point: P1Point | None
    second_index: int | None
    holds: bool
    details: dict = dc_field(default_factory=dict)


def _ramified_fibers(phi: RationalMap, m: int):
    """(target, [(point, e)]) for fibers with a ramified point, over GF(q^m)-targets,
    fiber points over GF(q^m) only."""
    W = extension(phi.field, m)
    u, v = phi.embed(W).components
    out = []
    for w in enumerate_p1(W):
        G = u.scale(w.c[1]) - v.scale(w.c[0])
        prof = G.multiplicity_profile()
        if prof[0] > 1:
            out.append((w, prof, G.roots()))
    return out


def verify_covering_structure(phi: RationalMap, m_max: int = DEFAULT_M_MAX,
                              group: Sequence[MobiusTransform] | None = None) -> CoveringStructure:
    """Check the ramification structure of a Galois covering P^1 -> P^1 having a
    totally ramified point.

    Degree n = p^a * ell with p not dividing ell.  If p^a = 1 there is
    exactly one other total ramification point; if p^a > 1 and ell >= 2
    then ell divides p^a - 1 and some other point has index ell.
    """
    n = phi.degree
    if group is None:
        group = mobius_automorphisms(phi, m_max)
    if len(group) != n:
        raise NotGaloisError(f"covering has {len(group)} deck transformations, degree {n}")
    p = phi.field.p
    qp = 1
    while n % (qp * p) == 0:
        qp *= p
    ell = n // qp
    totals: list[P1Point] = []
    ramified: list[tuple[P1Point, int]] = []
    levels = 0
    for m in range(1, m_max + 1):
        W = extension(phi.field, m)
        if W.q + 1 > FILTER_TARGET_CAP:
            break
        levels = m
        ramified = []
        totals = []
        for w, prof, roots in _ramified_fibers(phi, m):
            for pt, e in roots:
                ramified.append((pt, e))
                if e == n:
                    totals.append(pt)
        if qp == 1 and len(totals) >= 2:
            break
        if qp > 1 and totals and (ell == 1 or any(e == ell and pt != totals[0]
                                                  for pt, e in ramified)):
            break
    if not totals:
        raise NotGaloisError("no totally ramified point found within the bound")
    P = totals[0]
    details = {"levels": levels, "ramification": {repr(pt): e for pt, e in ramified}}
    if qp == 1:
        others = [pt for pt in totals if pt != P]
        rh = sum(e - 1 for _, e in ramified)
        details["riemann_hurwitz_sum"] = rh
        holds = len(others) == 1 and rh == 2 * n - 2
        return CoveringStructure(n, qp, ell, "1", P, others[0] if others else None,
                                 n if others else None, holds, details)
    if ell == 1:
        return CoveringStructure(n, qp, ell, "2-vacuous", P, None, None, True, details)
    second = next(((pt, e) for pt, e in ramified if e == ell and pt != P), None)
    holds = (qp - 1) % ell == 0 and second is not None
    details["ell_divides"] = (qp - 1) % ell == 0
    return CoveringStructure(n, qp, ell, "2", P, second[0] if second else None,
                             second[1] if second else None, holds, details)
