"""Rational maps from P^1: parametrized plane curves and coverings P^1 -> P^1.

Branch-level quantities are computed in explicit affine charts: a branch
(1:t0) uses the t-chart with local parameter u = t - t0, the branch (0:1)
uses the s-chart with local parameter s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .fields import CapExceeded, FieldSpec, common_field, extension
from .geometry import ProjLine, ProjPoint
from .polys import (BinForm, P1Point, binform_divide, binform_gcd, enumerate_p1,
                    implicitize)

INFINITE_ORDER = math.inf

BranchPoint = P1Point


class ParametrizationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class RationalMap:
    """(f_0 : ... : f_{n-1}) with coprime binary forms of a common degree."""

    components: tuple[BinForm, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if len(comps) not in (2, 3):
            raise ParametrizationError("a rational map needs 2 or 3 components")
        F = comps[0].field
        d = comps[0].d
        if any(c.field != F for c in comps) or any(c.d != d for c in comps):
            raise ParametrizationError("components must share field and degree")
        if all(c.is_zero() for c in comps):
            raise ParametrizationError("all components vanish")
        g = comps[0]
        for c in comps[1:]:
            g = binform_gcd(g, c)
        if g.d > 0:
            raise ParametrizationError(f"components share the factor {g}")

    @property
    def field(self) -> FieldSpec:
        return self.components[0].field

    @property
    def degree(self) -> int:
        return self.components[0].d

    def embed(self, target: FieldSpec) -> "RationalMap":
        if target == self.field:
            return self
        return RationalMap(tuple(c.embed(target) for c in self.components))

    def __eq__(self, other):
        return isinstance(other, RationalMap) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "(" + " : ".join(str(c) for c in self.components) + f") over {self.field!r}"

    def image_codes(self, pt: P1Point) -> tuple[int, ...]:
        return linalg.normalize(pt.field, [c.at(pt) for c in self.components])

    def compose_mobius(self, a: int, b: int, c: int, d: int) -> "RationalMap":
        return RationalMap(tuple(f.substitute(a, b, c, d) for f in self.components))


def evaluate(pi: RationalMap, P: P1Point):
    """Image of a parameter; a ProjPoint for plane maps, a P1Point for coverings."""
    W = common_field(pi.field, P.field)
    P = P.embed(W)
    vals = [c.embed(W).eval_codes(*P.c) for c in pi.components]
    if len(vals) == 3:
        return ProjPoint.from_codes(W, vals)
    return P1Point.from_codes(W, *vals)


def fiber_form(pi: RationalMap, Q) -> BinForm:
    """gcd of the 2x2 minors Q_j f_i - Q_i f_j: its roots are the parameters over Q."""
    W = common_field(pi.field, Q.field)
    comps = [c.embed(W) for c in pi.components]
    Qc = Q.embed(W).c
    g = None
    n = len(comps)
    for i in range(n):
        for j in range(i + 1, n):
            minor = comps[i].scale(Qc[j]) - comps[j].scale(Qc[i])
            g = minor if g is None else binform_gcd(g, minor)
    return g


def fiber(pi: RationalMap, Q, m_max: int = 1) -> list[P1Point]:
    """Parameters over GF(q^m), m <= m_max, mapping to Q (each listed once,
    over its minimal extension of the working field)."""
    G = fiber_form(pi, Q)
    if G.is_zero():
        raise ParametrizationError("degenerate map: every parameter lies over Q")
    base = G.field
    out = []
    for m in range(1, m_max + 1):
        W = extension(base, m)
        if W.q > 2**20:
            raise CapExceeded(f"fiber search over {W!r} exceeds the cap")
        for pt, _ in G.embed(W).roots():
            if pt.degree_of_definition(base) == m:
                out.append(pt)
    return out


def fiber_size(pi: RationalMap, Q) -> int:
    """Number of distinct parameters over Q over the algebraic closure."""
    G = fiber_form(pi, Q)
    if G.is_zero():
        raise ParametrizationError("degenerate map: every parameter lies over Q")
    if G.d == 0:
        return 0
    return len(G.multiplicity_profile())


def _chart_rows(pi: RationalMap, P: P1Point):
    """Values and first derivatives of the components at P in its chart."""
    W = common_field(pi.field, P.field)
    P = P.embed(W)
    comps = [c.embed(W) for c in pi.components]
    s0, t0 = P.c
    if s0 == 0:
        # s-chart: f(s, 1), derivative in s at s = 0
        vals = [c.eval_codes(0, 1) for c in comps]
        ders = [c.derivative("s").eval_codes(0, 1) if c.d else 0 for c in comps]
    else:
        vals = [c.eval_codes(1, t0) for c in comps]
        ders = [c.derivative("t").eval_codes(1, t0) if c.d else 0 for c in comps]
    return W, vals, ders


def branch_tangent(pi: RationalMap, P: P1Point) -> ProjLine:
    """Tangent line of a non-singular branch: the cross product of value and
    derivative rows in the branch's chart."""
    if len(pi.components) != 3:
        raise ParametrizationError("branch tangents need a plane map")
    W, vals, ders = _chart_rows(pi, P)
    line = linalg.cross(W, vals, ders)
    if not any(line):
        raise ParametrizationError(f"rank < 2 at {P!r}: not a non-singular branch")
    return ProjLine.from_codes(W, line)


def _forms_through(W: FieldSpec, center: Sequence[int]):
    """Basis of linear forms vanishing at ``center``, echelon with pivots taken
    from the right; listed by ascending pivot column."""
    # forms (a, b, c) with a x + b y + c z = 0: kernel of the 1x3 matrix
    kernel_basis = linalg.kernel(W, [list(center)], 3)
    R, piv = linalg.rref(W, kernel_basis, columns=[2, 1, 0])
    pairs = sorted(zip(piv, R), key=lambda pr: pr[0])
    return [r for _, r in pairs]


def compose_projection(pi: RationalMap, center: ProjPoint) -> RationalMap:
    """The covering P^1 -> P^1 obtained by projecting the image of ``pi`` from
    ``center``, with base points cancelled."""
    W = common_field(pi.field, center.field)
    comps = [c.embed(W) for c in pi.components]
    forms = _forms_through(W, center.embed(W).c)
    composed = []
    for a, b, c in forms:
        acc = BinForm.from_codes(W, pi.degree, [])
        for coef, comp in zip((a, b, c), comps):
            if coef:
                acc = acc + comp.scale(coef)
        composed.append(acc)
    if all(f.is_zero() for f in composed):
        raise ParametrizationError("projection degenerates: image is the center")
    if any(f.is_zero() for f in composed):
        raise ParametrizationError("image lies on a line through the center")
    g = binform_gcd(*composed)
    return RationalMap(tuple(binform_divide(f, g) for f in composed))


def branch_ramification(phi: RationalMap, P: P1Point) -> int:
    """Vanishing order at P of v0*u - u0*v where phi = (u:v), phi(P) = (u0:v0)."""
    if len(phi.components) != 2:
        raise ParametrizationError("branch_ramification needs a covering P^1 -> P^1")
    W = common_field(phi.field, P.field)
    u, v = (c.embed(W) for c in phi.components)
    P = P.embed(W)
    u0, v0 = linalg.normalize(W, [u.eval_codes(*P.c), v.eval_codes(*P.c)])
    return (u.scale(v0) - v.scale(u0)).root_multiplicity(P)


def covering_fiber_form(phi: RationalMap, target: P1Point) -> BinForm:
    """w1*u - w0*v for target (w0:w1): its roots are the fiber over the target."""
    W = common_field(phi.field, target.field)
    u, v = (c.embed(W) for c in phi.components)
    w0, w1 = target.embed(W).c
    return u.scale(w1) - v.scale(w0)


def local_expansion_order(pi: RationalMap, P: P1Point, h) -> float:
    """Vanishing order at P of h o pi for a linear form h (ProjLine or triple).

    Returns INFINITE_ORDER when h o pi vanishes identically.
    """
    coeffs = h.c if isinstance(h, ProjLine) else h
    hf = h.field if isinstance(h, ProjLine) else pi.field
    W = common_field(pi.field, P.field, hf)
    if isinstance(h, ProjLine):
        coeffs = h.embed(W).c
    comps = [c.embed(W) for c in pi.components]
    acc = BinForm.from_codes(W, pi.degree, [])
    for coef, comp in zip(coeffs, comps):
        if coef:
            acc = acc + comp.scale(coef)
    if acc.is_zero():
        return INFINITE_ORDER
    return acc.root_multiplicity(P.embed(W))


def ramification_points(phi: RationalMap, m: int = 1):
    """Targets in P^1(GF(q^m)) with non-trivial fibers: {target: [(point, e), ...]}.

    Fiber points are those rational over GF(q^m); the full profile over the
    algebraic closure is in :func:`fiber_profile`.
    """
    W = extension(phi.field, m)
    out = {}
    for w in enumerate_p1(W):
        G = covering_fiber_form(phi, w)
        prof = G.multiplicity_profile()
        if any(e > 1 for e in prof):
            out[w] = [(pt, e) for pt, e in G.roots()]
    return out


def fiber_profile(phi: RationalMap, target: P1Point) -> list[int]:
    """Ramification indices over ``target`` (over the algebraic closure)."""
    return covering_fiber_form(phi, target).multiplicity_profile()


def implicit_curve(pi: RationalMap):
    """The PlaneCurve F = 0 traced by a plane parametrization."""
    from .curves import PlaneCurve

    if len(pi.components) != 3:
        raise ParametrizationError("implicitization needs a plane map")
    return PlaneCurve(implicitize(pi, pi.degree), irreducible=True)
