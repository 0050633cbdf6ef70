"""Implicit plane curves: singularities, tangents, intersection multiplicities."""

from __future__ import annotations

import random
from math import gcd
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from .fields import CapExceeded, FieldSpec, common_field, extension
from .geometry import (PLANE_CAP, ProjLine, ProjPoint, centering_matrix, enumerate_plane,
                       join)
from .polys import HomPoly3, substitute_line


class CurveError(ValueError):
    """Operation requested at a point where its hypothesis fails."""


@dataclass(frozen=True)
class SingularityRecord:
    point: ProjPoint
    multiplicity: int
    field_of_definition: int  # extension degree over the curve's field


@dataclass(eq=False)
class PlaneCurve:
    """The curve F = 0 for a nonzero homogeneous F over GF(q).

    ``irreducible`` is an asserted flag carried into reports; see
    :func:`irreducibility_sanity_check` for the heuristic backing it.
    """

    F: HomPoly3
    irreducible: bool = True
    name: str = ""
    notes: list[str] = dc_field(default_factory=list)

    def __post_init__(self):
        if self.F.is_zero():
            raise CurveError("the zero form does not define a curve")
        self._sing_cache: dict[int, list[SingularityRecord]] = {}

    @property
    def field(self) -> FieldSpec:
        return self.F.field

    @property
    def degree(self) -> int:
        return self.F.d

    @cached_property
    def gradient(self) -> tuple[HomPoly3, HomPoly3, HomPoly3]:
        return self.F.gradient()

    def with_form(self, F: HomPoly3) -> "PlaneCurve":
        return PlaneCurve(F, self.irreducible, self.name, list(self.notes))

    def over(self, target: FieldSpec) -> "PlaneCurve":
        if target == self.field:
            return self
        return self.with_form(self.F.embed(target))

    def contains(self, P: ProjPoint) -> bool:
        W = common_field(self.field, P.field)
        return self.F.embed(W).eval_codes(*P.embed(W).c) == 0

    def rational_points(self, spec: FieldSpec | None = None) -> list[ProjPoint]:
        spec = spec or self.field
        F = self.F.embed(spec)
        return [P for P in enumerate_plane(spec) if F.eval_codes(*P.c) == 0]

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"PlaneCurve({label}{self.F} = 0 over {self.field!r})"


def _on_curve(C: PlaneCurve, P: ProjPoint):
    W = common_field(C.field, P.field)
    F = C.F.embed(W)
    Pw = P.embed(W)
    if F.eval_codes(*Pw.c):
        raise CurveError(f"{P!r} is not on the curve")
    return W, F, Pw


def is_smooth_point(C: PlaneCurve, P: ProjPoint) -> bool:
    """True iff some partial derivative of F is nonzero at P."""
    W, F, Pw = _on_curve(C, P)
    return any(g.embed(W).eval_codes(*Pw.c) for g in C.gradient)


def _singular_in(C: PlaneCurve, spec: FieldSpec) -> list[ProjPoint]:
    F = C.F.embed(spec)
    grads = [g.embed(spec) for g in C.gradient]
    out = []
    for P in enumerate_plane(spec):
        c = P.c
        if F.eval_codes(*c):
            continue
        if all(not g.eval_codes(*c) for g in grads):
            out.append(P)
    return out


def singular_points(C: PlaneCurve, m_max: int = 1) -> list[SingularityRecord]:
    """Singular points over GF(q^m) for m = 1..m_max, each listed once at
    its minimal field of definition."""
    if m_max in C._sing_cache:
        return C._sing_cache[m_max]
    out = []
    for m in range(1, m_max + 1):
        W = extension(C.field, m)
        if W.q**2 + W.q + 1 > PLANE_CAP:
            raise CapExceeded(f"singular-point scan over {W!r} exceeds the plane cap")
        for P in _singular_in(C, W):
            deg = min(j for j in range(1, m + 1)
                      if m % j == 0 and P.is_rational_over(extension(C.field, j)))
            if deg == m:
                out.append(SingularityRecord(P, multiplicity(C, P), m))
    C._sing_cache[m_max] = out
    return out


def centered_form(F: HomPoly3, P: ProjPoint) -> tuple[HomPoly3, list]:
    """F composed with the canonical matrix N sending (0:0:1) to P.

    Returns (F o N, N); points (x0:y0:z) of the result correspond to
    N (x0, y0, z) of the original curve.
    """
    W = common_field(F.field, P.field)
    F = F.embed(W)
    N = centering_matrix(P.embed(W))
    return F.linear_substitute(N), N


def multiplicity(C: PlaneCurve, Q: ProjPoint) -> int:
    """Lowest total degree in the affine expansion of F at Q."""
    _on_curve(C, Q)
    G, _ = centered_form(C.F, Q)
    return C.degree - max(k for (_, _, k) in G.terms)


def tangent_line(C: PlaneCurve, P: ProjPoint) -> ProjLine:
    """Line with coefficients (F_X, F_Y, F_Z)(P) at a smooth point."""
    W, _, Pw = _on_curve(C, P)
    grad = [g.embed(W).eval_codes(*Pw.c) for g in C.gradient]
    if not any(grad):
        raise CurveError(f"{P!r} is a singular point; no unique tangent line")
    return ProjLine.from_codes(W, grad)


def intersection_multiplicity(C: PlaneCurve, ell: ProjLine, P: ProjPoint) -> int:
    """I_P(C, ell): root multiplicity of F restricted to ell at the parameter of P."""
    B = substitute_line(C.F, ell)
    if B.is_zero():
        raise CurveError(f"line {ell!r} is contained in the curve")
    W = common_field(B.field, P.field)
    if not ell.embed(W).contains(P.embed(W)):
        return 0
    param = ell.embed(W).parameter_of(P.embed(W))
    return B.embed(W).root_multiplicity(param)


def projection_ramification_smooth(C: PlaneCurve, center: ProjPoint, R: ProjPoint) -> int:
    """Ramification index at a smooth point R of the projection from ``center``."""
    if not is_smooth_point(C, R):
        raise CurveError(f"{R!r} is singular; use branch_ramification on a parametrization")
    W = common_field(C.field, center.field, R.field)
    center, R = center.embed(W), R.embed(W)
    if center == R:
        return intersection_multiplicity(C, tangent_line(C, R), R) - 1
    return intersection_multiplicity(C, join(center, R), R)


def line_profile(C: PlaneCurve, ell: ProjLine) -> list[int]:
    """Multiplicities of C ∩ ell over the algebraic closure."""
    B = substitute_line(C.F, ell)
    if B.is_zero():
        raise CurveError(f"line {ell!r} is contained in the curve")
    return B.multiplicity_profile()


def bezout_line_sum(C: PlaneCurve, ell: ProjLine, m_cap: int = 6) -> tuple[int, int]:
    """Sum of intersection multiplicities of C and ell found over GF(q^m).

    Tries m = 1..m_cap and returns (sum, m) at the first m where the sum
    reaches the degree; raises CapExceeded if no such m is reached.
    """
    B = substitute_line(C.F, ell)
    if B.is_zero():
        raise CurveError(f"line {ell!r} is contained in the curve")
    for m in range(1, m_cap + 1):
        W = extension(B.field, m)
        try:
            roots = B.embed(W).roots()
        except CapExceeded:
            break
        total = sum(mult for _, mult in roots)
        if total == C.degree:
            return total, m
    raise CapExceeded(f"line {ell!r} does not split within m <= {m_cap}")


def euler_defect(C: PlaneCurve) -> HomPoly3:
    """X F_X + Y F_Y + Z F_Z - d F, which must vanish identically."""
    F = C.F
    fld = F.field
    acc = HomPoly3.from_codes(fld, F.d, {})
    for i, g in enumerate(C.gradient):
        acc = acc + HomPoly3.variable(fld, i) * g
    return acc - F * fld.from_int(F.d)


def irreducibility_sanity_check(C: PlaneCurve, m_max: int = 1, lines: int = 30,
                                seed: int = 0) -> bool:
    """Heuristic support for the asserted irreducibility flag.  Not a proof.

    Two components of a plane curve always meet, and their common points
    are singular, so a curve with no singular points is irreducible; the
    singular scan is only as complete as ``m_max``.  Otherwise reject if
    some rational line lies on C, or if every sampled line meets C with
    all multiplicities divisible by a common e > 1 (F an e-th power).
    """
    if not singular_points(C, m_max):
        return True
    F = C.field
    for ell in _rational_lines(F):
        if substitute_line(C.F, ell).is_zero():
            return False
    rng = random.Random(seed)
    common = 0
    for _ in range(lines):
        coeffs = [rng.randrange(F.q) for _ in range(3)]
        if not any(coeffs):
            continue
        B = substitute_line(C.F, ProjLine.from_codes(F, coeffs))
        for mult in B.multiplicity_profile():
            common = gcd(common, mult)
    return common <= 1


def _rational_lines(F: FieldSpec):
    from .geometry import enumerate_lines

    try:
        return enumerate_lines(F, cap=20000)
    except CapExceeded:
        return []
