"""Points and lines of P^2 over GF(p^k).

Both kinds are stored as normalized code triples (first nonzero entry 1),
so equal objects compare and hash equal.  Coordinate changes act by
push-forward: a point goes to ``M P``, a line (row vector) to ``L M^-1``,
and a form to ``F(M^-1 X)``; incidence and multiplicities are preserved.
"""

from __future__ import annotations

from typing import Sequence

from . import linalg
from .fields import (FIELD_CAP, CapExceeded, FieldElement, FieldSpec, common_field,
                     embed_code)
from .polys import HomPoly3, _codes

PLANE_CAP = 2**21


class _Triple:
    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, coords: Sequence):
        c = _codes(field, coords)
        if len(c) != 3:
            raise ValueError("need three homogeneous coordinates")
        if not any(c):
            raise ValueError("(0:0:0) is not a projective point")
        self.field = field
        self.c = linalg.normalize(field, c)

    @classmethod
    def from_codes(cls, field: FieldSpec, codes):
        obj = cls.__new__(cls)
        obj.field = field
        obj.c = linalg.normalize(field, codes)
        return obj

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return tuple(FieldElement(self.field, x) for x in self.c)

    def embed(self, target: FieldSpec):
        if target == self.field:
            return self
        return type(self).from_codes(target, [embed_code(self.field, target, x) for x in self.c])

    def __eq__(self, other):
        return type(other) is type(self) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((type(self).__name__, self.field.q, self.c))

    def is_rational_over(self, base: FieldSpec) -> bool:
        """True iff every coordinate lies in the subfield of order |base|."""
        F = self.field
        if F.k % base.k:
            return False
        return all(F.pow(x, base.q) == x for x in self.c)


class ProjPoint(_Triple):
    """A point (x:y:z) of P^2."""

    __slots__ = ()

    def __repr__(self):
        return "(" + ":".join(self.field.format_code(x) for x in self.c) + ")"


class ProjLine(_Triple):
    """The line aX + bY + cZ = 0, stored as normalized (a, b, c)."""

    __slots__ = ()

    def __repr__(self):
        return "[" + ":".join(self.field.format_code(x) for x in self.c) + "]"

    def contains(self, P: ProjPoint) -> bool:
        W = common_field(self.field, P.field)
        return linalg.dot(W, self.embed(W).c, P.embed(W).c) == 0

    def parametrization_codes(self):
        """Two points A, B spanning the line; (s:t) maps to s A + t B.

        With i the index of the first nonzero coefficient and j1 < j2 the
        others, A = e_j1 - a_j1 e_i and B = e_j2 - a_j2 e_i, so the
        parameter of a point on the line is (P_j1 : P_j2).
        """
        F = self.field
        i = next(n for n, x in enumerate(self.c) if x)
        j1, j2 = [n for n in range(3) if n != i]
        A = [0, 0, 0]
        B = [0, 0, 0]
        A[j1] = 1
        A[i] = F.neg(self.c[j1])
        B[j2] = 1
        B[i] = F.neg(self.c[j2])
        return A, B

    def parametrization(self) -> tuple[ProjPoint, ProjPoint]:
        A, B = self.parametrization_codes()
        return ProjPoint.from_codes(self.field, A), ProjPoint.from_codes(self.field, B)

    def parameter_of(self, P: ProjPoint):
        """(s, t) codes of P in the canonical parametrization, over the common field."""
        from .polys import P1Point

        W = common_field(self.field, P.field)
        line = self.embed(W)
        Pw = P.embed(W)
        if linalg.dot(W, line.c, Pw.c):
            raise ValueError(f"{P!r} is not on {self!r}")
        i = next(n for n, x in enumerate(line.c) if x)
        j1, j2 = [n for n in range(3) if n != i]
        return P1Point.from_codes(W, Pw.c[j1], Pw.c[j2])

    def point_at(self, s: int, t: int) -> ProjPoint:
        A, B = self.parametrization_codes()
        F = self.field
        return ProjPoint.from_codes(F, [F.add(F.mul(s, a), F.mul(t, b)) for a, b in zip(A, B)])


def point(field: FieldSpec, x, y, z) -> ProjPoint:
    return ProjPoint(field, [x, y, z])


def line(field: FieldSpec, a, b, c) -> ProjLine:
    return ProjLine(field, [a, b, c])


def enumerate_plane(spec: FieldSpec, cap: int = PLANE_CAP) -> list[ProjPoint]:
    """All q^2 + q + 1 points: (1:y:z), then (0:1:z), then (0:0:1)."""
    q = spec.q
    if q * q + q + 1 > cap or q > FIELD_CAP:
        raise CapExceeded(f"P^2 over {spec!r} has more than {cap} points")
    pts = []
    for y in range(q):
        for z in range(q):
            pts.append(ProjPoint.from_codes(spec, (1, y, z)))
    for z in range(q):
        pts.append(ProjPoint.from_codes(spec, (0, 1, z)))
    pts.append(ProjPoint.from_codes(spec, (0, 0, 1)))
    return pts


def enumerate_lines(spec: FieldSpec, cap: int = PLANE_CAP) -> list[ProjLine]:
    return [ProjLine.from_codes(spec, P.c) for P in enumerate_plane(spec, cap)]


def join(P: ProjPoint, R: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    W = common_field(P.field, R.field)
    P, R = P.embed(W), R.embed(W)
    if P == R:
        raise ValueError("join of a point with itself")
    return ProjLine.from_codes(W, linalg.cross(W, P.c, R.c))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines."""
    W = common_field(l1.field, l2.field)
    l1, l2 = l1.embed(W), l2.embed(W)
    if l1 == l2:
        raise ValueError("meet of a line with itself")
    return ProjPoint.from_codes(W, linalg.cross(W, l1.c, l2.c))


def incident(P: ProjPoint, L: ProjLine) -> bool:
    return L.contains(P)


def pencil_lines(P: ProjPoint, spec: FieldSpec | None = None) -> list[ProjLine]:
    """The q + 1 lines through P defined over ``spec`` (default: P's field).

    P must be rational over ``spec``.  Lines are listed by the direction
    point they pass through, in the order of :func:`pencil_directions`.
    """
    spec = spec or P.field
    W = common_field(P.field, spec)
    if W != spec:
        raise ValueError(f"{P!r} is not defined over {spec!r}")
    P = P.embed(spec)
    N = centering_matrix(P)
    out = []
    for d in pencil_directions(spec):
        R = linalg.matvec(spec, N, [d[0], d[1], 0])
        out.append(ProjLine.from_codes(spec, linalg.cross(spec, P.c, R)))
    return out


def pencil_directions(spec: FieldSpec) -> list[tuple[int, int]]:
    """Directions (x0:y0) in P^1: (1:y) for y in code order, then (0:1)."""
    if spec.q > FIELD_CAP:
        raise CapExceeded(f"pencil over {spec!r} exceeds cap")
    return [(1, y) for y in range(spec.q)] + [(0, 1)]


def centering_matrix(P: ProjPoint):
    """Matrix N with N e3 = P; the other columns are the two standard
    vectors other than e_i, i the first nonzero index of P."""
    i = next(n for n, x in enumerate(P.c) if x)
    others = [n for n in range(3) if n != i]
    cols = []
    for n in others:
        v = [0, 0, 0]
        v[n] = 1
        cols.append(v)
    cols.append(list(P.c))
    return [[cols[j][r] for j in range(3)] for r in range(3)]


def _as_matrix(F: FieldSpec, M):
    return [_codes(F, row) for row in M]


def change_coordinates(M, obj, field: FieldSpec | None = None):
    """Apply the projectivity M to a point, line, or form (push-forward).

    ``M`` is a 3x3 matrix of FieldElements/ints (or codes if ``field`` is
    given and the entries are ints).
    """
    F = field or obj.field
    W = common_field(F, obj.field)
    Mc = _as_matrix(F, M) if field is None else [list(r) for r in M]
    if W != F:
        Mc = [[embed_code(F, W, x) for x in r] for r in Mc]
    if not linalg.det3(W, Mc):
        raise ValueError("singular coordinate change")
    if isinstance(obj, ProjPoint):
        return ProjPoint.from_codes(W, linalg.matvec(W, Mc, obj.embed(W).c))
    Minv = linalg.inverse3(W, Mc)
    if isinstance(obj, ProjLine):
        L = obj.embed(W).c
        row = [linalg.dot(W, L, [Minv[r][c] for r in range(3)]) for c in range(3)]
        return ProjLine.from_codes(W, row)
    if isinstance(obj, HomPoly3):
        return obj.embed(W).linear_substitute(Minv)
    if hasattr(obj, "F") and hasattr(obj, "with_form"):
        return obj.with_form(obj.F.embed(W).linear_substitute(Minv))
    raise TypeError(f"cannot change coordinates of {type(obj).__name__}")
