"""Polynomials over GF(p^k): univariate, binary forms, ternary forms.

All three classes store element codes (see :mod:`galois_locus.fields`) and
are immutable.  Constructors take coefficients as FieldElements or plain
ints (read mod p); ``from_codes`` skips conversion.

Conventions
-----------
* ``UniPoly``: dense, constant term first.
* ``BinForm``: ``coeffs[i]`` is the coefficient of ``s^i t^(d-i)``, so
  ``f(s, 1)`` has the same coefficient list.
* ``HomPoly3``: sparse dict ``{(i, j, k): code}`` for ``X^i Y^j Z^k``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from . import linalg
from .fields import (FIELD_CAP, CapExceeded, FieldElement, FieldError, FieldSpec,
                     embed_code, extension, restrict_code)

ROOT_ENUM_LIMIT = 256


def _codes(field: FieldSpec, coeffs) -> list[int]:
    out = []
    for c in coeffs:
        if isinstance(c, FieldElement):
            if c.field != field:
                raise FieldError(f"coefficient from {c.field!r} in polynomial over {field!r}")
            out.append(c.code)
        else:
            out.append(int(c) % field.p)
    return out


# --- dense univariate kernels on code lists -------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and not a[-1]:
        a.pop()
    return a


def _add(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        if y:
            out[i] = F.add(out[i], y)
    return _trim(out)


def _sub(F, a, b):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        if y:
            out[i] = F.sub(out[i], y)
    return _trim(out)


def _scale(F, a, c):
    if not c:
        return []
    return [F.mul(c, x) if x else 0 for x in a]


def _mul(F, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = F.add, F.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return _trim(out)


def _divmod(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    inv = F.inv(b[-1])
    quot = [0] * (len(a) - db)
    sub, mul = F.sub, F.mul
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            c = mul(c, inv)
            quot[i - db] = c
            for j in range(db + 1):
                if b[j]:
                    a[i - db + j] = sub(a[i - db + j], mul(c, b[j]))
    return _trim(quot), _trim(a[:db])


def _monic(F, a):
    if not a:
        return []
    inv = F.inv(a[-1])
    return [F.mul(inv, x) for x in a]


def _gcd(F, a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(F, a, b)[1]
    return _monic(F, a)


def _deriv(F, a):
    return _trim([F.mul(F.from_int(i), a[i]) for i in range(1, len(a))])


def _eval(F, a, x):
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def _powmod(F, base, e, mod):
    result = [1]
    base = _divmod(F, base, mod)[1]
    while e:
        if e & 1:
            result = _divmod(F, _mul(F, result, base), mod)[1]
        e >>= 1
        if e:
            base = _divmod(F, _mul(F, base, base), mod)[1]
    return result


def _pth_root(F, a):
    p = F.p
    return _trim([F.pth_root_code(a[i]) for i in range(0, len(a), p)])


def _squarefree(F, f):
    """Squarefree decomposition of a monic polynomial: list of (factor, multiplicity)."""
    out = []
    f = _monic(F, f)
    if len(f) <= 1:
        return out
    df = _deriv(F, f)
    if not df:
        for g, m in _squarefree(F, _pth_root(F, f)):
            out.append((g, m * F.p))
        return out
    c = _gcd(F, f, df)
    w = _divmod(F, f, c)[0]
    i = 1
    while len(w) > 1:
        y = _gcd(F, w, c)
        z = _divmod(F, w, y)[0]
        if len(z) > 1:
            out.append((_monic(F, z), i))
        i += 1
        w = y
        c = _divmod(F, c, y)[0]
    if len(c) > 1:
        for g, m in _squarefree(F, _pth_root(F, c)):
            out.append((g, m * F.p))
    return out


def _root_mult(F, a, x):
    m = 0
    a = list(a)
    if not a:
        raise ValueError("root multiplicity of the zero polynomial")
    while True:
        q, r = _divmod(F, a, [F.neg(x), 1])
        if r:
            return m
        m += 1
        a = q


def _frobenius_x_power(F, f, Q):
    return _powmod(F, [0, 1], Q, f)


def _distinct_roots(F, f):
    """Distinct roots in F of f (codes), via gcd with x^q - x and splitting."""
    f = _monic(F, _trim(list(f)))
    if len(f) <= 1:
        return []
    if F.q <= ROOT_ENUM_LIMIT:
        return [x for x in range(F.q) if not _eval(F, f, x)]
    xq = _frobenius_x_power(F, f, F.q)
    g = _gcd(F, f, _sub(F, xq, [0, 1]))
    roots: list[int] = []
    _split_linear(F, g, roots)
    return sorted(roots)


def _split_linear(F, g, roots):
    deg = len(g) - 1
    if deg <= 0:
        return
    if deg == 1:
        roots.append(F.neg(F.mul(g[0], F.inv(g[1]))))
        return
    if F.p == 2:
        n = F.k
        for a in range(1, F.q):
            # trace of a*x, reduced mod g
            t = _divmod(F, [0, a], g)[1]
            acc = list(t)
            for _ in range(n - 1):
                t = _divmod(F, _mul(F, t, t), g)[1]
                acc = _add(F, acc, t)
            h = _gcd(F, g, acc)
            if 1 < len(h) < len(g):
                _split_linear(F, h, roots)
                _split_linear(F, _divmod(F, g, h)[0], roots)
                return
    else:
        e = (F.q - 1) // 2
        for a in range(F.q):
            t = _powmod(F, [a, 1], e, g)
            h = _gcd(F, g, _sub(F, t, [1]))
            if 1 < len(h) < len(g):
                _split_linear(F, h, roots)
                _split_linear(F, _divmod(F, g, h)[0], roots)
                return
    raise RuntimeError("equal-degree splitting failed")  # unreachable for squarefree split g


# --- UniPoly ---------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over GF(p^k)."""

    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        self.c = tuple(_trim(_codes(field, coeffs)))

    @classmethod
    def from_codes(cls, field: FieldSpec, codes) -> "UniPoly":
        obj = cls.__new__(cls)
        obj.field = field
        obj.c = tuple(_trim(list(codes)))
        return obj

    @classmethod
    def x(cls, field: FieldSpec) -> "UniPoly":
        return cls.from_codes(field, [0, 1])

    @classmethod
    def linear_root(cls, alpha: FieldElement) -> "UniPoly":
        """The polynomial x - alpha."""
        return cls.from_codes(alpha.field, [alpha.field.neg(alpha.code), 1])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, x) for x in self.c]

    def is_zero(self) -> bool:
        return not self.c

    def _check(self, other):
        if isinstance(other, (int, FieldElement)):
            return UniPoly(self.field, [other])
        if not isinstance(other, UniPoly):
            return None
        if other.field != self.field:
            raise FieldError(f"polynomials over {self.field!r} and {other.field!r}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return UniPoly.from_codes(self.field, _add(self.field, self.c, o.c))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return UniPoly.from_codes(self.field, _sub(self.field, self.c, o.c))

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return UniPoly.from_codes(self.field, [self.field.neg(x) for x in self.c])

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return UniPoly.from_codes(self.field, _mul(self.field, self.c, o.c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly.from_codes(self.field, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._check(other)
        q, r = _divmod(self.field, self.c, o.c)
        return UniPoly.from_codes(self.field, q), UniPoly.from_codes(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.field.q, self.c))

    def __call__(self, x):
        if isinstance(x, FieldElement):
            F = x.field
            c = [embed_code(self.field, F, v) for v in self.c] if F != self.field else self.c
            return FieldElement(F, _eval(F, c, x.code))
        return FieldElement(self.field, _eval(self.field, self.c, int(x) % self.field.p))

    def __repr__(self):
        return f"UniPoly({format_uni(self, 'x')} over {self.field!r})"

    def monic(self) -> "UniPoly":
        return UniPoly.from_codes(self.field, _monic(self.field, self.c))

    def derivative(self) -> "UniPoly":
        return UniPoly.from_codes(self.field, _deriv(self.field, self.c))

    def embed(self, target: FieldSpec) -> "UniPoly":
        if target == self.field:
            return self
        return UniPoly.from_codes(target, [embed_code(self.field, target, x) for x in self.c])

    def squarefree_decomposition(self) -> list[tuple["UniPoly", int]]:
        if not self.c:
            raise ValueError("squarefree decomposition of zero")
        return [(UniPoly.from_codes(self.field, g), m)
                for g, m in _squarefree(self.field, self.c)]

    def multiplicity_profile(self) -> list[int]:
        """Multiplicities of the distinct roots over the algebraic closure, sorted."""
        if not self.c:
            raise ValueError("root profile of the zero polynomial")
        prof = []
        for g, m in _squarefree(self.field, self.c):
            prof.extend([m] * (len(g) - 1))
        return sorted(prof, reverse=True)

    def roots(self) -> list[tuple[FieldElement, int]]:
        """Roots in the coefficient field with multiplicities, in code order."""
        if not self.c:
            raise ValueError("roots of the zero polynomial")
        F = self.field
        return [(FieldElement(F, r), _root_mult(F, self.c, r))
                for r in _distinct_roots(F, self.c)]


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    if a.field != b.field:
        raise FieldError("gcd of polynomials over different fields")
    return UniPoly.from_codes(a.field, _gcd(a.field, a.c, b.c))


def root_multiplicity(f: UniPoly, alpha: FieldElement) -> int:
    """Largest m with (x - alpha)^m dividing f."""
    if f.is_zero():
        raise ValueError("root multiplicity in the zero polynomial")
    if alpha.field != f.field:
        f = f.embed(alpha.field)
    return _root_mult(alpha.field, f.c, alpha.code)


def roots_over_extension(f: UniPoly, m: int = 1) -> list[tuple[FieldElement, int]]:
    """Roots of f in GF(q^m), q = |field of f|, with multiplicities."""
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    target = extension(f.field, m)
    if target.q > FIELD_CAP:
        raise CapExceeded(f"GF({target.q}) exceeds the enumeration cap {FIELD_CAP}")
    return f.embed(target).roots()


def roots_by_enumeration(f: UniPoly) -> list[tuple[FieldElement, int]]:
    """Oracle for ``UniPoly.roots``: scan every field element."""
    F = f.field
    if F.q > FIELD_CAP:
        raise CapExceeded("field too large to scan")
    out = []
    for x in range(F.q):
        if not _eval(F, f.c, x):
            out.append((FieldElement(F, x), _root_mult(F, f.c, x)))
    return out


# --- P^1 points --------------------------------------------------------------

class P1Point:
    """A point (s:t) of P^1, normalized so the first nonzero coordinate is 1."""

    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, s, t):
        s, t = _codes(field, [s, t])
        self.field = field
        self.c = linalg.normalize(field, (s, t))

    @classmethod
    def from_codes(cls, field: FieldSpec, s: int, t: int) -> "P1Point":
        obj = cls.__new__(cls)
        obj.field = field
        obj.c = linalg.normalize(field, (s, t))
        return obj

    @property
    def coords(self) -> tuple[FieldElement, FieldElement]:
        return tuple(FieldElement(self.field, x) for x in self.c)

    def is_infinite_t(self) -> bool:
        """True for (0:1), the point outside the t-chart."""
        return self.c[0] == 0

    def embed(self, target: FieldSpec) -> "P1Point":
        if target == self.field:
            return self
        return P1Point.from_codes(target, *(embed_code(self.field, target, x) for x in self.c))

    def __eq__(self, other):
        return isinstance(other, P1Point) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash(("P1", self.field.q, self.c))

    def __repr__(self):
        s, t = (self.field.format_code(x) for x in self.c)
        return f"({s}:{t})"

    def degree_of_definition(self, base: FieldSpec) -> int:
        """Smallest m with the point defined over GF(|base|^m)."""
        F = self.field
        for m in range(1, F.k // base.k + 1):
            if (F.k // base.k) % m:
                continue
            e = base.q**m
            if all(F.pow(x, e) == x for x in self.c):
                return m
        return F.k // base.k


def enumerate_p1(field: FieldSpec) -> list[P1Point]:
    """All points of P^1: (0:1) first, then (1:t) with t in code order."""
    if field.q > FIELD_CAP:
        raise CapExceeded(f"P^1 over {field!r} exceeds cap")
    pts = [P1Point.from_codes(field, 0, 1)]
    pts.extend(P1Point.from_codes(field, 1, t) for t in range(field.q))
    return pts


# --- binary forms --------------------------------------------------------------

class BinForm:
    """Homogeneous polynomial of degree d in (s, t); ``c[i]`` multiplies s^i t^(d-i)."""

    __slots__ = ("field", "d", "c")

    def __init__(self, field: FieldSpec, d: int, coeffs: Iterable = ()):
        c = _codes(field, coeffs)
        if len(c) > d + 1:
            raise ValueError(f"{len(c)} coefficients for a degree-{d} form")
        self.field = field
        self.d = d
        self.c = tuple(c + [0] * (d + 1 - len(c)))

    @classmethod
    def from_codes(cls, field: FieldSpec, d: int, codes) -> "BinForm":
        obj = cls.__new__(cls)
        obj.field = field
        obj.d = d
        c = list(codes)
        obj.c = tuple(c + [0] * (d + 1 - len(c)))
        return obj

    @classmethod
    def s(cls, field: FieldSpec) -> "BinForm":
        return cls.from_codes(field, 1, [0, 1])

    @classmethod
    def t(cls, field: FieldSpec) -> "BinForm":
        return cls.from_codes(field, 1, [1, 0])

    @classmethod
    def linear(cls, field: FieldSpec, a: int, b: int) -> "BinForm":
        """a*s + b*t from codes."""
        return cls.from_codes(field, 1, [b, a])

    @classmethod
    def vanishing_at(cls, point: P1Point) -> "BinForm":
        """Linear form vanishing exactly at ``point``: t0*s - s0*t."""
        F = point.field
        s0, t0 = point.c
        return cls.from_codes(F, 1, [F.neg(s0), t0])

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, x) for x in self.c]

    def is_zero(self) -> bool:
        return not any(self.c)

    def _check(self, other):
        if isinstance(other, (int, FieldElement)):
            return BinForm(self.field, 0, [other])
        if not isinstance(other, BinForm):
            return None
        if other.field != self.field:
            raise FieldError(f"forms over {self.field!r} and {other.field!r}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.d != self.d:
            if o.is_zero():
                return self
            if self.is_zero():
                return o
            raise ValueError(f"adding forms of degrees {self.d} and {o.d}")
        F = self.field
        return BinForm.from_codes(F, self.d, [F.add(a, b) for a, b in zip(self.c, o.c)])

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return BinForm.from_codes(F, self.d, [F.neg(a) for a in self.c])

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        F = self.field
        prod = _mul(F, _trim(list(self.c)), _trim(list(o.c)))
        return BinForm.from_codes(F, self.d + o.d, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = BinForm.from_codes(self.field, 0, [1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, BinForm):
            return self.field == other.field and self.d == other.d and self.c == other.c
        return NotImplemented

    def __hash__(self):
        return hash(("BinForm", self.field.q, self.d, self.c))

    def __repr__(self):
        return f"BinForm({format_binform(self)} over {self.field!r})"

    def __str__(self):
        return format_binform(self)

    def eval_codes(self, s: int, t: int) -> int:
        F = self.field
        acc = 0
        # Horner in s/t: sum c_i s^i t^(d-i)
        tp = [1]
        for _ in range(self.d):
            tp.append(F.mul(tp[-1], t))
        sp = 1
        for i, ci in enumerate(self.c):
            if ci:
                acc = F.add(acc, F.mul(ci, F.mul(sp, tp[self.d - i])))
            sp = F.mul(sp, s)
        return acc

    def __call__(self, s, t) -> FieldElement:
        F = self.field
        if isinstance(s, FieldElement) and s.field != F:
            return self.embed(s.field)(s, t)
        s, t = _codes(F, [s, t])
        return FieldElement(F, self.eval_codes(s, t))

    def at(self, point: P1Point) -> int:
        """Value (code) at a representative of ``point``; embeds if needed."""
        f = self.embed(point.field) if point.field != self.field else self
        return f.eval_codes(*point.c)

    def embed(self, target: FieldSpec) -> "BinForm":
        if target == self.field:
            return self
        return BinForm.from_codes(target, self.d,
                                  [embed_code(self.field, target, x) for x in self.c])

    def dehomogenize_s(self) -> UniPoly:
        """f(s, 1)."""
        return UniPoly.from_codes(self.field, self.c)

    def dehomogenize_t(self) -> UniPoly:
        """f(1, t)."""
        return UniPoly.from_codes(self.field, self.c[::-1])

    @classmethod
    def homogenize_s(cls, f: UniPoly, d: int) -> "BinForm":
        if f.degree > d:
            raise ValueError("degree too small to homogenize")
        return cls.from_codes(f.field, d, f.c)

    def derivative(self, var: str) -> "BinForm":
        F = self.field
        if self.d == 0:
            return BinForm.from_codes(F, 0, [0])
        if var == "s":
            return BinForm.from_codes(F, self.d - 1,
                                      [F.mul(F.from_int(i), self.c[i]) for i in range(1, self.d + 1)])
        if var == "t":
            d = self.d
            return BinForm.from_codes(F, d - 1,
                                      [F.mul(F.from_int(d - i), self.c[i]) for i in range(d)])
        raise ValueError(f"unknown variable {var!r}")

    def order_at_infinity(self) -> int:
        """Multiplicity of the root (1:0), i.e. the power of t dividing f."""
        if self.is_zero():
            raise ValueError("zero form")
        top = max(i for i, x in enumerate(self.c) if x)
        return self.d - top

    def order_at_zero(self) -> int:
        """Multiplicity of the root (0:1), i.e. the power of s dividing f."""
        if self.is_zero():
            raise ValueError("zero form")
        return min(i for i, x in enumerate(self.c) if x)

    def root_multiplicity(self, point: P1Point) -> int:
        """Vanishing order at ``point``, computed in the chart containing it."""
        f = self.embed(point.field) if point.field != self.field else self
        if f.is_zero():
            raise ValueError("zero form")
        s0, t0 = point.c
        if s0 == 0:
            return f.order_at_zero()
        return _root_mult(f.field, list(f.c[::-1]), t0)

    def multiplicity_profile(self) -> list[int]:
        """Multiplicities of distinct roots in P^1 over the algebraic closure."""
        if self.is_zero():
            raise ValueError("zero form has no finite root profile")
        prof = UniPoly.from_codes(self.field, self.c).multiplicity_profile() \
            if any(self.c[1:]) else []
        a = self.order_at_infinity()
        if a:
            prof.append(a)
        return sorted(prof, reverse=True)

    def roots(self) -> list[tuple[P1Point, int]]:
        """Roots in P^1 over the coefficient field, with multiplicities."""
        if self.is_zero():
            raise ValueError("zero form")
        F = self.field
        out = []
        if not self.c[0]:
            out.append((P1Point.from_codes(F, 0, 1), self.order_at_zero()))
        rev = _trim(list(self.c[::-1]))
        for r in _distinct_roots(F, rev):
            out.append((P1Point.from_codes(F, 1, r), _root_mult(F, rev, r)))
        return out

    def normalized(self) -> "BinForm":
        """Scale so the coefficient of the highest power of s is 1."""
        F = self.field
        for x in reversed(self.c):
            if x:
                inv = F.inv(x)
                return BinForm.from_codes(F, self.d, [F.mul(inv, y) for y in self.c])
        return self

    def scale(self, code: int) -> "BinForm":
        """Multiply by the field element with the given code."""
        F = self.field
        return BinForm.from_codes(F, self.d, [F.mul(code, x) for x in self.c])

    def substitute(self, a: int, b: int, c: int, d: int) -> "BinForm":
        """f(a*s + b*t, c*s + d*t), arguments as codes."""
        F = self.field
        S = BinForm.from_codes(F, 1, [b, a])
        T = BinForm.from_codes(F, 1, [d, c])
        spow = [BinForm.from_codes(F, 0, [1])]
        tpow = [BinForm.from_codes(F, 0, [1])]
        for _ in range(self.d):
            spow.append(spow[-1] * S)
            tpow.append(tpow[-1] * T)
        acc = [0] * (self.d + 1)
        for i, ci in enumerate(self.c):
            if ci:
                term = (spow[i] * tpow[self.d - i]).c
                for j, x in enumerate(term):
                    if x:
                        acc[j] = F.add(acc[j], F.mul(ci, x))
        return BinForm.from_codes(F, self.d, acc)


def binform_gcd(a: BinForm, b: BinForm) -> BinForm:
    """gcd of binary forms, normalized by ``BinForm.normalized``."""
    if a.field != b.field:
        raise FieldError("gcd of forms over different fields")
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    F = a.field
    g = _gcd(F, _trim(list(a.c)), _trim(list(b.c)))
    e = min(a.order_at_infinity(), b.order_at_infinity())
    return BinForm.from_codes(F, len(g) - 1 + e, g)


def binform_divide(a: BinForm, b: BinForm) -> BinForm:
    """Exact quotient a / b; ValueError if b does not divide a."""
    F = a.field
    if b.is_zero():
        raise ZeroDivisionError("division by the zero form")
    if a.d < b.d:
        raise ValueError("inexact division of binary forms")
    if a.is_zero():
        return BinForm.from_codes(F, a.d - b.d, [])
    q, r = _divmod(F, _trim(list(a.c)), _trim(list(b.c)))
    if r or len(q) - 1 > a.d - b.d:
        raise ValueError("inexact division of binary forms")
    return BinForm.from_codes(F, a.d - b.d, q)


# --- ternary forms ---------------------------------------------------------------

VARS3 = ("X", "Y", "Z")


class HomPoly3:
    """Homogeneous form of degree d in X, Y, Z."""

    __slots__ = ("field", "d", "terms")

    def __init__(self, field: FieldSpec, d: int, terms: dict | None = None):
        self.field = field
        self.d = d
        clean = {}
        for exps, c in (terms or {}).items():
            code = _codes(field, [c])[0]
            if code:
                if sum(exps) != d or len(exps) != 3:
                    raise ValueError(f"monomial {exps} is not of degree {d}")
                clean[tuple(exps)] = code
        self.terms = clean

    @classmethod
    def from_codes(cls, field: FieldSpec, d: int, terms: dict) -> "HomPoly3":
        obj = cls.__new__(cls)
        obj.field = field
        obj.d = d
        obj.terms = {e: c for e, c in terms.items() if c}
        return obj

    @classmethod
    def variable(cls, field: FieldSpec, i: int) -> "HomPoly3":
        e = [0, 0, 0]
        e[i] = 1
        return cls.from_codes(field, 1, {tuple(e): 1})

    @classmethod
    def linear(cls, field: FieldSpec, coeffs) -> "HomPoly3":
        a = _codes(field, coeffs)
        return cls.from_codes(field, 1, {(1, 0, 0): a[0], (0, 1, 0): a[1], (0, 0, 1): a[2]})

    @classmethod
    def constant(cls, field: FieldSpec, c=1) -> "HomPoly3":
        return cls.from_codes(field, 0, {(0, 0, 0): _codes(field, [c])[0]})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other):
        if isinstance(other, (int, FieldElement)):
            return HomPoly3.constant(self.field, other)
        if not isinstance(other, HomPoly3):
            return None
        if other.field != self.field:
            raise FieldError(f"forms over {self.field!r} and {other.field!r}")
        return other

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.d != self.d:
            if o.is_zero():
                return self
            if self.is_zero():
                return o
            raise ValueError(f"adding forms of degrees {self.d} and {o.d}")
        F = self.field
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = F.add(out.get(e, 0), c)
        return HomPoly3.from_codes(F, self.d, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return HomPoly3.from_codes(F, self.d, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        F = self.field
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = F.add(out.get(e, 0), F.mul(c1, c2))
        return HomPoly3.from_codes(F, self.d + o.d, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = HomPoly3.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, HomPoly3):
            return self.field == other.field and self.d == other.d and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(("HomPoly3", self.field.q, self.d, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"HomPoly3({format_hompoly(self)} over {self.field!r})"

    def __str__(self):
        return format_hompoly(self)

    def coefficient(self, exps) -> FieldElement:
        return FieldElement(self.field, self.terms.get(tuple(exps), 0))

    def eval_codes(self, x: int, y: int, z: int) -> int:
        F = self.field
        px, py, pz = [1], [1], [1]
        for _ in range(self.d):
            px.append(F.mul(px[-1], x))
            py.append(F.mul(py[-1], y))
            pz.append(F.mul(pz[-1], z))
        acc = 0
        for (i, j, k), c in self.terms.items():
            acc = F.add(acc, F.mul(c, F.mul(px[i], F.mul(py[j], pz[k]))))
        return acc

    def __call__(self, x, y, z) -> FieldElement:
        F = self.field
        if isinstance(x, FieldElement) and x.field != F:
            return self.embed(x.field)(x, y, z)
        return FieldElement(F, self.eval_codes(*_codes(F, [x, y, z])))

    def embed(self, target: FieldSpec) -> "HomPoly3":
        if target == self.field:
            return self
        return HomPoly3.from_codes(target, self.d, {
            e: embed_code(self.field, target, c) for e, c in self.terms.items()})

    def restrict_field(self, target: FieldSpec) -> "HomPoly3":
        """Inverse of embed; FieldError if some coefficient is outside ``target``."""
        if target == self.field:
            return self
        return HomPoly3.from_codes(target, self.d, {
            e: restrict_code(self.field, target, c) for e, c in self.terms.items()})

    def partial(self, var) -> "HomPoly3":
        idx = VARS3.index(var) if isinstance(var, str) else int(var)
        F = self.field
        out: dict = {}
        for e, c in self.terms.items():
            if e[idx]:
                ne = list(e)
                ne[idx] -= 1
                v = F.mul(F.from_int(e[idx]), c)
                if v:
                    out[tuple(ne)] = F.add(out.get(tuple(ne), 0), v)
        return HomPoly3.from_codes(F, max(self.d - 1, 0), out)

    def gradient(self) -> tuple["HomPoly3", "HomPoly3", "HomPoly3"]:
        return tuple(self.partial(i) for i in range(3))

    def compose(self, forms: Sequence):
        """F(A, B, C) for three forms A, B, C of a common degree (BinForm or HomPoly3)."""
        A, B, C = forms
        kind = type(A)
        F = self.field
        one = kind.from_codes(F, 0, [1]) if kind is BinForm else HomPoly3.constant(F, 1)
        pows = []
        for form in (A, B, C):
            lst = [one]
            for _ in range(self.d):
                lst.append(lst[-1] * form)
            pows.append(lst)
        acc = None
        for (i, j, k), c in sorted(self.terms.items()):
            term = pows[0][i] * pows[1][j] * pows[2][k] * FieldElement(F, c)
            acc = term if acc is None else acc + term
        if acc is None:
            deg = self.d * (A.d if hasattr(A, "d") else 1)
            return kind.from_codes(F, deg, [] if kind is BinForm else {})
        return acc

    def linear_substitute(self, M) -> "HomPoly3":
        """F(M (X, Y, Z)^T) for a 3x3 code matrix M."""
        F = self.field
        rows = [HomPoly3.from_codes(F, 1, {(1, 0, 0): r[0], (0, 1, 0): r[1], (0, 0, 1): r[2]})
                for r in M]
        out = self.compose(rows)
        return HomPoly3.from_codes(F, self.d, out.terms)


def derivative(f, variable=None):
    """Formal derivative of a UniPoly, or partial derivative of a HomPoly3/BinForm."""
    if isinstance(f, UniPoly):
        return f.derivative()
    if isinstance(f, HomPoly3):
        return f.partial(variable)
    if isinstance(f, BinForm):
        return f.derivative(variable)
    raise TypeError(f"cannot differentiate {type(f).__name__}")


def substitute_line(F: HomPoly3, line) -> BinForm:
    """Restriction of F to ``line`` along its canonical parametrization.

    ``line`` is a ProjLine; the parametrization is ``line.parametrization()``.
    """
    from .fields import common_field

    W = common_field(F.field, line.field)
    F = F.embed(W)
    A, B = line.embed(W).parametrization_codes()
    forms = [BinForm.from_codes(W, 1, [B[i], A[i]]) for i in range(3)]
    out = F.compose(forms)
    return BinForm.from_codes(W, F.d, out.c)


# --- implicitization -------------------------------------------------------------

def monomials3(d: int) -> list[tuple[int, int, int]]:
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def implicitize(phi, d: int | None = None) -> HomPoly3:
    """Degree-d form vanishing on the image of a parametrization P^1 -> P^2.

    The form spans the kernel of the monomial-evaluation matrix at
    distinct image points over the smallest GF(q^m) with q^m > 2 d^2.
    """
    comps = list(getattr(phi, "components", phi))
    if len(comps) != 3:
        raise ValueError("implicitization needs three components")
    base = comps[0].field
    if d is None:
        d = comps[0].d
    mons = monomials3(d)
    need = len(mons) + d
    m = 1
    while base.q**m <= 2 * d * d:
        m += 1
    while True:
        W = extension(base, m)
        if W.q > FIELD_CAP:
            raise CapExceeded("no sample field within the cap for implicitization")
        ec = [c.embed(W) for c in comps]
        seen = set()
        rows = []
        for pt in enumerate_p1(W):
            img = [f.eval_codes(*pt.c) for f in ec]
            if not any(img):
                raise ValueError("parametrization has a base point")
            key = linalg.normalize(W, img)
            if key in seen:
                continue
            seen.add(key)
            x, y, z = key
            row = []
            for (i, j, k) in mons:
                row.append(W.mul(W.pow(x, i), W.mul(W.pow(y, j), W.pow(z, k))))
            rows.append(row)
            if len(rows) >= need:
                break
        if len(rows) >= need:
            break
        m += 1
    ker = linalg.kernel(W, rows, len(mons))
    if len(ker) != 1:
        raise ValueError(f"implicitization kernel has dimension {len(ker)}, expected 1 "
                         "(parametrization not birational of this degree?)")
    vec = linalg.normalize(W, ker[0])
    terms = {mon: restrict_code(W, base, c) for mon, c in zip(mons, vec) if c}
    Fpoly = HomPoly3.from_codes(base, d, terms)
    if not Fpoly.compose(comps).is_zero():
        raise ValueError("implicit form does not vanish on the parametrization")
    return Fpoly


def implicitize_by_coefficients(phi, d: int | None = None) -> list[HomPoly3]:
    """Oracle for ``implicitize``: kernel of the coefficient map F -> F(f, g, h).

    Works over the base field and returns a basis of all degree-d forms
    vanishing identically on the parametrization.
    """
    comps = list(getattr(phi, "components", phi))
    base = comps[0].field
    if d is None:
        d = comps[0].d
    mons = monomials3(d)
    cols = []
    for mon in mons:
        form = HomPoly3.from_codes(base, d, {mon: 1}).compose(comps)
        cols.append(list(form.c))
    nrows = len(cols[0])
    rows = [[cols[j][i] for j in range(len(mons))] for i in range(nrows)]
    return [HomPoly3.from_codes(base, d, dict(zip(mons, linalg.normalize(base, v))))
            for v in linalg.kernel(base, rows, len(mons))]


# --- text syntax -------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\*\*|[-+*^()]))")


def _tokenize(text: str, line: int):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        col = m.start() + 1 + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1):
            out.append(("num", int(m.group(1)), col))
        elif m.group(2):
            out.append(("id", m.group(2), col))
        else:
            out.append(("op", "^" if m.group(3) == "**" else m.group(3), col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    """Recursive descent over sparse polynomials {exponents: code}."""

    def __init__(self, text, field, variables, line):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.F = field
        self.vars = tuple(variables)
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def const(self, code):
        return {(0,) * len(self.vars): code} if code else {}

    def add(self, a, b, sign=1):
        F = self.F
        out = dict(a)
        for e, c in b.items():
            v = F.add(out.get(e, 0), c if sign > 0 else F.neg(c))
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return out

    def mul(self, a, b):
        F = self.F
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = F.add(out.get(e, 0), F.mul(c1, c2))
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return out

    def power(self, a, n):
        out = self.const(1)
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        val = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = self.add({}, val, -1)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            val = self.add(val, self.term(), 1 if op == "+" else -1)
        return val

    def term(self):
        val = self.factor()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                val = self.mul(val, self.factor())
            elif tok[0] in ("num", "id") or tok[:2] == ("op", "("):
                val = self.mul(val, self.factor())
            else:
                return val

    def factor(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("exponent must be a nonnegative integer", tok)
            base = self.power(base, tok[1])
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.const(val % self.F.p)
        if kind == "id":
            if val in self.vars:
                e = [0] * len(self.vars)
                e[self.vars.index(val)] = 1
                return {tuple(e): 1}
            if val == "g":
                return self.const(self.F.p if self.F.k > 1 else 1)
            self.fail(f"unknown symbol {val!r}", tok)
        if kind == "op" and val == "(":
            inner = self.expr()
            if self.take()[:2] != ("op", ")"):
                self.fail("expected ')'", self.toks[self.i - 1])
            return inner
        if kind == "op" and val == "-":
            return self.add({}, self.atom(), -1)
        self.fail("unexpected end of input" if kind == "end" else f"unexpected token {val!r}", tok)


def parse_expression(text: str, field: FieldSpec, variables: Sequence[str], line: int = 1) -> dict:
    """Parse a polynomial expression into ``{exponent tuple: code}``."""
    return _Parser(text, field, variables, line).parse()


def parse_hompoly(text: str, field: FieldSpec, line: int = 1) -> HomPoly3:
    terms = parse_expression(text, field, VARS3, line)
    degs = {sum(e) for e in terms}
    if not terms:
        raise ParseError("the zero polynomial does not define a curve", line, 1)
    if len(degs) != 1:
        raise ParseError(f"polynomial is not homogeneous (degrees {sorted(degs)})", line, 1)
    return HomPoly3.from_codes(field, degs.pop(), terms)


def parse_binform(text: str, field: FieldSpec, line: int = 1, column: int = 1) -> BinForm:
    terms = parse_expression(text, field, ("s", "t"), line)
    degs = {sum(e) for e in terms}
    if len(degs) != 1:
        raise ParseError("binary form must be nonzero and homogeneous", line, column)
    d = degs.pop()
    coeffs = [0] * (d + 1)
    for (i, j), c in terms.items():
        coeffs[i] = c
    return BinForm.from_codes(field, d, coeffs)


def _fmt_coef(F: FieldSpec, c: int, has_monomial: bool) -> tuple[str, str]:
    """Return (sign, body) for a coefficient."""
    if F.p != 2 and F.k == 1 and c > F.p // 2:
        c, sign = F.p - c, "-"
    else:
        sign = "+"
    s = F.format_code(c)
    if "+" in s:
        s = f"({s})"
    if has_monomial and s == "1":
        s = ""
    return sign, s


def _fmt_terms(F, items, names) -> str:
    parts = []
    for exps, c in items:
        mon = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e)
        sign, coef = _fmt_coef(F, c, bool(mon))
        body = coef + ("*" if coef and mon else "") + mon
        parts.append((sign, body or "1"))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_hompoly(F: HomPoly3) -> str:
    items = sorted(F.terms.items(), key=lambda kv: kv[0], reverse=True)
    return _fmt_terms(F.field, items, VARS3)


def format_binform(f: BinForm) -> str:
    items = [((i, f.d - i), c) for i, c in enumerate(f.c) if c][::-1]
    return _fmt_terms(f.field, items, ("s", "t"))


def format_uni(f: UniPoly, name: str = "x") -> str:
    items = [((i,), c) for i, c in enumerate(f.c) if c][::-1]
    return _fmt_terms(f.field, items, (name,))
