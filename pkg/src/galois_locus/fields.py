"""Exact arithmetic in GF(p^k).

Elements of GF(p^k) = GF(p)[x]/(m(x)) are encoded as integers in
``range(p**k)``: the residue ``c_0 + c_1 x + ... + c_{k-1} x^{k-1}`` has
code ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.  Multiplication goes through
exp/log tables for a primitive element, addition in odd characteristic
through Zech logarithms, so every field operation is a couple of table
lookups.  Tables are built lazily, on first arithmetic use.

The generator symbol ``g`` always denotes the class of ``x``, which need
not be primitive.
"""

from __future__ import annotations

import functools
import threading
from typing import Iterator, Sequence

K_MAX = 12
FIELD_CAP = 2**20


class FieldError(ValueError):
    """Invalid field construction or cross-field arithmetic."""


class CapExceeded(RuntimeError):
    """An enumeration or search would exceed its configured cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    k = 0
    n = q
    while n % p == 0:
        n //= p
        k += 1
    if n != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, k


# --- dense polynomials over GF(p), lists constant term first -------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _trim(a[:dm] if len(a) > dm else a)


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial test: m is irreducible iff gcd(m, x^(p^i) - x) = 1 for i <= k/2."""
    m = _trim([c % p for c in modulus])
    k = len(m) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if m[0] == 0:
        return False
    xp = [0, 1]
    for _ in range(1, k // 2 + 1):
        xp = _ppowmod(xp, p, m, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, _trim(diff), p)) > 1:
            return False
    return True


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, ordering by sum c_i p^i (i < k)."""
    if k == 1:
        return (0, 1)
    for code in range(1, p**k):
        low = [(code // p**i) % p for i in range(k)]
        if is_irreducible(low + [1], p):
            return tuple(low) + (1,)
    raise FieldError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldSpec:
    """The field GF(p^k) with a fixed irreducible modulus."""

    __slots__ = ("p", "k", "modulus", "q", "_tables", "_lock", "__weakref__")

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if not 1 <= k:
            raise FieldError(f"extension degree {k} out of range")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        self._tables = None
        self._lock = threading.Lock()

    def __reduce__(self):
        return (make_field, (self.p, self.k, self.modulus))

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    @property
    def order(self) -> int:
        return self.q

    def modulus_str(self) -> str:
        terms = []
        for i in range(self.k, -1, -1):
            c = self.modulus[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            else:
                terms.append(f"{c}*{mon}")
        return "+".join(terms)

    # --- tables ---------------------------------------------------------

    def _digits(self, code):
        p = self.p
        return [(code // p**i) % p for i in range(self.k)]

    def _code(self, digits):
        p = self.p
        return sum(int(d) % p * p**i for i, d in enumerate(digits))

    def _slow_mul(self, a, b):
        return self._code(_pmulmod(_trim(self._digits(a)), _trim(self._digits(b)),
                                   list(self.modulus), self.p))

    def _slow_pow(self, a, e):
        return self._code(_ppowmod(_trim(self._digits(a)), e, list(self.modulus), self.p))

    def _build_tables(self):
        if self.q > FIELD_CAP:
            raise CapExceeded(f"{self!r} has {self.q} elements, above the cap {FIELD_CAP}")
        q, p = self.q, self.p
        n = q - 1
        factors = prime_factors(n) if n > 1 else []
        gen = None
        for c in range(1, q):
            if all(self._slow_pow(c, n // r) != 1 for r in factors):
                gen = c
                break
        exp = [0] * (2 * n) if n else [1]
        log = [-1] * q
        x = 1
        gdig = _trim(self._digits(gen))
        mod = list(self.modulus)
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._code(_pmulmod(_trim(self._digits(x)), gdig, mod, p))
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        zech = None
        if p != 2 and self.k > 1:
            # 1 + g^i only touches the constant digit
            zech = [0] * n
            for i in range(n):
                e = exp[i]
                e1 = e - e % p + (e % p + 1) % p
                zech[i] = log[e1] if e1 else -1
        self._tables = (gen, exp, log, zech)

    @property
    def tables(self):
        if self._tables is None:
            with self._lock:
                if self._tables is None:
                    self._build_tables()
        return self._tables

    @property
    def primitive_code(self) -> int:
        return self.tables[0]

    # --- arithmetic on codes -------------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % p
        if not a:
            return b
        if not b:
            return a
        _, exp, log, zech = self.tables
        la = log[a]
        z = zech[(log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else exp[la + z]

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2 or not a:
            return a
        if self.k == 1:
            return p - a
        _, exp, log, _ = self.tables
        n = self.q - 1
        return exp[(log[a] + n // 2) % n]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.k == 1:
            return a * b % self.p
        _, exp, log, _ = self.tables
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        _, exp, log, _ = self.tables
        n = self.q - 1
        return exp[(n - log[a]) % n]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if not a:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self.k == 1:
            return pow(a, e % (self.p - 1), self.p)
        _, exp, log, _ = self.tables
        n = self.q - 1
        return exp[(log[a] * e) % n]

    def from_int(self, n: int) -> int:
        return n % self.p

    def frobenius_code(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** (times % self.k))

    def pth_root_code(self, a: int) -> int:
        """Inverse Frobenius."""
        return self.pow(a, self.p ** (self.k - 1))

    def log_code(self, a: int) -> int:
        return self.tables[2][a]

    def exp_code(self, i: int) -> int:
        return self.tables[1][i % (self.q - 1)]

    # --- element-level API ---------------------------------------------

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"element of {value.field!r} used in {self!r}; embed it first")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, (list, tuple)):
            if len(value) > self.k:
                raise FieldError("too many coefficients")
            return FieldElement(self, self._code(value))
        raise TypeError(f"cannot convert {value!r} to {self!r}")

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.p if self.k > 1 else 1)

    def elements(self) -> list["FieldElement"]:
        return enumerate_field(self)

    def format_code(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        digits = self._digits(code)
        terms = []
        for i in range(self.k - 1, -1, -1):
            c = digits[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mon = f"g^{i}"
                terms.append(mon if c == 1 else f"{c}*{mon}")
        return "+".join(terms) if terms else "0"


class FieldElement:
    """An element of a specific GF(p^k); mixing fields raises FieldError."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError(
                    f"cannot combine {self.field!r} and {other.field!r} without embed")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, self.field.div(o, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field!r}({self.field.format_code(self.code)})"

    def __str__(self):
        return self.field.format_code(self.code)

    @property
    def coeffs(self) -> list[int]:
        return self.field._digits(self.code)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def frobenius(self, times: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius_code(self.code, times))

    def multiplicative_order(self) -> int:
        if not self.code:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.field.q - 1
        order = n
        for r in prime_factors(n) if n > 1 else []:
            while order % r == 0 and self.field.pow(self.code, order // r) == 1:
                order //= r
        return order

    def in_subfield(self, degree: int) -> bool:
        """True iff the element lies in the subfield GF(p^degree)."""
        if self.field.k % degree:
            return False
        return self.field.pow(self.code, self.field.p**degree) == self.code


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, k: int, modulus: tuple | None) -> FieldSpec:
    if modulus is None:
        modulus = default_modulus(p, k)
    return FieldSpec(p, k, modulus)


def make_field(p: int, k: int = 1, modulus: Sequence[int] | None = None,
               k_max: int = K_MAX) -> FieldSpec:
    """Construct GF(p^k), memoized so equal arguments give the same object."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not 1 <= k <= k_max:
        raise FieldError(f"extension degree {k} outside 1..{k_max}")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if modulus == default_modulus(p, k):
            modulus = None
    return _make_field_cached(p, k, modulus)


def field_of_order(q: int) -> FieldSpec:
    p, k = prime_power(q)
    return make_field(p, k)


def extension(field: FieldSpec, m: int) -> FieldSpec:
    """The default field of degree m over ``field`` (as GF(p^(k*m)))."""
    if m == 1:
        return field
    return make_field(field.p, field.k * m, k_max=max(K_MAX, field.k * m))


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    """All p^k elements in code order (0, 1, ..., then g, g+1, ...)."""
    if spec.q > FIELD_CAP:
        raise CapExceeded(f"enumerating {spec!r} exceeds cap {FIELD_CAP}")
    return [FieldElement(spec, c) for c in range(spec.q)]


def iter_codes(spec: FieldSpec) -> Iterator[int]:
    if spec.q > FIELD_CAP:
        raise CapExceeded(f"enumerating {spec!r} exceeds cap {FIELD_CAP}")
    return iter(range(spec.q))


# --- embeddings ----------------------------------------------------------

_EMBED_CACHE: dict[tuple[FieldSpec, FieldSpec], list[int]] = {}
_EMBED_LOCK = threading.RLock()


def _image_code(source: FieldSpec, T: FieldSpec, powers: list[int], code: int) -> int:
    """Image of ``code`` when the generator of ``source`` maps to powers[1]."""
    p = source.p
    acc = 0
    for i in range(source.k):
        d = code % p
        code //= p
        if d:
            acc = T.add(acc, T.mul(d, powers[i]))
    return acc


def embedding_table(source: FieldSpec, target: FieldSpec) -> list[int]:
    """Code table of the memoized embedding source -> target.

    The generator of ``source`` goes to the smallest-code root of its
    modulus in ``target`` that is compatible with the embeddings of every
    default intermediate subfield, so embeddings commute along towers.
    """
    if source == target:
        return list(range(source.q))
    key = (source, target)
    table = _EMBED_CACHE.get(key)
    if table is not None:
        return table
    if source.p != target.p or target.k % source.k:
        raise FieldError(f"{source!r} does not embed in {target!r}")
    with _EMBED_LOCK:
        table = _EMBED_CACHE.get(key)
        if table is not None:
            return table
        T = target
        k = source.k
        # (generator code of a subfield A in source, its image in target)
        constraints = []
        for a in range(2, k):
            if k % a == 0:
                A = make_field(source.p, a)
                g = A.gen.code
                constraints.append((embedding_table(A, source)[g], embedding_table(A, T)[g]))
        powers = None
        for c in (range(T.q) if k > 1 else ()):
            acc = 0
            for coef in reversed(source.modulus):
                acc = T.add(T.mul(acc, c), coef)
            if acc:
                continue
            trial = [1]
            for _ in range(1, k):
                trial.append(T.mul(trial[-1], c))
            if all(_image_code(source, T, trial, x) == y for x, y in constraints):
                powers = trial
                break
        if k == 1:
            powers = [1]
        if powers is None:
            raise FieldError(f"no compatible root of {source!r} modulus in {target!r}")
        table = [_image_code(source, T, powers, code) for code in range(source.q)]
        _EMBED_CACHE[key] = table
    return table


def embed(x: FieldElement, target: FieldSpec) -> FieldElement:
    """Image of x under the memoized embedding into ``target``."""
    return FieldElement(target, embedding_table(x.field, target)[x.code])


def embed_code(source: FieldSpec, target: FieldSpec, code: int) -> int:
    if source is target:
        return code
    return embedding_table(source, target)[code]


def restrict_code(source: FieldSpec, target: FieldSpec, code: int) -> int:
    """Inverse of embed_code(target, source, .); FieldError if not in the image."""
    if source is target or source == target:
        return code
    table = embedding_table(target, source)
    try:
        return table.index(code)
    except ValueError:
        raise FieldError(f"element not in the image of {target!r}") from None


def common_field(*fields: FieldSpec) -> FieldSpec:
    """Smallest default field containing all the given ones (by degree lcm)."""
    from math import lcm

    p = fields[0].p
    if any(f.p != p for f in fields):
        raise FieldError("fields of different characteristic")
    k = lcm(*(f.k for f in fields))
    if len(set(fields)) == 1:
        return fields[0]
    for f in fields:
        if f.k == k:
            return f
    return make_field(p, k, k_max=max(K_MAX, k))


def parse_element(text: str, spec: FieldSpec) -> FieldElement:
    """Parse an element in g-syntax, e.g. ``g^1+2`` or ``2*g+1``."""
    from .polys import parse_expression

    return FieldElement(spec, parse_expression(text, spec, ()).get((), 0))
