"""The three extremal curves with every rational point Galois, plus mutations.

Coordinates follow the usual displayed forms:

* Hermitian: X^r Z + X Z^r - Y^(r+1) over GF(r^2);
* Klein quartic: (X^2+XZ)^2 + (X^2+XZ)(Y^2+YZ) + (Y^2+YZ)^2 + Z^4 over GF(2);
* Ballico-Hefez: (s:t) -> (s^(q+1) : (s+t)^(q+1) : t^(q+1)) over GF(q).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import isqrt

from .curves import PlaneCurve
from .fields import field_of_order, make_field, prime_power
from .galois import BELOW_MIN_DEGREE
from .parametrized import ParametrizationError, RationalMap, implicit_curve
from .polys import BinForm, HomPoly3


@dataclass
class CatalogEntry:
    name: str
    params: dict
    curve: PlaneCurve | None = None
    parametrization: RationalMap | None = None
    expected: dict = dc_field(default_factory=dict)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def field(self):
        if self.parametrization is not None:
            return self.parametrization.field
        return self.curve.field

    @property
    def degree(self) -> int:
        return self.curve.degree if self.curve is not None else self.parametrization.degree

    def galois_input(self):
        """The presentation the Galois engines work on: the parametrization
        when there is one, the smooth implicit curve otherwise."""
        return self.parametrization if self.parametrization is not None else self.curve


def hermitian(q: int = 9) -> CatalogEntry:
    """X^r Z + X Z^r - Y^(r+1) = 0 over GF(q), r = sqrt(q); needs q >= 9."""
    p, k = prime_power(q)
    r = isqrt(q)
    if r * r != q or k % 2:
        raise ValueError(f"q={q} is not a square prime power")
    if r + 1 < 4:
        raise ValueError(f"q={q} gives degree {r + 1} < 4")
    F = field_of_order(q)
    d = r + 1
    form = HomPoly3.from_codes(F, d, {(r, 0, 1): 1, (1, 0, r): 1, (0, d, 0): F.neg(1)})
    curve = PlaneCurve(form, irreducible=True, name=f"hermitian-{q}")
    return CatalogEntry("hermitian", {"q": q}, curve=curve,
                        expected={"rational_points": r**3 + 1, "locus_all": True})


def klein_quartic() -> CatalogEntry:
    F = make_field(2, 1)
    X, Y, Z = (HomPoly3.variable(F, i) for i in range(3))
    a = X * X + X * Z
    b = Y * Y + Y * Z
    form = a * a + a * b + b * b + Z**4
    curve = PlaneCurve(form, irreducible=True, name="klein-quartic")
    return CatalogEntry("klein", {"p": 2}, curve=curve, expected={"locus_all": True})


def ballico_hefez(q: int = 3) -> CatalogEntry:
    """(s^(q+1) : (s+t)^(q+1) : t^(q+1)) over GF(q) and its implicit quartic-or-higher."""
    F = field_of_order(q)
    s, t = BinForm.s(F), BinForm.t(F)
    d = q + 1
    pi = RationalMap((s**d, (s + t)**d, t**d))
    curve = implicit_curve(pi)
    curve.name = f"ballico-hefez-{q}"
    notes = [BELOW_MIN_DEGREE] if d < 4 else []
    return CatalogEntry("ballico-hefez", {"q": q}, curve=curve, parametrization=pi,
                        expected={"singular_points": (q * q - q) // 2, "locus_all": True},
                        notes=notes)


CATALOG = {
    "hermitian": hermitian,
    "klein": lambda q=None: klein_quartic(),
    "ballico-hefez": ballico_hefez,
}


def get_entry(name: str, q: int | None = None) -> CatalogEntry:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog curve {name!r}")
    if name == "klein":
        return klein_quartic()
    return CATALOG[name](q) if q is not None else CATALOG[name]()


def mutate(entry: CatalogEntry, seed: int | None = None,
           replace: dict[int, BinForm] | None = None, attempts: int = 64) -> RationalMap:
    """A nearby parametrization of ``entry``.

    ``replace`` swaps whole components; otherwise ``seed`` adds a random
    nonzero constant to one coefficient of one component, re-rolling until
    the components stay coprime.  No seed and no replacement returns the
    original map.
    """
    pi = entry.parametrization
    if pi is None:
        raise ValueError(f"{entry.name} has no parametrized presentation")
    comps = list(pi.components)
    if replace:
        for i, form in replace.items():
            comps[i] = form
        return RationalMap(tuple(comps))
    if seed is None:
        return pi
    rng = random.Random(seed)
    F = pi.field
    for _ in range(attempts):
        i = rng.randrange(len(comps))
        j = rng.randrange(pi.degree + 1)
        delta = rng.randrange(1, F.q)
        coeffs = list(comps[i].c)
        coeffs[j] = F.add(coeffs[j], delta)
        trial = list(comps)
        trial[i] = BinForm.from_codes(F, pi.degree, coeffs)
        try:
            return RationalMap(tuple(trial))
        except ParametrizationError:
            continue
    raise ParametrizationError("no coprime perturbation found")
