"""Rational places of the two recursive tower families at small depth.

Two variants over GF(q), q = l^2:

* ``gs96`` -- the y-tower: T_1 = GF(q)(y_1) and, for each new level,
  y_m^l + y_m = y_{m-1}^l / (y_{m-1}^{l-1} + 1).  Supported to depth 3.
* ``gs95`` -- the xz-tower: T_1 = GF(q)(x_1) and z_2^l + z_2 = x_1^{l+1}.
  Supported to depth 2, where it is the Hermitian function field.

A completely-splitting rational place is identified with its coordinate
tuple (a_1, ..., a_m).  The y-tower places are the tuples whose first
coordinate avoids the Artin-Schreier kernel and which satisfy the recursion
level by level; the xz-tower places need only a nonzero first coordinate.
Functions are polynomial monomials in the generators, optionally carrying
an unexpanded factor g(w)^j where g has the recovery-group shifts as roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import UnsupportedDepth, VariantMismatch
from .field import FieldElement, FiniteField

GS96 = "gs96"
GS95 = "gs95"

_DEPTH_CAP = {GS96: 3, GS95: 2}


@dataclass
class TowerSpec:
    """Tower variant, base field GF(l^2) and level m."""

    variant: str
    field: FiniteField
    m: int
    _places: list["Place"] | None = dc_field(default=None, repr=False, compare=False)
    _index: dict[tuple[int, ...], int] | None = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.variant not in _DEPTH_CAP:
            raise VariantMismatch(f"unknown tower variant {self.variant!r}")
        self.field.require_square()
        if not 1 <= self.m <= _DEPTH_CAP[self.variant]:
            raise UnsupportedDepth(
                f"{self.variant} supports 1 <= m <= {_DEPTH_CAP[self.variant]}, got {self.m}"
            )

    @property
    def ell(self) -> int:
        return self.field.ell

    @property
    def q(self) -> int:
        return self.field.q

    def pole_weights(self) -> tuple[int, ...]:
        """Pole-divisor degree of each generator as a function on the tower."""
        if self.variant == GS96:
            return (self.ell ** (self.m - 1),) * self.m
        if self.m == 1:
            return (1,)
        return (self.ell, self.ell + 1)

    def places(self) -> list["Place"]:
        if self._places is None:
            self._places = _enumerate(self)
            self._index = {p.coords: p.index for p in self._places}
        return self._places

    def place_index(self, coords: tuple[int, ...]) -> int:
        self.places()
        return self._index[coords]

    def __eq__(self, other):
        return (
            isinstance(other, TowerSpec)
            and (self.variant, self.field, self.m) == (other.variant, other.field, other.m)
        )

    def __hash__(self):
        return hash((self.variant, self.field, self.m))


@dataclass(frozen=True)
class Place:
    """Rational place as a coordinate tuple, plus its canonical position."""

    coords: tuple[int, ...]
    spec: TowerSpec
    index: int

    def __repr__(self):
        return f"Place{self.coords}"


def _gs96_rhs(field: FiniteField, alpha: int) -> int:
    """y^l / (y^(l-1) + 1) evaluated at alpha; defined off the kernel."""
    ell = field.ell
    num = field.pow(alpha, ell)
    den = field.add(field.pow(alpha, ell - 1), 1)
    return field.mul(num, field.inv(den))


def _enumerate(spec: TowerSpec) -> list[Place]:
    f = spec.field
    ell = f.ell
    pre = f.as_preimages()
    if spec.variant == GS96:
        level1 = [a for a in range(f.q) if f.add(f.pow(a, ell), a) != 0]
    else:
        level1 = [a for a in range(1, f.q)]
    tuples: list[tuple[int, ...]] = [(a,) for a in level1]
    for lvl in range(2, spec.m + 1):
        nxt = []
        for t in tuples:
            prev = t[-1]
            if spec.variant == GS96:
                beta = _gs96_rhs(f, prev)
            else:
                beta = f.pow(t[0], ell + 1)
            sols = pre.get(beta)
            if sols is None:
                raise AssertionError("recursion target left the trace image")
            nxt.extend(t + (s,) for s in sorted(sols))
        tuples = nxt
    return [Place(coords=t, spec=spec, index=i) for i, t in enumerate(tuples)]


def enumerate_places(spec: TowerSpec) -> list[Place]:
    """All completely-splitting places in canonical (lexicographic) order.

    Counts: (q - l) * l^(m-1) for the y-tower, (q - 1) * l^(m-1) for the
    xz-tower.
    """
    return spec.places()


def check_place(spec: TowerSpec, coords) -> tuple[bool, str]:
    """Membership test for a coordinate tuple, with a diagnostic string."""
    f = spec.field
    ell = f.ell
    coords = tuple(int(c) for c in coords)
    if len(coords) != spec.m:
        return False, f"expected {spec.m} coordinates, got {len(coords)}"
    if spec.variant == GS96:
        for i, a in enumerate(coords):
            if f.add(f.pow(a, ell), a) == 0:
                return False, f"coordinate {i + 1} lies in the additive kernel"
            if i > 0:
                beta = _gs96_rhs(f, coords[i - 1])
                if f.add(f.pow(a, ell), a) != beta:
                    return False, f"level {i + 1} recursion equation fails"
    else:
        if coords[0] == 0:
            return False, "first coordinate is zero"
        for i in range(1, spec.m):
            beta = f.pow(coords[0], ell + 1)
            if f.add(f.pow(coords[i], ell), coords[i]) != beta:
                return False, f"level {i + 1} recursion equation fails"
    return True, "ok"


def genus(spec: TowerSpec) -> int:
    """Genus of the level-m function field."""
    ell, m = spec.ell, spec.m
    if spec.variant == GS95:
        return 0 if m == 1 else ell * (ell - 1) // 2
    if m % 2 == 0:
        return (ell ** (m // 2) - 1) ** 2
    return (ell ** ((m + 1) // 2) - 1) * (ell ** ((m - 1) // 2) - 1)


@dataclass(frozen=True)
class MonomialFunction:
    """Monomial in the tower generators.

    ``exponents`` holds one exponent per generator.  ``g_roots``/``g_power``
    describe an optional factor g(w)^j kept unexpanded, where g is the monic
    polynomial whose roots are the recovery shifts, and ``w_power`` is the
    extra exponent on the repair variable (generator ``w_index``).
    """

    exponents: tuple[int, ...]
    w_index: int
    w_power: int = 0
    g_roots: tuple[int, ...] = ()
    g_power: int = 0

    def total_exponents(self) -> tuple[int, ...]:
        """Per-generator degree after conceptually expanding g(w)^j * w^l."""
        tot = list(self.exponents)
        tot[self.w_index] += len(self.g_roots) * self.g_power + self.w_power
        return tuple(tot)


def pole_degree(f: MonomialFunction, spec: TowerSpec) -> int:
    """Degree of the pole divisor: weighted sum of expanded exponents."""
    weights = spec.pole_weights()
    return sum(w * t for w, t in zip(weights, f.total_exponents()))


def evaluate(f: MonomialFunction, place: Place) -> FieldElement:
    """Value of the monomial at a place (g-factors expanded numerically)."""
    fld = place.spec.field
    acc = 1
    for e, a in zip(f.exponents, place.coords):
        if e:
            acc = fld.mul(acc, fld.pow(a, e))
    w = place.coords[f.w_index]
    if f.g_power:
        g = 1
        for root in f.g_roots:
            g = fld.mul(g, fld.sub(w, root))
        acc = fld.mul(acc, fld.pow(g, f.g_power))
    if f.w_power:
        acc = fld.mul(acc, fld.pow(w, f.w_power))
    return FieldElement(acc, fld)


def evaluate_vec(f: MonomialFunction, coords: np.ndarray, fld: FiniteField) -> np.ndarray:
    """Vectorized evaluate over a (n, m) matrix of place coordinates."""
    acc = np.ones(coords.shape[0], dtype=np.int64)
    for i, e in enumerate(f.exponents):
        if e:
            acc = fld.vec_mul(acc, fld.vec_pow(coords[:, i], e))
    w = coords[:, f.w_index]
    if f.g_power:
        g = np.ones_like(acc)
        for root in f.g_roots:
            g = fld.vec_mul(g, fld.vec_sub(w, root))
        acc = fld.vec_mul(acc, fld.vec_pow(g, f.g_power))
    if f.w_power:
        acc = fld.vec_mul(acc, fld.vec_pow(w, f.w_power))
    return acc
