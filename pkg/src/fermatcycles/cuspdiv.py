"""Cuspidal divisor class group of the Fermat curve X_0^d + X_1^d + X_2^d = 0.

The 3d cusps are the points with one vanishing coordinate.  Cusp
``(axis, idx)`` lies on X_axis = 0, and ``idx`` labels it by eps * zeta^idx
for a fixed d-th root eps of -1; no complex number is ever formed.

Principal divisors come from two Bezout-forced families:

* X_i / X_j, whose divisor is the full hyperplane section on axis i minus
  the one on axis j;
* L / X_j with L the tangent line at a cusp P, which meets the curve only at
  P with contact order d, giving d*P minus the section on axis j.

The quotient of degree-0 cuspidal divisors by the lattice these span is a
finite group surjecting onto the true cuspidal class group, so its invariant
factors are an upper bound for the latter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable

from fermatcycles.errors import DegreeError, FermatError, InfiniteQuotientError, InvalidSpecError
from fermatcycles.snf import SmithForm, lcm, smith_normal_form, vecmat

COORDINATE_RATIO = "coordinate-ratio"
TANGENT_RATIO = "tangent-ratio"


def _check_degree(d: int):
    if not isinstance(d, int) or d < 1:
        raise FermatError(f"degree must be a positive integer, got {d!r}")


@dataclass(frozen=True, order=True)
class Cusp:
    axis: int
    idx: int

    def position(self, d: int) -> int:
        return self.axis * d + self.idx


def cusps(d: int) -> list[Cusp]:
    _check_degree(d)
    return [Cusp(axis, idx) for axis in range(3) for idx in range(d)]


@dataclass(frozen=True)
class CuspidalDivisor:
    """Integer combination of the 3d cusps, in the order of :func:`cusps`."""

    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_degree(self.d)
        if len(self.coeffs) != 3 * self.d:
            raise FermatError(f"need {3 * self.d} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, d: int) -> CuspidalDivisor:
        return cls(d, (0,) * (3 * d))

    @classmethod
    def from_points(cls, d: int, terms: dict[tuple[int, int], int] | Iterable) -> CuspidalDivisor:
        coeffs = [0] * (3 * d)
        items = terms.items() if isinstance(terms, dict) else terms
        for (axis, idx), c in items:
            if axis not in (0, 1, 2) or not 0 <= idx < d:
                raise FermatError(f"no cusp ({axis}, {idx}) for d={d}")
            coeffs[axis * d + idx] += c
        return cls(d, tuple(coeffs))

    @classmethod
    def hyperplane_section(cls, d: int, axis: int) -> CuspidalDivisor:
        return cls.from_points(d, {(axis, k): 1 for k in range(d)})

    @property
    def degree(self) -> int:
        return sum(self.coeffs)

    def _same(self, other):
        if self.d != other.d:
            raise FermatError("divisors on different Fermat curves")

    def __add__(self, other: CuspidalDivisor) -> CuspidalDivisor:
        self._same(other)
        return CuspidalDivisor(self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CuspidalDivisor:
        return CuspidalDivisor(self.d, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CuspidalDivisor) -> CuspidalDivisor:
        return self + (-other)

    def __rmul__(self, k: int) -> CuspidalDivisor:
        return CuspidalDivisor(self.d, tuple(k * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def permute(self, perm) -> CuspidalDivisor:
        """Push forward along a map ``Cusp -> Cusp`` that permutes the cusps."""
        coeffs = [0] * (3 * self.d)
        for cusp, c in zip(cusps(self.d), self.coeffs):
            coeffs[perm(cusp).position(self.d)] += c
        return CuspidalDivisor(self.d, tuple(coeffs))


@dataclass(frozen=True)
class CuspidalFunction:
    """Either X_i/X_j (``coordinate-ratio``) or tangent-line/X_j (``tangent-ratio``)."""

    kind: str
    i: int = 0
    j: int = 0
    idx: int = 0

    @classmethod
    def coordinate_ratio(cls, i: int, j: int) -> CuspidalFunction:
        return cls(COORDINATE_RATIO, i=i, j=j)

    @classmethod
    def tangent_ratio(cls, axis: int, idx: int, j: int) -> CuspidalFunction:
        return cls(TANGENT_RATIO, i=axis, j=j, idx=idx)

    def label(self) -> str:
        if self.kind == COORDINATE_RATIO:
            return f"X{self.i}/X{self.j}"
        return f"T({self.i},{self.idx})/X{self.j}"


def divisor_of(f: CuspidalFunction, d: int) -> CuspidalDivisor:
    _check_degree(d)
    if f.i not in (0, 1, 2) or f.j not in (0, 1, 2):
        raise InvalidSpecError(f"axes must lie in {{0, 1, 2}}: {f}")
    if f.i == f.j:
        raise InvalidSpecError(f"numerator and denominator axes coincide: {f}")
    denominator = CuspidalDivisor.hyperplane_section(d, f.j)
    if f.kind == COORDINATE_RATIO:
        return CuspidalDivisor.hyperplane_section(d, f.i) - denominator
    if f.kind == TANGENT_RATIO:
        if not 0 <= f.idx < d:
            raise InvalidSpecError(f"cusp index {f.idx} out of range for d={d}")
        return CuspidalDivisor.from_points(d, {(f.i, f.idx): d}) - denominator
    raise InvalidSpecError(f"unknown function kind {f.kind!r}")


def generator_family(d: int) -> list[CuspidalFunction]:
    """6 coordinate ratios, then 3 * d * 2 tangent ratios."""
    _check_degree(d)
    family = [CuspidalFunction.coordinate_ratio(i, j) for i in range(3) for j in range(3) if i != j]
    family += [
        CuspidalFunction.tangent_ratio(axis, idx, j)
        for axis in range(3)
        for idx in range(d)
        for j in range(3)
        if j != axis
    ]
    return family


def principal_lattice(d: int) -> list[list[int]]:
    """Rows are the divisors of :func:`generator_family`, one column per cusp."""
    return [list(divisor_of(f, d).coeffs) for f in generator_family(d)]


@lru_cache(maxsize=32)
def _smith(d: int) -> SmithForm:
    return smith_normal_form(principal_lattice(d))


@dataclass(frozen=True)
class CuspClassGroup:
    d: int
    rank: int
    invariant_factors: tuple[int, ...]
    generators_used: int

    @property
    def order(self) -> int:
        out = 1
        for s in self.invariant_factors:
            out *= s
        return out

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "rank": self.rank,
            "invariant_factors": list(self.invariant_factors),
            "generators_used": self.generators_used,
        }


def class_group(d: int) -> CuspClassGroup:
    """Invariant factors of (degree-0 cuspidal divisors) / (encoded principal lattice).

    The cokernel of the lattice in Z^{3d} is Z (via degree) plus this torsion
    group, so its nonunit Smith invariants are exactly the answer.  Raises
    if the lattice has rank below 3d - 1, which would make the quotient
    infinite and points to a bug in the generator table.
    """
    sf = _smith(d)
    if sf.rank < 3 * d - 1:
        raise InfiniteQuotientError(f"principal lattice has rank {sf.rank} < {3 * d - 1} for d={d}")
    return CuspClassGroup(
        d=d,
        rank=sf.rank,
        invariant_factors=sf.invariant_factors(),
        generators_used=len(generator_family(d)),
    )


def torsion_order(D: CuspidalDivisor) -> int:
    """Least k >= 1 with k*D in the principal lattice.

    With U M V = diag(s), a row vector x lies in the row space of M iff
    y = x V has y_i divisible by s_i for i < rank and y_i = 0 beyond.
    """
    if D.degree != 0:
        raise DegreeError(f"divisor has degree {D.degree}, expected 0")
    sf = _smith(D.d)
    y = vecmat(D.coeffs, sf.V)
    if any(y[sf.rank:]):
        raise InfiniteQuotientError("divisor is not in the rational span of the principal lattice")
    k = 1
    for s, yi in zip(sf.diagonal, y):
        k = lcm(k, s // gcd(s, yi))
    return k


def is_principal(D: CuspidalDivisor) -> bool:
    return torsion_order(D) == 1


def rotate_index(d: int, shift: int = 1):
    return lambda c: Cusp(c.axis, (c.idx + shift) % d)


def rotate_axes(shift: int = 1):
    return lambda c: Cusp((c.axis + shift) % 3, c.idx)


def parse_divisor(d: int, text: str) -> CuspidalDivisor:
    """Parse ``"axis:idx=coeff,..."``, e.g. ``"0:0=1,0:1=-1"``."""
    terms = []
    for chunk in filter(None, (c.strip() for c in text.split(","))):
        try:
            point, coeff = chunk.split("=")
            axis, idx = point.split(":")
            terms.append(((int(axis), int(idx)), int(coeff)))
        except ValueError as exc:
            raise FermatError(f"cannot parse divisor term {chunk!r}; expected axis:idx=coeff") from exc
    return CuspidalDivisor.from_points(d, terms)


def lattice_rows_as_divisors(d: int) -> list[CuspidalDivisor]:
    return [CuspidalDivisor(d, tuple(row)) for row in principal_lattice(d)]

