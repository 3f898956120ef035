"""Kunneth classes on products of a genus-g curve, with exact coefficients.

H^*(C) has basis 1 (degree 0), a1..ag, b1..bg (degree 1) and w (degree 2,
the point class) with a_i b_j = delta_ij w = -b_j a_i.  A class on C^m is a
rational combination of tensor monomials x_1 (x) ... (x) x_m.

Sign convention, fixed here and nowhere else: in

    (x_1 (x) ... (x) x_m) . (y_1 (x) ... (x) y_m)

each y_i is moved left past x_{i+1}, ..., x_m, contributing
(-1)^(deg y_i * deg x_j) per crossing.  Even classes (1, w) never produce
signs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, Mapping

Symbol = str
Monomial = tuple[Symbol, ...]

ONE, POINT = "1", "w"
DIAGONAL_NAMES = ("D", "D12", "D13", "D23", "D1", "D2", "D3")


def basis(g: int) -> list[Symbol]:
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    return [ONE] + [f"a{i}" for i in range(1, g + 1)] + [f"b{i}" for i in range(1, g + 1)] + [POINT]


def degree(x: Symbol) -> int:
    if x == ONE:
        return 0
    if x == POINT:
        return 2
    return 1


def _index(x: Symbol) -> int:
    return int(x[1:])


def curve_product(x: Symbol, y: Symbol) -> tuple[int, Symbol] | None:
    """Cup product on H^*(C): ``(sign, symbol)`` or None when it vanishes."""
    if x == ONE:
        return 1, y
    if y == ONE:
        return 1, x
    if x == POINT or y == POINT:
        return None
    if x[0] == y[0] or _index(x) != _index(y):
        return None
    return (1, POINT) if x[0] == "a" else (-1, POINT)


def curve_integral(x: Symbol) -> int:
    return 1 if x == POINT else 0


def curve_triple_integral(x: Symbol, y: Symbol, z: Symbol) -> int:
    """Integral over C of x.y.z, straight from the cup product table."""
    xy = curve_product(x, y)
    if xy is None:
        return 0
    s, xy_sym = xy
    xyz = curve_product(xy_sym, z)
    if xyz is None:
        return 0
    return s * xyz[0] * curve_integral(xyz[1])


def dual_symbol(x: Symbol) -> Symbol:
    """The unique basis symbol y with x.y a nonzero multiple of w."""
    if x == ONE:
        return POINT
    if x == POINT:
        return ONE
    return ("b" if x[0] == "a" else "a") + x[1:]


def koszul_sign(xs: Monomial, ys: Monomial) -> int:
    exponent = 0
    suffix = 0
    # walk right to left so suffix = sum of deg x_j for j > i
    for i in range(len(xs) - 1, -1, -1):
        exponent += degree(ys[i]) * suffix
        suffix += degree(xs[i])
    return -1 if exponent % 2 else 1


def monomial_product(xs: Monomial, ys: Monomial) -> tuple[int, Monomial] | None:
    sign = koszul_sign(xs, ys)
    out = []
    for x, y in zip(xs, ys):
        r = curve_product(x, y)
        if r is None:
            return None
        sign *= r[0]
        out.append(r[1])
    return sign, tuple(out)


def monomial_degree(xs: Monomial) -> int:
    return sum(degree(x) for x in xs)


class KunnethClass:
    """Rational combination of tensor monomials on C^m."""

    __slots__ = ("m", "g", "terms")

    def __init__(self, m: int, g: int, terms: Mapping[Monomial, Fraction | int] = ()):
        self.m = m
        self.g = g
        allowed = set(basis(g))
        clean = {}
        for mono, c in dict(terms).items():
            mono = tuple(mono)
            if len(mono) != m or not set(mono) <= allowed:
                raise ValueError(f"bad monomial {mono} for m={m}, g={g}")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def zero(cls, m: int, g: int) -> KunnethClass:
        return cls(m, g)

    @classmethod
    def monomial(cls, g: int, *symbols: Symbol, coeff=1) -> KunnethClass:
        return cls(len(symbols), g, {tuple(symbols): coeff})

    @classmethod
    def slot(cls, m: int, g: int, position: int, x: Symbol) -> KunnethClass:
        """pr_position^*(x): x in one slot, 1 elsewhere."""
        mono = [ONE] * m
        mono[position] = x
        return cls(m, g, {tuple(mono): 1})

    def _same(self, other: KunnethClass):
        if (self.m, self.g) != (other.m, other.g):
            raise ValueError(f"incompatible classes (m={self.m}, g={self.g}) vs (m={other.m}, g={other.g})")

    def __add__(self, other: KunnethClass) -> KunnethClass:
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return KunnethClass(self.m, self.g, out)

    def __neg__(self) -> KunnethClass:
        return KunnethClass(self.m, self.g, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: KunnethClass) -> KunnethClass:
        return self + (-other)

    def __rmul__(self, k) -> KunnethClass:
        return KunnethClass(self.m, self.g, {mono: k * v for mono, v in self.terms.items()})

    def __mul__(self, other: KunnethClass) -> KunnethClass:
        self._same(other)
        out: dict[Monomial, Fraction] = {}
        for xs, u in self.terms.items():
            for ys, v in other.terms.items():
                r = monomial_product(xs, ys)
                if r is not None:
                    sign, mono = r
                    out[mono] = out.get(mono, 0) + sign * u * v
        return KunnethClass(self.m, self.g, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KunnethClass):
            return NotImplemented
        return (self.m, self.g) == (other.m, other.g) and self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {monomial_degree(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, slot_degrees: Iterable[int]) -> KunnethClass:
        """Part whose monomials have the given per-slot degrees."""
        target = tuple(slot_degrees)
        return KunnethClass(
            self.m, self.g,
            {k: v for k, v in self.terms.items() if tuple(map(degree, k)) == target},
        )

    def integral(self) -> Fraction:
        """Integral over C^m: the coefficient of w (x) ... (x) w."""
        return self.terms.get((POINT,) * self.m, Fraction(0))

    def items(self) -> list[tuple[Monomial, Fraction]]:
        order = {x: i for i, x in enumerate(basis(self.g))}
        return sorted(self.terms.items(), key=lambda kv: [order[x] for x in kv[0]])

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{'(x)'.join(k)}" for k, c in self.items())


def monomials(m: int, g: int, total_degree: int | None = None) -> list[Monomial]:
    out = [tuple(p) for p in product(basis(g), repeat=m)]
    if total_degree is not None:
        out = [p for p in out if monomial_degree(p) == total_degree]
    return out


def pullback(c: KunnethClass, slots: tuple[int, ...], m: int) -> KunnethClass:
    """Pull back along the projection C^m -> C^k onto ``slots``.

    Each monomial x_1 (x) ... (x) x_k becomes the product of pr_{slots[i]}^*(x_i)
    taken in order, so any reordering sign comes from the product rule.
    """
    if len(slots) != c.m:
        raise ValueError("one slot per factor required")
    out = KunnethClass.zero(m, c.g)
    for mono, coeff in c.terms.items():
        piece = KunnethClass(m, c.g, {(ONE,) * m: coeff})
        for position, x in zip(slots, mono):
            piece = piece * KunnethClass.slot(m, c.g, position, x)
        out = out + piece
    return out


def dual_class(m: int, g: int, functional: Callable[[Monomial], Fraction | int], class_degree: int) -> KunnethClass:
    """The class K of degree ``class_degree`` with integral(K . nu) = functional(nu).

    Monomials pair perfectly against their slot-wise duals, so K is assembled
    one dual monomial at a time with the sign read off the pairing.
    """
    out: dict[Monomial, Fraction] = {}
    for nu in monomials(m, g, 2 * m - class_degree):
        value = Fraction(functional(nu))
        if not value:
            continue
        rho = tuple(dual_symbol(x) for x in nu)
        r = monomial_product(rho, nu)
        assert r is not None and r[1] == (POINT,) * m
        out[rho] = out.get(rho, 0) + value / r[0]
    return KunnethClass(m, g, out)


def diagonal_class(g: int) -> KunnethClass:
    """[Delta] in C x C: 1(x)w + w(x)1 - sum_i (a_i(x)b_i - b_i(x)a_i).

    The odd part's sign is the one forced by the product rule above; it makes
    integral([Delta] . x(x)y) = integral_C(x.y) hold on every basis pair.
    """
    terms = {(ONE, POINT): 1, (POINT, ONE): 1}
    for i in range(1, g + 1):
        terms[(f"a{i}", f"b{i}")] = -1
        terms[(f"b{i}", f"a{i}")] = 1
    return KunnethClass(2, g, terms)


def small_diagonal_class(g: int) -> KunnethClass:
    """{(x, x, x)} in C^3, dual to (x, y, z) -> integral_C x.y.z."""
    return dual_class(3, g, lambda nu: curve_triple_integral(*nu), 4)


def point_class(m: int, g: int, position: int) -> KunnethClass:
    return KunnethClass.slot(m, g, position, POINT)


def partial_diagonal_class(which: str, g: int) -> KunnethClass:
    """Classes of the seven cycles in the modified diagonal, on C^3.

    D is the small diagonal; Dij the diagonal in slots i, j with the base
    point in the third slot; Di the curve in slot i with the base point in
    the other two.  At class level the base point is just w.
    """
    if which == "D":
        return small_diagonal_class(g)
    if which in ("D12", "D13", "D23"):
        i, j = int(which[1]) - 1, int(which[2]) - 1
        (k,) = {0, 1, 2} - {i, j}
        return pullback(diagonal_class(g), (i, j), 3) * point_class(3, g, k)
    if which in ("D1", "D2", "D3"):
        i = int(which[1]) - 1
        j, k = sorted({0, 1, 2} - {i})
        return point_class(3, g, j) * point_class(3, g, k)
    raise ValueError(f"unknown diagonal {which!r}; expected one of {DIAGONAL_NAMES}")


def modified_diagonal_class(g: int) -> KunnethClass:
    """D - D12 - D13 - D23 + D1 + D2 + D3."""
    signs = {"D": 1, "D12": -1, "D13": -1, "D23": -1, "D1": 1, "D2": 1, "D3": 1}
    total = KunnethClass.zero(3, g)
    for name, s in signs.items():
        total = total + s * partial_diagonal_class(name, g)
    return total


def is_null_class(c: KunnethClass) -> bool:
    return c.is_zero()


def genus_of_fermat_curve(d: int) -> int:
    return (d - 1) * (d - 2) // 2
