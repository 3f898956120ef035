"""Formal higher Chow precycles on F_d^n built from linear subvarieties.

C_I is F_d^n cut by the coordinate hyperplanes X_i = 0, i in I.  A function
f_bc on C_{I+a} is kept as an opaque symbol whose divisor is
C_{I+a+b} - C_{I+a+c}; no rational expression is ever written down.  A
level-one precycle sum (Z, f) is admissible when the divisors cancel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Union

from fermatcycles.errors import (
    DimensionError,
    FermatError,
    IndexCollisionError,
    InvalidIndexError,
    UnsupportedLevelError,
)
from fermatcycles.fermat import FermatParams


@dataclass(frozen=True)
class LinearSubvariety:
    params: FermatParams
    I: frozenset

    def __post_init__(self):
        I = frozenset(self.I)
        object.__setattr__(self, "I", I)
        bad = sorted(i for i in I if not (isinstance(i, int) and 0 <= i <= self.params.n + 1))
        if bad:
            raise InvalidIndexError(f"indices {bad} not in {{0, ..., {self.params.n + 1}}}")
        if len(I) > self.params.n:
            raise DimensionError(f"C_I with |I| = {len(I)} > n = {self.params.n} is empty")

    @property
    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.I))

    @property
    def dim(self) -> int:
        """C_I is a Fermat variety F_d^(n - |I|)."""
        return self.params.n - len(self.I)

    @property
    def codim(self) -> int:
        return len(self.I)

    def extend(self, *indices: int) -> LinearSubvariety:
        return LinearSubvariety(self.params, self.I | set(indices))

    def __repr__(self) -> str:
        return "C_{" + ",".join(map(str, self.key)) + "}"


class CycleCombination:
    """Formal integer combination of linear subvarieties, with zero terms dropped."""

    __slots__ = ("params", "coeffs")

    def __init__(self, params: FermatParams, coeffs: Mapping[tuple[int, ...], int] = ()):
        self.params = params
        self.coeffs = {tuple(sorted(k)): c for k, c in dict(coeffs).items() if c}

    @classmethod
    def of(cls, Z: LinearSubvariety, coeff: int = 1) -> CycleCombination:
        return cls(Z.params, {Z.key: coeff})

    def __add__(self, other: CycleCombination) -> CycleCombination:
        if self.params != other.params:
            raise FermatError("combinations on different Fermat varieties")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return CycleCombination(self.params, out)

    def __neg__(self) -> CycleCombination:
        return CycleCombination(self.params, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: CycleCombination) -> CycleCombination:
        return self + (-other)

    def __rmul__(self, k: int) -> CycleCombination:
        return CycleCombination(self.params, {key: k * c for key, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleCombination):
            return NotImplemented
        return self.params == other.params and self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in canonical order: by codimension, then lexicographically."""
        return sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*C_{{{','.join(map(str, k))}}}" for k, c in self.items())


@dataclass(frozen=True)
class SymbolicFunction:
    """f with divisor C_{base+plus} - C_{base+minus} on ``base``."""

    base: LinearSubvariety
    plus_idx: int
    minus_idx: int

    def __post_init__(self):
        top = self.base.params.n + 1
        for idx in (self.plus_idx, self.minus_idx):
            if not 0 <= idx <= top:
                raise InvalidIndexError(f"index {idx} not in {{0, ..., {top}}}")
            if idx in self.base.I:
                raise IndexCollisionError(f"index {idx} already cut out by {self.base}")
        if self.plus_idx == self.minus_idx:
            raise IndexCollisionError("plus and minus indices coincide")
        if self.base.dim < 1:
            raise DimensionError(f"{self.base} is zero-dimensional; no divisors to encode")

    def divisor_terms(self) -> tuple[tuple[tuple[int, ...], int], ...]:
        # indices are validated in __post_init__, so the keys are built directly
        I = self.base.I
        return (
            (tuple(sorted(I | {self.plus_idx})), 1),
            (tuple(sorted(I | {self.minus_idx})), -1),
        )

    def divisor(self) -> CycleCombination:
        return CycleCombination(self.base.params, dict(self.divisor_terms()))


@dataclass(frozen=True)
class Constant:
    """A nonzero constant function; its divisor is zero."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value == 0:
            raise FermatError("constant function must be nonzero")


Function = Union[SymbolicFunction, Constant]


@dataclass(frozen=True)
class Term:
    coeff: int
    Z: LinearSubvariety
    functions: tuple[Function, ...]


class PreCycle:
    """Formal sum of (Z, f_1, ..., f_q) with a uniform level q >= 1."""

    __slots__ = ("params", "terms")

    def __init__(self, params: FermatParams, terms: Iterable[Term] = ()):
        terms = tuple(terms)
        levels = {len(t.functions) for t in terms}
        if len(levels) > 1:
            raise FermatError(f"mixed levels {sorted(levels)} in one precycle")
        if levels and min(levels) < 1:
            raise FermatError("each term needs at least one function")
        for t in terms:
            if t.Z.params != params:
                raise FermatError("term lives on a different Fermat variety")
            for f in t.functions:
                if isinstance(f, SymbolicFunction) and f.base != t.Z:
                    raise FermatError(f"function on {f.base} attached to {t.Z}")
        self.params = params
        self.terms = terms

    @classmethod
    def single(cls, Z: LinearSubvariety, *functions: Function, coeff: int = 1) -> PreCycle:
        return cls(Z.params, [Term(coeff, Z, tuple(functions))])

    @property
    def level(self) -> int | None:
        return len(self.terms[0].functions) if self.terms else None

    def __add__(self, other: PreCycle) -> PreCycle:
        if self.params != other.params:
            raise FermatError("precycles on different Fermat varieties")
        return PreCycle(self.params, self.terms + other.terms)

    def __rmul__(self, k: int) -> PreCycle:
        return PreCycle(self.params, [Term(k * t.coeff, t.Z, t.functions) for t in self.terms])

    def __neg__(self) -> PreCycle:
        return (-1) * self

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"PreCycle({self.params}, {len(self.terms)} terms, q={self.level})"


def divisor_sum(c: PreCycle) -> CycleCombination:
    """Sum of coeff * div(f) over the terms of a level-one precycle."""
    if c.level is not None and c.level != 1:
        raise UnsupportedLevelError(
            f"level q={c.level}: the boundary condition is a tame-symbol condition, not modelled"
        )
    total: dict[tuple[int, ...], int] = {}
    for t in c.terms:
        (f,) = t.functions
        if isinstance(f, SymbolicFunction):
            for key, sign in f.divisor_terms():
                total[key] = total.get(key, 0) + sign * t.coeff
    return CycleCombination(c.params, total)


def is_admissible(c: PreCycle) -> bool:
    return divisor_sum(c).is_zero()


def is_decomposable(c: PreCycle) -> bool:
    """True when every function in every term is constant (vacuously for the empty precycle)."""
    return all(isinstance(f, Constant) for t in c.terms for f in t.functions)


def triangle_cycle(params: FermatParams, I: Iterable[int], a: int, b: int, c: int) -> PreCycle:
    """(C_a, f_bc) + (C_b, f_ca) + (C_c, f_ab), writing C_x for C_{I+x}."""
    I = frozenset(I)
    top = params.n + 1
    for idx in (*I, a, b, c):
        if not (isinstance(idx, int) and 0 <= idx <= top):
            raise InvalidIndexError(f"index {idx} not in {{0, ..., {top}}}")
    if len({a, b, c}) < 3 or {a, b, c} & I:
        raise IndexCollisionError(f"a, b, c = {a}, {b}, {c} must be distinct and outside I = {sorted(I)}")
    if len(I) + 2 > params.n:
        raise DimensionError(f"|I| + 2 = {len(I) + 2} exceeds n = {params.n}")
    base = LinearSubvariety(params, I)
    terms = []
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        Zx = base.extend(x)
        terms.append(Term(1, Zx, (SymbolicFunction(Zx, y, z),)))
    return PreCycle(params, terms)


def valid_triangles(n: int) -> Iterator[tuple[frozenset, int, int, int]]:
    """All (I, a, b, c) accepted by :func:`triangle_cycle` for dimension n."""
    coords = range(n + 2)
    for size in range(0, n - 1):
        for I in combinations(coords, size):
            rest = [x for x in coords if x not in I]
            for a, b, c in permutations(rest, 3):
                yield frozenset(I), a, b, c
