"""Weighted G-representations as multiplicity maps.

A representation of the abelian group G splits into one-dimensional pieces
V(chi).  Keeping track of the weight each piece sits in gives a
``GradedVirtualModule``: a finite map ``(weight, chi) -> multiplicity``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping

from fermatcycles.errors import ParameterMismatchError, UnsupportedCaseError
from fermatcycles.fermat import (
    DEFAULT_MAX_ENUM,
    Character,
    CharacterSet,
    FermatParams,
    enumerate_dual_group,
    set_A,
    set_B,
)

AVERAGING = "averaging"
CHARACTER_SUM = "character-sum"


class GradedVirtualModule:
    """Integer multiplicities indexed by (weight, character); zeros are dropped."""

    __slots__ = ("params", "mult")

    def __init__(self, params: FermatParams, mult: Mapping[tuple[int, Character], int] = ()):
        self.params = params
        self.mult = {key: m for key, m in dict(mult).items() if m}

    @classmethod
    def zero(cls, params: FermatParams) -> GradedVirtualModule:
        return cls(params)

    def _same(self, other: GradedVirtualModule):
        if self.params != other.params:
            raise ParameterMismatchError(f"{self.params} vs {other.params}")

    def __add__(self, other: GradedVirtualModule) -> GradedVirtualModule:
        self._same(other)
        total = Counter(self.mult)
        for key, m in other.mult.items():
            total[key] += m
        return GradedVirtualModule(self.params, total)

    def __neg__(self) -> GradedVirtualModule:
        return GradedVirtualModule(self.params, {k: -m for k, m in self.mult.items()})

    def __sub__(self, other: GradedVirtualModule) -> GradedVirtualModule:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedVirtualModule):
            return NotImplemented
        return self.params == other.params and self.mult == other.mult

    __hash__ = None

    def __repr__(self) -> str:
        return f"GradedVirtualModule({self.params}, {len(self.mult)} entries, dim={self.dim})"

    @property
    def dim(self) -> int:
        return sum(self.mult.values())

    def is_zero(self) -> bool:
        return not self.mult

    def is_effective(self) -> bool:
        return all(m > 0 for m in self.mult.values())

    def characters(self) -> frozenset:
        return frozenset(chi for _, chi in self.mult)

    def weights(self) -> frozenset:
        return frozenset(w for w, _ in self.mult)

    def is_pure(self, weight: int) -> bool:
        return self.weights() <= {weight}

    def multiplicity(self, weight: int, chi: Character) -> int:
        return self.mult.get((weight, chi), 0)

    def restrict(self, keep: Callable[[int, Character], bool]) -> GradedVirtualModule:
        return GradedVirtualModule(self.params, {k: m for k, m in self.mult.items() if keep(*k)})

    def graded_piece(self, weight: int) -> GradedVirtualModule:
        return self.restrict(lambda w, _: w == weight)

    def shift_weights(self, shift: int) -> GradedVirtualModule:
        return GradedVirtualModule(self.params, {(w + shift, chi): m for (w, chi), m in self.mult.items()})

    def dims_by_weight(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (w, _), m in self.mult.items():
            out[w] = out.get(w, 0) + m
        return dict(sorted(out.items()))


@dataclass(frozen=True)
class ProjectorSpec:
    """An idempotent in the group algebra, described by the characters it keeps.

    ``averaging`` is (1/|G|) sum_g g, which keeps only the trivial character.
    ``character-sum`` is sum of p_chi over ``char_support``.
    """

    kind: str
    char_support: CharacterSet

    def __post_init__(self):
        if self.kind not in (AVERAGING, CHARACTER_SUM):
            raise ValueError(f"unknown projector kind {self.kind!r}")
        if self.kind == AVERAGING and set(self.char_support) != {self.params.trivial}:
            raise ValueError("the averaging projector is supported on the trivial character only")

    @property
    def params(self) -> FermatParams:
        return self.char_support.params

    @property
    def scalar(self) -> int:
        """|G| = d^(n+1): the factor by which the unnormalized sum of g acts on invariants."""
        return self.params.group_order

    def complement(self, max_enum: int = DEFAULT_MAX_ENUM) -> ProjectorSpec:
        rest = enumerate_dual_group(self.params, max_enum) - self.char_support
        return ProjectorSpec(CHARACTER_SUM, rest)


def averaging_projector(params: FermatParams) -> ProjectorSpec:
    return ProjectorSpec(AVERAGING, CharacterSet(params, (params.trivial,)))


def character_sum_projector(
    params: FermatParams,
    index_sets: Iterable[Iterable[int]],
    max_enum: int = DEFAULT_MAX_ENUM,
) -> ProjectorSpec:
    """Sum of p_chi over the union of B_I for the given index sets.

    The union is taken as a set so the result stays idempotent.  Raises if the
    support meets A_d^n, since such a projector could not separate the middle
    cohomology from the support cohomology.
    """
    support = CharacterSet(params, ())
    for I in index_sets:
        support = support | set_B(params, I, max_enum)
    if not support.isdisjoint(set_A(params, max_enum)):
        raise ValueError("character-sum support must avoid A_d^n")
    return ProjectorSpec(CHARACTER_SUM, support)


def module_H_middle(
    params: FermatParams,
    primitive: bool = True,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> GradedVirtualModule:
    """H^n of F_d^n: one copy of V(chi) per chi in A_d^n, all of weight n.

    With ``primitive=False`` and n even, the class of h^(n/2) is added as a
    copy of the trivial character.
    """
    n = params.n
    mult = {(n, chi): 1 for chi in set_A(params, max_enum)}
    if not primitive and n % 2 == 0:
        mult[(n, params.trivial)] = mult.get((n, params.trivial), 0) + 1
    return GradedVirtualModule(params, mult)


def module_support(params: FermatParams, p: int, max_enum: int = DEFAULT_MAX_ENUM) -> GradedVirtualModule:
    """Cohomology of F_d^n with support on the union of all C_I, |I| = p, in degree 2p.

    For curves each C_i is an orbit of d cusps, an induced representation
    containing exactly the characters of B_i.  For n > 1 each C_I is
    irreducible and G-stable, so G acts trivially on its class.
    """
    n = params.n
    if 2 * p - 1 != n:
        raise UnsupportedCaseError(
            f"2p-1 = {2 * p - 1} != n = {n}: H^(2p-1) of F_d^n vanishes there, "
            "so the extension is trivially split and no support module is built"
        )
    weight = 2 * p
    if n == 1:
        mult: Counter = Counter()
        for i in range(3):
            for chi in set_B(params, {i}, max_enum):
                mult[(weight, chi)] += 1
        return GradedVirtualModule(params, mult)
    return GradedVirtualModule(params, {(weight, params.trivial): comb(n + 2, p)})


def apply_projector(spec: ProjectorSpec, m: GradedVirtualModule) -> GradedVirtualModule:
    """Image of ``m`` under the (normalized) projector: keep the supported characters."""
    if spec.params != m.params:
        raise ParameterMismatchError(f"projector is for {spec.params}, module for {m.params}")
    keep = spec.char_support.as_frozenset()
    return m.restrict(lambda _, chi: chi in keep)


def support_index_sets(params: FermatParams, p: int) -> list[tuple[int, ...]]:
    return list(combinations(range(params.n + 2), p))
