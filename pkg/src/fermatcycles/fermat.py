"""Characters of the Fermat hypersurface X_0^d + ... + X_{n+1}^d = 0.

The group G = mu_d^{n+2} / diagonal acts by scaling coordinates.  Its dual
group is the set of residue tuples (a_0, ..., a_{n+1}) mod d with zero sum,
and everything below is residue arithmetic on those tuples; roots of unity
never appear numerically.

A character is stored as a plain ``tuple[int, ...]`` of length n+2 with
entries in ``range(d)``.  Use :func:`character` to validate one coming from
outside.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from fermatcycles.errors import (
    CapacityError,
    DomainError,
    FermatError,
    InvalidIndexError,
)

DEFAULT_MAX_ENUM = 10**7

Character = tuple[int, ...]


@dataclass(frozen=True)
class FermatParams:
    """Degree ``d`` and dimension ``n`` of F_d^n."""

    d: int
    n: int

    def __post_init__(self):
        if not isinstance(self.d, int) or not isinstance(self.n, int):
            raise FermatError("d and n must be integers")
        if self.d < 1:
            raise FermatError(f"degree must be >= 1, got d={self.d}")
        if self.n < 1:
            raise FermatError(f"dimension must be >= 1, got n={self.n}")

    @property
    def num_coords(self) -> int:
        return self.n + 2

    @property
    def group_order(self) -> int:
        """|G| = d^(n+1), which is also the number of characters."""
        return self.d ** (self.n + 1)

    @property
    def trivial(self) -> Character:
        return (0,) * (self.n + 2)


@dataclass(frozen=True)
class HodgeType:
    p: int
    q: int


def character(params: FermatParams, a: Iterable[int]) -> Character:
    """Validate ``a`` as a character of ``params``; residues are reduced mod d."""
    a = tuple(int(x) % params.d for x in a)
    if len(a) != params.num_coords:
        raise FermatError(f"character needs {params.num_coords} entries, got {len(a)}")
    if sum(a) % params.d:
        raise FermatError(f"residues of {a} do not sum to 0 mod {params.d}")
    return a


def negate(params: FermatParams, chi: Character) -> Character:
    return tuple((-x) % params.d for x in chi)


@dataclass(frozen=True)
class CharacterSet:
    """A finite set of characters of one (d, n), kept in lexicographic order."""

    params: FermatParams
    members: tuple[Character, ...]
    _lookup: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_lookup", frozenset(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Character]:
        return iter(self.members)

    def __contains__(self, chi) -> bool:
        return chi in self._lookup

    def as_frozenset(self) -> frozenset:
        return self._lookup

    def _check(self, other: CharacterSet):
        if other.params != self.params:
            raise FermatError("character sets belong to different (d, n)")

    def __or__(self, other: CharacterSet) -> CharacterSet:
        self._check(other)
        return CharacterSet(self.params, self._lookup | other._lookup)

    def __and__(self, other: CharacterSet) -> CharacterSet:
        self._check(other)
        return CharacterSet(self.params, self._lookup & other._lookup)

    def __sub__(self, other: CharacterSet) -> CharacterSet:
        self._check(other)
        return CharacterSet(self.params, self._lookup - other._lookup)

    def isdisjoint(self, other: CharacterSet) -> bool:
        self._check(other)
        return self._lookup.isdisjoint(other._lookup)


def _check_capacity(params: FermatParams, max_enum: int):
    if params.group_order > max_enum:
        raise CapacityError(
            f"d^(n+1) = {params.group_order} exceeds the enumeration limit "
            f"{max_enum}; choose a smaller instance or raise the limit"
        )


def _iter_characters(d: int, n: int, nonzero: bool = False) -> Iterator[Character]:
    # Free coordinates are the first n+1; the last one is forced by the sum.
    residues = range(1, d) if nonzero else range(d)
    for head in itertools.product(residues, repeat=n + 1):
        last = -sum(head) % d
        if nonzero and last == 0:
            continue
        yield head + (last,)


@lru_cache(maxsize=64)
def _dual_group(params: FermatParams) -> CharacterSet:
    return CharacterSet(params, tuple(_iter_characters(params.d, params.n)))


@lru_cache(maxsize=64)
def _set_A(params: FermatParams) -> CharacterSet:
    return CharacterSet(params, tuple(_iter_characters(params.d, params.n, nonzero=True)))


def enumerate_dual_group(params: FermatParams, max_enum: int = DEFAULT_MAX_ENUM) -> CharacterSet:
    """All d^(n+1) characters, lexicographic in the first n+1 coordinates."""
    _check_capacity(params, max_enum)
    return _dual_group(params)


def set_A(params: FermatParams, max_enum: int = DEFAULT_MAX_ENUM) -> CharacterSet:
    """Characters with every coordinate nonzero.

    These index the eigenspaces of primitive middle cohomology.  Generated
    directly over nonzero residues rather than by filtering the dual group.
    """
    _check_capacity(params, max_enum)
    return _set_A(params)


def _normalize_index_set(params: FermatParams, I) -> frozenset:
    I = frozenset(I)
    if not I:
        raise InvalidIndexError("index set must be nonempty")
    bad = sorted(i for i in I if not (isinstance(i, int) and 0 <= i <= params.n + 1))
    if bad:
        raise InvalidIndexError(f"indices {bad} not in {{0, ..., {params.n + 1}}}")
    return I


def set_B(params: FermatParams, I: Iterable[int], max_enum: int = DEFAULT_MAX_ENUM) -> CharacterSet:
    """Characters vanishing at every coordinate in ``I``."""
    I = _normalize_index_set(params, I)
    group = enumerate_dual_group(params, max_enum)
    return CharacterSet(params, tuple(chi for chi in group if all(chi[i] == 0 for i in I)))


def hodge_type(params: FermatParams, chi: Character) -> HodgeType:
    """Hodge type (p, q) of the eigenspace V(chi) for chi in A_d^n.

    q is one less than the sum of the fractional parts a_i/d; with
    representatives in [1, d) that sum is exactly sum(a_i)/d.
    """
    chi = character(params, chi)
    if any(a == 0 for a in chi):
        raise DomainError(f"Hodge type is only assigned to characters with all a_i != 0, got {chi}")
    q = sum(chi) // params.d - 1
    return HodgeType(params.n - q, q)


def hodge_histogram(params: FermatParams, max_enum: int = DEFAULT_MAX_ENUM) -> dict[int, int]:
    """Map q -> number of characters in A_d^n of type (n-q, q), for every q in [0, n]."""
    counts = dict.fromkeys(range(params.n + 1), 0)
    for chi in set_A(params, max_enum):
        counts[sum(chi) // params.d - 1] += 1
    return counts


def griffiths_hodge_number(params: FermatParams, q: int) -> int:
    """Primitive Hodge number h^{n-q,q} of a smooth degree-d hypersurface.

    Counts monomials of degree (q+1)d - n - 2 in n+2 variables with every
    exponent at most d-2 (a basis of the matching graded piece of the Jacobian
    ring of the Fermat polynomial).  Pure bounded-composition counting, kept
    independent of the character machinery so it can serve as a cross-check.
    """
    if not 0 <= q <= params.n:
        raise FermatError(f"q must lie in [0, {params.n}], got {q}")
    d, nvars = params.d, params.n + 2
    target = (q + 1) * d - params.n - 2
    cap = d - 2
    if target < 0 or cap < 0:
        return 0
    # coefficients of (1 + t + ... + t^cap)^nvars up to t^target
    coeffs = [1] + [0] * target
    for _ in range(nvars):
        new = [0] * (target + 1)
        running = 0
        for k in range(target + 1):
            running += coeffs[k]
            if k - cap - 1 >= 0:
                running -= coeffs[k - cap - 1]
            new[k] = running
        coeffs = new
    return coeffs[target]


def expected_size_A(params: FermatParams) -> int:
    """Closed form ((d-1)^(n+2) + (-1)^(n+2) (d-1)) / d for |A_d^n|."""
    d, n = params.d, params.n
    num = (d - 1) ** (n + 2) + (-1) ** (n + 2) * (d - 1)
    assert num % d == 0
    return num // d
