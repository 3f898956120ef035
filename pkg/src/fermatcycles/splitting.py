"""Split-exactness of the localization sequence on F_d^n.

For S the union of the codimension-p linear subvarieties C_I,

    0 -> H^{2p-1}(F) -> H^{2p-1}(F - S) -> ker(H^{2p}_S(F) -> H^{2p}(F)) -> 0

is modelled at the level of weighted G-representations.  The splitting is
certified by exhibiting a G-equivariant projector that kills the middle
cohomology and is the identity on the support cohomology, which is possible
exactly when the two sides carry disjoint characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from fermatcycles.errors import UnsupportedCaseError
from fermatcycles.fermat import DEFAULT_MAX_ENUM, FermatParams
from fermatcycles.gmodule import (
    GradedVirtualModule,
    ProjectorSpec,
    apply_projector,
    averaging_projector,
    character_sum_projector,
    module_H_middle,
    module_support,
    support_index_sets,
)
from fermatcycles.snf import rank

SUPPORTED_LEVELS = (0, 1)
CHECK_NAMES = ("disjointness", "kill-middle", "identity-on-support", "dimension-exactness")


def _check_case(params: FermatParams, p: int, q: int = 0):
    n = params.n
    if n % 2 == 0 or 2 * p - 1 != n:
        raise UnsupportedCaseError(
            f"(n={n}, p={p}): H^(2p-1)(F_d^n) is zero unless 2p-1 = n with n odd, "
            "in which case the extension is trivially split; nothing to verify"
        )
    if q not in SUPPORTED_LEVELS:
        raise UnsupportedCaseError(f"Chow level q={q} not supported (use q in {SUPPORTED_LEVELS})")
    if q >= 1 and n == 1:
        raise UnsupportedCaseError(
            "higher Chow level q >= 1 is excluded for curves: cusps are not fixed by G"
        )


def cycle_class_matrix(params: FermatParams, p: int) -> list[list[int]]:
    """Cycle class map H^{2p}_S(F) -> H^{2p}(F) = Q as a 1 x (#components) matrix.

    H^{2p}(F) is one-dimensional since 2p = n+1 is even and differs from n.
    The class of a component is recorded by its degree: 1 for a cusp, d for
    C_I when n > 1 (a Fermat hypersurface of degree d in its linear span).
    """
    _check_case(params, p)
    if params.n == 1:
        return [[1] * (3 * params.d)]
    return [[params.d] * comb(params.n + 2, p)]


def kernel_of_cycle_class(params: FermatParams, p: int) -> int:
    """Dimension of the null-homologous part of the support cohomology."""
    M = cycle_class_matrix(params, p)
    return len(M[0]) - rank(M)


@dataclass(frozen=True)
class LocalizationModel:
    params: FermatParams
    p: int
    q: int
    middle: GradedVirtualModule
    support: GradedVirtualModule
    kernel_dim: int
    cycle_class_rank: int

    @property
    def middle_weight(self) -> int:
        return 2 * self.p - 1 - self.q

    @property
    def support_weight(self) -> int:
        return 2 * self.p

    def kernel_module(self) -> GradedVirtualModule:
        """Support cohomology minus the image of the cycle class map.

        H^{2p}(F) is the trivial representation, so the image is that many
        copies of the trivial character in weight 2p.
        """
        image = GradedVirtualModule(
            self.params, {(self.support_weight, self.params.trivial): self.cycle_class_rank}
        )
        return self.support - image

    def open_module(self) -> GradedVirtualModule:
        """H^{2p-1} of the complement: middle in the lower weight, kernel in weight 2p."""
        return self.middle + self.kernel_module()


def build_model(
    params: FermatParams, p: int, q: int = 0, max_enum: int = DEFAULT_MAX_ENUM
) -> LocalizationModel:
    """Assemble the localization model for codimension p at Chow level q.

    Levels q >= 1 reuse the q = 0 character bookkeeping; only the weight of
    the middle piece moves down by q.
    """
    _check_case(params, p, q)
    middle = module_H_middle(params, max_enum=max_enum).shift_weights(-q)
    support = module_support(params, p, max_enum)
    M = cycle_class_matrix(params, p)
    r = rank(M)
    return LocalizationModel(
        params=params,
        p=p,
        q=q,
        middle=middle,
        support=support,
        kernel_dim=len(M[0]) - r,
        cycle_class_rank=r,
    )


def witness_projector(params: FermatParams, p: int, max_enum: int = DEFAULT_MAX_ENUM) -> ProjectorSpec:
    """Averaging for n > 1; for curves the sum of p_chi over the union of B_I, |I| = p."""
    if params.n > 1:
        return averaging_projector(params)
    return character_sum_projector(params, support_index_sets(params, p), max_enum)


@dataclass(frozen=True)
class SplitReport:
    verdict: bool
    witness: ProjectorSpec
    checks: tuple[tuple[str, bool], ...]
    scalar: int

    def check(self, name: str) -> bool:
        return dict(self.checks)[name]

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "witness": self.witness.kind,
            "witness_support_size": len(self.witness.char_support),
            "checks": {name: ok for name, ok in self.checks},
            "scalar": self.scalar,
        }


def verify_split(model: LocalizationModel, max_enum: int = DEFAULT_MAX_ENUM) -> SplitReport:
    """Run the four sub-checks; the verdict is their conjunction.

    A failing check produces ``verdict=False``, never an exception.
    """
    witness = witness_projector(model.params, model.p, max_enum)
    middle, support = model.middle, model.support

    disjoint = middle.characters().isdisjoint(support.characters())
    kills_middle = apply_projector(witness, middle).is_zero()
    identity_on_support = apply_projector(witness, support) == support

    kernel = model.kernel_module()
    open_part = model.open_module()
    image = apply_projector(witness, open_part)
    exact = (
        kernel.is_effective()
        and kernel.dim == model.kernel_dim
        and open_part.dim == middle.dim + model.kernel_dim
        and image == kernel
        and image.is_pure(model.support_weight)
        and middle.is_pure(model.middle_weight)
    )

    checks = tuple(zip(CHECK_NAMES, (disjoint, kills_middle, identity_on_support, exact)))
    return SplitReport(
        verdict=all(ok for _, ok in checks),
        witness=witness,
        checks=checks,
        scalar=model.params.group_order,
    )
