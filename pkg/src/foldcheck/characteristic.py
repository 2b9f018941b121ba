"""Wu and Stiefel-Whitney classes, bundle data, and obstruction statuses.

The Wu class of a Poincare algebra is the unique total class v with
``<v x, [M]> = <Sq x, [M]>`` for all x; Wu's theorem then gives the total
Stiefel-Whitney class as ``w = Sq(v)``, so w is computable from the ring
structure and its Steenrod squares alone.  Twisted integral classes (the
class W_3 and the secondary obstruction z) are never represented by
cocycles; they are reported as a TriState decided from their mod-2 shadows
plus whatever integral facts are on record.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    ClassZ2,
    GradedAlgebra,
    TotalClass,
    evaluate_top,
    invert_total,
    steenrod_square,
    total_sq,
)
from .errors import InvariantViolation
from .gf2 import gf2_solve
from .tristate import P1Data, TriState, p1_difference

__all__ = [
    "wu_total",
    "wu_classes",
    "stiefel_whitney_from_wu",
    "dual_classes",
    "StructureFlags",
    "structure_flags",
    "w3_shadow",
    "w3_twisted_status",
    "BundleDescriptor",
    "trivial_descriptor",
    "tangent_descriptor",
    "virtual_difference",
    "z_status",
]


# ---------------------------------------------------------------------------
# Wu classes and Stiefel-Whitney classes
# ---------------------------------------------------------------------------


def wu_total(algebra: GradedAlgebra) -> TotalClass:
    """Solve the Wu relations ``<v_k x, [M]> = <Sq^k x, [M]>`` for v.

    For each k the relation is a linear system over the nondegenerate
    Poincare pairing, so v_k is unique; v_k = 0 above the middle degree
    because Sq^k kills classes of degree below k.
    """
    n = algebra.top_degree
    comps = [np.zeros(algebra.rank(d), dtype=np.uint8) for d in range(n + 1)]
    comps[0] = algebra.unit.copy()
    for k in range(1, n // 2 + 1):
        pairing = (
            np.einsum("ijo,o->ij", algebra.mult_block(k, n - k), algebra.fundamental) % 2
        )
        rhs = (algebra.sq_block(k, n - k) @ algebra.fundamental) % 2
        v = gf2_solve(pairing.T, rhs)
        if v is None:
            raise InvariantViolation("wu-solve", f"no class v_{k} satisfies the Wu relations")
        comps[k] = v
    return TotalClass(algebra, tuple(comps))


def wu_classes(x) -> TotalClass:
    """Wu classes of a manifold record or of a bare algebra."""
    return wu_total(getattr(x, "algebra", x))


def stiefel_whitney_from_wu(x) -> TotalClass:
    """Total Stiefel-Whitney class ``w = Sq(v)``.

    When the argument carries a stored ``w`` (manifold records do), the
    derived class is checked against it and a mismatch is an invariant
    violation, not a silent preference for either side.
    """
    w = total_sq(wu_classes(x))
    stored = getattr(x, "w", None)
    if isinstance(stored, TotalClass):
        for d, (ours, theirs) in enumerate(zip(w.components, stored.components)):
            if not np.array_equal(ours, theirs):
                raise InvariantViolation(
                    "wu-consistency",
                    f"stored w_{d} disagrees with the Wu-derived Stiefel-Whitney class",
                )
    return w


def dual_classes(x) -> TotalClass:
    """Dual Stiefel-Whitney classes: the inverse of w in the total ring."""
    if isinstance(x, TotalClass):
        return invert_total(x)
    w = getattr(x, "w", None)
    if not isinstance(w, TotalClass):
        w = stiefel_whitney_from_wu(x)
    return invert_total(w)


# ---------------------------------------------------------------------------
# structure flags
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureFlags:
    """Tangential structures readable from w_1 and w_2."""

    orientable: bool
    spin: bool
    pin: bool


def _total_of(x) -> TotalClass:
    if isinstance(x, TotalClass):
        return x
    w = getattr(x, "w", None)
    if w is None:
        w = getattr(x, "w_total", None)
    if not isinstance(w, TotalClass):
        raise TypeError("expected a manifold, a bundle descriptor, or a total class")
    return w


def structure_flags(x) -> StructureFlags:
    """Orientable iff w_1 = 0; pin iff w_2 = 0; spin iff both vanish."""
    w = _total_of(x)
    w1_zero = w.component(1).is_zero()
    w2_zero = w.component(2).is_zero()
    return StructureFlags(orientable=w1_zero, spin=w1_zero and w2_zero, pin=w2_zero)


# ---------------------------------------------------------------------------
# the twisted class W_3
# ---------------------------------------------------------------------------


def w3_shadow(w: TotalClass) -> ClassZ2:
    """Mod-2 reduction ``Sq^1 w_2 + w_1 w_2`` of the twisted class W_3."""
    w1 = w.component(1)
    w2 = w.component(2)
    return steenrod_square(1, w2) + w1 * w2


def w3_twisted_status(w: TotalClass, stored: TriState | None = None) -> TriState:
    """Vanishing status of W_3, the twisted integral Bockstein of w_2.

    A nonzero mod-2 shadow certifies W_3 != 0, and w_2 = 0 forces W_3 = 0.
    In between, a recorded status is passed through; a recorded status that
    contradicts either certificate is rejected.
    """
    if w.algebra.top_degree < 3:
        if stored is not None and stored.is_nonzero:
            raise InvariantViolation("w3-twisted", "nonzero W_3 recorded but H^3 = 0")
        return TriState.zero("H^3 = 0")
    if not w3_shadow(w).is_zero():
        if stored is not None and stored.is_zero:
            raise InvariantViolation(
                "w3-twisted", "recorded W_3 = 0 but Sq^1 w_2 + w_1 w_2 != 0"
            )
        return TriState.nonzero("Sq^1 w_2 + w_1 w_2 != 0")
    if w.component(2).is_zero():
        if stored is not None and stored.is_nonzero:
            raise InvariantViolation("w3-twisted", "recorded W_3 != 0 but w_2 = 0")
        return TriState.zero("w_2 = 0")
    if stored is not None and not stored.is_unknown:
        return stored
    return TriState.unknown("mod-2 shadow vanishes; integral Bockstein undetermined")


# ---------------------------------------------------------------------------
# bundle descriptors and the secondary obstruction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BundleDescriptor:
    """Stable data of a vector bundle over a manifold's cohomology algebra."""

    rank: int
    w_total: TotalClass
    p1: P1Data
    orientable: bool

    def __post_init__(self):
        if self.rank < 0:
            raise InvariantViolation("bundle-descriptor", "negative rank")
        if not np.array_equal(self.w_total.components[0], self.w_total.algebra.unit):
            raise InvariantViolation("bundle-descriptor", "w_0 must be the unit")
        if self.orientable != self.w_total.component(1).is_zero():
            raise InvariantViolation(
                "bundle-descriptor", "orientability flag contradicts w_1"
            )


def trivial_descriptor(algebra: GradedAlgebra, rank: int) -> BundleDescriptor:
    """The trivial rank-``rank`` bundle: w = 1 and p_1 = 0."""
    return BundleDescriptor(
        rank=rank,
        w_total=TotalClass.unit_total(algebra),
        p1=P1Data.integer(0, "trivial bundle"),
        orientable=True,
    )


def tangent_descriptor(m) -> BundleDescriptor:
    """Descriptor of the tangent bundle of a manifold record."""
    return BundleDescriptor(rank=m.dim, w_total=m.w, p1=m.p1, orientable=m.orientable)


def virtual_difference(m, xi: BundleDescriptor) -> tuple[TotalClass, P1Data]:
    """w and p_1 data of the formal difference ``TM - xi``.

    The Whitney-class part is exact: ``w(TM - xi) = w(TM) * w(xi)^{-1}``.
    The Pontrjagin part follows the tri-valued difference rules.
    """
    if xi.w_total.algebra is not m.algebra:
        raise ValueError("bundle descriptor does not live over this manifold's cohomology")
    w_diff = m.w * invert_total(xi.w_total)
    return w_diff, p1_difference(m.p1, xi.p1)


def z_status(
    dim: int,
    orientable: bool,
    w_diff: TotalClass,
    p1: P1Data,
    torsion_free: bool = False,
) -> TriState:
    """Vanishing status of the secondary obstruction z (2z = p_1, z = w_4 mod 2).

    Only defined for bundles admitting a pin structure, i.e. with w_2 = 0.
    On a 4-manifold z reduces to p_1 (orientable) or w_4 (non-orientable);
    in dimensions 5-7 a nonzero w_4 certifies z != 0, a known nonzero p_1
    certifies z != 0, and z = 0 needs w_4 = 0, p_1 = 0 and a torsion-free
    degree-4 integral group.
    """
    if not w_diff.component(2).is_zero():
        raise InvariantViolation(
            "pin structure required", "w_2 of the virtual bundle does not vanish"
        )
    if dim <= 3:
        return TriState.zero("H^4 = 0")
    w4 = w_diff.component(4)
    if dim == 4:
        if orientable:
            if p1.is_known_zero:
                return TriState.zero(f"p_1 = {p1}")
            if p1.is_known_nonzero:
                return TriState.nonzero(f"p_1 = {p1} != 0")
            return TriState.unknown("p_1 undetermined")
        if evaluate_top(w4):
            return TriState.nonzero("w_4 != 0")
        return TriState.zero("w_4 = 0")
    if 5 <= dim <= 7:
        if not w4.is_zero():
            return TriState.nonzero("z = w_4 mod 2 and w_4 != 0")
        if p1.is_known_nonzero:
            return TriState.nonzero("2z = p_1 != 0")
        if p1.is_known_zero and torsion_free:
            return TriState.zero("w_4 = 0, p_1 = 0, degree-4 torsion-free")
        return TriState.unknown("w_4 = 0 but the torsion part of z is undetermined")
    return TriState.unknown(f"secondary obstruction undetermined in dimension {dim}")
