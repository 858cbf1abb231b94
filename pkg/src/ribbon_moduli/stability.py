"""Slope stability of descriptors and their semistable limit classes.

For rank-1 descriptors the verdict is a pure threshold on the total
local index against 1 + g - 2*gbar: strictly below is stable, equality
strictly semistable, above unstable.  The same verdicts fall out of
comparing exact rational slopes of the canonical sub/quotient pair,
which is what the property tests cross-check; only the order relations
among slopes carry meaning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    GLBDescriptor,
    RibbonInvariants,
    UNKNOWN,
    VBDescriptor,
    glb_invariants,
)


class StabilityVerdict(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class SelfClass:
    """Limit class of a stable point: the point itself."""

    point: GLBDescriptor | VBDescriptor


@dataclass(frozen=True)
class SplitClass:
    """Limit class of a strictly semistable point: the degrees of its two
    line-bundle factors on the reduction, subsheaf first."""

    subsheaf_degree: int
    quotient_degree: int


GrClass = SelfClass | SplitClass


def classify_glb(ribbon: RibbonInvariants, glb: GLBDescriptor) -> StabilityVerdict:
    b = glb.total_index
    if b < ribbon.index_bound:
        return StabilityVerdict.STABLE
    if b == ribbon.index_bound:
        return StabilityVerdict.STRICTLY_SEMISTABLE
    return StabilityVerdict.UNSTABLE


def classify_vb(ribbon: RibbonInvariants, vb: VBDescriptor):
    """Verdict for a rank-2 pushdown; UNKNOWN when the descriptor does not
    carry enough data (gbar >= 1 with unspecified status)."""
    if ribbon.gbar == 0:
        a, b = vb.split
        return (
            StabilityVerdict.STRICTLY_SEMISTABLE if a == b else StabilityVerdict.UNSTABLE
        )
    if vb.status == "unspecified":
        return UNKNOWN
    return StabilityVerdict(vb.status)


def slopes(
    ribbon: RibbonInvariants, degL: int, glb: GLBDescriptor
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact slopes (total, quotient, subsheaf) for the given polarization.

    quotient > subsheaf is stability, equality strict semistability; the
    three always satisfy quotient + subsheaf = 2 * total.  No floats.
    """
    if degL < 1:
        raise ValueError(f"polarization degree must be >= 1, got {degL}")
    d, b = glb.d, glb.total_index
    g, gbar = ribbon.g, ribbon.gbar
    return (
        Fraction(d + 1 - g, degL),
        Fraction(d - b + 2 - 2 * gbar, degL),
        Fraction(d + b + 2 * gbar - 2 * g, degL),
    )


def gr_class(ribbon: RibbonInvariants, point: GLBDescriptor | VBDescriptor) -> GrClass:
    """S-equivalence class: the point itself when stable, the split pair of
    line-bundle degrees when strictly semistable, an error otherwise."""
    if isinstance(point, GLBDescriptor):
        verdict = classify_glb(ribbon, point)
        if verdict is StabilityVerdict.STABLE:
            return SelfClass(point)
        if verdict is StabilityVerdict.STRICTLY_SEMISTABLE:
            inv = glb_invariants(ribbon, point)
            return SplitClass(inv.subsheaf_degree, inv.quotient_degree)
        raise ValueError("unstable points have no limit class here")
    verdict = classify_vb(ribbon, point)
    if verdict is StabilityVerdict.STABLE:
        return SelfClass(point)
    if verdict is StabilityVerdict.STRICTLY_SEMISTABLE:
        if point.e % 2 != 0:
            raise ValueError("a strictly semistable rank-2 degree must be even")
        return SplitClass(point.e // 2, point.e // 2)
    raise ValueError("point must classify stable or strictly semistable")
