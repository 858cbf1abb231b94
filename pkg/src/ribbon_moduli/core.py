"""Numerical bookkeeping for ribbons and rank-1 sheaf descriptors on them.

A ribbon is reduced here to the pair (g, gbar): the arithmetic genus of
the doubled curve and the genus of its reduction.  Those two numbers
force the degree of the nilpotent line bundle on the reduction, so they
are the whole discrete story.  A rank-1 torsion-free sheaf is described
by its degree d plus the multiset of local indices measuring how far it
sits from being a line bundle; a pushed-down rank-2 bundle by its degree
e on the reduction (with a split type when the reduction is rational).
"""

from __future__ import annotations

from dataclasses import dataclass


class ParityViolation(ValueError):
    """Degree minus total index must be even."""


class NonPositiveIndex(ValueError):
    """Local indices are >= 1 by definition."""


class _Unknown:
    """Singleton for values the discrete invariants do not determine."""

    _instance = None

    def __new__(cls) -> _Unknown:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"


UNKNOWN = _Unknown()

VB_STATUSES = ("stable", "strictly-semistable", "unstable", "unspecified")


@dataclass(frozen=True)
class RibbonInvariants:
    g: int
    gbar: int

    @property
    def degN(self) -> int:
        """Degree of the nilpotent line bundle on the reduction."""
        return 2 * self.gbar - 1 - self.g

    @property
    def index_bound(self) -> int:
        """Total index at which semistability becomes strict; stability
        is strict inequality below this."""
        return 1 + self.g - 2 * self.gbar

    def vb_degree(self, d: int) -> int:
        """Degree e on the reduction of a rank-2 pushdown matching rank-1
        degree d (same Euler characteristic)."""
        return d + 2 * self.gbar - self.g - 1


@dataclass(frozen=True)
class GLBDescriptor:
    """Rank-1 torsion-free descriptor: degree plus local indices."""

    d: int
    indices: tuple[int, ...]

    @property
    def total_index(self) -> int:
        return sum(self.indices)


@dataclass(frozen=True)
class VBDescriptor:
    """Pushed-down rank-2 bundle of degree e on the reduction."""

    e: int
    split: tuple[int, int] | None
    status: str


def mk_ribbon(g: int, gbar: int) -> RibbonInvariants:
    if gbar < 0:
        raise ValueError(f"reduction genus must be >= 0, got {gbar}")
    return RibbonInvariants(g=g, gbar=gbar)


def mk_glb(ribbon: RibbonInvariants, d: int, indices) -> GLBDescriptor:
    """Validated descriptor; indices are canonicalized weakly decreasing.

    The ribbon fixes conventions only: no inequality ties (d, indices)
    to (g, gbar), unstable descriptors are perfectly valid.
    """
    ix = tuple(sorted((int(b) for b in indices), reverse=True))
    if any(b < 1 for b in ix):
        raise NonPositiveIndex(f"local indices must be >= 1, got {ix}")
    if (d - sum(ix)) % 2 != 0:
        raise ParityViolation(f"d - b = {d} - {sum(ix)} must be even")
    return GLBDescriptor(d=d, indices=ix)


def mk_vb(
    ribbon: RibbonInvariants,
    e: int,
    split: tuple[int, int] | None = None,
    status: str = "unspecified",
) -> VBDescriptor:
    """Descriptor of a pushed-down rank-2 bundle of degree e.

    Over a rational reduction every rank-2 bundle splits, so the split
    type is required there and already decides the verdict.  For
    gbar >= 1 stability is genuinely extra data, carried as `status`.
    """
    if status not in VB_STATUSES:
        raise ValueError(f"status must be one of {VB_STATUSES}, got {status!r}")
    if ribbon.gbar == 0:
        if split is None:
            raise ValueError("rational reduction: split type (a, b) is required")
        a, b = split
        if a + b != e:
            raise ValueError(f"split {split} does not sum to e = {e}")
        forced = "strictly-semistable" if a == b else "unstable"
        if status not in ("unspecified", forced):
            raise ValueError(f"split {split} forces status {forced!r}, got {status!r}")
        return VBDescriptor(e=e, split=(a, b), status=forced)
    if split is not None:
        raise ValueError("split type only makes sense over a rational reduction")
    return VBDescriptor(e=e, split=None, status=status)


@dataclass(frozen=True)
class GLBInvariants:
    """Derived numerics of a rank-1 descriptor on a fixed ribbon."""

    total_index: int
    blowup_genus: int
    quotient_degree: int
    subsheaf_degree: int
    vb_degree: int


def glb_invariants(ribbon: RibbonInvariants, glb: GLBDescriptor) -> GLBInvariants:
    """Blow-up genus and the degrees of the canonical length-2 filtration.

    quotient_degree is the degree of the induced line bundle on the
    reduction, subsheaf_degree that of the nilpotent subsheaf; the two
    always add up to the matching rank-2 degree.
    """
    b = glb.total_index
    quotient = (glb.d - b) // 2
    subsheaf = (glb.d + b) // 2 + 2 * ribbon.gbar - 1 - ribbon.g
    e = ribbon.vb_degree(glb.d)
    assert quotient + subsheaf == e
    return GLBInvariants(
        total_index=b,
        blowup_genus=ribbon.g - b,
        quotient_degree=quotient,
        subsheaf_degree=subsheaf,
        vb_degree=e,
    )


def hilbert_poly(ribbon: RibbonInvariants, degL: int, d: int) -> tuple[int, int]:
    """(leading, constant) coefficients of t |-> degL*t + (d + 1 - g)."""
    if degL < 1:
        raise ValueError(f"polarization degree must be >= 1, got {degL}")
    return (degL, d + 1 - ribbon.g)


def jacobian_dim(ribbon: RibbonInvariants):
    """Dimension of the group of line bundles of fixed total degree.

    g when the nilpotent line bundle has negative degree; over a
    rational reduction the non-negative-degree case is forced too.
    Anything else is not determined by (g, gbar) alone.
    """
    if ribbon.degN < 0:
        return ribbon.g
    if ribbon.gbar == 0:
        return ribbon.g + max(0, ribbon.degN + 1)
    return UNKNOWN
