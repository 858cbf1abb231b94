"""Ideals of R = F_p[s, eps]/(eps^2) as canonical submodules of F_p[s]^2.

R is free of rank 2 over F_p[s] with basis (1, eps), so an ideal of R is
exactly an F_p[s]-submodule of F_p[s]^2 closed under the nilpotent
operator e(a, b) = (0, a) given by multiplication by eps.  Submodules of
a rank-2 free module over the PID F_p[s] admit a canonical triangular
(Hermite) basis

    row1 = (f, g)    f monic, deg g < deg h when both pivots exist
    row2 = (0, h)    h monic

with (0, 0) standing in for a missing pivot row.  Canonical bases make
ideal equality a tuple comparison, colength deg f + deg h, and
intersection a small syzygy computation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfpoly import Poly, is_prime, xgcd

_PRIME_CAP = 2**31


class ZeroIdeal(ValueError):
    """Every supplied generator vanished."""


class RankDeficient(ValueError):
    """Operation needs a generically rank-2 ideal (finite colength)."""


@dataclass(frozen=True)
class EpsPoly:
    """Element a + b*eps of F_p[s, eps]/(eps^2)."""

    one: Poly
    eps: Poly

    def __post_init__(self) -> None:
        if self.one.p != self.eps.p:
            raise ValueError("mixed moduli in the two parts")

    @staticmethod
    def of(p: int, one: tuple[int, ...] | list[int] = (), eps: tuple[int, ...] | list[int] = ()) -> EpsPoly:
        return EpsPoly(Poly.of(p, one), Poly.of(p, eps))

    @property
    def p(self) -> int:
        return self.one.p

    @property
    def is_zero(self) -> bool:
        return self.one.is_zero and self.eps.is_zero

    def __add__(self, other: EpsPoly) -> EpsPoly:
        return EpsPoly(self.one + other.one, self.eps + other.eps)

    def __neg__(self) -> EpsPoly:
        return EpsPoly(-self.one, -self.eps)

    def __sub__(self, other: EpsPoly) -> EpsPoly:
        return self + (-other)

    def __mul__(self, other: EpsPoly | Poly | int) -> EpsPoly:
        if isinstance(other, EpsPoly):
            # eps^2 = 0 kills the eps*eps cross term
            return EpsPoly(self.one * other.one, self.one * other.eps + self.eps * other.one)
        return EpsPoly(self.one * other, self.eps * other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.eps.is_zero:
            return str(self.one)
        if self.one.is_zero:
            return f"({self.eps})*eps"
        return f"({self.one}) + ({self.eps})*eps"


def _echelon(
    p: int, rows: list[tuple[Poly, Poly]]
) -> tuple[tuple[Poly, Poly], tuple[Poly, Poly], list[tuple[Poly, ...]]]:
    """Unimodular row reduction of a k-by-2 polynomial matrix.

    Returns (row1, row2, kernel): row1 = (f, g) carries the column-0
    pivot, row2 = (0, h) the column-1 pivot, either may be (0, 0), and
    kernel is a basis of the left kernel of the input matrix in
    input-row coordinates.  Every operation applied is invertible over
    F_p[s], which is what makes the zeroed rows' tags a kernel *basis*
    rather than just members.
    """
    zero = Poly.zero(p)
    work = [[r[0], r[1]] for r in rows]
    k = len(work)
    tags = [[Poly.one(p) if i == j else zero for j in range(k)] for i in range(k)]

    def combine(i: int, j: int, col: int) -> None:
        # 2x2 transform of rows i, j with determinant 1: row i picks up
        # the gcd in `col`, row j's entry there becomes 0.
        a, b = work[i][col], work[j][col]
        g, u, v = xgcd(a, b)
        qa, qb = a // g, b // g
        for store in (work, tags):
            ri, rj = store[i], store[j]
            store[i] = [u * x + v * y for x, y in zip(ri, rj)]
            store[j] = [qa * y - qb * x for x, y in zip(ri, rj)]

    def scale(i: int, unit: int) -> None:
        for store in (work, tags):
            store[i] = [x * unit for x in store[i]]

    live = [i for i in range(k) if not work[i][0].is_zero]
    while len(live) > 1:
        combine(live[0], live[1], 0)
        live = [i for i in live if not work[i][0].is_zero]
    piv0 = live[0] if live else None

    live = [i for i in range(k) if i != piv0 and not work[i][1].is_zero]
    while len(live) > 1:
        combine(live[0], live[1], 1)
        live = [i for i in live if not work[i][1].is_zero]
    piv1 = live[0] if live else None

    if piv0 is not None:
        scale(piv0, pow(work[piv0][0].lc, p - 2, p))
    if piv1 is not None:
        scale(piv1, pow(work[piv1][1].lc, p - 2, p))
        if piv0 is not None:
            q = work[piv0][1] // work[piv1][1]
            for store in (work, tags):
                store[piv0] = [x - q * y for x, y in zip(store[piv0], store[piv1])]

    row1 = (work[piv0][0], work[piv0][1]) if piv0 is not None else (zero, zero)
    row2 = (work[piv1][0], work[piv1][1]) if piv1 is not None else (zero, zero)
    kernel = [tuple(tags[i]) for i in range(k) if work[i][0].is_zero and work[i][1].is_zero]
    return row1, row2, kernel


@dataclass(frozen=True)
class EpsIdeal:
    """Canonical form of a nonzero ideal of F_p[s, eps]/(eps^2)."""

    p: int
    row1: tuple[Poly, Poly]
    row2: tuple[Poly, Poly]

    @property
    def f(self) -> Poly:
        """1-part pivot; the ideal meets F_p[s]*1 + F_p[s]*eps in f's multiples."""
        return self.row1[0]

    @property
    def g(self) -> Poly:
        return self.row1[1]

    @property
    def h(self) -> Poly:
        """eps-part pivot: the ideal's intersection with eps*F_p[s] is (h*eps)."""
        return self.row2[1]

    def contains(self, x: EpsPoly) -> bool:
        """Membership by reduction against the triangular basis."""
        a, b = x.one, x.eps
        if not self.f.is_zero:
            if not (a % self.f).is_zero:
                return False
            b = b - (a // self.f) * self.g
        elif not a.is_zero:
            return False
        if self.h.is_zero:
            return b.is_zero
        return (b % self.h).is_zero


def ideal_from_generators(p: int, gens: list[EpsPoly]) -> EpsIdeal:
    """Ideal generated by `gens`, in canonical form.

    The F_p[s]-span of the generators together with their images under
    e(a, b) = (0, a) is already closed under e (e is F_p[s]-linear and
    e*e = 0), so one closure pass suffices.
    """
    if not is_prime(p) or p > _PRIME_CAP:
        raise ValueError(f"p must be a prime <= 2^31, got {p}")
    rows: list[tuple[Poly, Poly]] = []
    zero = Poly.zero(p)
    for x in gens:
        if x.p != p:
            raise ValueError("generator lives over a different prime")
        if x.is_zero:
            continue
        rows.append((x.one, x.eps))
        if not x.one.is_zero:
            rows.append((zero, x.one))
    if not rows:
        raise ZeroIdeal("all generators are zero")
    row1, row2, _ = _echelon(p, rows)
    ideal = EpsIdeal(p, row1, row2)
    # closure witness: eps * row1 must land back inside
    assert ideal.contains(EpsPoly(zero, row1[0]))
    return ideal


def ideal_equals(a: EpsIdeal, b: EpsIdeal) -> bool:
    if a.p != b.p:
        raise ValueError("ideals live over different primes")
    return a == b


def ideal_intersect(a: EpsIdeal, b: EpsIdeal) -> EpsIdeal:
    """Intersection via the left kernel of the stacked basis matrix.

    A combination x of a's rows equals a combination of b's rows exactly
    when (x, -y) kills the stacked matrix, so projecting a kernel basis
    onto the a-rows generates the intersection.
    """
    if a.p != b.p:
        raise ValueError("ideals live over different primes")
    p = a.p
    a_rows = [r for r in (a.row1, a.row2) if not (r[0].is_zero and r[1].is_zero)]
    b_rows = [r for r in (b.row1, b.row2) if not (r[0].is_zero and r[1].is_zero)]
    _, _, kernel = _echelon(p, a_rows + b_rows)
    gens = []
    for tag in kernel:
        acc = EpsPoly.of(p)
        for coef, row in zip(tag[: len(a_rows)], a_rows):
            acc = acc + EpsPoly(coef * row[0], coef * row[1])
        gens.append(acc)
    out = ideal_from_generators(p, gens)
    assert all(
        side.contains(EpsPoly(*row)) for side in (a, b) for row in (out.row1, out.row2)
    )
    return out


def ideal_colength(a: EpsIdeal) -> int:
    """dim_{F_p} of R modulo the ideal; finite iff both pivots exist."""
    if a.f.is_zero or a.h.is_zero:
        raise RankDeficient("infinite colength: ideal is not generically rank 2")
    return a.f.degree + a.h.degree


def ideal_scale(x: EpsPoly, a: EpsIdeal) -> EpsIdeal:
    """The ideal x*a for a non-zerodivisor x (nonzero 1-part)."""
    if x.one.is_zero:
        raise ValueError("scaling by a zero divisor collapses the rank")
    gens = [x * EpsPoly(*a.row1), x * EpsPoly(*a.row2)]
    return ideal_from_generators(a.p, gens)


def local_index_at(a: EpsIdeal, c: int) -> int:
    """Index of the stalk at s = c: how far the ideal is from being
    locally principal there (0 exactly at Cartier points).

    Measured as ord_c(f) - ord_c(h); nonnegative because closure under
    the eps action forces h | f.
    """
    if a.f.is_zero or a.h.is_zero:
        raise RankDeficient("local index needs a generically rank-2 ideal")
    n = a.f.ord_at(c % a.p) - a.h.ord_at(c % a.p)
    assert n >= 0
    return n
