"""Flatness spot-checks for two explicit one-parameter ideal families.

Both families live in F_p[s, eps]/(eps^2); a unit t gives the generic
fiber and t -> 0 the special one.  The first family pulls a point of
index b0 and a transverse double point together into a single point of
index b0 + 2; the second absorbs an index-1 point into an index-b1
point.  All checks run through the exact Hermite-form ideal engine:
colengths must stay constant across fibers and the local indices must
sit where the family says they sit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .epsilon import (
    EpsPoly,
    ideal_colength,
    ideal_equals,
    ideal_from_generators,
    ideal_intersect,
    local_index_at,
)
from .gfpoly import Poly


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    name: str
    params: dict[str, int]
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def _eq_check(name: str, got: object, want: object) -> Check:
    return Check(name, got == want, f"got {got}, want {want}")


def verify_deformation_I(b0: int, p: int, t: int) -> VerifyReport:
    """Collide an index-b0 point at the origin with a double point at t.

    The generic fiber is generated by

        eps*(s-t),  s^b0*(eps - t^(b0+1)*(s-t)),  s^b0*(s-t)^2,
        eps - t*s^(b0+1) + t^2*s^b0

    and must (i) factor as (eps, s^b0) intersected with the translated
    double-point ideal (eps - t^(b0+1)*(s-t), (s-t)^2), (ii) carry the
    same colength b0 + 2 as the limit ideal (eps, s^(b0+2)), (iii) show
    local index b0 at the origin and 0 at s = t, and (iv) collapse onto
    the limit ideal when t is substituted by 0.
    """
    if b0 < 0:
        raise ValueError("b0 must be >= 0")
    if t % p == 0:
        raise ValueError("t must be a unit of F_p")
    zero = Poly.zero(p)
    one = Poly.one(p)
    x = Poly.x(p)

    def fiber(tv: int) -> list[EpsPoly]:
        s_b0 = x**b0
        lin = x - Poly.const(p, tv)
        tc = pow(tv, b0 + 1, p)
        return [
            EpsPoly(zero, lin),
            EpsPoly(s_b0 * lin * (-tc), s_b0),
            EpsPoly(s_b0 * lin * lin, zero),
            EpsPoly(x ** (b0 + 1) * (-tv) + s_b0 * (tv * tv), one),
        ]

    family = ideal_from_generators(p, fiber(t))
    origin_factor = ideal_from_generators(p, [EpsPoly(zero, one), EpsPoly(x**b0, zero)])
    lin = x - Poly.const(p, t)
    tc = pow(t, b0 + 1, p)
    double_point = ideal_from_generators(
        p, [EpsPoly(lin * (-tc), one), EpsPoly(lin * lin, zero)]
    )
    limit = ideal_from_generators(p, [EpsPoly(zero, one), EpsPoly(x ** (b0 + 2), zero)])

    checks = (
        Check(
            "generic-fiber-splits",
            ideal_equals(family, ideal_intersect(origin_factor, double_point)),
            "family ideal vs intersection of the two point factors",
        ),
        _eq_check("generic-colength", ideal_colength(family), b0 + 2),
        _eq_check("special-colength", ideal_colength(limit), b0 + 2),
        Check(
            "special-fiber-limit",
            ideal_equals(ideal_from_generators(p, fiber(0)), limit),
            f"t=0 generators vs (eps, s^{b0 + 2})",
        ),
        _eq_check("index-at-origin", local_index_at(family, 0), b0),
        _eq_check("index-at-t", local_index_at(family, t), 0),
    )
    return VerifyReport("deform1", {"b0": b0, "p": p, "t": t % p}, checks)


def verify_deformation_II(b1: int, p: int, t: int) -> VerifyReport:
    """Absorb an index-1 point at s = t into an index-b1 point at 0.

    The generic fiber (eps, s^b1*(s-t)) has indices b1 and 1 at the two
    points; at t = 0 it becomes (eps, s^(b1+1)).  Colength stays b1 + 1
    on both fibers.
    """
    if b1 < 1:
        raise ValueError("b1 must be >= 1")
    if t % p == 0:
        raise ValueError("t must be a unit of F_p")
    zero = Poly.zero(p)
    one = Poly.one(p)
    x = Poly.x(p)

    def fiber(tv: int) -> list[EpsPoly]:
        return [
            EpsPoly(zero, one),
            EpsPoly(x**b1 * (x - Poly.const(p, tv)), zero),
        ]

    family = ideal_from_generators(p, fiber(t))
    limit = ideal_from_generators(p, [EpsPoly(zero, one), EpsPoly(x ** (b1 + 1), zero)])

    checks = (
        _eq_check("index-at-origin", local_index_at(family, 0), b1),
        _eq_check("index-at-t", local_index_at(family, t), 1),
        Check(
            "special-fiber-limit",
            ideal_equals(ideal_from_generators(p, fiber(0)), limit),
            f"t=0 generators vs (eps, s^{b1 + 1})",
        ),
        _eq_check("generic-colength", ideal_colength(family), b1 + 1),
        _eq_check("special-colength", ideal_colength(limit), b1 + 1),
    )
    return VerifyReport("deform2", {"b1": b1, "p": p, "t": t % p}, checks)
