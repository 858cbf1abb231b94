"""Canonical-form ideal engine over F_p[s, eps]/(eps^2).

The frozen row expectations below were derived by hand: close the
generators under (a, b) -> (0, a), then triangularize over F_p[s].
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from ribbon_moduli.epsilon import (
    EpsIdeal,
    EpsPoly,
    RankDeficient,
    ZeroIdeal,
    ideal_colength,
    ideal_equals,
    ideal_from_generators,
    ideal_intersect,
    ideal_scale,
    local_index_at,
)
from ribbon_moduli.gfpoly import Poly

P = 5


def eps_polys(p: int = P, max_len: int = 4):
    coeff_lists = st.lists(st.integers(0, p - 1), max_size=max_len)
    return st.builds(lambda a, b: EpsPoly.of(p, a, b), coeff_lists, coeff_lists)


@st.composite
def finite_ideals(draw, p: int = P):
    """Ideals of finite colength: at least one generator has a unit-free
    but nonzero 1-part, which forces both pivots."""
    gens = draw(st.lists(eps_polys(p), max_size=2))
    lead = draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=4))
    if not any(lead):
        lead[-1] = 1
    gens.append(EpsPoly.of(p, one=lead, eps=draw(st.lists(st.integers(0, p - 1), max_size=3))))
    return ideal_from_generators(p, gens)


def test_monomial_pair_rows():
    ideal = ideal_from_generators(P, [EpsPoly.of(P, one=(0, 0, 1)), EpsPoly.of(P, eps=(1,))])
    assert ideal.f.coeffs == (0, 0, 1)
    assert ideal.g.is_zero
    assert ideal.h.coeffs == (1,)
    assert ideal_colength(ideal) == 2
    assert local_index_at(ideal, 0) == 2
    assert local_index_at(ideal, 1) == 0


def test_principal_mixed_generator_rows():
    # (s + eps): closure adds (0, s); reducing the eps column leaves
    # rows (s, 1), (0, s)
    ideal = ideal_from_generators(P, [EpsPoly.of(P, one=(0, 1), eps=(1,))])
    assert ideal.f.coeffs == (0, 1)
    assert ideal.g.coeffs == (1,)
    assert ideal.h.coeffs == (0, 1)
    assert ideal_colength(ideal) == 2
    assert local_index_at(ideal, 0) == 0


def test_partially_twisted_pair():
    ideal = ideal_from_generators(P, [EpsPoly.of(P, one=(0, 0, 1)), EpsPoly.of(P, eps=(0, 1))])
    assert ideal_colength(ideal) == 3
    assert local_index_at(ideal, 0) == 1


def test_unit_ideal():
    unit = ideal_from_generators(P, [EpsPoly.of(P, one=(1,))])
    assert ideal_colength(unit) == 0
    assert unit.contains(EpsPoly.of(P, one=(3, 1), eps=(2,)))


def test_zero_ideal_raises():
    with pytest.raises(ZeroIdeal):
        ideal_from_generators(P, [EpsPoly.of(P)])


def test_rank_deficient_operations_raise():
    thin = ideal_from_generators(P, [EpsPoly.of(P, eps=(0, 1))])
    assert thin.f.is_zero and thin.h.coeffs == (0, 1)
    with pytest.raises(RankDeficient):
        ideal_colength(thin)
    with pytest.raises(RankDeficient):
        local_index_at(thin, 0)


def test_bad_prime_rejected():
    with pytest.raises(ValueError):
        ideal_from_generators(6, [EpsPoly.of(6, one=(1,))])
    with pytest.raises(ValueError):
        ideal_from_generators(2**31 + 11, [EpsPoly.of(2**31 + 11, one=(1,))])


def test_mixed_prime_rejected():
    a = ideal_from_generators(5, [EpsPoly.of(5, one=(1,))])
    b = ideal_from_generators(7, [EpsPoly.of(7, one=(1,))])
    with pytest.raises(ValueError):
        ideal_equals(a, b)
    with pytest.raises(ValueError):
        ideal_intersect(a, b)
    with pytest.raises(ValueError):
        ideal_from_generators(5, [EpsPoly.of(7, one=(1,))])


@given(gens=st.lists(eps_polys(), min_size=1, max_size=4))
def test_generator_order_is_irrelevant(gens):
    if all(g.is_zero for g in gens):
        return
    forward = ideal_from_generators(P, gens)
    backward = ideal_from_generators(P, list(reversed(gens)))
    assert ideal_equals(forward, backward)


@given(ideal=finite_ideals())
def test_canonical_form_is_idempotent(ideal):
    rebuilt = ideal_from_generators(P, [EpsPoly(*ideal.row1), EpsPoly(*ideal.row2)])
    assert rebuilt == ideal


@given(ideal=finite_ideals(), x=eps_polys())
def test_members_absorb_multiplication(ideal, x):
    for row in (ideal.row1, ideal.row2):
        assert ideal.contains(x * EpsPoly(*row))


@given(ideal=finite_ideals())
def test_hnf_shape_invariants(ideal):
    assert ideal.f.lc == 1 and ideal.h.lc == 1
    # eps closure forces h | f, hence the triangular colength formula
    assert (ideal.f % ideal.h).is_zero
    assert ideal.g.degree < ideal.h.degree or ideal.g.is_zero


@settings(max_examples=50)
@given(a=finite_ideals(), b=finite_ideals())
def test_intersection_is_contained_in_both(a, b):
    cap = ideal_intersect(a, b)
    for side in (a, b):
        for row in (cap.row1, cap.row2):
            assert side.contains(EpsPoly(*row))
    assert ideal_colength(cap) >= max(ideal_colength(a), ideal_colength(b))
    assert ideal_equals(ideal_intersect(a, a), a)


def test_intersection_with_unit_is_identity():
    unit = ideal_from_generators(P, [EpsPoly.of(P, one=(1,))])
    other = ideal_from_generators(P, [EpsPoly.of(P, eps=(1,)), EpsPoly.of(P, one=(0, 0, 0, 1))])
    assert ideal_equals(ideal_intersect(unit, other), other)


@settings(max_examples=50)
@given(ideal=finite_ideals(), x=eps_polys())
def test_scaling_adds_colengths_and_fixes_indices(ideal, x):
    if x.one.is_zero:
        with pytest.raises(ValueError):
            ideal_scale(x, ideal)
        return
    scaled = ideal_scale(x, ideal)
    principal = ideal_from_generators(P, [x])
    assert ideal_colength(scaled) == ideal_colength(ideal) + ideal_colength(principal)
    # twisting by a non-zerodivisor moves colength but not the index profile
    for c in range(P):
        assert local_index_at(scaled, c) == local_index_at(ideal, c)


def test_principal_colength_is_twice_the_degree():
    x = EpsPoly.of(P, one=(1, 0, 2, 1), eps=(4, 1))
    principal = ideal_from_generators(P, [x])
    assert ideal_colength(principal) == 2 * x.one.degree


@given(
    roots=st.lists(st.integers(0, P - 1), max_size=4),
    keep=st.lists(st.booleans(), min_size=4, max_size=4),
)
def test_colength_is_the_sum_of_local_contributions(roots, keep):
    # split pivots: every colength unit is visible at some rational point
    f = Poly.from_roots(P, roots)
    h = Poly.from_roots(P, [r for r, k in zip(roots, keep) if k])
    ideal = ideal_from_generators(P, [EpsPoly(f, Poly.zero(P)), EpsPoly(Poly.zero(P), h)])
    assert ideal.f == f and ideal.h == h
    total = sum(f.ord_at(c) + h.ord_at(c) for c in range(P))
    assert ideal_colength(ideal) == total


@given(ideal=finite_ideals())
def test_equality_agrees_with_mutual_containment(ideal):
    # scramble the basis with unimodular-looking combinations
    r1, r2 = EpsPoly(*ideal.row1), EpsPoly(*ideal.row2)
    other = ideal_from_generators(P, [r1 + Poly.x(P) * r2, r2])
    assert ideal_equals(ideal, other)
    bigger = ideal_from_generators(P, [r1, r2, EpsPoly.of(P, eps=(1,))])
    rows_contained = all(
        bigger.contains(EpsPoly(*row)) for row in (ideal.row1, ideal.row2)
    )
    assert rows_contained
    if not ideal.contains(EpsPoly.of(P, eps=(1,))):
        assert not ideal_equals(ideal, bigger)
