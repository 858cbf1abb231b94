"""Discrete invariants and descriptor validation."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from ribbon_moduli.core import (
    NonPositiveIndex,
    ParityViolation,
    UNKNOWN,
    glb_invariants,
    hilbert_poly,
    jacobian_dim,
    mk_glb,
    mk_ribbon,
    mk_vb,
)


def test_ribbon_invariants_frozen():
    r = mk_ribbon(5, 1)
    assert (r.degN, r.index_bound) == (-4, 4)
    assert r.vb_degree(0) == -4
    r = mk_ribbon(4, 0)
    assert (r.degN, r.index_bound) == (-5, 5)
    assert r.vb_degree(7) == 2
    r = mk_ribbon(3, 2)
    assert (r.degN, r.index_bound) == (0, 0)


@given(st.integers(-20, 60), st.integers(0, 20), st.integers(-40, 40))
def test_identities_between_invariants(g, gbar, d):
    r = mk_ribbon(g, gbar)
    # degN and the stability threshold always sum to 0
    assert r.degN + r.index_bound == 0
    # matching rank-2 degree shares parity with d + g + 1
    assert (r.vb_degree(d) - d - g - 1) % 2 == 0


def test_glb_descriptor_validation():
    r = mk_ribbon(5, 1)
    glb = mk_glb(r, 4, [1, 2, 1])
    assert glb.indices == (2, 1, 1)  # canonical order
    assert glb.total_index == 4
    with pytest.raises(ParityViolation):
        mk_glb(r, 3, [2])
    with pytest.raises(NonPositiveIndex):
        mk_glb(r, 3, [3, 0])
    with pytest.raises(ValueError):
        mk_ribbon(2, -1)


def test_glb_invariants_worked_example():
    r = mk_ribbon(5, 1)
    inv = glb_invariants(r, mk_glb(r, -1, [2, 1]))
    assert inv.total_index == 3
    assert inv.blowup_genus == 2
    assert inv.quotient_degree == -2
    assert inv.subsheaf_degree == -3
    assert inv.vb_degree == -5


@given(
    st.integers(0, 30),
    st.integers(0, 10),
    st.integers(-10, 10),
    st.lists(st.integers(1, 6), max_size=5),
)
def test_filtration_degrees_sum_to_vb_degree(g, gbar, d_half, indices):
    r = mk_ribbon(g, gbar)
    b = sum(indices)
    d = 2 * d_half + b  # force the parity constraint
    inv = glb_invariants(r, mk_glb(r, d, indices))
    assert inv.quotient_degree + inv.subsheaf_degree == r.vb_degree(d)
    assert inv.blowup_genus == g - b


def test_vb_descriptor_paths():
    rational = mk_ribbon(4, 0)
    vb = mk_vb(rational, 2, split=(1, 1))
    assert vb.status == "strictly-semistable"
    assert mk_vb(rational, 2, split=(3, -1)).status == "unstable"
    with pytest.raises(ValueError):
        mk_vb(rational, 2)  # split required
    with pytest.raises(ValueError):
        mk_vb(rational, 2, split=(2, 1))  # wrong sum
    with pytest.raises(ValueError):
        mk_vb(rational, 2, split=(1, 1), status="stable")  # contradicts split

    irr = mk_ribbon(5, 2)
    assert mk_vb(irr, 3, status="stable").status == "stable"
    assert mk_vb(irr, 3).status == "unspecified"
    with pytest.raises(ValueError):
        mk_vb(irr, 3, split=(2, 1))
    with pytest.raises(ValueError):
        mk_vb(irr, 3, status="very stable")


def test_hilbert_poly():
    assert hilbert_poly(mk_ribbon(4, 0), 3, 7) == (3, 4)
    with pytest.raises(ValueError):
        hilbert_poly(mk_ribbon(4, 0), 0, 7)


def test_jacobian_dim_cases():
    assert jacobian_dim(mk_ribbon(3, 0)) == 3
    assert jacobian_dim(mk_ribbon(5, 2)) == 5
    # rational reduction with non-negative nilpotent degree
    assert jacobian_dim(mk_ribbon(-3, 0)) == -3 + 2 + 1
    assert jacobian_dim(mk_ribbon(0, 1)) is UNKNOWN


def test_unknown_is_a_singleton():
    import ribbon_moduli.core as core

    assert core._Unknown() is UNKNOWN
    assert repr(UNKNOWN) == "Unknown"
