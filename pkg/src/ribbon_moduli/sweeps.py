"""Whole-grid verification batteries shared by the CLI and the test suite.

Each sweep walks its full parameter grid, aggregates the outcome into a
single Check, and reports the failure count plus the first failing case
in the detail string.  Randomized sweeps draw from a generator seeded by
RIBBON_MODULI_SEED (default "0") so reruns are reproducible.
"""

from __future__ import annotations

import os
import random
from collections.abc import Callable

from .core import mk_glb, mk_ribbon, mk_vb
from .deformations import Check, verify_deformation_I, verify_deformation_II
from .epsilon import EpsPoly, ideal_from_generators, ideal_scale, local_index_at
from .extcomplex import endo_quotient_dim, ext1_dim
from .geometry import (
    Smoothness,
    component_table,
    enumerate_strata,
    smoothness_verdict,
    stratification_graph,
    tangent_dim_vb,
)
from .gfpoly import Poly
from .stability import StabilityVerdict, classify_glb, slopes

GRID_G = tuple(range(0, 13))
GRID_GBAR = tuple(range(0, 4))
GRID_D = (0, 1)
PRIMES = (5, 101)


def _rng(tag: str) -> random.Random:
    seed = os.environ.get("RIBBON_MODULI_SEED", "0")
    return random.Random(f"{tag}:{seed}")


def _summarize(name: str, failures: list[str], total: int) -> Check:
    if failures:
        return Check(name, False, f"{len(failures)}/{total} failed; first: {failures[0]}")
    return Check(name, True, f"{total} cases")


def _grid():
    for g in GRID_G:
        for gbar in GRID_GBAR:
            for d in GRID_D:
                yield g, gbar, d


def sweep_component_counts() -> Check:
    """Structural component list vs the closed-form count."""
    failures, total = [], 0
    for g, gbar, d in _grid():
        if g <= 2 * gbar - 1:
            continue
        total += 1
        want = (g + 2) // 2 - gbar if d % 2 == 0 else (g + 1) // 2 - gbar
        got = len(component_table(mk_ribbon(g, gbar), d).glb_components)
        if got != want:
            failures.append(f"(g={g},gbar={gbar},d={d}): {got} components, want {want}")
    return _summarize("component-counts", failures, total)


def sweep_stratum_dims() -> Check:
    """Every stratum: dimension formula, parity, and the all-ones
    characterization of the dimension-g strata."""
    failures, total = [], 0
    for g, gbar, d in _grid():
        ribbon = mk_ribbon(g, gbar)
        for s in enumerate_strata(ribbon, d, include_semistable=True):
            total += 1
            want_dim = g - sum(b - 1 for b in s.indices)
            if s.dim != want_dim:
                failures.append(f"(g={g},gbar={gbar},d={d}) {s.indices}: dim {s.dim} != {want_dim}")
            elif (d - s.total_index) % 2 != 0:
                failures.append(f"(g={g},gbar={gbar},d={d}) {s.indices}: parity broken")
            elif (s.dim == g) != all(b == 1 for b in s.indices):
                failures.append(f"(g={g},gbar={gbar},d={d}) {s.indices}: dim-g iff all-ones broken")
    return _summarize("stratum-dims", failures, total)


def sweep_connectivity() -> Check:
    """The degeneration graph is connected for every nonempty triple."""
    failures, total = [], 0
    for g, gbar, d in _grid():
        graph = stratification_graph(mk_ribbon(g, gbar), d)
        if graph.is_empty:
            continue
        total += 1
        if not graph.connected:
            failures.append(f"(g={g},gbar={gbar},d={d}): {graph.node_count} nodes, disconnected")
    return _summarize("connectivity", failures, total)


def sweep_boundary_dichotomy() -> Check:
    """gbar = 0, d = 0: one split-class boundary node iff g is odd."""
    failures, total = [], 0
    for g in GRID_G:
        total += 1
        graph = stratification_graph(mk_ribbon(g, 0), 0)
        has_split_boundary = graph.boundary is not None and graph.boundary.gr is not None
        if g % 2 == 1:
            if not has_split_boundary:
                failures.append(f"g={g}: expected a split-class boundary node")
        elif graph.boundary is not None:
            failures.append(f"g={g}: expected no boundary node")
    return _summarize("boundary-dichotomy", failures, total)


def sweep_ext_endo() -> Check:
    """Homology dimensions of the local models across primes and truncations."""
    failures, total = [], 0
    for n in range(0, 6):
        for p in PRIMES:
            for T in (4 * n + 4, 4 * n + 6):
                total += 2
                ext = ext1_dim(n, p, T)
                if ext != 2 * n:
                    failures.append(f"ext(n={n},p={p},T={T}) = {ext}, want {2 * n}")
                endo = endo_quotient_dim(n, p, T)
                if endo != n:
                    failures.append(f"endo(n={n},p={p},T={T}) = {endo}, want {n}")
    return _summarize("ext-endo-dims", failures, total)


def _deformation_sweep(name: str, b_range: range, runner: Callable) -> Check:
    failures, total = [], 0
    rng = _rng(name)
    for b in b_range:
        for p in PRIMES:
            for _ in range(3):
                total += 1
                t = rng.randrange(1, p)
                report = runner(b, p, t)
                if not report.ok:
                    bad = next(c for c in report.checks if not c.passed)
                    failures.append(f"(b={b},p={p},t={t}) {bad.name}: {bad.detail}")
    return _summarize(name, failures, total)


def sweep_deformation_I() -> Check:
    return _deformation_sweep("deformation-collision", range(0, 5), verify_deformation_I)


def sweep_deformation_II() -> Check:
    return _deformation_sweep("deformation-absorption", range(1, 5), verify_deformation_II)


def sweep_local_index_twists() -> Check:
    """local_index_at is blind to non-zerodivisor twists and matches the
    endomorphism count on the local models."""
    failures, total = [], 0
    rng = _rng("twists")
    for n in range(0, 5):
        for p in PRIMES:
            base = ideal_from_generators(
                p, [EpsPoly.of(p, one=[0] * n + [1]), EpsPoly.of(p, eps=[1])]
            )
            total += 1
            endo = endo_quotient_dim(n, p, 4 * n + 4)
            if local_index_at(base, 0) != endo:
                failures.append(f"(n={n},p={p}): index {local_index_at(base, 0)} != endo {endo}")
            for _ in range(20):
                total += 1
                one = [rng.randrange(p) for _ in range(4)]
                if not any(one):
                    one[0] = 1
                f = EpsPoly(Poly.of(p, one), Poly.of(p, [rng.randrange(p) for _ in range(4)]))
                got = local_index_at(ideal_scale(f, base), 0)
                if got != n:
                    failures.append(f"(n={n},p={p},f={f}): twisted index {got} != {n}")
    return _summarize("index-twist-invariance", failures, total)


def sweep_tangent_smoothness() -> Check:
    """gbar = 2, g in {6, 8, 10}: rank-2 tangent closed form, and only the
    index-0 stable points are smooth."""
    failures, total = [], 0
    for g in (6, 8, 10):
        ribbon = mk_ribbon(g, 2)
        total += 1
        tangent = tangent_dim_vb(ribbon)
        if tangent != 4 * g + 5 - 16:
            failures.append(f"g={g}: rank-2 tangent {tangent}, want {4 * g + 5 - 16}")
        for d in GRID_D:
            for s in enumerate_strata(ribbon, d):
                total += 1
                verdict = smoothness_verdict(ribbon, d, mk_glb(ribbon, d, s.indices))
                want = Smoothness.SMOOTH if s.total_index == 0 else Smoothness.SINGULAR
                if verdict is not want:
                    failures.append(f"(g={g},d={d}) {s.indices}: {verdict}, want {want}")
            total += 1
            vb = mk_vb(ribbon, ribbon.vb_degree(d), status="stable")
            if smoothness_verdict(ribbon, d, vb) is not Smoothness.SINGULAR:
                failures.append(f"(g={g},d={d}) stable rank-2 point not marked singular")
    return _summarize("tangent-smoothness", failures, total)


def sweep_slope_coherence() -> Check:
    """Threshold verdicts agree with exact slope comparisons for random
    descriptors and several polarizations."""
    failures, total = [], 0
    rng = _rng("slopes")
    for g, gbar, d in _grid():
        ribbon = mk_ribbon(g, gbar)
        for _ in range(500):
            indices = [rng.randrange(1, 6) for _ in range(rng.randrange(0, 7))]
            if (d - sum(indices)) % 2 != 0:
                indices.append(1)
            glb = mk_glb(ribbon, d, indices)
            verdict = classify_glb(ribbon, glb)
            for degL in (1, 2, 7):
                total += 1
                _, quotient, subsheaf = slopes(ribbon, degL, glb)
                if quotient > subsheaf:
                    want = StabilityVerdict.STABLE
                elif quotient == subsheaf:
                    want = StabilityVerdict.STRICTLY_SEMISTABLE
                else:
                    want = StabilityVerdict.UNSTABLE
                if verdict is not want:
                    failures.append(
                        f"(g={g},gbar={gbar},d={d}) {glb.indices} degL={degL}: "
                        f"{verdict} vs slopes {want}"
                    )
    return _summarize("slope-coherence", failures, total)


ALL_SWEEPS: tuple[tuple[str, Callable[[], Check]], ...] = (
    ("component-counts", sweep_component_counts),
    ("stratum-dims", sweep_stratum_dims),
    ("connectivity", sweep_connectivity),
    ("boundary-dichotomy", sweep_boundary_dichotomy),
    ("ext-endo-dims", sweep_ext_endo),
    ("deformation-collision", sweep_deformation_I),
    ("deformation-absorption", sweep_deformation_II),
    ("index-twist-invariance", sweep_local_index_twists),
    ("tangent-smoothness", sweep_tangent_smoothness),
    ("slope-coherence", sweep_slope_coherence),
)


def run_all() -> list[Check]:
    return [fn() for _, fn in ALL_SWEEPS]
