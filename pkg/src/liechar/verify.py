"""Named invariant suites behind the `verify` CLI subcommand.

Each check is a deterministic pass/fail probe of one mathematical
invariant, sized for quick runs; the full test suite exercises the same
identities with larger sample counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable

import numpy as np

from . import catalog, cohomology, forms, geometry, jets, linalg
from .algebra import LieAlgebra

RNG_SEED = 20240801


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _rational_vectors(rng: np.random.Generator, dim: int, count: int) -> list[list[Fraction]]:
    draws = rng.integers(-6, 7, size=(count, dim))
    return [[Fraction(int(v), 2) for v in row] for row in draws]


def _algebras() -> list[tuple[str, LieAlgebra]]:
    return [(e.name, e.payload) for e in catalog.list_entries() if e.kind == "algebra"]


def _frames() -> list[tuple[str, geometry.FrameField]]:
    return [(e.name, e.payload) for e in catalog.list_entries() if e.kind == "frame"]


def _multiplications() -> list[tuple[str, geometry.LocalGroupMultiplication]]:
    return [(e.name, e.payload) for e in catalog.list_entries() if e.kind == "multiplication"]


def _poly_field(rng: np.random.Generator, n: int) -> jets.VectorField:
    const = rng.integers(-2, 3, size=n).astype(float)
    lin = rng.integers(-2, 3, size=(n, n)).astype(float)
    quad = rng.integers(-1, 2, size=(n, n)).astype(float)

    def field(x: np.ndarray) -> np.ndarray:
        return const + lin @ x + quad @ (x * x)

    return field


def _poly_section(rng: np.random.Generator, chart: jets.Chart) -> jets.J1TSection:
    n = chart.dim
    vec = _poly_field(rng, n)
    m0 = rng.integers(-2, 3, size=(n, n)).astype(float)
    m1 = rng.integers(-2, 3, size=(n, n, n)).astype(float)

    def mat(x: np.ndarray) -> np.ndarray:
        return m0 + np.einsum("ija,a->ij", m1, x)

    return jets.J1TSection(chart=chart, vector_part=vec, matrix_part=mat)


def _poly_form(rng: np.random.Generator, chart: jets.Chart) -> jets.Form1J1T:
    n = chart.dim
    cov = _poly_field(rng, n)
    m0 = rng.integers(-2, 3, size=(n, n)).astype(float)
    m1 = rng.integers(-2, 3, size=(n, n, n)).astype(float)

    def mat(x: np.ndarray) -> np.ndarray:
        return m0 + np.einsum("ija,a->ij", m1, x)

    return jets.Form1J1T(chart=chart, covector_part=cov, matrix_part=mat)


def _check(results: list[CheckResult], suite: str, name: str, fn: Callable[[], None]) -> None:
    try:
        fn()
    except AssertionError as exc:
        results.append(CheckResult(suite, name, False, str(exc)))
    except Exception as exc:  # noqa: BLE001 - a crashed check is a failed check
        results.append(CheckResult(suite, name, False, f"{type(exc).__name__}: {exc}"))
    else:
        results.append(CheckResult(suite, name, True))


def suite_algebra() -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = np.random.default_rng(RNG_SEED)

    def jacobi_all():
        for name, alg in _algebras():
            report = alg.validate()
            assert report.ok, f"{name}: Jacobi fails at {report.violations[:3]}"

    def killing_invariance():
        for name, alg in _algebras():
            for x, y, z in zip(*(iter(_rational_vectors(rng, alg.dim, 9)),) * 3):
                lhs = alg.killing_pair(alg.bracket(x, y), z)
                rhs = alg.killing_pair(x, alg.bracket(y, z))
                assert lhs == rhs, f"{name}: killing invariance fails"

    def semisimple_unimodular():
        for name, alg in _algebras():
            if alg.is_semisimple():
                assert alg.is_unimodular(), f"{name}: semisimple but not unimodular"

    _check(results, "algebra", "jacobi_all_catalog", jacobi_all)
    _check(results, "algebra", "killing_form_invariance", killing_invariance)
    _check(results, "algebra", "semisimple_implies_unimodular", semisimple_unimodular)
    return results


def suite_forms() -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = np.random.default_rng(RNG_SEED + 1)

    def even_vanishing():
        for name, alg in _algebras():
            if alg.dim >= 2:
                assert forms.trace_form(alg, 2).is_zero(), f"{name}: degree-2 trace form nonzero"
            if alg.dim >= 4:
                assert forms.trace_form(alg, 4).is_zero(), f"{name}: degree-4 trace form nonzero"

    def killing_shortcut():
        for name, alg in _algebras():
            if alg.dim < 3:
                continue
            w3 = forms.trace_form(alg, 3)
            for x, y, z in zip(*(iter(_rational_vectors(rng, alg.dim, 15)),) * 3):
                assert w3.evaluate(x, y, z) == forms.w3_killing(alg, x, y, z), f"{name}: w3 shortcut mismatch"

    def cartan_solvability():
        for name, alg in _algebras():
            if alg.dim < 3:
                continue
            assert forms.trace_form(alg, 3).is_zero() == alg.is_solvable(), f"{name}: Cartan criterion mismatch"

    def character_unimodularity():
        for name, alg in _algebras():
            assert forms.w1_character(alg).is_zero() == alg.is_unimodular(), f"{name}: character/unimodular mismatch"

    _check(results, "forms", "even_degrees_vanish", even_vanishing)
    _check(results, "forms", "degree3_killing_shortcut", killing_shortcut)
    _check(results, "forms", "degree3_zero_iff_solvable", cartan_solvability)
    _check(results, "forms", "character_zero_iff_unimodular", character_unimodularity)
    return results


def suite_cohomology() -> list[CheckResult]:
    results: list[CheckResult] = []

    def d_squared():
        for name, alg in _algebras():
            for k in range(alg.dim):
                d_k = cohomology.differential_matrix(alg, k)
                d_next = cohomology.differential_matrix(alg, k + 1)
                product = linalg.mat_mul(d_next.entries, d_k.entries)
                assert linalg.is_zero_matrix(product), f"{name}: d.d != 0 at degree {k}"

    def closed_trace_forms():
        for name, alg in _algebras():
            for k in (1, 3):
                if k <= alg.dim:
                    assert cohomology.is_closed(alg, forms.trace_form(alg, k)), f"{name}: w{k} not closed"

    def betti_basics():
        for name, alg in _algebras():
            table = cohomology.betti_table(alg)
            assert table[0] == 1, f"{name}: b0 != 1"
            euler = sum((-1) ** k * b for k, b in enumerate(table))
            assert euler == 0, f"{name}: Euler characteristic {euler} != 0"

    def whitehead():
        for name, alg in _algebras():
            if alg.is_semisimple():
                assert cohomology.betti(alg, 1) == 0, f"{name}: b1 != 0"
                assert cohomology.betti(alg, 2) == 0, f"{name}: b2 != 0"

    def rank_dual_route():
        for name, alg in _algebras():
            for k in range(alg.dim + 1):
                entries = cohomology.differential_matrix(alg, k).entries
                assert linalg.rank_fraction_free(entries) == linalg.rank(entries), f"{name}: rank routes disagree"

    _check(results, "cohomology", "differential_squares_to_zero", d_squared)
    _check(results, "cohomology", "trace_forms_closed", closed_trace_forms)
    _check(results, "cohomology", "betti_normalization_and_euler", betti_basics)
    _check(results, "cohomology", "whitehead_vanishing", whitehead)
    _check(results, "cohomology", "fraction_free_rank_matches_gauss", rank_dual_route)
    return results


def suite_jets() -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = np.random.default_rng(RNG_SEED + 2)
    chart = jets.Chart(lower=(-1.0, -1.0), upper=(1.0, 1.0))
    h = chart.h
    points = chart.lattice(3)

    def self_bracket():
        a = _poly_section(rng, chart)
        bracket = jets.spencer_bracket(a, a)
        for x in points:
            assert geometry.sup_norm(bracket.vector_part(x)) <= 1e-9
            assert geometry.sup_norm(bracket.matrix_part(x)) <= 1e-9

    def prolongation_compat():
        xi, eta = _poly_field(rng, 2), _poly_field(rng, 2)
        lhs = jets.prolong(chart, jets.vector_field_bracket(chart, xi, eta))
        rhs = jets.spencer_bracket(jets.prolong(chart, xi), jets.prolong(chart, eta))
        for x in points:
            scale = max(1.0, geometry.sup_norm(lhs.matrix_part(x)))
            assert geometry.sup_norm(lhs.vector_part(x) - rhs.vector_part(x)) <= geometry.fd_tolerance(h, scale)
            assert geometry.sup_norm(lhs.matrix_part(x) - rhs.matrix_part(x)) <= geometry.fd_tolerance(h, scale)

    def cartan_identity():
        omega = _poly_form(rng, chart)
        a, b = _poly_section(rng, chart), _poly_section(rng, chart)
        wa, wb = jets.pairing(omega, a), jets.pairing(omega, b)
        delta = jets.delta_one_form(omega, a, b)
        paired_bracket = jets.pairing(omega, jets.spencer_bracket(a, b))
        for x in points:
            lhs = float(np.dot(jets.gradient(wb, x, h), a.vector_part(x)))
            lhs -= float(np.dot(jets.gradient(wa, x, h), b.vector_part(x)))
            rhs = delta(x) + paired_bracket(x)
            scale = max(1.0, abs(lhs), abs(rhs))
            assert abs(lhs - rhs) <= geometry.fd_tolerance(h, scale), f"Cartan identity off by {abs(lhs - rhs):.2e}"

    def representation_identity():
        a, b = _poly_section(rng, chart), _poly_section(rng, chart)
        xi = _poly_field(rng, 2)
        lhs = lambda x: jets.lie_derivative(a, jets.lie_derivative(b, xi))(x) - jets.lie_derivative(
            b, jets.lie_derivative(a, xi)
        )(x)
        rhs = jets.lie_derivative(jets.spencer_bracket(a, b), xi)
        for x in points:
            scale = max(1.0, geometry.sup_norm(lhs(x)), geometry.sup_norm(rhs(x)))
            assert geometry.sup_norm(lhs(x) - rhs(x)) <= geometry.fd_tolerance(h, scale)

    def trace_form_shape():
        frame = catalog.get("borel_frame", kind="frame").payload
        omega = geometry.trace_one_form(frame)
        for x in frame.chart.lattice(3):
            assert np.array_equal(omega.matrix_part(x), -np.eye(2))

    _check(results, "jets", "self_bracket_vanishes", self_bracket)
    _check(results, "jets", "bracket_respects_prolongation", prolongation_compat)
    _check(results, "jets", "cartan_style_identity", cartan_identity)
    _check(results, "jets", "lie_derivative_representation", representation_identity)
    _check(results, "jets", "frame_trace_form_matrix_part", trace_form_shape)
    return results


def suite_geometry() -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = np.random.default_rng(RNG_SEED + 3)

    def splitting_identities():
        for name, frame in _frames():
            eps = geometry.Splitting(frame)
            pts = frame.chart.lattice(3)
            triples = [(pts[0], pts[len(pts) // 2], pts[-1]), (pts[1], pts[-2], pts[0])]
            for x, y, z in triples:
                assert eps.cocycle_residual(x, y, z) <= geometry.EXACT_TOL, f"{name}: cocycle fails"
            for x in pts:
                assert eps.identity_residual(x) <= geometry.EXACT_TOL, f"{name}: diagonal fails"

    def r1_vanishes():
        for name, frame in _frames():
            for x in frame.chart.lattice(3):
                sample = geometry.r1(frame, x)
                tol = geometry.fd_tolerance(frame.chart.h, sample.scale)
                assert sample.max_abs <= tol, f"{name}: |R1|={sample.max_abs:.2e} > {tol:.2e}"

    def dw_matches_trace():
        for name, frame in _frames():
            for x in frame.chart.lattice(3):
                residual = geometry.dw_tr_r2_residual(frame, x)
                tol = geometry.fd_tolerance(frame.chart.h, geometry.gamma(frame, x).scale ** 2)
                assert residual <= tol, f"{name}: dw vs trace R2 off by {residual:.2e}"

    def curvature_coherence():
        for name, frame in _frames():
            pts = frame.chart.lattice(3)
            r2_max = max(geometry.r2(frame, x).max_abs for x in pts)
            pair_max = max(geometry.r_full(frame, x, y).max_abs for x, y in zip(pts, reversed(pts)))
            threshold = 1e-2
            assert (r2_max < threshold) == (pair_max < threshold), f"{name}: R2/R(eps) verdicts differ"
            for x in pts[:3]:
                diag = geometry.r_full(frame, x, x)
                tol = geometry.fd_tolerance(frame.chart.h, diag.scale)
                assert diag.max_abs <= tol, f"{name}: R(eps)(x,x) = {diag.max_abs:.2e} > {tol:.2e}"

    def bracket_defect():
        for name, frame in _frames():
            n = frame.chart.dim
            x = frame.chart.lattice(3)[1]
            for variant in ("tilde", "hat"):
                residual, scale = geometry.bracket_defect_residual(
                    frame, _poly_field(rng, n), _poly_field(rng, n), x, variant
                )
                assert residual <= geometry.fd_tolerance(frame.chart.h, scale), f"{name}/{variant}: {residual:.2e}"

    def group_frame_flags():
        frame = catalog.get("affine_halfplane", kind="frame").payload
        alg = geometry.local_algebra(frame, np.array([1.0, 0.5]))
        assert alg.is_solvable() and not alg.is_unimodular()
        reference = catalog.get("affine1", kind="algebra").payload
        assert alg.is_solvable() == reference.is_solvable()
        assert alg.is_unimodular() == reference.is_unimodular()

    def adjoint_primitive():
        for name, mult in _multiplications():
            if mult.chart.dim > 2:
                continue
            residual, scale = geometry.log_det_ad_primitive_check(mult, points_per_axis=3)
            tol = geometry.fd_tolerance(mult.chart.h, scale)
            assert residual <= tol, f"{name}: primitive residual {residual:.2e} > {tol:.2e}"

    def automorphy_witness():
        borel = catalog.get("borel_sl2_group", kind="multiplication").payload
        checks = geometry.automorphy_check(borel, [np.array([2.0, 0.0]), borel.identity])
        assert checks == [False, True]

    _check(results, "geometry", "splitting_cocycle_and_diagonal", splitting_identities)
    _check(results, "geometry", "first_curvature_vanishes", r1_vanishes)
    _check(results, "geometry", "dw_equals_trace_r2", dw_matches_trace)
    _check(results, "geometry", "pointwise_vs_two_point_curvature", curvature_coherence)
    _check(results, "geometry", "bracket_defect_identities", bracket_defect)
    _check(results, "geometry", "affine_local_algebra_flags", group_frame_flags)
    _check(results, "geometry", "log_det_ad_primitive", adjoint_primitive)
    _check(results, "geometry", "borel_automorphy_witness", automorphy_witness)
    return results


def suite_catalog() -> list[CheckResult]:
    results: list[CheckResult] = []
    rng = np.random.default_rng(RNG_SEED + 4)

    def entries_build():
        names = catalog.list_names()
        assert len(names) == len(set(names)), "duplicate catalog names"
        for qualified in names:
            kind, name = qualified.split(":", 1)
            catalog.get(name, kind=kind)

    def associativity():
        for name, mult in _multiplications():
            lo = np.asarray(mult.chart.lower)
            hi = np.asarray(mult.chart.upper)
            for _ in range(20):
                a, b, c = (lo + (hi - lo) * rng.random(mult.chart.dim) for _ in range(3))
                residual = mult.associativity_residual(a, b, c)
                assert residual <= geometry.EXACT_TOL, f"{name}: associativity off by {residual:.2e}"

    _check(results, "catalog", "all_entries_validate", entries_build)
    _check(results, "catalog", "multiplication_associativity", associativity)
    return results


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "algebra": suite_algebra,
    "forms": suite_forms,
    "cohomology": suite_cohomology,
    "jets": suite_jets,
    "geometry": suite_geometry,
    "catalog": suite_catalog,
}


def run_suites(names: list[str] | None = None) -> list[CheckResult]:
    chosen = names if names else sorted(SUITES)
    results: list[CheckResult] = []
    for name in chosen:
        if name not in SUITES:
            raise KeyError(f"unknown verification suite {name!r}; choose from {sorted(SUITES)}")
        results.extend(SUITES[name]())
    return results
