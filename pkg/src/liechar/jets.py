"""First-order jets of vector fields on a coordinate chart.

A jet section carries a vector part X^i(x) and a matrix part X^i_j(x),
both plain callables into numpy arrays. All derivatives are second-order
central differences with the chart's step h, so identities involving one
derivative hold to O(h^2) on smooth test fields.

Index conventions, used consistently below and in geometry:
    vector_part(x)[i]    = X^i
    matrix_part(x)[i, j] = X^i_j
    covector_part(x)[i]  = w_i      (for 1-forms of the jet algebroid)
    form matrix[i, j] pairs with X^i_j in the pairing
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from itertools import product

import numpy as np

VectorField = Callable[[np.ndarray], np.ndarray]
MatrixField = Callable[[np.ndarray], np.ndarray]
ScalarField = Callable[[np.ndarray], float]


@dataclass(frozen=True)
class Chart:
    """Axis-aligned coordinate box with a finite-difference step.

    Attributes:
        lower, upper: box corners, length-n tuples with lower < upper.
        h: central-difference step; must be at most a tenth of the
            shortest box side so that stencils stay meaningful.
    """

    lower: tuple[float, ...]
    upper: tuple[float, ...]
    h: float = 1e-3

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValueError("corner dimensions differ")
        sides = [hi - lo for lo, hi in zip(self.lower, self.upper)]
        if min(sides) <= 0:
            raise ValueError("box must be nonempty")
        if not 0 < self.h <= min(sides) / 10:
            raise ValueError("step h must be positive and at most a tenth of the shortest side")

    @property
    def dim(self) -> int:
        return len(self.lower)

    def with_step(self, h: float) -> "Chart":
        return Chart(lower=self.lower, upper=self.upper, h=h)

    def contains(self, x: np.ndarray, margin: float = 0.0) -> bool:
        return all(
            lo + margin <= xi <= hi - margin
            for xi, lo, hi in zip(np.asarray(x, dtype=float), self.lower, self.upper)
        )

    def require_interior(self, x: np.ndarray) -> None:
        if not self.contains(x, margin=2 * self.h):
            raise ValueError(f"point {np.asarray(x)} is within 2h of the chart boundary")

    def lattice(self, points_per_axis: int = 5) -> list[np.ndarray]:
        """Interior sample lattice, excluding a boundary margin of 2h."""
        margin = 2 * self.h
        axes = [
            np.linspace(lo + margin, hi - margin, points_per_axis)
            for lo, hi in zip(self.lower, self.upper)
        ]
        return [np.array(point) for point in product(*axes)]


def partial_derivative(f: Callable[[np.ndarray], np.ndarray], x: np.ndarray, j: int, h: float):
    """Central difference of f along axis j (0-based)."""
    step = np.zeros(len(x))
    step[j] = h
    return (np.asarray(f(x + step)) - np.asarray(f(x - step))) / (2 * h)


def jacobian(f: VectorField, x: np.ndarray, h: float) -> np.ndarray:
    """J[i, j] = dF^i/dx^j by central differences."""
    cols = [partial_derivative(f, x, j, h) for j in range(len(x))]
    return np.stack(cols, axis=-1)


def gradient(f: ScalarField, x: np.ndarray, h: float) -> np.ndarray:
    return np.array([partial_derivative(f, x, j, h) for j in range(len(x))])


@dataclass(frozen=True)
class J1TSection:
    """Section of the first jet bundle of the tangent bundle over a chart."""

    chart: Chart
    vector_part: VectorField
    matrix_part: MatrixField


@dataclass(frozen=True)
class Form1J1T:
    """1-form of the jet algebroid: a covector part and a matrix part."""

    chart: Chart
    covector_part: VectorField
    matrix_part: MatrixField


def prolong(chart: Chart, xi: VectorField) -> J1TSection:
    """Holonomic lift: matrix part is the Jacobian of the vector part."""
    return J1TSection(
        chart=chart,
        vector_part=xi,
        matrix_part=lambda x: jacobian(xi, x, chart.h),
    )


def constant_section(chart: Chart, vector: np.ndarray, matrix: np.ndarray) -> J1TSection:
    v = np.array(vector, dtype=float)
    m = np.array(matrix, dtype=float)
    return J1TSection(chart=chart, vector_part=lambda x: v, matrix_part=lambda x: m)


def vector_field_bracket(chart: Chart, xi: VectorField, eta: VectorField) -> VectorField:
    """[xi, eta]^i = xi^a d_a eta^i - eta^a d_a xi^i."""

    def bracket(x: np.ndarray) -> np.ndarray:
        return jacobian(eta, x, chart.h) @ xi(x) - jacobian(xi, x, chart.h) @ eta(x)

    return bracket


def _require_same_chart(a, b) -> Chart:
    if a.chart is not b.chart and a.chart != b.chart:
        raise ValueError("sections live on different charts")
    return a.chart


def spencer_bracket(a: J1TSection, b: J1TSection) -> J1TSection:
    """Algebroid bracket on jet sections.

    Vector part is the ordinary bracket of the vector parts; matrix part is

        [X, Y]^i_j = X^a_j Y^i_a - Y^a_j X^i_a + X^a d_a Y^i_j - Y^a d_a X^i_j.
    """
    chart = _require_same_chart(a, b)
    h = chart.h

    def matrix(x: np.ndarray) -> np.ndarray:
        xv, yv = a.vector_part(x), b.vector_part(x)
        xm, ym = a.matrix_part(x), b.matrix_part(x)
        transport = ym @ xm - xm @ ym
        for axis in range(chart.dim):
            d_ym = partial_derivative(b.matrix_part, x, axis, h)
            d_xm = partial_derivative(a.matrix_part, x, axis, h)
            transport = transport + xv[axis] * d_ym - yv[axis] * d_xm
        return transport

    return J1TSection(
        chart=chart,
        vector_part=vector_field_bracket(chart, a.vector_part, b.vector_part),
        matrix_part=matrix,
    )


def spencer_operator(a: J1TSection) -> MatrixField:
    """D(X)^i_j = d_j X^i - X^i_j, the holonomy defect of the section."""

    def defect(x: np.ndarray) -> np.ndarray:
        return jacobian(a.vector_part, x, a.chart.h) - a.matrix_part(x)

    return defect


def algebraic_bracket(a: J1TSection, b: J1TSection) -> VectorField:
    """{X, Y}^i = X^a Y^i_a - Y^a X^i_a, pointwise with no derivatives."""
    _require_same_chart(a, b)

    def bracket(x: np.ndarray) -> np.ndarray:
        return b.matrix_part(x) @ a.vector_part(x) - a.matrix_part(x) @ b.vector_part(x)

    return bracket


def lie_derivative(a: J1TSection, xi: VectorField) -> VectorField:
    """L_X xi = [pi X, xi] + i_xi D(X), a representation of jets on fields."""
    chart = a.chart
    base = vector_field_bracket(chart, a.vector_part, xi)
    defect = spencer_operator(a)

    def derivative(x: np.ndarray) -> np.ndarray:
        return base(x) + defect(x) @ xi(x)

    return derivative


def pairing(form: Form1J1T, section: J1TSection) -> ScalarField:
    """w(X) = X^a w_a + X^a_b w_a^b as a scalar field."""
    _require_same_chart(form, section)

    def value(x: np.ndarray) -> float:
        return float(
            section.vector_part(x) @ form.covector_part(x)
            + np.sum(section.matrix_part(x) * form.matrix_part(x))
        )

    return value


def delta_one_form(form: Form1J1T, a: J1TSection, b: J1TSection) -> ScalarField:
    """Exterior derivative of a 1-form, paired with two jet sections.

    delta w (X, Y) = (X^c Y^a - Y^c X^a) d_c w_a
                   + (X^c Y^a_b - Y^c X^a_b) d_c w^b_a
                   - (X^c_b Y^a_c - Y^c_b X^a_c) w^b_a

    where the form matrix entry [a, b] pairs with X^a_b.
    """
    chart = _require_same_chart(a, b)
    _require_same_chart(form, a)
    h = chart.h

    def value(x: np.ndarray) -> float:
        xv, yv = a.vector_part(x), b.vector_part(x)
        xm, ym = a.matrix_part(x), b.matrix_part(x)
        wm = form.matrix_part(x)
        total = -np.sum((ym @ xm - xm @ ym) * wm)
        for axis in range(chart.dim):
            d_cov = partial_derivative(form.covector_part, x, axis, h)
            d_mat = partial_derivative(form.matrix_part, x, axis, h)
            total += xv[axis] * (yv @ d_cov) - yv[axis] * (xv @ d_cov)
            total += np.sum((xv[axis] * ym - yv[axis] * xm) * d_mat)
        return float(total)

    return value
