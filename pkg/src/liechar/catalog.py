"""Built-in example algebras, frame fields, and local multiplications.

Every entry is hand-verified: algebras pass the Jacobi validation, frames
meet the invertibility bound on their chart lattice, multiplications
satisfy the identity laws. The names are stable identifiers used by the
command line interface.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from .algebra import LieAlgebra, lie_algebra
from .geometry import FrameField, LocalGroupMultiplication
from .jets import Chart

Payload = Union[LieAlgebra, FrameField, LocalGroupMultiplication]

ABELIAN_MAX_DIM = 6

KINDS = ("algebra", "frame", "multiplication")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str
    payload: Payload
    note: str


def _unit_box(n: int, h: float = 1e-3) -> Chart:
    return Chart(lower=tuple([-1.0] * n), upper=tuple([1.0] * n), h=h)


def _halfplane_box(h: float = 1e-3) -> Chart:
    # first coordinate kept away from 0 so 1/x1 frames stay invertible
    return Chart(lower=(0.5, -1.0), upper=(2.5, 1.0), h=h)


_PARAM = re.compile(r"^(abelian|identity)\((\d+)\)$")


def _abelian_algebra(n: int) -> CatalogEntry:
    return CatalogEntry(
        name=f"abelian({n})",
        kind="algebra",
        payload=lie_algebra(n, {}),
        note=f"{n}-dimensional algebra with all brackets zero",
    )


def _heisenberg3() -> CatalogEntry:
    return CatalogEntry(
        name="heisenberg3",
        kind="algebra",
        payload=lie_algebra(3, {(1, 2, 3): 1}, names=("p", "q", "z")),
        note="nilpotent 3-dimensional algebra [p, q] = z with central z",
    )


def _affine1() -> CatalogEntry:
    return CatalogEntry(
        name="affine1",
        kind="algebra",
        payload=lie_algebra(2, {(1, 2, 2): 1}, names=("t", "s")),
        note="affine transformations of the line, [t, s] = s; solvable, not unimodular",
    )


def _borel_sl2() -> CatalogEntry:
    return CatalogEntry(
        name="borel_sl2",
        kind="algebra",
        payload=lie_algebra(2, {(1, 2, 2): 2}, names=("h", "x")),
        note="upper-triangular traceless 2x2 matrices, basis (h, x) with [h, x] = 2x",
    )


def _sl2() -> CatalogEntry:
    return CatalogEntry(
        name="sl2",
        kind="algebra",
        payload=lie_algebra(
            3,
            {(1, 2, 1): -2, (1, 3, 2): 1, (2, 3, 3): -2},
            names=("X", "H", "Y"),
        ),
        note="traceless 2x2 matrices in the (X, H, Y) basis: [H,X]=2X, [X,Y]=H, [H,Y]=-2Y",
    )


def _so3() -> CatalogEntry:
    return CatalogEntry(
        name="so3",
        kind="algebra",
        payload=lie_algebra(
            3,
            {(1, 2, 3): -1, (1, 3, 2): 1, (2, 3, 1): -1},
            names=("A", "B", "C"),
        ),
        note="rotation algebra, orthogonal basis with [A,C] = B and [B,C] = -A",
    )


def _sl2_plus_abelian2() -> CatalogEntry:
    return CatalogEntry(
        name="sl2_plus_abelian2",
        kind="algebra",
        payload=lie_algebra(
            5,
            {(1, 2, 1): -2, (1, 3, 2): 1, (2, 3, 3): -2},
            names=("X", "H", "Y", "u", "v"),
        ),
        note="direct sum of sl2 with a 2-dimensional center; reductive, not semisimple",
    )


def _identity_frame(n: int) -> CatalogEntry:
    eye = np.eye(n)
    return CatalogEntry(
        name=f"identity({n})",
        kind="frame",
        payload=FrameField(chart=_unit_box(n), matrix=lambda x: eye),
        note=f"constant identity frame on the unit box in dimension {n}",
    )


def _affine_halfplane() -> CatalogEntry:
    def matrix(x: np.ndarray) -> np.ndarray:
        return x[0] * np.eye(2)

    return CatalogEntry(
        name="affine_halfplane",
        kind="frame",
        payload=FrameField(chart=_halfplane_box(), matrix=matrix),
        note="A(x) = x1 * identity on {x1 > 0}; left-translation frame of the affine group",
    )


def _unipotent_sin() -> CatalogEntry:
    def matrix(x: np.ndarray) -> np.ndarray:
        return np.array([[1.0, 0.0], [np.sin(x[1]), 1.0]])

    return CatalogEntry(
        name="unipotent_sin",
        kind="frame",
        payload=FrameField(
            chart=Chart(lower=(0.2, 0.2), upper=(1.2, 1.2)),
            matrix=matrix,
        ),
        note="lower unipotent frame with entry sin(x2); its invariant fields do not close",
    )


def _borel_frame() -> CatalogEntry:
    def matrix(x: np.ndarray) -> np.ndarray:
        return np.array([[x[0], 0.0], [-x[1], x[0]]])

    return CatalogEntry(
        name="borel_frame",
        kind="frame",
        payload=FrameField(chart=_halfplane_box(), matrix=matrix),
        note="left-translation frame of the Borel group in coordinates (a, b), a > 0",
    )


def _abelian_multiplication(n: int) -> CatalogEntry:
    return CatalogEntry(
        name=f"abelian({n})",
        kind="multiplication",
        payload=LocalGroupMultiplication(
            chart=_unit_box(n),
            multiply=lambda a, b: np.asarray(a, dtype=float) + np.asarray(b, dtype=float),
            identity=np.zeros(n),
        ),
        note=f"vector addition on the unit box in dimension {n}",
    )


def _affine_group() -> CatalogEntry:
    def multiply(p: np.ndarray, q: np.ndarray) -> np.ndarray:
        a, b = float(p[0]), float(p[1])
        c, d = float(q[0]), float(q[1])
        return np.array([a * c, a * d + b])

    return CatalogEntry(
        name="affine_group",
        kind="multiplication",
        payload=LocalGroupMultiplication(chart=_halfplane_box(), multiply=multiply, identity=np.array([1.0, 0.0])),
        note="x -> ax + b maps composed as (a,b)(c,d) = (ac, ad + b), identity (1, 0)",
    )


def _borel_sl2_group() -> CatalogEntry:
    def multiply(p: np.ndarray, q: np.ndarray) -> np.ndarray:
        a1, b1 = float(p[0]), float(p[1])
        a2, b2 = float(q[0]), float(q[1])
        return np.array([a1 * a2, a1 * b2 + b1 / a2])

    return CatalogEntry(
        name="borel_sl2_group",
        kind="multiplication",
        payload=LocalGroupMultiplication(chart=_halfplane_box(), multiply=multiply, identity=np.array([1.0, 0.0])),
        note="upper-triangular (a, b; 0, 1/a) matrices, a > 0, in the coordinates (a, b)",
    )


_FIXED = {
    "algebra": {
        "heisenberg3": _heisenberg3,
        "affine1": _affine1,
        "borel_sl2": _borel_sl2,
        "sl2": _sl2,
        "so3": _so3,
        "sl2_plus_abelian2": _sl2_plus_abelian2,
    },
    "frame": {
        "affine_halfplane": _affine_halfplane,
        "unipotent_sin": _unipotent_sin,
        "borel_frame": _borel_frame,
    },
    "multiplication": {
        "affine_group": _affine_group,
        "borel_sl2_group": _borel_sl2_group,
    },
}

_PARAMETRIC = {
    ("algebra", "abelian"): _abelian_algebra,
    ("frame", "identity"): _identity_frame,
    ("multiplication", "abelian"): _abelian_multiplication,
}


def _lookup(kind: str, name: str) -> CatalogEntry | None:
    builder = _FIXED[kind].get(name)
    if builder is not None:
        return builder()
    match = _PARAM.match(name)
    if match:
        family, n = match.group(1), int(match.group(2))
        maker = _PARAMETRIC.get((kind, family))
        if maker is not None and 1 <= n <= ABELIAN_MAX_DIM:
            return maker(n)
    return None


def get(name: str, kind: str | None = None) -> CatalogEntry:
    """Fetch an entry by name; ambiguous names resolve algebra first.

    Accepts the 'kind:name' form produced by list_names().
    """
    if kind is None and ":" in name:
        prefix, rest = name.split(":", 1)
        if prefix in KINDS:
            kind, name = prefix, rest
    kinds = (kind,) if kind is not None else KINDS
    for candidate in kinds:
        if candidate not in KINDS:
            raise KeyError(f"unknown catalog kind {candidate!r}")
        entry = _lookup(candidate, name)
        if entry is not None:
            return entry
    where = f" of kind {kind!r}" if kind else ""
    raise KeyError(f"no catalog entry named {name!r}{where}")


def list_entries() -> list[CatalogEntry]:
    entries = []
    for kind in KINDS:
        for name in _FIXED[kind]:
            entries.append(_lookup(kind, name))
        family = {"algebra": "abelian", "frame": "identity", "multiplication": "abelian"}[kind]
        for n in range(1, ABELIAN_MAX_DIM + 1):
            entries.append(_lookup(kind, f"{family}({n})"))
    return sorted(entries, key=lambda e: (e.kind, e.name))


def list_names() -> list[str]:
    return [f"{entry.kind}:{entry.name}" for entry in list_entries()]


def algebra_names() -> list[str]:
    return [e.name for e in list_entries() if e.kind == "algebra"]


def frame_names() -> list[str]:
    return [e.name for e in list_entries() if e.kind == "frame"]


def multiplication_names() -> list[str]:
    return [e.name for e in list_entries() if e.kind == "multiplication"]
