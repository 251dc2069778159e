"""Finite-dimensional Lie algebras over exact rationals.

A LieAlgebra stores antisymmetric structure constants c[i][j][k] for
1-based basis indices i < j; the bracket, adjoint operators, Killing form
and the structural predicates (solvable, nilpotent, semisimple, unimodular)
are all derived from them with Fraction arithmetic, so every decision in
this module is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational

from . import linalg
from .linalg import Matrix

Vector = list[Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"structure constants must be exact rationals, got float {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    return Fraction(value)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the Jacobi check; violations are (i, j, k, m) index tuples."""

    ok: bool
    violations: tuple[tuple[int, int, int, int], ...] = ()


@dataclass(frozen=True)
class LieAlgebra:
    """Lie algebra given by structure constants on a fixed basis.

    Attributes:
        dim: dimension n >= 1.
        c: constants as a map (i, j, k) -> Fraction with 1 <= i < j <= n and
            1 <= k <= n; entries for i > j follow by antisymmetry and absent
            entries are zero. Use structure_constant() for reads.
        names: n basis labels, decorative only.
    """

    dim: int
    c: dict[tuple[int, int, int], Fraction]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        normalized: dict[tuple[int, int, int], Fraction] = {}
        for (i, j, k), value in self.c.items():
            if not (1 <= i <= self.dim and 1 <= j <= self.dim and 1 <= k <= self.dim):
                raise ValueError(f"index out of range in constant ({i},{j},{k})")
            if i == j:
                raise ValueError(f"constant ({i},{j},{k}) has repeated lower indices")
            v = _as_fraction(value)
            if v == 0:
                continue
            if i > j:
                i, j, v = j, i, -v
            key = (i, j, k)
            if key in normalized and normalized[key] != v:
                raise ValueError(f"conflicting values for constant {key}")
            normalized[key] = v
        object.__setattr__(self, "c", normalized)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"e{i}" for i in range(1, self.dim + 1)))
        if len(self.names) != self.dim:
            raise ValueError("need one basis name per dimension")

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        """c_{ij}^k, extended to all index orders by antisymmetry."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self.c.get((i, j, k), Fraction(0))
        return -self.c.get((j, i, k), Fraction(0))

    def basis_vector(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i - 1] = Fraction(1)
        return v

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """[x, y]^k = sum_{i<j} (x^i y^j - x^j y^i) c_{ij}^k."""
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError("vector length must match the algebra dimension")
        out = [Fraction(0)] * n
        for (i, j, k), cval in self.c.items():
            coeff = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if coeff:
                out[k - 1] += coeff * cval
        return out

    def ad(self, x: Vector) -> Matrix:
        """Adjoint operator of x: column j is [x, e_j]."""
        n = self.dim
        if len(x) != n:
            raise ValueError("vector length must match the algebra dimension")
        m = linalg.zeros(n, n)
        for j in range(1, n + 1):
            col = self.bracket(x, self.basis_vector(j))
            for i in range(n):
                m[i][j - 1] = col[i]
        return m

    def basis_ad(self) -> list[Matrix]:
        """Adjoint operators of the basis vectors, in basis order."""
        return [self.ad(self.basis_vector(i)) for i in range(1, self.dim + 1)]

    def validate(self) -> ValidationReport:
        """Check every Jacobi identity; antisymmetry holds by construction."""
        n = self.dim
        violations = []
        for i, j, k in combinations(range(1, n + 1), 3):
            for m in range(1, n + 1):
                total = Fraction(0)
                for a in range(1, n + 1):
                    total += self.structure_constant(i, j, a) * self.structure_constant(a, k, m)
                    total += self.structure_constant(j, k, a) * self.structure_constant(a, i, m)
                    total += self.structure_constant(k, i, a) * self.structure_constant(a, j, m)
                if total != 0:
                    violations.append((i, j, k, m))
        return ValidationReport(ok=not violations, violations=tuple(violations))

    def killing(self) -> Matrix:
        """Gram matrix of the Killing form kappa(x, y) = tr(ad x . ad y)."""
        ads = self.basis_ad()
        n = self.dim
        kappa = linalg.zeros(n, n)
        for i in range(n):
            for j in range(i, n):
                value = linalg.trace(linalg.mat_mul(ads[i], ads[j]))
                kappa[i][j] = value
                kappa[j][i] = value
        return kappa

    def killing_pair(self, x: Vector, y: Vector) -> Fraction:
        kappa = self.killing()
        return sum(
            (x[i] * kappa[i][j] * y[j] for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    def _subspace_brackets(self, left: list[Vector], right: list[Vector]) -> list[Vector]:
        """Echelon basis of span{[u, v] : u in left, v in right}."""
        products = [self.bracket(u, v) for u in left for v in right]
        products = [p for p in products if any(p)]
        if not products:
            return []
        rref, pivots = linalg.row_reduce(products)
        return [rref[r] for r in range(len(pivots))]

    def is_solvable(self) -> bool:
        """Derived series [g, g], [[g,g],[g,g]], ... reaches zero."""
        span = [self.basis_vector(i) for i in range(1, self.dim + 1)]
        while span:
            nxt = self._subspace_brackets(span, span)
            if len(nxt) == len(span):
                return False
            span = nxt
        return True

    def is_nilpotent(self) -> bool:
        """Lower central series [g, g], [g, [g, g]], ... reaches zero."""
        full = [self.basis_vector(i) for i in range(1, self.dim + 1)]
        span = full
        while span:
            nxt = self._subspace_brackets(full, span)
            if len(nxt) == len(span):
                return False
            span = nxt
        return True

    def is_semisimple(self) -> bool:
        """Cartan's criterion: the Killing form is nondegenerate."""
        return linalg.determinant(self.killing()) != 0

    def is_unimodular(self) -> bool:
        """tr(ad e_i) = 0 for every basis vector."""
        return all(linalg.trace(m) == 0 for m in self.basis_ad())


def lie_algebra(
    dim: int,
    brackets: dict[tuple[int, int, int], Fraction | int | str] | None = None,
    names: tuple[str, ...] | list[str] = (),
) -> LieAlgebra:
    """Convenience constructor accepting int/str constants, e.g. {(1, 2, 3): 1}."""
    constants = {key: _as_fraction(v) for key, v in (brackets or {}).items()}
    return LieAlgebra(dim=dim, c=constants, names=tuple(names))
