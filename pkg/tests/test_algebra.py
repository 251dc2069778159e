"""Structure-constant Lie algebras: brackets, Killing form, series flags."""

from fractions import Fraction

import pytest

from liechar import catalog, linalg
from liechar.algebra import LieAlgebra, lie_algebra


def F(x: int, y: int = 1) -> Fraction:
    return Fraction(x, y)


def sl2() -> LieAlgebra:
    return catalog.get("sl2", kind="algebra").payload


def heisenberg() -> LieAlgebra:
    return catalog.get("heisenberg3", kind="algebra").payload


def basis_vectors(n: int) -> list:
    out = []
    for i in range(n):
        v = [F(0)] * n
        v[i] = F(1)
        out.append(v)
    return out


def test_constructor_normalizes_reversed_pairs() -> None:
    a = lie_algebra(2, {(2, 1, 2): F(-1)})
    b = lie_algebra(2, {(1, 2, 2): F(1)})
    assert a.structure_constant(1, 2, 2) == b.structure_constant(1, 2, 2) == F(1)


def test_constructor_rejects_conflicting_duplicates() -> None:
    with pytest.raises(ValueError):
        lie_algebra(2, {(1, 2, 2): F(1), (2, 1, 2): F(1)})


def test_constructor_rejects_out_of_range_indices() -> None:
    with pytest.raises(ValueError):
        lie_algebra(2, {(1, 3, 2): F(1)})
    with pytest.raises(ValueError):
        lie_algebra(2, {(0, 1, 1): F(1)})
    with pytest.raises(ValueError):
        lie_algebra(2, {(1, 1, 2): F(1)})


def test_constructor_coerces_ints_and_rejects_floats() -> None:
    a = lie_algebra(2, {(1, 2, 1): 3})
    assert a.structure_constant(1, 2, 1) == F(3)
    with pytest.raises(TypeError):
        lie_algebra(2, {(1, 2, 1): 0.5})


def test_basis_names_default_and_custom() -> None:
    a = lie_algebra(2, {})
    assert a.names == ("e1", "e2")
    b = lie_algebra(2, {}, names=("t", "s"))
    assert b.names == ("t", "s")
    with pytest.raises(ValueError):
        lie_algebra(2, {}, names=("t",))


def test_bracket_is_antisymmetric_and_bilinear() -> None:
    g = sl2()
    x = [F(1), F(2), F(-1)]
    y = [F(0), F(3), F(5)]
    xy = g.bracket(x, y)
    yx = g.bracket(y, x)
    assert [a + b for a, b in zip(xy, yx)] == [F(0)] * 3
    # bilinearity in the first slot
    z = [F(2), F(-1), F(1)]
    lhs = g.bracket([a + 2 * b for a, b in zip(x, z)], y)
    rhs = [a + 2 * b for a, b in zip(xy, g.bracket(z, y))]
    assert lhs == rhs


def test_bracket_basis_oracle_sl2() -> None:
    g = sl2()
    X, H, Y = basis_vectors(3)
    assert g.bracket(X, H) == [F(-2), F(0), F(0)]
    assert g.bracket(X, Y) == [F(0), F(1), F(0)]
    assert g.bracket(H, Y) == [F(0), F(0), F(-2)]


def test_ad_acts_on_columns() -> None:
    g = heisenberg()
    p, q, _ = basis_vectors(3)
    ad_p = g.ad(p)
    # column j of ad(x) is [x, e_j]
    col_q = [ad_p[i][1] for i in range(3)]
    assert col_q == g.bracket(p, q) == [F(0), F(0), F(1)]


def test_validate_flags_jacobi_violations() -> None:
    bad = lie_algebra(3, {(1, 2, 1): F(1), (1, 3, 2): F(1)})
    report = bad.validate()
    assert not report.ok
    assert (1, 2, 3, 2) in report.violations


def test_all_catalog_algebras_satisfy_jacobi() -> None:
    for entry in catalog.list_entries():
        if entry.kind != "algebra":
            continue
        assert entry.payload.validate().ok, entry.name


def test_killing_form_sl2_oracle() -> None:
    g = sl2()
    k = g.killing()
    assert k == [
        [F(0), F(0), F(4)],
        [F(0), F(8), F(0)],
        [F(4), F(0), F(0)],
    ]
    assert linalg.symmetric_signature(k) == (2, 1, 0)


def test_killing_form_so3_oracle() -> None:
    g = catalog.get("so3", kind="algebra").payload
    k = g.killing()
    assert k == [
        [F(-2), F(0), F(0)],
        [F(0), F(-2), F(0)],
        [F(0), F(0), F(-2)],
    ]
    assert linalg.symmetric_signature(k) == (0, 3, 0)


def test_killing_form_is_invariant() -> None:
    # kappa([x,y],z) + kappa(y,[x,z]) = 0 for random rational vectors
    import random

    rng = random.Random(20240801)
    for name in ("sl2", "so3", "heisenberg3", "affine1", "borel_sl2"):
        g = catalog.get(name, kind="algebra").payload
        k = g.killing()

        def kappa(u: list, v: list) -> Fraction:
            return sum(
                k[i][j] * u[i] * v[j] for i in range(g.dim) for j in range(g.dim)
            )

        for _ in range(12):
            x = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(g.dim)]
            y = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(g.dim)]
            z = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(g.dim)]
            assert kappa(g.bracket(x, y), z) + kappa(y, g.bracket(x, z)) == 0


def test_series_flags_on_catalog() -> None:
    expected = {
        "abelian(3)": (True, True, False, True),
        "heisenberg3": (True, True, False, True),
        "affine1": (True, False, False, False),
        "borel_sl2": (True, False, False, False),
        "sl2": (False, False, True, True),
        "so3": (False, False, True, True),
        "sl2_plus_abelian2": (False, False, False, True),
    }
    for name, (solv, nilp, semi, unim) in expected.items():
        g = catalog.get(name, kind="algebra").payload
        assert g.is_solvable() == solv, name
        assert g.is_nilpotent() == nilp, name
        assert g.is_semisimple() == semi, name
        assert g.is_unimodular() == unim, name


def test_nilpotent_implies_solvable_everywhere() -> None:
    for entry in catalog.list_entries():
        if entry.kind != "algebra":
            continue
        g = entry.payload
        if g.is_nilpotent():
            assert g.is_solvable(), entry.name


def test_semisimple_matches_killing_nondegeneracy() -> None:
    for entry in catalog.list_entries():
        if entry.kind != "algebra":
            continue
        g = entry.payload
        p, n, z = linalg.symmetric_signature(g.killing())
        assert g.is_semisimple() == (z == 0), entry.name
