from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from hecke_transfer.errors import CostGuardError
from hecke_transfer.root_datum import (
    automorphism_from_permutation,
    cartan_matrix,
    dominance_leq,
    dominant_representative,
    dual,
    from_cartan,
    orbit,
    preset,
    weyl_group,
)
from hecke_transfer.checks import coxeter_relation_failures, desk_presets


def test_gl2_basics(gl2):
    assert gl2.simple_coroots == ((1, -1),)
    assert len(gl2.roots) == 2
    assert gl2.two_rho == (1, -1)


def test_sl3_two_rho_check():
    D = preset("SL", 3)
    assert len(D.positive_roots) == 3
    # 2 rho^ = 2(a1^ + a2^) in coroot coordinates
    assert D.coroot_coordinates(D.two_rho_check) == (2, 2)


def test_g2_positive_roots():
    assert len(preset("G2-sc").positive_roots) == 6


@pytest.mark.parametrize("kind, n, order", [
    ("A", 2, 6), ("B", 2, 8), ("C", 3, 48), ("D", 4, 192), ("G", 2, 12), ("F", 4, 1152),
])
def test_weyl_orders(kind, n, order):
    assert len(weyl_group(preset(kind, n))) == order


def test_weyl_order_families():
    for n in range(1, 5):
        assert len(weyl_group(preset("GL", n + 1))) == factorial(n + 1)
    assert len(weyl_group(preset("Sp", 6))) == 2**3 * 6
    assert len(weyl_group(preset("SO-even", 8))) == 2**3 * 24


def test_weyl_guard():
    with pytest.raises(CostGuardError):
        weyl_group(preset("E", 8))


def test_cartan_conventions():
    b3 = cartan_matrix("B", 3)
    assert b3[2][1] == -2 and b3[1][2] == -1
    assert cartan_matrix("C", 3) == [list(r) for r in zip(*b3)]
    g2 = cartan_matrix("G", 2)
    assert g2[0][1] == -3 and g2[1][0] == -1
    assert cartan_matrix("F", 4)[2][1] == -2


def test_preset_errors():
    with pytest.raises(ValueError):
        preset("Q", 3)
    with pytest.raises(ValueError):
        preset("SO-even", 2)
    with pytest.raises(ValueError):
        preset("A2-xx")


def test_dominant_representative_examples(gl2):
    lam, w = dominant_representative(gl2, (0, 1))
    assert lam == (1, 0) and w.word == (0,)
    lam, w = dominant_representative(gl2, (3, 1))
    assert lam == (3, 1) and w.is_identity()


def test_negative_fundamental_coweight(a2):
    lam, w = dominant_representative(a2, (-1, 0))
    assert a2.is_dominant(lam)
    assert lam == (0, 1)
    scan = [v for v in orbit(a2, (-1, 0)) if a2.is_dominant(v)]
    assert scan == [lam]
    assert w((-1, 0)) == lam


def test_dominance_examples(gl2):
    assert dominance_leq(gl2, (0, 1), (1, 0))
    assert not dominance_leq(gl2, (1, 1), (1, 0))


def test_dominance_brute_force_a3():
    D = preset("A3-sc")
    w2 = (0, 1, 0)
    cone = set()
    for a in range(4):
        for b in range(4):
            for c in range(4):
                v = tuple(x - a * p - b * q - c * r for x, p, q, r in zip(w2, *D.simple_coroots))
                cone.add(v)
    for v in cone:
        assert dominance_leq(D, v, w2)
    assert not dominance_leq(D, (1, 0, 0), w2)


def test_orbits(gl2, a2):
    assert orbit(gl2, (1, 0)) == {(1, 0), (0, 1)}
    assert len(orbit(a2, (1, 0))) == 3
    # short coweight of B2 (a long root of the dual)
    assert len(orbit(preset("B2-sc"), (1, 0))) == 4


def test_automorphisms(a2):
    assert automorphism_from_permutation(a2, (0, 1)).is_identity()
    th = automorphism_from_permutation(a2, (1, 0))
    assert th.order == 2
    assert th(a2.simple_coroots[0]) == a2.simple_coroots[1]
    d4 = preset("D4-sc")
    tri = automorphism_from_permutation(d4, (2, 1, 3, 0))
    assert tri.order == 3
    for i, j in enumerate(tri.perm):
        assert tri(d4.simple_coroots[i]) == d4.simple_coroots[j]
    with pytest.raises(ValueError):
        automorphism_from_permutation(preset("B2-sc"), (1, 0))


def test_dual_swaps():
    D = preset("B3-sc")
    E = dual(D)
    assert E.simple_roots == D.simple_coroots
    assert [list(r) for r in E.cartan] == [list(r) for r in zip(*D.cartan)]


def test_from_cartan_rejects_bad_matrix():
    with pytest.raises(ValueError):
        from_cartan([[2, -1], [-1, 3]])


@pytest.mark.parametrize("D", desk_presets(), ids=lambda D: D.name)
def test_coxeter_relations(D):
    assert coxeter_relation_failures(D) == []


_SAMPLE = [preset("GL", 3), preset("A2-sc"), preset("B2-sc"), preset("G2-sc"), preset("Sp", 4), preset("D4-ad")]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(_SAMPLE), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_dominant_representative_in_orbit(D, coords):
    lam = tuple(coords[: D.rank])
    dom, w = dominant_representative(D, lam)
    assert D.is_dominant(dom)
    assert w(lam) == dom
    assert dom in orbit(D, lam)
    assert orbit(D, dom) == orbit(D, lam)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_SAMPLE), st.data())
def test_dominance_partial_order(D, data):
    vec = st.lists(st.integers(-2, 2), min_size=D.rank, max_size=D.rank).map(tuple)
    a = data.draw(vec)
    coroot = data.draw(st.lists(st.integers(0, 2), min_size=D.semisimple_rank, max_size=D.semisimple_rank))
    b = tuple(x + sum(c * cv[k] for c, cv in zip(coroot, D.simple_coroots)) for k, x in enumerate(a))
    assert dominance_leq(D, a, a)
    assert dominance_leq(D, a, b)
    if a != b:
        assert not dominance_leq(D, b, a)
    coroot2 = data.draw(st.lists(st.integers(0, 2), min_size=D.semisimple_rank, max_size=D.semisimple_rank))
    c = tuple(x + sum(k * cv[j] for k, cv in zip(coroot2, D.simple_coroots)) for j, x in enumerate(b))
    assert dominance_leq(D, a, c)
