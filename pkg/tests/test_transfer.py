import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecke_transfer import transfer as tr
from hecke_transfer import weights as wt
from hecke_transfer.checks import random_class_functions, torus_catalogs
from hecke_transfer.kottwitz import basic_class_of
from hecke_transfer.root_datum import preset, trivial_automorphism


@pytest.fixture(scope="module")
def gl2_tori(gl2):
    th = trivial_automorphism(gl2)
    return {"1": tr.torus_type(gl2, (), th, "1"), "s1": tr.torus_type(gl2, (0,), th, "s1")}


def test_parse_weyl_word():
    assert tr.parse_weyl_word("s1s2") == (0, 1)
    assert tr.parse_weyl_word("2,1,2") == (1, 0, 1)
    assert tr.parse_weyl_word("1") == ()
    with pytest.raises(ValueError):
        tr.parse_weyl_word("s0")


def test_ellipticity(gl2, gl2_tori):
    assert tr.is_elliptic(gl2, gl2_tori["s1"])
    assert not tr.is_elliptic(gl2, gl2_tori["1"])
    gl1 = preset("GL", 1)
    assert tr.is_elliptic(gl1, tr.torus_type(gl1, ()))
    gl3 = preset("GL", 3)
    assert tr.is_elliptic(gl3, tr.torus_type(gl3, (0, 1)))
    assert not tr.is_elliptic(gl3, tr.torus_type(gl3, (0,)))


def test_gl2_kernel_doubles(gl2, gl2_tori):
    t = gl2_tori["s1"]
    k = tr.transfer_kernel(gl2, None, (1, 0), t, basic_class_of(gl2, None, (1, 0)))
    assert k.values == (((1,), 2),)
    assert tr.rel_fiber(gl2, None, (1, 0), t, (1,)) == {(1, 0), (0, 1)}
    assert tr.rel_fiber(gl2, None, (1, 0), t, (2,)) == set()


def test_trivial_mu_kernel(gl2, gl2_tori):
    for t in gl2_tori.values():
        k = tr.transfer_kernel(gl2, None, (0, 0), t)
        assert k.mass == 1
        assert k[t.kappa_T((0, 0))] == 1


def test_gl3_coxeter():
    D = preset("GL", 3)
    t = tr.torus_type(D, (0, 1))
    assert t.coinvariant_group.free_rank == 1 and not t.coinvariant_group.invariant_factors
    k = tr.transfer_kernel(D, None, (1, 0, 0), t)
    assert len(k.values) == 1 and k.mass == 3
    fibers = [tr.rel_fiber(D, None, (1, 0, 0), t, nu) for nu, _ in k.values]
    assert set().union(*fibers) == wt.weight_support(D, (1, 0, 0))


def test_gl2_operators(gl2, gl2_tori):
    model = tr.HeckeTransfer(gl2, None, (1, 0), gl2_tori)
    f = tr.ClassFunction("G", [(tr.ClassPointG("s1", "g"), Fraction(3, 7))])
    out = model.G_to_J(f)
    assert dict(out) == {tr.ClassPointJ("s1", "g", (1,)): Fraction(6, 7)}
    back = model.J_to_G(out)
    assert dict(back) == {tr.ClassPointG("s1", "g"): Fraction(12, 7)}
    assert not model.G_to_J(tr.ClassFunction("G", []))
    with pytest.raises(ValueError):
        model.j_point("s1", "g", (0,))
    with pytest.raises(KeyError):
        model.kernel("s9")


def test_linearity(gl2, gl2_tori):
    model = tr.HeckeTransfer(gl2, None, (2, 0), gl2_tori)
    rng = random.Random(1)
    for _ in range(10):
        f, _ = random_class_functions(rng, model)
        g, _ = random_class_functions(rng, model)
        c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert model.G_to_J(f + g.scale(c)) == model.G_to_J(f) + model.G_to_J(g).scale(c)


def test_pairing_basics():
    x, y = tr.ClassPointG("t", "x"), tr.ClassPointG("t", "y")
    dx = tr.ClassFunction("G", [(x, 1)])
    dy = tr.ClassFunction("G", [(y, 1)])
    assert tr.pairing(dx, dx) == 1
    assert tr.pairing(dx, dy) == 0
    assert tr.pairing(dx.scale(2) + dy, dx + dy.scale(3)) == 5
    with pytest.raises(ValueError):
        tr.pairing(dx, tr.ClassFunction("J", []))


def test_class_function_json_round_trip(gl2, gl2_tori):
    model = tr.HeckeTransfer(gl2, None, (1, 0), gl2_tori)
    f = model.G_to_J(tr.ClassFunction("G", [(tr.ClassPointG("s1", "g"), Fraction(-1, 3))]))
    payload = f.to_json()
    assert payload == [{"torus": "s1", "label": "g", "nu": [1], "value": "-2/3"}]
    assert tr.ClassFunction.from_json(payload) == f


def test_vanishing(gl2, gl2_tori):
    assert tr.vanishing_check(gl2, None, (1, 0), (1,), gl2_tori)
    model = tr.HeckeTransfer(gl2, None, (1, 0), gl2_tori, c=(2,))
    assert all(model.kernel(n).is_zero() for n in gl2_tori)
    assert tr.vanishing_check(gl2, None, (1, 0), (2,), gl2_tori)


def test_vanishing_two_classes():
    # PGL_2 has pi_1 = Z/2; both classes are exercised
    D = preset("PGL", 2)
    tori = tr.full_catalog(D)
    for mu in [(1,), (2,)]:
        own = basic_class_of(D, None, mu).value
        other = ((own[0] + 1) % 2,)
        assert any(not tr.HeckeTransfer(D, None, mu, tori, own).kernel(n).is_zero() for n in tori)
        assert all(tr.HeckeTransfer(D, None, mu, tori, other).kernel(n).is_zero() for n in tori)
        assert tr.vanishing_check(D, None, mu, other, tori)


def test_elliptic_filter(gl2, gl2_tori):
    model = tr.HeckeTransfer(gl2, None, (1, 0), gl2_tori, elliptic_only=True)
    assert model.non_elliptic == ["1"]
    assert model.kernel("1").is_zero()
    assert model.kernel("s1").mass == 2


_CATALOGS = torus_catalogs()


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_CATALOGS), st.integers(0, 10**6))
def test_adjointness(cat, seed):
    D, theta, tori = cat
    rng = random.Random(seed)
    from hecke_transfer.checks import dominant_sample

    mu = rng.choice(dominant_sample(D, 1, 30))
    model = tr.HeckeTransfer(D, theta, mu, tori)
    g, f = random_class_functions(rng, model, 6)
    assert tr.pairing(model.J_to_G(f), g) == tr.pairing(f, model.G_to_J(g))


@pytest.mark.parametrize("cat", _CATALOGS, ids=lambda c: c[0].name)
def test_kernel_mass_and_support(cat):
    D, theta, tori = cat
    mu = (1,) + (0,) * (D.rank - 1) if D.is_dominant((1,) + (0,) * (D.rank - 1)) else (0,) * D.rank
    c = basic_class_of(D, theta, mu).value
    for t in tori.values():
        k = tr.transfer_kernel(D, theta, mu, t)
        assert k.mass == wt.weyl_dim(D, mu)
        assert all(tr._pi1_image(D, t, nu) == c for nu, _ in k.values)
