from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hecke_transfer import weights as wt
from hecke_transfer.checks import dominant_sample, shape_of
from hecke_transfer.cyclotomic import CyclotomicNumber, TorusPointFiniteOrder
from hecke_transfer.errors import CostGuardError
from hecke_transfer.root_datum import orbit, preset, weyl_group


def test_gl2_standard(gl2):
    assert wt.weyl_dim(gl2, (1, 0)) == 2
    assert dict(wt.weight_multiplicities(gl2, (1, 0))) == {(1, 0): 1, (0, 1): 1}
    assert wt.weight_support(gl2, (1, 0)) == {(1, 0), (0, 1)}


def test_trivial_rep(a2):
    assert wt.weyl_dim(a2, (0, 0)) == 1
    assert dict(wt.weight_multiplicities(a2, (0, 0))) == {(0, 0): 1}
    assert wt.weight_support(a2, (0, 0)) == {(0, 0)}


def test_a2_adjoint(a2):
    m = wt.weight_multiplicities(a2, (1, 1))
    assert wt.weyl_dim(a2, (1, 1)) == 8 == m.mass
    assert m[(0, 0)] == 2
    assert len(m) == 7
    for lam in m:
        assert m[lam] == wt.kostant_multiplicity_oracle(a2, (1, 1), lam)


def test_non_dominant_rejected(gl2):
    with pytest.raises(ValueError):
        wt.weyl_dim(gl2, (0, 1))
    with pytest.raises(ValueError):
        wt.weight_multiplicities(gl2, (0, 1))


def test_b2_quasi_minuscule_support():
    D = preset("B2-sc")
    for mu in dominant_sample(D, 2, 20):
        if mu != (0, 0) and wt.classify_minimal(D, mu).kind == "quasi-minuscule":
            assert wt.weight_support(D, mu) == orbit(D, mu) | {(0, 0)}
            break
    else:
        pytest.fail("no quasi-minuscule coweight found")


def test_kostant_guard():
    with pytest.raises(CostGuardError):
        wt.kostant_multiplicity_oracle(preset("A4-sc"), (1, 0, 0, 0), (1, 0, 0, 0))


def test_support_guard():
    with pytest.raises(CostGuardError):
        wt.weight_multiplicities(preset("F4-sc"), (9, 9, 9, 9))


def test_classify_examples(a2):
    for n in range(2, 6):
        mu = (1,) + (0,) * (n - 1)
        assert wt.classify_minimal(preset("GL", n), mu).kind == "minuscule"
    A1 = preset("A1-ad")
    c = wt.classify_minimal(A1, A1.simple_coroots[0])
    assert c.kind == "quasi-minuscule"
    assert c.gamma == A1.simple_roots[0]
    assert wt.weight_support(A1, A1.simple_coroots[0]) == {(1,), (0,), (-1,)}
    with pytest.raises(ValueError):
        wt.classify_minimal(a2, (0, 0))


def test_g2_has_one_quasi_minuscule_coweight():
    D = preset("G2-sc")
    found = [mu for mu in dominant_sample(D, 3) if any(mu) and wt.classify_minimal(D, mu).kind == "quasi-minuscule"]
    assert len(found) == 1
    assert shape_of(D, found[0]) == "quasi-minuscule"


def test_tensor_examples(gl2, a2):
    assert wt.tensor_decompose(gl2, (1, 0), (1, 0)) == Counter({(2, 0): 1, (1, 1): 1})
    assert wt.tensor_decompose(a2, (1, 1), (0, 0)) == Counter({(1, 1): 1})
    assert wt.tensor_decompose(a2, (1, 0), (0, 1)) == Counter({(1, 1): 1, (0, 0): 1})


def test_convolve_examples(gl2):
    f = wt.weight_multiplicities(gl2, (1, 0))
    assert wt.convolve(wt.WeightFunction.delta((0, 0)), f) == f
    ff = wt.convolve(f, f)
    assert ff.mass == 4
    assert ff[(1, 1)] == 2


def test_weight_function_json_round_trip(a2):
    m = wt.weight_multiplicities(a2, (2, 1))
    payload = m.to_json()
    assert [tuple(r["lambda"]) for r in payload] == sorted(m)
    assert wt.WeightFunction.from_json(payload) == m


def test_character_examples(gl2, a2):
    s = TorusPointFiniteOrder(2, (Fraction(1, 2), 0))
    assert wt.character_eval(gl2, (1, 0), s).is_zero()
    e = TorusPointFiniteOrder.identity(2, 5)
    assert wt.character_eval(a2, (2, 1), e) == CyclotomicNumber.constant(5, 15)
    s3 = TorusPointFiniteOrder(3, (Fraction(1, 3), 0))
    assert wt.character_eval(gl2, (1, 0), s3) == CyclotomicNumber.zeta(3) + CyclotomicNumber.constant(3, 1)


def test_weyl_oracle_rejects_singular(gl2):
    with pytest.raises(ValueError):
        wt.weyl_character_oracle(gl2, (1, 0), TorusPointFiniteOrder.identity(2, 3))


_GROUPS = [preset("A2-sc"), preset("B2-sc"), preset("G2-sc"), preset("GL", 3), preset("Sp", 4)]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_GROUPS), st.data())
def test_multiplicities_are_weyl_invariant(D, data):
    mu = data.draw(st.sampled_from(dominant_sample(D, 2, 200)))
    m = wt.weight_multiplicities(D, mu)
    assert m.mass == wt.weyl_dim(D, mu)
    w = data.draw(st.sampled_from(weyl_group(D)))
    for lam, k in m.items():
        assert m[w(lam)] == k


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_GROUPS[:3]), st.data())
def test_convolution_matches_tensor_product(D, data):
    sample = dominant_sample(D, 1, 30)
    mu, nu = data.draw(st.sampled_from(sample)), data.draw(st.sampled_from(sample))
    lhs = wt.convolve(wt.weight_multiplicities(D, mu), wt.weight_multiplicities(D, nu))
    rhs = wt.WeightFunction({})
    for lam, k in wt.tensor_decompose(D, mu, nu).items():
        rhs = rhs + wt.weight_multiplicities(D, lam).scale(k)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(_GROUPS), st.data())
def test_character_matches_weyl_formula(D, data):
    from hecke_transfer.checks import random_regular_point
    import random

    mu = data.draw(st.sampled_from(dominant_sample(D, 1, 100)))
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    s = random_regular_point(rng, D, data.draw(st.sampled_from([7, 8, 9, 12])))
    assert wt.character_eval(D, mu, s) == wt.weyl_character_oracle(D, mu, s)


@pytest.mark.parametrize("name", ["A3-sc", "B3-sc", "C3-sc"])
def test_rank3_freudenthal_matches_kostant(name):
    D = preset(name)
    for mu in dominant_sample(D, 1, 70):
        for lam, m in wt.dominant_multiplicities(D, mu).items():
            assert m == wt.kostant_multiplicity_oracle(D, mu, lam)
