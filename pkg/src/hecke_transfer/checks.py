"""Identity suites: every invariant of the library, run on desk-scale samples."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Callable, Iterator

from . import kottwitz as kt
from . import lefschetz as lf
from . import spectral as sp
from . import transfer as tr
from . import weights as wt
from .cyclotomic import TorusPointFiniteOrder
from .root_datum import (
    BasedRootDatum,
    automorphism_from_permutation,
    dominance_leq,
    dominant_representative,
    orbit,
    preset,
    trivial_automorphism,
    weyl_group,
)


@dataclass
class CheckResult:
    id: str
    passed: bool
    lhs: object = None
    rhs: object = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "status": "pass" if self.passed else "fail",
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "elapsed": round(self.elapsed, 3),
        }


@dataclass
class CheckReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "results": [r.to_json() for r in self.results],
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return [_jsonable(v) for v in sorted(x)]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


# ---------------------------------------------------------------------------
# Samples


def desk_presets() -> list[BasedRootDatum]:
    """Presets with lattice rank <= 4."""
    out = [preset("GL", n) for n in (2, 3, 4)]
    out += [preset("SL", n) for n in (2, 3, 4)] + [preset("PGL", n) for n in (2, 3)]
    out += [preset("Sp", 4), preset("Sp", 6), preset("SO-odd", 5), preset("SO-odd", 7), preset("SO-even", 8)]
    for name in ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"):
        for lat in ("sc", "ad"):
            if name in ("G2", "F4") and lat == "ad":
                continue
            out.append(preset(f"{name}-{lat}"))
    return out


def fundamental_coweight_presets() -> list[BasedRootDatum]:
    """Types whose fundamental coweights are cocharacters (dual group simply connected)."""
    names = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "D4", "G2")
    return [preset(f"{n}-sc") for n in names]


def dominant_sample(D: BasedRootDatum, bound: int = 2, max_dim: int | None = None) -> list[tuple[int, ...]]:
    """Dominant cocharacters with coordinates in [-bound, bound], sorted by dimension."""
    out = []
    for v in product(range(-bound, bound + 1), repeat=D.rank):
        if D.is_dominant(v):
            d = wt.weyl_dim(D, v)
            if max_dim is None or d <= max_dim:
                out.append((d, v))
    out.sort()
    return [v for _, v in out]


def random_cocharacter(rng: random.Random, D: BasedRootDatum, bound: int = 4) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(D.rank))


def random_torus_point(rng: random.Random, D: BasedRootDatum, order: int) -> TorusPointFiniteOrder:
    return TorusPointFiniteOrder(order, tuple(Fraction(rng.randrange(order), order) for _ in range(D.rank)))


def classical_weyl_order(D: BasedRootDatum) -> int:
    """|W| from the classification, read off the Cartan matrix components."""
    c = D.cartan
    r = D.semisimple_rank
    seen, total = set(), 1
    for start in range(r):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if j not in seen and c[i][j]:
                    seen.add(j)
                    stack.append(j)
        n = len(comp)
        entries = sorted(c[i][j] for i in comp for j in comp if i != j and c[i][j])
        branch = max((sum(1 for j in comp if j != i and c[i][j]) for i in comp), default=0)
        if -3 in entries:
            total *= 12
        elif -2 in entries:
            total *= 1152 if n == 4 and _f4_like(c, comp) else 2**n * factorial(n)
        elif branch >= 3:
            e_orders = {6: 51840, 7: 2903040, 8: 696729600}
            total *= e_orders[n] if _is_e(c, comp) else 2 ** (n - 1) * factorial(n)
        else:
            total *= factorial(n + 1)
    return total


def _f4_like(c, comp) -> bool:
    # in F4 the double bond sits between the two middle nodes of the chain
    ends = [i for i in comp if sum(1 for j in comp if j != i and c[i][j]) == 1]
    double = [(i, j) for i in comp for j in comp if c[i][j] == -2]
    return all(i not in ends and j not in ends for i, j in double)


def _is_e(c, comp) -> bool:
    # D_n has a branch node with two legs of length one; E_n does not
    deg = {i: sum(1 for j in comp if j != i and c[i][j]) for i in comp}
    branch = next(i for i in comp if deg[i] >= 3)
    leaves = [j for j in comp if j != branch and c[branch][j] and deg[j] == 1]
    return len(leaves) < 2


# ---------------------------------------------------------------------------
# Suites


def _timed(results: list, cid: str, fn: Callable[[], tuple]):
    t0 = time.perf_counter()
    try:
        lhs, rhs = fn()
        ok = lhs == rhs
    except Exception as exc:  # report, don't abort the suite
        lhs, rhs, ok = f"error: {exc!r}", None, False
    results.append(CheckResult(cid, ok, lhs, rhs, time.perf_counter() - t0))


def suite_gl2_scenario(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    D = preset("GL", 2)
    mu = (1, 0)
    ell = tr.torus_type(D, (0,))
    S = sp.AbelianCentralizer(4, ((Fraction(1, 4), Fraction(1, 4)),))
    yield "gl2.weights", lambda: (wt.weight_multiplicities(D, mu), wt.WeightFunction({(1, 0): 1, (0, 1): 1}))
    yield "gl2.elliptic", lambda: (tr.is_elliptic(D, ell), True)
    yield "gl2.kernel", lambda: (tr.transfer_kernel(D, None, mu, ell, kt.basic_class_of(D, None, mu)).as_dict(), {(1,): 2})
    yield "gl2.rel_fiber", lambda: (tr.rel_fiber(D, None, mu, ell, (1,)), frozenset({(1, 0), (0, 1)}))

    def doubling():
        model = tr.HeckeTransfer(D, None, mu, {"s1": ell})
        f = tr.ClassFunction("G", {tr.ClassPointG("s1", "g"): Fraction(5, 3)})
        return model.G_to_J(f), tr.ClassFunction("J", {tr.ClassPointJ("s1", "g", (1,)): Fraction(10, 3)})

    yield "gl2.T_GtoJ_doubles", doubling
    yield "gl2.shtuka_dimension", lambda: (kt.shtuka_dimension(D, mu), 1)
    yield "gl2.sign", lambda: (kt.sign_identity(D, mu), (-1, -1))
    yield "gl2.hom", lambda: (sp.hom_multiplicity(D, mu, S, (1,)), 2)
    yield "gl2.hom_averaged", lambda: (sp.averaging_multiplicity(D, mu, S, (1,)), 2)
    yield "gl2.rhs", lambda: (sp.kottwitz_rhs(D, mu, S, sp.PacketDatum.from_mapping({"pi": (0,)}), (1,)), {"pi": -2})
    yield "gl2.lefschetz", lambda: (lf.lefschetz_global_check(D, mu).global_sum, 2)
    yield "gl2.vanishing", lambda: (tr.vanishing_check(D, None, mu, (2,), [ell]), True)


def suite_root_datum(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    for D in desk_presets():
        name = D.name

        def dom(D=D):
            bad = []
            for _ in range(10):
                lam = random_cocharacter(rng, D)
                ld, w = dominant_representative(D, lam)
                if not (D.is_dominant(ld) and w(lam) == ld and ld in orbit(D, lam) and orbit(D, ld) == orbit(D, lam)):
                    bad.append(lam)
            return bad, []

        yield f"{name}.dominant_representative", dom

        def order(D=D):
            bad = []
            for _ in range(10):
                a, b, c = (random_cocharacter(rng, D, 2) for _ in range(3))
                b2 = tuple(x + y for x, y in zip(a, D.simple_coroots[0])) if D.semisimple_rank else a
                if not dominance_leq(D, a, a):
                    bad.append(("refl", a))
                if dominance_leq(D, a, b) and dominance_leq(D, b, a) and a != b:
                    bad.append(("antisym", a, b))
                if dominance_leq(D, a, b2) and dominance_leq(D, b2, c) and not dominance_leq(D, a, c):
                    bad.append(("trans", a, b2, c))
                if dominance_leq(D, a, b) and dominance_leq(D, b, c) and not dominance_leq(D, a, c):
                    bad.append(("trans", a, b, c))
            return bad, []

        yield f"{name}.dominance_partial_order", order
        yield f"{name}.coxeter_relations", lambda D=D: (coxeter_relation_failures(D), [])
        yield f"{name}.weyl_order", lambda D=D: (len(weyl_group(D)), classical_weyl_order(D))


def coxeter_relation_failures(D: BasedRootDatum) -> list:
    bad = []
    m_of = {0: 2, 1: 3, 2: 4, 3: 6}
    r = D.semisimple_rank
    for i in range(r):
        for j in range(r):
            m = m_of[D.cartan[i][j] * D.cartan[j][i]] if i != j else 1
            w = D.identity()
            for _ in range(m):
                w = w * D.simple_reflection(i) * D.simple_reflection(j)
            if not w.is_identity():
                bad.append((i, j))
    return bad


def suite_weights(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    for D in desk_presets():
        sample = dominant_sample(D, 1, 2000)[:6]
        for mu in sample:
            yield f"{D.name}.mass{list(mu)}", lambda D=D, mu=mu: (wt.weight_multiplicities(D, mu).mass, wt.weyl_dim(D, mu))

        def invariance(D=D, sample=sample):
            bad = []
            for mu in sample[:3]:
                m = wt.weight_multiplicities(D, mu)
                for lam, k in m.items():
                    for i in range(D.semisimple_rank):
                        if m[D.reflect(i, lam)] != k:
                            bad.append((mu, lam, i))
            return bad, []

        yield f"{D.name}.weyl_invariance", invariance
    for D in fundamental_coweight_presets():
        for i in range(D.semisimple_rank):
            mu = tuple(int(j == i) for j in range(D.rank))
            yield f"{D.name}.trichotomy[w{i + 1}]", lambda D=D, mu=mu: (wt.classify_minimal(D, mu).kind, shape_of(D, mu))
    small = [preset("A1-sc"), preset("A2-sc"), preset("B2-sc"), preset("G2-sc")]
    for D in small:
        for mu in dominant_sample(D, 3, 300)[:8]:
            def kostant(D=D, mu=mu):
                m = wt.weight_multiplicities(D, mu)
                dominant = [lam for lam in m if D.is_dominant(lam)]
                return [m[lam] for lam in dominant], [wt.kostant_multiplicity_oracle(D, mu, lam) for lam in dominant]

            yield f"{D.name}.kostant{list(mu)}", kostant
    for D in small[:3]:
        sample = dominant_sample(D, 2, 60)
        for _ in range(4):
            m1, m2 = rng.choice(sample), rng.choice(sample)

            def conv(D=D, m1=m1, m2=m2):
                lhs = wt.convolve(wt.weight_multiplicities(D, m1), wt.weight_multiplicities(D, m2))
                rhs = wt.WeightFunction()
                for nu, k in wt.tensor_decompose(D, m1, m2).items():
                    rhs = rhs + wt.weight_multiplicities(D, nu).scale(k)
                return lhs, rhs

            yield f"{D.name}.convolution{list(m1)}{list(m2)}", conv
        for _ in range(5):
            mu = rng.choice(sample)
            s = random_regular_point(rng, D, rng.choice([5, 7, 8, 12]))
            yield f"{D.name}.weyl_character{list(mu)}", lambda D=D, mu=mu, s=s: (
                wt.character_eval(D, mu, s), wt.weyl_character_oracle(D, mu, s))


def random_regular_point(rng: random.Random, D: BasedRootDatum, order: int, tries: int = 200) -> TorusPointFiniteOrder:
    for _ in range(tries):
        s = random_torus_point(rng, D, order)
        if wt.is_regular(D, s):
            return s
    raise ValueError(f"no regular point of order {order} found")


def shape_of(D: BasedRootDatum, mu) -> str:
    """Brute-force shape of Omega(mu): orbit, orbit plus zero, or larger."""
    omega = wt.weight_support(D, mu)
    orb = orbit(D, mu)
    zero = (0,) * D.rank
    if omega == orb:
        return "minuscule"
    if omega == orb | {zero}:
        return "quasi-minuscule"
    return "not-minimal"


def twisted_data() -> list[tuple[BasedRootDatum, object]]:
    """(datum, theta) pairs, trivial and nontrivial, incl. twisted A_n and D4."""
    out = []
    for D in desk_presets():
        out.append((D, trivial_automorphism(D)))
    for name, perms in [
        ("A2-sc", [(1, 0)]), ("A3-sc", [(2, 1, 0)]), ("A4-sc", [(3, 2, 1, 0)]), ("A3-ad", [(2, 1, 0)]),
        ("D4-sc", [(2, 1, 3, 0), (3, 1, 0, 2), (0, 1, 3, 2)]), ("D4-ad", [(2, 1, 3, 0)]),
    ]:
        D = preset(name)
        for p in perms:
            out.append((D, automorphism_from_permutation(D, p)))
    for n in (2, 3, 4):
        D = preset("GL", n)
        out.append((D, automorphism_from_permutation(D, tuple(range(n - 2, -1, -1)))))
    return out


def suite_kottwitz(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    for D, theta in twisted_data():
        tag = f"{D.name}{'' if theta.is_identity() else '/theta' + ''.join(map(str, theta.perm))}"

        def coset(D=D, theta=theta):
            proj = kt.pi1_coinvariants(D, theta)
            bad = []
            for mu in dominant_sample(D, 1, 500)[:5]:
                c = kt.basic_class_of(D, theta, mu).value
                bad += [(mu, lam) for lam in wt.weight_support(D, mu) if proj(lam) != c]
            return bad, []

        yield f"{tag}.kappa_coset", coset
    for D in fundamental_coweight_presets() + [preset("GL", n) for n in range(2, 9)]:
        def lifts(D=D):
            bad = []
            for _ in range(5):
                nu = random_cocharacter(rng, D, 3)
                shift = [rng.randint(-3, 3) for _ in range(D.semisimple_rank)]
                other = kt.lift_from_sc_coordinates(D, kt.sc_weight_coordinates(D, nu), shift)
                if kt.kottwitz_sign(D, nu) != kt.kottwitz_sign(D, other):
                    bad.append(nu)
            return bad, []

        yield f"{D.name}.sign_lift_independent", lifts

        def signs(D=D):
            pairs = [kt.sign_identity(D, w, rng=rng) for w in D.fundamental_coweights]
            return [p[0] for p in pairs], [p[1] for p in pairs]

        yield f"{D.name}.sign_identity", signs

    def snf():
        bad = []
        for _ in range(40):
            n = rng.randint(1, 6)
            gens = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(rng.randint(0, 6))]
            h = kt.quotient(n, gens)
            if (h.target.free_rank, h.target.invariant_factors) != kt.quotient_invariants_oracle(n, gens):
                bad.append(gens)
        return bad, []

    yield "snf.vs_determinantal_divisors", snf


def torus_catalogs() -> list[tuple[BasedRootDatum, object, dict]]:
    out = []
    for D, theta in [
        (preset("GL", 3), None), (preset("GL", 4), None), (preset("Sp", 4), None), (preset("G2-sc"), None),
        (preset("SL", 3), None), (preset("A2-sc"), None),
    ]:
        theta = theta or trivial_automorphism(D)
        out.append((D, theta, tr.full_catalog(D, theta)))
    D = preset("GL", 3)
    theta = automorphism_from_permutation(D, (1, 0))
    out.append((D, theta, tr.full_catalog(D, theta)))
    return out


def random_class_functions(rng, model: tr.HeckeTransfer, size: int = 4):
    names = sorted(model.tori)
    gpts, jpts = [], []
    for _ in range(size):
        t = rng.choice(names)
        gpts.append((tr.ClassPointG(t, f"x{rng.randrange(3)}"), Fraction(rng.randint(-9, 9), rng.randint(1, 5))))
        kern = model.kernel(t).values
        if kern:
            nu = rng.choice(kern)[0]
            jpts.append((tr.ClassPointJ(t, f"x{rng.randrange(3)}", nu), Fraction(rng.randint(-9, 9), rng.randint(1, 5))))
    return tr.ClassFunction("G", gpts), tr.ClassFunction("J", jpts)


def suite_transfer(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    for D, theta, cat in torus_catalogs():
        tag = f"{D.name}{'' if theta.is_identity() else '/theta'}"
        sample = dominant_sample(D, 1, 30)[:3]
        for mu in sample:
            model = tr.HeckeTransfer(D, theta, mu, cat)

            def adjoint(model=model):
                lhs, rhs = [], []
                for _ in range(10):
                    g, f = random_class_functions(rng, model)
                    lhs.append(tr.pairing(model.J_to_G(f), g))
                    rhs.append(tr.pairing(f, model.G_to_J(g)))
                return lhs, rhs

            yield f"{tag}.adjointness{list(mu)}", adjoint
            yield f"{tag}.kernel_mass{list(mu)}", lambda model=model, D=D, mu=mu: (
                [model.kernel(n).mass for n in sorted(model.tori)], [wt.weyl_dim(D, mu)] * len(model.tori))

            def support(model=model, D=D, theta=theta, mu=mu):
                bad = []
                c = kt.basic_class_of(D, theta, mu).value
                for name, t in model.tori.items():
                    full = tr.transfer_kernel(D, theta, mu, t)
                    bad += [(name, nu) for nu, _ in full.values if tr._pi1_image(D, t, nu) != c]
                return bad, []

            yield f"{tag}.kernel_support{list(mu)}", support

            def conj(D=D, theta=theta, mu=mu, cat=cat):
                bad = []
                ws = weyl_group(D)
                for name, t in list(cat.items())[:4]:
                    x = rng.choice(ws)
                    # x phi x^{-1} = (x w theta(x)^{-1}) theta
                    w2 = tr.TorusType(D, x * t.w * _theta_conj(D, theta, x).inverse(), theta, "conj")
                    a = sorted(tr.transfer_kernel(D, theta, mu, t).as_dict().values())
                    b = sorted(tr.transfer_kernel(D, theta, mu, w2).as_dict().values())
                    if a != b:
                        bad.append(name)
                return bad, []

            yield f"{tag}.conjugacy_invariance{list(mu)}", conj


def _theta_conj(D: BasedRootDatum, theta, x):
    """theta x theta^{-1} as a Weyl element."""
    from . import _linalg as la
    from .root_datum import WeylElement, _freeze

    inv = la.inverse(theta.theta)
    m = _freeze(la.as_int_vector(r) for r in la.matmul(la.matmul(theta.theta, x.matrix), inv))
    return WeylElement(m, tuple(theta.perm[i] for i in x.word))


def suite_lefschetz(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    for D in fundamental_coweight_presets():
        for i in range(D.semisimple_rank):
            mu = tuple(int(j == i) for j in range(D.rank))
            if wt.classify_minimal(D, mu) == wt.MINUSCULE:
                yield f"{D.name}.flag_euler[w{i + 1}]", lambda D=D, mu=mu: (
                    lf.flag_euler_characteristic(D, lf.ParabolicType.of_cocharacter(D, mu)), wt.weyl_dim(D, mu))
    for D in desk_presets():
        for mu in dominant_sample(D, 1, 3000)[:4]:
            def glob(D=D, mu=mu):
                rep = lf.lefschetz_global_check(D, mu)
                return (rep.global_sum, sum(t for _, t in rep.terms)), (rep.expected, rep.expected)

            yield f"{D.name}.global_lefschetz{list(mu)}", glob
    for D in [preset("A2-sc"), preset("B2-sc"), preset("GL", 3)]:
        sample = dominant_sample(D, 2, 200)

        def mono(D=D, sample=sample):
            bad = []
            for a in sample[:10]:
                for b in sample[:10]:
                    if dominance_leq(D, a, b) and not lf.gr_fixed_points(D, a) <= lf.gr_fixed_points(D, b):
                        bad.append((a, b))
            return bad, []

        yield f"{D.name}.fixed_points_monotone", mono
        for _ in range(3):
            m1, m2 = rng.choice(sample[:8]), rng.choice(sample[:8])

            def conv(D=D, m1=m1, m2=m2):
                rep = lf.convolution_fixed_points(D, m1, m2)
                a, b = wt.weight_multiplicities(D, m1), wt.weight_multiplicities(D, m2)
                per = all(t == sum(a[x] * b[y] for x, y in rep.fibers[lam]) for lam, t in rep.terms)
                return (rep.global_sum, per), (rep.expected, True)

            yield f"{D.name}.convolution_fixed_points{list(m1)}{list(m2)}", conv


def centralizer_samples(rng: random.Random) -> list[tuple[BasedRootDatum, tuple, sp.AbelianCentralizer]]:
    out = []
    gl2 = preset("GL", 2)
    out.append((gl2, (1, 0), sp.AbelianCentralizer(2, ((Fraction(1, 2), Fraction(1, 2)),))))
    out.append((gl2, (3, 0), sp.AbelianCentralizer(2, ((Fraction(1, 2), Fraction(0)),))))
    out.append((preset("SL", 2), (2,), sp.AbelianCentralizer(2, ((Fraction(1, 2),),))))
    for D in [preset("GL", 3), preset("A2-sc"), preset("B2-sc"), preset("Sp", 4)]:
        for _ in range(3):
            mu = rng.choice(dominant_sample(D, 1, 30))
            order = rng.choice([2, 3, 4, 6])
            gens = tuple(
                tuple(Fraction(rng.randrange(order), order) for _ in range(D.rank)) for _ in range(rng.randint(1, 2))
            )
            out.append((D, mu, sp.AbelianCentralizer(order, gens)))
    return out


def suite_spectral(rng: random.Random) -> Iterator[tuple[str, Callable]]:
    for k, (D, mu, S) in enumerate(centralizer_samples(rng)):
        chars = S.characters()

        def orth(D=D, mu=mu, S=S, chars=chars):
            return [sp.hom_multiplicity(D, mu, S, d) for d in chars], [sp.averaging_multiplicity(D, mu, S, d) for d in chars]

        yield f"{D.name}.orthogonality#{k}", orth
        yield f"{D.name}.hom_total#{k}", lambda D=D, mu=mu, S=S, chars=chars: (
            sum(sp.hom_multiplicity(D, mu, S, d) for d in chars), wt.weyl_dim(D, mu))

        def rhs_total(D=D, mu=mu, S=S, chars=chars):
            packet = sp.PacketDatum.from_mapping({f"pi{i}": d for i, d in enumerate(chars)})
            vals = sp.kottwitz_rhs(D, mu, S, packet, (0,) * len(S.generators))
            return sum(abs(v) for v in vals.values()), wt.weyl_dim(D, mu)

        yield f"{D.name}.rhs_total#{k}", rhs_total
    for D, theta in twisted_data()[:12]:
        for mu in dominant_sample(D, 1, 100)[:2]:
            for order in (1, 2, 3, 5, 6):
                s = random_torus_point(rng, D, order)
                yield f"{D.name}.character_sum{list(mu)}/N{order}", lambda D=D, theta=theta, mu=mu, s=s: sp.character_sum_identity(D, theta, mu, s)


SUITES: dict[str, Callable[[random.Random], Iterator]] = {
    "gl2-paper": suite_gl2_scenario,
    "root_datum": suite_root_datum,
    "weights": suite_weights,
    "kottwitz": suite_kottwitz,
    "transfer": suite_transfer,
    "lefschetz": suite_lefschetz,
    "spectral": suite_spectral,
}


def run_suite(name: str, seed: int = 0) -> CheckReport:
    """Run one suite (or "all") with a deterministic seed."""
    names = list(SUITES) if name == "all" else [name]
    report = CheckReport(name)
    for n in names:
        if n not in SUITES:
            raise KeyError(f"unknown suite {n!r}; choose from {', '.join(['all', *SUITES])}")
        rng = random.Random(f"{seed}:{n}")
        for cid, fn in SUITES[n](rng):
            _timed(report.results, cid, fn)
    return report
