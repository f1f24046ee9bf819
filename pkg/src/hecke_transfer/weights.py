"""Weight multiplicities of r_mu and the arithmetic built on them.

r_mu is the irreducible representation of the dual group with highest
weight mu; its weights are cocharacters of T and its roots are the coroots
of the datum.
"""
from __future__ import annotations

import json
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .cyclotomic import CyclotomicNumber, TorusPointFiniteOrder
from .errors import MAX_DOMINANT_WEIGHTS, MAX_ORBIT_SIZE, CostGuardError
from .root_datum import (
    BasedRootDatum,
    dominant_with_parity,
    orbit,
    weyl_group,
)

Weight = tuple[int, ...]


class WeightFunction(Mapping):
    """Finitely supported function X_*(T) -> Z. Zero values are dropped."""

    __slots__ = ("_data",)

    def __init__(self, data: Mapping | Iterable[tuple[Sequence[int], int]] = ()):
        items = data.items() if isinstance(data, Mapping) else data
        acc: dict[Weight, int] = {}
        for lam, m in items:
            key = tuple(int(x) for x in lam)
            acc[key] = acc.get(key, 0) + int(m)
        self._data = {k: v for k, v in sorted(acc.items()) if v}

    def __getitem__(self, lam):
        return self._data.get(tuple(lam), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __contains__(self, lam):
        return tuple(lam) in self._data

    def __eq__(self, other):
        if isinstance(other, WeightFunction):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self == WeightFunction(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._data.items()))

    def __add__(self, other: WeightFunction) -> WeightFunction:
        return WeightFunction(list(self.items()) + list(other.items()))

    def scale(self, c: int) -> WeightFunction:
        return WeightFunction((k, c * v) for k, v in self.items())

    @property
    def mass(self) -> int:
        return sum(self._data.values())

    @classmethod
    def delta(cls, lam: Sequence[int]) -> WeightFunction:
        return cls({tuple(lam): 1})

    def to_json(self) -> list[dict]:
        return [{"lambda": list(k), "mult": v} for k, v in self._data.items()]

    @classmethod
    def from_json(cls, payload) -> WeightFunction:
        if isinstance(payload, str):
            payload = json.loads(payload)
        return cls((tuple(row["lambda"]), row["mult"]) for row in payload)

    def __repr__(self):
        return f"WeightFunction({self._data!r})"


def _require_dominant(D: BasedRootDatum, mu: Sequence[int]) -> Weight:
    mu = tuple(int(x) for x in mu)
    if len(mu) != D.rank:
        raise ValueError(f"cocharacter {mu} does not have {D.rank} coordinates")
    if not D.is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")
    return mu


def _rho(D: BasedRootDatum) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, 2) for x in D.two_rho_check)


def weyl_dim(D: BasedRootDatum, mu: Sequence[int]) -> int:
    """dim r_mu = prod over positive roots alpha of <alpha, mu+rho^> / <alpha, rho^>."""
    mu = _require_dominant(D, mu)
    num, den = 1, 1
    shifted = tuple(2 * m + r for m, r in zip(mu, D.two_rho_check))
    for a in D.positive_roots:
        num *= sum(x * y for x, y in zip(a, shifted))
        den *= sum(x * y for x, y in zip(a, D.two_rho_check))
    q, rem = divmod(num, den)
    assert rem == 0, "Weyl dimension is not an integer"
    return q


def dominant_weights(D: BasedRootDatum, mu: Sequence[int]) -> list[Weight]:
    """Dominant lam <= mu, sorted by increasing height of mu - lam."""
    mu = _require_dominant(D, mu)
    # every dominant lam < mu is reached from mu through dominant weights by
    # subtracting positive coroots one at a time
    seen = {mu}
    frontier = [mu]
    while frontier:
        nxt = []
        for lam in frontier:
            for b in D.positive_coroots:
                cand = tuple(x - y for x, y in zip(lam, b))
                if cand not in seen and D.is_dominant(cand):
                    seen.add(cand)
                    nxt.append(cand)
        if len(seen) > MAX_DOMINANT_WEIGHTS:
            raise CostGuardError(f"more than {MAX_DOMINANT_WEIGHTS} dominant weights below {mu}")
        frontier = nxt

    def height(lam):
        return sum(D.coroot_coordinates(tuple(m - x for m, x in zip(mu, lam))))

    return sorted(seen, key=lambda lam: (height(lam), lam))


@lru_cache(maxsize=4096)
def _freudenthal(D: BasedRootDatum, mu: Weight) -> dict[Weight, int]:
    rho = _rho(D)
    pos = D.positive_coroots
    roots = D.positive_roots
    # B(x, y) = 2 sum_alpha <alpha,x><alpha,y> is linear in x; g[j] is B(., beta_j)
    g = [
        tuple(2 * sum(a[i] * sum(x * y for x, y in zip(a, beta)) for a in roots) for i in range(D.rank))
        for beta in pos
    ]

    def form(x, y):
        return 2 * sum(
            sum(a * b for a, b in zip(alpha, x)) * sum(a * b for a, b in zip(alpha, y)) for alpha in roots
        )

    top = tuple(m + r for m, r in zip(mu, rho))
    top_norm = form(top, top)
    mult: dict[Weight, int] = {}
    order = dominant_weights(D, mu)
    dominant = set(order)
    dom_cache: dict[Weight, Weight] = {}

    def dom(v):
        if v not in dom_cache:
            dom_cache[v] = dominant_with_parity(D, v)[0]
        return dom_cache[v]

    # tail[j][v] = sum_{k >= 0} m(v + k beta_j) B(v + k beta_j, beta_j); beta-strings of
    # weights are unbroken, so a walk stops at the first weight outside the support
    tail: list[dict[Weight, int]] = [{} for _ in pos]

    def string_sum(lam, j):
        beta, memo, gj = pos[j], tail[j], g[j]
        stack = []
        v = tuple(x + b for x, b in zip(lam, beta))
        while v not in memo and dom(v) in dominant:
            stack.append(v)
            v = tuple(x + b for x, b in zip(v, beta))
        acc = memo.get(v, 0)
        for p in reversed(stack):
            acc += mult[dom(p)] * sum(x * y for x, y in zip(p, gj))
            memo[p] = acc
        return acc

    for lam in order:
        if lam == mu:
            mult[lam] = 1
            continue
        total = sum(string_sum(lam, j) for j in range(len(pos)))
        shifted = tuple(x + r for x, r in zip(lam, rho))
        denom = top_norm - form(shifted, shifted)
        m = 2 * total / denom
        if m.denominator != 1:
            raise ArithmeticError(f"Freudenthal produced non-integer multiplicity {m} at {lam}")
        mult[lam] = int(m)
    return {k: v for k, v in mult.items() if v}


def dominant_multiplicities(D: BasedRootDatum, mu: Sequence[int]) -> dict[Weight, int]:
    """Freudenthal multiplicities on the dominant weights of r_mu."""
    return dict(_freudenthal(D, _require_dominant(D, mu)))


def weight_multiplicities(D: BasedRootDatum, mu: Sequence[int]) -> WeightFunction:
    """lam -> dim r_mu[lam] on all weights, by Freudenthal's recursion plus W-invariance."""
    weight_support(D, mu)  # size guard before the recursion
    out: dict[Weight, int] = {}
    for lam, m in dominant_multiplicities(D, mu).items():
        for v in orbit(D, lam):
            out[v] = m
    return WeightFunction(out)


@lru_cache(maxsize=None)
def _parabolic_order(D: BasedRootDatum, nodes: frozenset) -> int:
    gens = [D.simple_reflection(i) for i in sorted(nodes)]
    found = {D.identity().matrix}
    stack = [D.identity()]
    while stack:
        cur = stack.pop()
        for s in gens:
            nxt = cur * s
            if nxt.matrix not in found:
                found.add(nxt.matrix)
                stack.append(nxt)
    return len(found)


def orbit_size(D: BasedRootDatum, lam: Sequence[int]) -> int:
    """|W lam| for dominant lam, as |W| / |W_J| with J the walls containing lam."""
    nodes = frozenset(i for i, p in enumerate(D.simple_pairings(lam)) if p == 0)
    return len(weyl_group(D)) // _parabolic_order(D, nodes)


def weight_support(D: BasedRootDatum, mu: Sequence[int]) -> frozenset:
    """Omega(mu) = {lam : lam_dom <= mu}, as the union of orbits of dominant lam <= mu."""
    dom = dominant_weights(D, mu)
    if sum(orbit_size(D, lam) for lam in dom) > MAX_ORBIT_SIZE:
        raise CostGuardError(f"weight set exceeds {MAX_ORBIT_SIZE} elements")
    out: set = set()
    for lam in dom:
        out |= orbit(D, lam)
    return frozenset(out)


# ---------------------------------------------------------------------------
# Kostant's formula, used as an independent oracle


@lru_cache(maxsize=None)
def _coroot_betas(D: BasedRootDatum) -> tuple[tuple[int, ...], ...]:
    betas = [tuple(int(x) for x in D.coroot_coordinates(b)) for b in D.positive_coroots]
    # largest betas first keeps the recursion shallow
    return tuple(sorted(betas, key=lambda b: -sum(b)))


@lru_cache(maxsize=None)
def _partition_count(D: BasedRootDatum, c: tuple[int, ...], i: int = 0) -> int:
    """Ways to write c as an N-combination of the positive coroots betas[i:]."""
    betas = _coroot_betas(D)
    if i == len(betas) - 1:
        b = betas[i]
        k = next(x // y for x, y in zip(c, b) if y)
        return int(all(x == k * y for x, y in zip(c, b)))
    b = betas[i]
    total = 0
    cur = c
    while all(x >= 0 for x in cur):
        total += _partition_count(D, cur, i + 1)
        cur = tuple(x - y for x, y in zip(cur, b))
    return total


def kostant_multiplicity_oracle(D: BasedRootDatum, mu: Sequence[int], lam: Sequence[int]) -> int:
    """Sum over W of det(w) P(w(mu+rho^) - (lam+rho^)), P the coroot partition function.

    P is evaluated by exhaustive enumeration. Limited to semisimple rank 3.
    """
    mu = _require_dominant(D, mu)
    lam = tuple(lam)
    if D.semisimple_rank > 3:
        raise CostGuardError("Kostant oracle is limited to semisimple rank <= 3")
    if D.semisimple_rank == 0:
        return int(lam == mu)
    two_top = tuple(2 * m + r for m, r in zip(mu, D.two_rho_check))
    two_low = tuple(2 * x + r for x, r in zip(lam, D.two_rho_check))
    total = 0
    for w in weyl_group(D):
        diff = tuple((a - b) for a, b in zip(w(two_top), two_low))
        if any(x % 2 for x in diff):
            continue
        c = D.coroot_coordinates(tuple(x // 2 for x in diff))
        if c is None or any(x.denominator != 1 or x < 0 for x in c):
            continue
        total += w.sign * _partition_count(D, tuple(int(x) for x in c))
    return total


# ---------------------------------------------------------------------------
# Minuscule / quasi-minuscule


@dataclass(frozen=True)
class MinimalType:
    kind: str  # "minuscule", "quasi-minuscule" or "not-minimal"
    gamma: Weight | None = None

    def __str__(self):
        return f"{self.kind}({list(self.gamma)})" if self.gamma else self.kind


MINUSCULE = MinimalType("minuscule")
NOT_MINIMAL = MinimalType("not-minimal")


def classify_minimal(D: BasedRootDatum, mu: Sequence[int]) -> MinimalType:
    """Ngo's trichotomy for a dominant nonzero mu."""
    mu = _require_dominant(D, mu)
    if not any(mu):
        raise ValueError("mu must be nonzero")
    pairings = [sum(a * x for a, x in zip(alpha, mu)) for alpha in D.positive_roots]
    if all(abs(p) <= 1 for p in pairings):
        return MINUSCULE
    big = [i for i, p in enumerate(pairings) if p >= 2]
    if len(big) == 1 and D.positive_coroots[big[0]] == mu:
        return MinimalType("quasi-minuscule", D.positive_roots[big[0]])
    return NOT_MINIMAL


# ---------------------------------------------------------------------------
# Tensor products and convolution


def tensor_decompose(D: BasedRootDatum, mu: Sequence[int], nu: Sequence[int]) -> Counter:
    """Multiset of highest weights of r_mu (x) r_nu (Brauer-Klimyk)."""
    mu = _require_dominant(D, mu)
    nu = _require_dominant(D, nu)
    if weyl_dim(D, nu) > weyl_dim(D, mu):
        mu, nu = nu, mu
    out: Counter = Counter()
    two_mu_rho = tuple(2 * m + r for m, r in zip(mu, D.two_rho_check))
    for lam, m in weight_multiplicities(D, nu).items():
        v = tuple(a + 2 * b for a, b in zip(two_mu_rho, lam))
        vd, sign = dominant_with_parity(D, v)
        if any(p == 0 for p in D.simple_pairings(vd)):
            continue
        out[tuple((a - r) // 2 for a, r in zip(vd, D.two_rho_check))] += sign * m
    for k in [k for k, v in out.items() if v == 0]:
        del out[k]
    if any(v < 0 for v in out.values()):
        raise ArithmeticError("negative multiplicity in tensor decomposition")
    return out


def convolve(f: Mapping, g: Mapping) -> WeightFunction:
    """(f * g)(lam) = sum over eta of f(eta) g(lam - eta)."""
    acc: dict[Weight, int] = {}
    for a, x in f.items():
        for b, y in g.items():
            k = tuple(p + q for p, q in zip(a, b))
            acc[k] = acc.get(k, 0) + x * y
    return WeightFunction(acc)


# ---------------------------------------------------------------------------
# Characters at finite-order points of the dual torus


def character_eval(D: BasedRootDatum, mu: Sequence[int], s: TorusPointFiniteOrder) -> CyclotomicNumber:
    """tr r_mu(s) = sum of m(lam) lam(s), exactly."""
    acc: Counter = Counter()
    for lam, m in weight_multiplicities(D, mu).items():
        acc[s.exponent(lam)] += m
    return CyclotomicNumber.from_exponents(s.order, dict(acc))


def _alternant(D: BasedRootDatum, two_v: Sequence[int], s: TorusPointFiniteOrder) -> CyclotomicNumber:
    # sum over w of det(w) (w(v) - rho^)(s), with v given doubled
    acc: Counter = Counter()
    for w in weyl_group(D):
        lam = tuple((a - r) // 2 for a, r in zip(w(two_v), D.two_rho_check))
        acc[s.exponent(lam)] += w.sign
    return CyclotomicNumber.from_exponents(s.order, dict(acc))


def weyl_denominator(D: BasedRootDatum, s: TorusPointFiniteOrder) -> CyclotomicNumber:
    return _alternant(D, D.two_rho_check, s)


def is_regular(D: BasedRootDatum, s: TorusPointFiniteOrder) -> bool:
    return not weyl_denominator(D, s).is_zero()


def weyl_character_oracle(D: BasedRootDatum, mu: Sequence[int], s: TorusPointFiniteOrder) -> CyclotomicNumber:
    """Weyl's alternant quotient, evaluated at a regular s."""
    mu = _require_dominant(D, mu)
    den = weyl_denominator(D, s)
    if den.is_zero():
        raise ValueError("s is singular: the Weyl denominator vanishes")
    num = _alternant(D, tuple(2 * m + r for m, r in zip(mu, D.two_rho_check)), s)
    return num / den

