"""Fixed-point bookkeeping on flag varieties and bounded affine Grassmannians.

This is a numerical harness, not a trace computation: the local term of
IC_mu at the fixed point L_lam is taken to be dim r_mu[lam], and the checks
confirm the consequences (global sums, convolution compatibility).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .root_datum import BasedRootDatum, WeylElement, weyl_group
from .weights import convolve, weight_multiplicities, weight_support, weyl_dim

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicType:
    """Standard parabolic whose Levi has simple roots indexed by ``nodes``."""

    nodes: frozenset[int]

    def __init__(self, nodes: Iterable[int] = ()):
        object.__setattr__(self, "nodes", frozenset(int(i) for i in nodes))

    def levi_weyl_group(self, D: BasedRootDatum) -> list[WeylElement]:
        if any(not 0 <= i < D.semisimple_rank for i in self.nodes):
            raise ValueError(f"parabolic nodes {sorted(self.nodes)} out of range")
        gens = [D.simple_reflection(i) for i in sorted(self.nodes)]
        ident = D.identity()
        found = {ident.matrix: ident}
        queue = [ident]
        while queue:
            cur = queue.pop()
            for s in gens:
                nxt = cur * s
                if nxt.matrix not in found:
                    found[nxt.matrix] = nxt
                    queue.append(nxt)
        return list(found.values())

    @classmethod
    def of_cocharacter(cls, D: BasedRootDatum, mu: Sequence[int]) -> ParabolicType:
        """P_mu: the parabolic of roots alpha with <alpha, mu> <= 0."""
        return cls(i for i, p in enumerate(D.simple_pairings(mu)) if p == 0)

    @classmethod
    def borel(cls) -> ParabolicType:
        return cls(())


@dataclass
class FixedPointReport:
    mu: tuple
    terms: list[tuple[tuple[int, ...], int]]
    global_sum: int
    expected: int
    fibers: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.global_sum == sum(t for _, t in self.terms) == self.expected

    def to_json(self) -> dict:
        out = {
            "mu": [list(m) for m in self.mu] if self.mu and isinstance(self.mu[0], tuple) else list(self.mu),
            "terms": [{"lambda": list(lam), "local_term": t} for lam, t in self.terms],
            "global_sum": self.global_sum,
            "expected": self.expected,
            "ok": self.ok,
        }
        if self.fibers:
            out["fibers"] = [
                {"lambda": list(lam), "pairs": [[list(a), list(b)] for a, b in pairs]}
                for lam, pairs in sorted(self.fibers.items())
            ]
        return out


def flag_euler_characteristic(D: BasedRootDatum, P: ParabolicType) -> int:
    """chi(G/P) = |W| / |W_M|."""
    order, rem = divmod(len(weyl_group(D)), len(P.levi_weyl_group(D)))
    assert rem == 0
    return order


def gr_fixed_points(D: BasedRootDatum, mu: Sequence[int]) -> frozenset:
    """Fixed points of a strongly regular torus element on Gr_{<= mu}, as cocharacters."""
    return weight_support(D, mu)


def local_term(D: BasedRootDatum, mu: Sequence[int], lam: Sequence[int]) -> int:
    m = weight_multiplicities(D, mu)[tuple(lam)]
    if not m:
        log.warning("%s is not a fixed point of Gr_{<=%s}; local term 0", tuple(lam), tuple(mu))
    return m


def lefschetz_global_check(D: BasedRootDatum, mu: Sequence[int]) -> FixedPointReport:
    """Sum of local terms over Gr_{<= mu}^g against dim r_mu."""
    mult = weight_multiplicities(D, mu)
    terms = [(lam, mult[lam]) for lam in sorted(gr_fixed_points(D, mu))]
    return FixedPointReport(tuple(mu), terms, sum(t for _, t in terms), weyl_dim(D, mu))


def convolution_fixed_points(D: BasedRootDatum, mu1: Sequence[int], mu2: Sequence[int]) -> FixedPointReport:
    """Fixed points of the convolution Gr_{<=mu1} x~ Gr_{<=mu2} grouped along the addition map."""
    m1 = weight_multiplicities(D, mu1)
    m2 = weight_multiplicities(D, mu2)
    conv = convolve(m1, m2)
    fibers: dict = {}
    for a in m1:
        for b in m2:
            lam = tuple(x + y for x, y in zip(a, b))
            fibers.setdefault(lam, []).append((a, b))
    for lam in fibers:
        fibers[lam].sort()
        assert conv[lam] == sum(m1[a] * m2[b] for a, b in fibers[lam])
    terms = sorted(conv.items())
    return FixedPointReport(
        (tuple(mu1), tuple(mu2)),
        terms,
        sum(t for _, t in terms),
        weyl_dim(D, mu1) * weyl_dim(D, mu2),
        fibers,
    )
