"""Multiplicities of characters of a finite abelian centralizer in r_mu.

S is generated by finite-order points x_1, ..., x_k of the dual torus, all of
order dividing N. A character delta of S is an exponent tuple (e_1, ..., e_k)
with delta(x_i) = zeta_N^{e_i}; it must respect the relations among the x_i.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Mapping, Sequence

from . import _linalg as la
from .cyclotomic import CyclotomicNumber, TorusPointFiniteOrder
from .kottwitz import basic_class_of, pi1_coinvariants, shtuka_dimension
from .root_datum import BasedRootDatum, DiagramAutomorphism
from .weights import character_eval, weight_multiplicities


def _mod1(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) - (Fraction(x).numerator // Fraction(x).denominator) for x in v)


@dataclass(frozen=True)
class AbelianCentralizer:
    order: int
    generators: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        gens = tuple(_mod1(g) for g in self.generators)
        for g in gens:
            TorusPointFiniteOrder(self.order, g)  # validates denominators
        if len({len(g) for g in gens}) > 1:
            raise ValueError("generators have different lengths")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_json(cls, payload) -> AbelianCentralizer:
        if isinstance(payload, str):
            payload = json.loads(payload)
        return cls(int(payload["order"]), tuple(tuple(Fraction(x) for x in g) for g in payload["generators"]))

    def to_json(self) -> dict:
        return {"order": self.order, "generators": [[str(x) for x in g] for g in self.generators]}

    @cached_property
    def _elements(self) -> dict[tuple[Fraction, ...], tuple[int, ...]]:
        # element (mod X^*) -> one exponent vector (a_1..a_k) expressing it
        k = len(self.generators)
        if k == 0:
            return {(): ()}
        start = tuple(Fraction(0) for _ in self.generators[0])
        found = {start: (0,) * k}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            a = found[x]
            for i, g in enumerate(self.generators):
                y = _mod1(p + q for p, q in zip(x, g))
                if y not in found:
                    found[y] = tuple(c + (j == i) for j, c in enumerate(a))
                    queue.append(y)
        return found

    @property
    def size(self) -> int:
        return len(self._elements)

    def points(self) -> list[TorusPointFiniteOrder]:
        return [TorusPointFiniteOrder(self.order, x) for x in sorted(self._elements)]

    def character_table(self, delta: Sequence[int]) -> dict[tuple[Fraction, ...], int]:
        """delta on every element of S, as exponents mod N; raises if delta is ill-defined."""
        delta = tuple(int(e) % self.order for e in delta)
        if len(delta) != len(self.generators):
            raise ValueError("character needs one exponent per generator")
        table: dict = {}
        # delta is well defined iff it agrees along every generator step
        for x, a in self._elements.items():
            table[x] = sum(c * e for c, e in zip(a, delta)) % self.order
        for x, e in table.items():
            for g, d in zip(self.generators, delta):
                y = _mod1(p + q for p, q in zip(x, g))
                if table[y] != (e + d) % self.order:
                    raise ValueError(f"exponents {delta} do not define a character of S")
        return table

    def is_character(self, delta: Sequence[int]) -> bool:
        try:
            self.character_table(delta)
        except ValueError:
            return False
        return True

    def characters(self) -> list[tuple[int, ...]]:
        """All characters of S as exponent tuples with entries in [0, N)."""
        return [d for d in product(range(self.order), repeat=len(self.generators)) if self.is_character(d)]


def restrict_weight(lam: Sequence[int], S: AbelianCentralizer) -> tuple[int, ...]:
    """Exponents of lam(x_i) for each generator."""
    out = []
    for g in S.generators:
        v = S.order * la.dot(lam, g)
        if Fraction(v).denominator != 1:
            raise ValueError(f"pairing of {tuple(lam)} with a generator is not integral")
        out.append(int(v) % S.order)
    return tuple(out)


def hom_multiplicity(D: BasedRootDatum, mu: Sequence[int], S: AbelianCentralizer, delta: Sequence[int]) -> int:
    """dim Hom_S(delta, r_mu): total multiplicity of the weights restricting to delta."""
    delta = tuple(int(e) % S.order for e in delta)
    return sum(m for lam, m in weight_multiplicities(D, mu).items() if restrict_weight(lam, S) == delta)


def averaging_multiplicity(
    D: BasedRootDatum, mu: Sequence[int], S: AbelianCentralizer, delta: Sequence[int]
) -> Fraction:
    """|S|^{-1} sum over s of tr r_mu(s) conj(delta(s)), in exact cyclotomic arithmetic."""
    table = S.character_table(delta)
    total = CyclotomicNumber.constant(S.order, 0)
    for x, e in table.items():
        s = TorusPointFiniteOrder(S.order, x)
        total = total + character_eval(D, mu, s) * CyclotomicNumber.zeta(S.order, -e)
    return (total * CyclotomicNumber.constant(S.order, Fraction(1, S.size))).to_rational()


def character_sum_identity(
    D: BasedRootDatum, theta: DiagramAutomorphism | None, mu: Sequence[int], s: TorusPointFiniteOrder
) -> tuple[CyclotomicNumber, CyclotomicNumber]:
    """(sum over lam over kappa(b) of lam(s) dim r_mu[lam], tr r_mu(s))."""
    proj = pi1_coinvariants(D, theta)
    target = basic_class_of(D, theta, mu).value
    terms: dict[int, int] = {}
    for lam, m in weight_multiplicities(D, mu).items():
        if proj(lam) == target:
            k = s.exponent(lam)
            terms[k] = terms.get(k, 0) + m
    return CyclotomicNumber.from_exponents(s.order, terms), character_eval(D, mu, s)


@dataclass(frozen=True)
class PacketDatum:
    """Members of an L-packet with their characters delta_pi of S."""

    characters: tuple[tuple[str, tuple[int, ...]], ...]

    @classmethod
    def from_mapping(cls, data: Mapping[str, Sequence[int]]) -> PacketDatum:
        return cls(tuple((str(k), tuple(int(e) for e in v)) for k, v in data.items()))

    @classmethod
    def from_json(cls, payload) -> PacketDatum:
        if isinstance(payload, str):
            payload = json.loads(payload)
        return cls.from_mapping(payload)

    @property
    def labels(self) -> list[str]:
        return [k for k, _ in self.characters]


def kottwitz_rhs(
    D: BasedRootDatum,
    mu: Sequence[int],
    S: AbelianCentralizer,
    packet: PacketDatum,
    delta_rho: Sequence[int],
) -> dict[str, int]:
    """pi -> (-1)^d dim Hom_S(delta_{pi,rho}, r_mu) with delta_{pi,rho} = delta_rho / delta_pi."""
    for name, d in [("rho", delta_rho)] + list(packet.characters):
        if not S.is_character(d):
            raise ValueError(f"character of {name} is not well defined on S")
    sign = -1 if shtuka_dimension(D, mu) % 2 else 1
    out = {}
    for label, d in packet.characters:
        rel = tuple((r - p) % S.order for r, p in zip(delta_rho, d))
        out[label] = sign * hom_multiplicity(D, mu, S, rel)
    return out
