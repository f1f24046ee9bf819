"""Hecke transfer operators between class functions on G and on J_b.

Finite combinatorial model: a strongly regular stable class is a pair
(torus type, label). Related classes on the J_b side carry in addition an
invariant nu in X_*(T)_Gamma, and the transfer kernel of a torus type is

    m(nu) = sum of dim r_mu[lam] over lam with kappa_T(lam) = nu.

Measures are counting measures with unit weights; discriminant and
Weyl-group factors are omitted because they enter both sides of the
adjointness statement identically.
"""
from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _linalg as la
from .kottwitz import BasicClass, FgAbelianGroup, GroupHom, coinvariants, pi1_coinvariants
from .root_datum import (
    BasedRootDatum,
    DiagramAutomorphism,
    WeylElement,
    trivial_automorphism,
    weyl_group,
)
from .weights import weight_multiplicities, weight_support

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusType:
    """Unramified maximal torus: Frobenius acts on X_* by phi = w . theta."""

    D: BasedRootDatum = field(repr=False)
    w: WeylElement
    theta: DiagramAutomorphism
    name: str = ""

    @cached_property
    def phi(self) -> tuple[tuple[int, ...], ...]:
        return tuple(map(tuple, la.matmul(self.w.matrix, self.theta.theta)))

    @cached_property
    def kappa_T(self) -> GroupHom:
        """Projection X_*(T) -> X_*(T)_Gamma."""
        return coinvariants(self.D.rank, self.phi)[1]

    @property
    def coinvariant_group(self) -> FgAbelianGroup:
        return self.kappa_T.target

    @cached_property
    def fixed_subspace(self) -> list[list[Fraction]]:
        n = self.D.rank
        return la.nullspace([[self.phi[i][j] - int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def fixed_rank(self) -> int:
        return len(self.fixed_subspace)

    def order(self) -> int:
        from .root_datum import matrix_order

        return matrix_order(self.phi)


def torus_type(
    D: BasedRootDatum, word: Sequence[int] = (), theta: DiagramAutomorphism | None = None, name: str | None = None
) -> TorusType:
    theta = theta or trivial_automorphism(D)
    w = D.weyl_element(word)
    if name is None:
        name = "".join(f"s{i + 1}" for i in w.word) or "1"
    return TorusType(D, w, theta, name)


def parse_weyl_word(text: str) -> tuple[int, ...]:
    """'s1s2s1' or '1,2,1' (1-indexed) -> (0, 1, 0); '1' or '' is the identity."""
    text = text.strip().replace(" ", "")
    if text in ("", "1", "id", "e"):
        return ()
    if "s" in text:
        parts = [p for p in text.split("s") if p]
    else:
        parts = [p for p in text.split(",") if p]
    word = tuple(int(p) - 1 for p in parts)
    if any(i < 0 for i in word):
        raise ValueError(f"Weyl word {text!r} uses a non-positive index")
    return word


def full_catalog(D: BasedRootDatum, theta: DiagramAutomorphism | None = None) -> dict[str, TorusType]:
    """One torus type per element of W."""
    theta = theta or trivial_automorphism(D)
    out = {}
    for w in weyl_group(D):
        t = TorusType(D, w, theta, "".join(f"s{i + 1}" for i in w.word) or "1")
        out[t.name] = t
    return out


# ---------------------------------------------------------------------------
# Class points and class functions


@dataclass(frozen=True, order=True)
class ClassPointG:
    torus: str
    label: str


@dataclass(frozen=True, order=True)
class ClassPointJ:
    torus: str
    label: str
    nu: tuple[int, ...]


class ClassFunction(Mapping):
    """Finitely supported Q-valued function on class points of one side."""

    __slots__ = ("side", "_data")

    def __init__(self, side: str, data: Mapping | Iterable = ()):
        if side not in ("G", "J"):
            raise ValueError("side must be 'G' or 'J'")
        kind = ClassPointG if side == "G" else ClassPointJ
        items = data.items() if isinstance(data, Mapping) else data
        acc: dict = {}
        for pt, v in items:
            if not isinstance(pt, kind):
                raise TypeError(f"{pt!r} is not a {kind.__name__}")
            acc[pt] = acc.get(pt, Fraction(0)) + Fraction(v)
        self.side = side
        self._data = {k: v for k, v in sorted(acc.items()) if v}

    def __getitem__(self, pt):
        return self._data.get(pt, Fraction(0))

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.side == other.side and self._data == other._data

    def __hash__(self):
        return hash((self.side, frozenset(self._data.items())))

    def __add__(self, other: ClassFunction) -> ClassFunction:
        _same_side(self, other)
        return ClassFunction(self.side, list(self.items()) + list(other.items()))

    def scale(self, c) -> ClassFunction:
        return ClassFunction(self.side, ((k, c * v) for k, v in self.items()))

    def to_json(self) -> list[dict]:
        rows = []
        for pt, v in self._data.items():
            row = {"torus": pt.torus, "label": pt.label, "value": _fmt(v)}
            if isinstance(pt, ClassPointJ):
                row["nu"] = list(pt.nu)
            rows.append(row)
        return rows

    @classmethod
    def from_json(cls, payload, side: str | None = None) -> ClassFunction:
        if isinstance(payload, str):
            payload = json.loads(payload)
        if side is None:
            side = "J" if payload and "nu" in payload[0] else "G"
        items = []
        for row in payload:
            if side == "J":
                pt = ClassPointJ(row["torus"], row["label"], tuple(row["nu"]))
            else:
                pt = ClassPointG(row["torus"], row["label"])
            items.append((pt, Fraction(row["value"])))
        return cls(side, items)

    def __repr__(self):
        return f"ClassFunction({self.side}, {self._data!r})"


def _fmt(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _same_side(f: ClassFunction, g: ClassFunction):
    if f.side != g.side:
        raise ValueError(f"class functions live on different sides ({f.side} vs {g.side})")


def pairing(f: ClassFunction, g: ClassFunction) -> Fraction:
    """Sum of f(x) g(x) over the common support (counting measure)."""
    _same_side(f, g)
    return sum((v * g[k] for k, v in f.items() if k in g), Fraction(0))


# ---------------------------------------------------------------------------
# Ellipticity, Rel-fibers, kernels


def is_elliptic(D: BasedRootDatum, t: TorusType) -> bool:
    """The phi-fixed part of X_* (x) Q is killed by every root."""
    return all(la.dot(a, v) == 0 for v in t.fixed_subspace for a in D.simple_roots)


def _pi1_image(D: BasedRootDatum, t: TorusType, nu: Sequence[int]) -> tuple[int, ...]:
    return pi1_coinvariants(D, t.theta)(t.kappa_T.lift(nu))


def rel_fiber(
    D: BasedRootDatum, theta: DiagramAutomorphism | None, mu: Sequence[int], t: TorusType, nu: Sequence[int]
) -> frozenset:
    """{lam in Omega(mu) : kappa_T(lam) = nu}."""
    _check_theta(theta, t)
    nu = t.coinvariant_group.reduce(nu)
    return frozenset(lam for lam in weight_support(D, mu) if t.kappa_T(lam) == nu)


@dataclass(frozen=True)
class TransferKernel:
    torus: str
    group: FgAbelianGroup
    values: tuple[tuple[tuple[int, ...], int], ...]

    def __getitem__(self, nu) -> int:
        return dict(self.values).get(tuple(nu), 0)

    def as_dict(self) -> dict:
        return dict(self.values)

    @property
    def mass(self) -> int:
        return sum(v for _, v in self.values)

    def is_zero(self) -> bool:
        return not self.values

    def to_json(self) -> dict:
        return {
            "torus": self.torus,
            "group": self.group.to_json(),
            "kernel": [{"nu": list(k), "m": v} for k, v in self.values],
        }


def _check_theta(theta, t: TorusType):
    if theta is not None and theta.theta != t.theta.theta:
        raise ValueError("torus type was built for a different Galois action")


def transfer_kernel(
    D: BasedRootDatum,
    theta: DiagramAutomorphism | None,
    mu: Sequence[int],
    t: TorusType,
    c: BasicClass | Sequence[int] | None = None,
) -> TransferKernel:
    """m(nu) for nu in X_*(T)_Gamma, against the basic class c.

    With c omitted the kernel is taken against the basic class of mu. Only nu
    whose image in pi_1(G)_Gamma equals c contribute.
    """
    _check_theta(theta, t)
    acc: dict[tuple[int, ...], int] = {}
    for lam, m in weight_multiplicities(D, mu).items():
        nu = t.kappa_T(lam)
        acc[nu] = acc.get(nu, 0) + m
    if c is not None:
        target = tuple(c.value if isinstance(c, BasicClass) else c)
        proj = pi1_coinvariants(D, t.theta)
        target = proj.target.reduce(target)
        acc = {nu: m for nu, m in acc.items() if _pi1_image(D, t, nu) == target}
    return TransferKernel(t.name, t.coinvariant_group, tuple(sorted(acc.items())))


class HeckeTransfer:
    """The operators T_{b,mu}^{G->J} and T_{b,mu}^{J->G} over a torus catalog.

    ``c`` is kappa(b) in pi_1(G)_Gamma; it defaults to the basic class of mu.
    Non-elliptic torus types are accepted but logged; with
    ``elliptic_only=True`` they are dropped from every output.
    """

    def __init__(
        self,
        D: BasedRootDatum,
        theta: DiagramAutomorphism | None,
        mu: Sequence[int],
        tori: Mapping[str, TorusType] | Iterable[TorusType],
        c: BasicClass | Sequence[int] | None = None,
        elliptic_only: bool = False,
    ):
        self.D = D
        self.theta = theta or trivial_automorphism(D)
        self.mu = tuple(mu)
        if not isinstance(tori, Mapping):
            tori = {t.name: t for t in tori}
        self.tori = dict(tori)
        for t in self.tori.values():
            _check_theta(self.theta, t)
        self.proj = pi1_coinvariants(D, self.theta)
        if c is None:
            self.c = self.proj(self.mu)
        else:
            self.c = self.proj.target.reduce(c.value if isinstance(c, BasicClass) else c)
        self.elliptic_only = elliptic_only
        self._kernels: dict[str, TransferKernel] = {}
        self.non_elliptic = sorted(name for name, t in self.tori.items() if not is_elliptic(D, t))
        if self.non_elliptic:
            log.info("non-elliptic torus types in catalog: %s", ", ".join(self.non_elliptic))

    def torus(self, name: str) -> TorusType:
        try:
            return self.tori[name]
        except KeyError:
            raise KeyError(f"torus type {name!r} is not registered") from None

    def kernel(self, name: str) -> TransferKernel:
        if name not in self._kernels:
            t = self.torus(name)
            if self.elliptic_only and name in self.non_elliptic:
                self._kernels[name] = TransferKernel(name, t.coinvariant_group, ())
            else:
                self._kernels[name] = transfer_kernel(self.D, self.theta, self.mu, t, self.c)
        return self._kernels[name]

    def j_point(self, torus: str, label: str, nu: Sequence[int]) -> ClassPointJ:
        """A J_b-side class point, checking that nu lies over kappa(b)."""
        t = self.torus(torus)
        nu = t.coinvariant_group.reduce(nu)
        if _pi1_image(self.D, t, nu) != self.c:
            raise ValueError(f"invariant {nu} does not map to kappa(b) = {self.c}")
        return ClassPointJ(torus, label, nu)

    def G_to_J(self, f: ClassFunction) -> ClassFunction:
        if f.side != "G":
            raise ValueError("expected a G-side class function")
        out = []
        for pt, v in f.items():
            for nu, m in self.kernel(pt.torus).values:
                out.append((ClassPointJ(pt.torus, pt.label, nu), m * v))
        return ClassFunction("J", out)

    def J_to_G(self, f: ClassFunction) -> ClassFunction:
        if f.side != "J":
            raise ValueError("expected a J-side class function")
        out = []
        for pt, v in f.items():
            m = self.kernel(pt.torus)[pt.nu]
            if m:
                out.append((ClassPointG(pt.torus, pt.label), m * v))
        return ClassFunction("G", out)


def hecke_G_to_J(D, theta, mu, f: ClassFunction, tori, c=None) -> ClassFunction:
    return HeckeTransfer(D, theta, mu, tori, c).G_to_J(f)


def hecke_J_to_G(D, theta, mu, f: ClassFunction, tori, c=None) -> ClassFunction:
    return HeckeTransfer(D, theta, mu, tori, c).J_to_G(f)


def vanishing_check(
    D: BasedRootDatum,
    theta: DiagramAutomorphism | None,
    mu: Sequence[int],
    c: BasicClass | Sequence[int],
    tori: Mapping[str, TorusType] | Iterable[TorusType],
) -> bool:
    """True iff c != kappa(basic class of mu) forces every kernel against c to vanish."""
    model = HeckeTransfer(D, theta, mu, tori, c)
    if model.c == model.proj(tuple(mu)):
        return True
    return all(model.kernel(name).is_zero() for name in model.tori)
