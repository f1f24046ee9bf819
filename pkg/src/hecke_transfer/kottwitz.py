"""Fundamental groups, Galois coinvariants, Kottwitz maps and signs.

Finitely generated abelian groups are kept in invariant-factor form, computed
with a Smith normal form that carries its unimodular transforms so every
quotient comes with an explicit projection and section.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from . import _linalg as la
from .root_datum import BasedRootDatum, DiagramAutomorphism, trivial_automorphism


def smith_normal_form(a: Sequence[Sequence[int]]):
    """Return (U, S, V) with U a V = S, U and V unimodular.

    S is diagonal with nonnegative entries d_1 | d_2 | ... followed by zeros.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(map(int, row)) for row in a]
    u = la.identity(m)
    v = la.identity(n)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        s[dst] = [x + c * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in s:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(t, i, -(s[i][t] // s[t][t]))
                    if s[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(t, j, -(s[t][j] // s[t][t]))
                    if s[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % s[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, s, v


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z/d_1 + ... + Z/d_k + Z^r with d_1 | d_2 | ... and each d_i >= 2.

    Elements are tuples of length k + r: torsion coordinates first (reduced
    mod d_i), then free coordinates.
    """

    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.invariant_factors)
        if any(x < 2 for x in d) or any(b % a for a, b in zip(d, d[1:])):
            raise ValueError(f"bad invariant factors {d}")
        object.__setattr__(self, "invariant_factors", d)

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors) + self.free_rank

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.ngens:
            raise ValueError(f"element {tuple(x)} has wrong length for {self}")
        k = len(self.invariant_factors)
        return tuple(int(c) % d for c, d in zip(x[:k], self.invariant_factors)) + tuple(int(c) for c in x[k:])

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def add(self, x, y):
        return self.reduce([a + b for a, b in zip(x, y)])

    def sub(self, x, y):
        return self.reduce([a - b for a, b in zip(x, y)])

    def neg(self, x):
        return self.reduce([-a for a in x])

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def elements(self) -> Iterator[tuple[int, ...]]:
        if self.free_rank:
            raise ValueError("group is infinite")
        return product(*(range(d) for d in self.invariant_factors))

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.invariant_factors)}

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism Z^n -> target given by an integer matrix, with a section.

    ``apply`` reduces ``matrix @ v`` in the target. ``section`` sends target
    coordinates back to a preimage in Z^n.
    """

    matrix: tuple[tuple[int, ...], ...]
    target: FgAbelianGroup
    section_matrix: tuple[tuple[int, ...], ...] | None = None

    @property
    def source_rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else len(self.section_matrix or ())

    def __call__(self, v: Sequence) -> tuple[int, ...]:
        v = la.as_int_vector(v)
        return self.target.reduce(la.matvec(self.matrix, v)) if self.matrix else ()

    apply = __call__

    def lift(self, x: Sequence[int]) -> tuple[int, ...]:
        if self.section_matrix is None:
            raise ValueError("no section recorded for this map")
        return tuple(int(c) for c in la.matvec(self.section_matrix, self.target.reduce(x)))

    def compose_after(self, mat: Sequence[Sequence[int]]) -> GroupHom:
        """The map v -> self(mat @ v)."""
        return GroupHom(tuple(map(tuple, la.matmul(self.matrix, mat))), self.target)


def quotient(n: int, generators: Sequence[Sequence[int]]) -> GroupHom:
    """Projection Z^n -> Z^n / span(generators), in invariant-factor form."""
    gens = [tuple(int(x) for x in g) for g in generators if any(g)]
    if not gens:
        group = FgAbelianGroup(n)
        ident = tuple(map(tuple, la.identity(n)))
        return GroupHom(ident, group, ident)
    cols = la.transpose(gens)  # n x k, generators as columns
    u, s, _ = smith_normal_form(cols)
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    r = sum(1 for d in diag if d)
    torsion_idx = [i for i in range(r) if diag[i] > 1]
    free_idx = list(range(r, n))
    keep = torsion_idx + free_idx
    group = FgAbelianGroup(len(free_idx), tuple(diag[i] for i in torsion_idx))
    proj = tuple(tuple(u[i]) for i in keep)
    uinv = la.inverse(u)
    section = tuple(tuple(int(uinv[row][i]) for i in keep) for row in range(n))
    return GroupHom(proj, group, section)


def quotient_invariants_oracle(n: int, generators: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...]]:
    """(free rank, invariant factors) of Z^n / span(generators) from determinantal divisors.

    Independent of :func:`smith_normal_form`; intended for small matrices.
    """
    from itertools import combinations
    from math import gcd

    gens = [list(map(int, g)) for g in generators]
    if not gens:
        return n, ()
    a = la.transpose(gens)
    k = len(gens)
    divisors = [1]
    for size in range(1, min(n, k) + 1):
        g = 0
        for rows in combinations(range(n), size):
            for cols in combinations(range(k), size):
                g = gcd(g, la.det([[a[i][j] for j in cols] for i in rows]))
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
    rank = len(factors)
    return n - rank, tuple(d for d in factors if d > 1)


# ---------------------------------------------------------------------------
# pi_1 and coinvariants


def pi1(D: BasedRootDatum) -> tuple[FgAbelianGroup, GroupHom]:
    """pi_1(G) = X_* / (coroot lattice) with its projection."""
    hom = quotient(D.rank, D.simple_coroots)
    return hom.target, hom


def coinvariants(n: int, phi: Sequence[Sequence[int]]) -> tuple[FgAbelianGroup, GroupHom]:
    """L_Gamma = L / (phi - 1) L for a finite-order automorphism phi of L = Z^n."""
    phi = [list(map(int, row)) for row in phi]
    gens = [[phi[i][j] - int(i == j) for i in range(n)] for j in range(n)]
    hom = quotient(n, gens)
    return hom.target, hom


def pi1_coinvariants(D: BasedRootDatum, theta: DiagramAutomorphism | None = None) -> GroupHom:
    """Projection X_* -> pi_1(G)_Gamma, Gamma acting through theta."""
    theta = theta or trivial_automorphism(D)
    n = D.rank
    gens = [list(c) for c in D.simple_coroots]
    gens += [[theta.theta[i][j] - int(i == j) for i in range(n)] for j in range(n)]
    return quotient(n, gens)


@dataclass(frozen=True)
class BasicClass:
    """kappa of a basic class, as an element of pi_1(G)_Gamma."""

    group: FgAbelianGroup
    value: tuple[int, ...]

    def __post_init__(self):
        if self.group.reduce(self.value) != tuple(self.value):
            raise ValueError(f"{self.value} is not a reduced element of {self.group}")

    def to_json(self):
        return {"group": self.group.to_json(), "value": list(self.value)}


def basic_class_of(D: BasedRootDatum, theta: DiagramAutomorphism | None, mu: Sequence[int]) -> BasicClass:
    """The kappa-image of the unique basic class in B(G, mu)."""
    proj = pi1_coinvariants(D, theta)
    return BasicClass(proj.target, proj(mu))


def kappa_modification(
    D: BasedRootDatum, theta: DiagramAutomorphism | None, c: Sequence[int], lam: Sequence[int]
) -> tuple[int, ...]:
    """kappa after modifying by lam: c minus the image of lam in pi_1(G)_Gamma."""
    proj = pi1_coinvariants(D, theta)
    return proj.target.sub(proj.target.reduce(c), proj(lam))


# ---------------------------------------------------------------------------
# Signs


def sc_weight_coordinates(D: BasedRootDatum, nu: Sequence) -> tuple[int, ...]:
    """(<alpha_i, nu>)_i: the image of nu in X^*(T^_sc), integrality checked."""
    out = []
    for p in D.simple_pairings(nu):
        p = Fraction(p)
        if p.denominator != 1:
            raise ValueError(f"{tuple(nu)} is not integral for the simply connected weight lattice")
        out.append(int(p))
    return tuple(out)


def kottwitz_sign(D: BasedRootDatum, nu_lift: Sequence) -> int:
    """(-1)^{<2 rho, nu>} for a lift nu in X_* (x) Q of a character of Z(G^_sc)."""
    coords = sc_weight_coordinates(D, nu_lift)
    exponent = sum(k * c for k, c in zip(D.two_rho_coefficients, coords))
    return -1 if exponent % 2 else 1


def lift_from_sc_coordinates(D: BasedRootDatum, coords: Sequence[int], shift: Sequence[int] | None = None) -> tuple:
    """sum_i c_i omega_i^v, plus an optional coroot-lattice shift (coefficients)."""
    lift = [Fraction(0)] * D.rank
    for c, w in zip(coords, D.fundamental_coweights):
        lift = [x + c * y for x, y in zip(lift, w)]
    if shift is not None:
        for c, cv in zip(shift, D.simple_coroots):
            lift = [x + c * y for x, y in zip(lift, cv)]
    return tuple(lift)


def sign_identity(
    D: BasedRootDatum, mu: Sequence, base: Sequence | None = None, rng: random.Random | None = None
) -> tuple[int, int]:
    """(e(G) e(J_b), (-1)^{<2 rho, mu>}) with mu_2 - mu_1 = mu.

    The left side takes mu_1 = ``base`` (default 0, the quasi-split form),
    re-lifts mu_1 and mu_2 through the simply connected weight coordinates
    with independent random coroot-lattice shifts, and multiplies the two
    Kottwitz signs. The right side pairs 2 rho with mu directly.
    """
    rng = rng or random.Random(0)
    mu = tuple(Fraction(x) for x in mu)
    base = tuple(Fraction(x) for x in base) if base is not None else (Fraction(0),) * D.rank
    mu2 = tuple(a + b for a, b in zip(base, mu))
    r = D.semisimple_rank

    def relift(v):
        shift = [rng.randint(-3, 3) for _ in range(r)]
        return lift_from_sc_coordinates(D, sc_weight_coordinates(D, v), shift)

    lhs = kottwitz_sign(D, relift(base)) * kottwitz_sign(D, relift(mu2))
    pairing = Fraction(la.dot(D.two_rho, mu))
    if pairing.denominator != 1:
        raise ValueError("<2 rho, mu> is not an integer")
    rhs = -1 if int(pairing) % 2 else 1
    return lhs, rhs


def shtuka_dimension(D: BasedRootDatum, mu: Sequence[int]) -> int:
    """d = <2 rho, mu>."""
    return int(la.dot(D.two_rho, mu))
