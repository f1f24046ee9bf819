"""Based root data, Weyl groups, dominance order and diagram automorphisms.

Coordinates: X_*(T) and X^*(T) are both identified with Z^n and the pairing
<chi, lambda> is the dot product. Cocharacters are tuples of ints (or
Fractions for rational points of X_* (x) Q).

Representations r_mu of the dual group are handled inside the same datum:
the coroots play the role of the dual group's roots and cocharacters are its
weights.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import _linalg as la
from .errors import MAX_ORBIT_SIZE, MAX_WEYL_ORDER, CostGuardError

Vector = tuple[int, ...]


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _scale(c, v):
    return tuple(c * a for a in v)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W acting on X_* by an integer matrix.

    ``word`` is a reduced word (i_1, ..., i_k) meaning s_{i_1} ... s_{i_k};
    elements coming out of :func:`weyl_group` carry the shortlex-minimal one.
    """

    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __call__(self, v):
        return la.matvec(self.matrix, v)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(_freeze(la.matmul(self.matrix, other.matrix)), self.word + other.word)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def inverse(self) -> WeylElement:
        inv = la.inverse(self.matrix)
        return WeylElement(_freeze(la.as_int_vector(r) for r in inv), self.word[::-1])

    def order(self) -> int:
        return matrix_order(self.matrix)

    def is_identity(self) -> bool:
        return self.matrix == _freeze(la.identity(len(self.matrix)))


def _freeze(rows: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


def matrix_order(m: Sequence[Sequence[int]], bound: int = 1000) -> int:
    ident = _freeze(la.identity(len(m)))
    cur = _freeze(m)
    for k in range(1, bound + 1):
        if cur == ident:
            return k
        cur = _freeze(la.matmul(cur, m))
    raise ValueError("matrix does not have finite order")


@dataclass(frozen=True)
class BasedRootDatum:
    """Based root datum (X^*, simple roots, X_*, simple coroots).

    ``rank`` is the rank of the lattices, which may exceed the number of
    simple roots (the semisimple rank) for groups with a central torus.
    """

    rank: int
    simple_roots: tuple[Vector, ...]
    simple_coroots: tuple[Vector, ...]
    cochar_basis_labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "simple_roots", tuple(tuple(int(x) for x in r) for r in self.simple_roots))
        object.__setattr__(self, "simple_coroots", tuple(tuple(int(x) for x in r) for r in self.simple_coroots))
        if not self.cochar_basis_labels:
            object.__setattr__(self, "cochar_basis_labels", tuple(f"e{i + 1}" for i in range(self.rank)))
        if len(self.simple_roots) != len(self.simple_coroots):
            raise ValueError("need as many simple coroots as simple roots")
        if len(self.cochar_basis_labels) != self.rank:
            raise ValueError("one basis label per lattice coordinate")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank:
                raise ValueError(f"vector {v} does not have {self.rank} coordinates")
        c = self.cartan
        r = self.semisimple_rank
        for i in range(r):
            if c[i][i] != 2:
                raise ValueError(f"<alpha_{i}, alpha_{i}^v> = {c[i][i]}, expected 2")
            for j in range(r):
                if i != j and (c[i][j] > 0 or (c[i][j] == 0) != (c[j][i] == 0)):
                    raise ValueError("not a generalized Cartan matrix")
        if r and (la.rank(self.simple_roots) < r or la.rank(self.simple_coroots) < r):
            raise ValueError("simple roots and simple coroots must be linearly independent")
        self._root_pairs  # closure fails loudly for non-finite types

    # -- basic structure -------------------------------------------------

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        """C[i][j] = <alpha_j, alpha_i^v>."""
        return tuple(
            tuple(la.dot(a, cv) for a in self.simple_roots) for cv in self.simple_coroots
        )

    @cached_property
    def _root_pairs(self) -> tuple[tuple[Vector, Vector, Vector], ...]:
        # Close the simple roots under simple reflections, tracking the
        # coroot of each root; coefficients are w.r.t. simple roots/coroots.
        r = self.semisimple_rank
        c = self.cartan
        unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        seen = {u: u for u in unit}  # root coeffs -> coroot coeffs
        queue = deque(unit)
        cap = max(r * r, 120) + 1
        while queue:
            a = queue.popleft()
            av = seen[a]
            for i in range(r):
                # <beta, alpha_i^v> and <alpha_i, beta^v>
                p = sum(a[j] * c[i][j] for j in range(r))
                q = sum(av[j] * c[j][i] for j in range(r))
                if p == 0:
                    continue
                b = tuple(a[j] - (p if j == i else 0) for j in range(r))
                if any(x < 0 for x in b) or b in seen:
                    continue
                seen[b] = tuple(av[j] - (q if j == i else 0) for j in range(r))
                if len(seen) > cap:
                    raise ValueError("Cartan matrix is not of finite type")
                queue.append(b)
        pairs = []
        for a, av in seen.items():
            root = tuple(sum(a[k] * self.simple_roots[k][x] for k in range(r)) for x in range(self.rank))
            coroot = tuple(sum(av[k] * self.simple_coroots[k][x] for k in range(r)) for x in range(self.rank))
            pairs.append((root, coroot, a))
        pairs.sort()
        return tuple(pairs)

    @cached_property
    def positive_roots(self) -> tuple[Vector, ...]:
        return tuple(p[0] for p in self._root_pairs)

    @cached_property
    def positive_coroots(self) -> tuple[Vector, ...]:
        """Positive coroots, index-aligned with :attr:`positive_roots`."""
        return tuple(p[1] for p in self._root_pairs)

    @cached_property
    def positive_root_coefficients(self) -> tuple[Vector, ...]:
        return tuple(p[2] for p in self._root_pairs)

    @cached_property
    def roots(self) -> tuple[Vector, ...]:
        return self.positive_roots + tuple(_scale(-1, a) for a in self.positive_roots)

    @cached_property
    def coroots(self) -> tuple[Vector, ...]:
        return self.positive_coroots + tuple(_scale(-1, a) for a in self.positive_coroots)

    @cached_property
    def two_rho(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.positive_roots)) if self.positive_roots else (0,) * self.rank

    @cached_property
    def two_rho_check(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.positive_coroots)) if self.positive_coroots else (0,) * self.rank

    @cached_property
    def two_rho_coefficients(self) -> Vector:
        """2*rho written in the basis of simple roots."""
        r = self.semisimple_rank
        return tuple(sum(a[i] for a in self.positive_root_coefficients) for i in range(r))

    # -- pairings and coordinates ------------------------------------------

    def pair(self, chi: Sequence, lam: Sequence):
        return la.dot(chi, lam)

    def simple_pairings(self, lam: Sequence) -> tuple:
        return tuple(la.dot(a, lam) for a in self.simple_roots)

    def is_dominant(self, lam: Sequence) -> bool:
        return all(p >= 0 for p in self.simple_pairings(lam))

    @cached_property
    def _coroot_coord_map(self):
        # c = (C^T)^{-1} (<alpha_j, d>)_j
        if not self.semisimple_rank:
            return []
        return la.inverse(la.transpose(self.cartan))

    def coroot_coordinates(self, d: Sequence) -> tuple[Fraction, ...] | None:
        """Coordinates of d in the basis of simple coroots, or None if d is
        outside their rational span."""
        r = self.semisimple_rank
        if r == 0:
            return () if all(x == 0 for x in d) else None
        c = la.matvec(self._coroot_coord_map, self.simple_pairings(d))
        back = tuple(sum(c[k] * self.simple_coroots[k][x] for k in range(r)) for x in range(self.rank))
        if any(Fraction(b) != Fraction(x) for b, x in zip(back, d)):
            return None
        return c

    @cached_property
    def fundamental_coweights(self) -> tuple[tuple[Fraction, ...], ...]:
        """omega_i^v in the rational coroot span, dual to the simple roots."""
        r = self.semisimple_rank
        if r == 0:
            return ()
        cinv = la.inverse(self.cartan)
        return tuple(
            tuple(sum(cinv[i][k] * self.simple_coroots[k][x] for k in range(r)) for x in range(self.rank))
            for i in range(r)
        )

    def in_lattice(self, v: Sequence) -> bool:
        return all(Fraction(x).denominator == 1 for x in v)

    # -- Weyl group action ---------------------------------------------------

    def reflect(self, i: int, lam: Sequence) -> tuple:
        p = la.dot(self.simple_roots[i], lam)
        if p == 0:
            return tuple(lam)
        cv = self.simple_coroots[i]
        return tuple(x - p * c for x, c in zip(lam, cv))

    @cached_property
    def simple_reflection_matrices(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        mats = []
        for a, cv in zip(self.simple_roots, self.simple_coroots):
            mats.append(_freeze(
                [int(i == j) - cv[i] * a[j] for j in range(self.rank)] for i in range(self.rank)
            ))
        return tuple(mats)

    def simple_reflection(self, i: int) -> WeylElement:
        return WeylElement(self.simple_reflection_matrices[i], (i,))

    def identity(self) -> WeylElement:
        return WeylElement(_freeze(la.identity(self.rank)), ())

    def weyl_element(self, word: Sequence[int]) -> WeylElement:
        """Product s_{w_1} ... s_{w_k}; the word is replaced by the canonical
        shortlex word when the group is small enough to enumerate."""
        m = la.identity(self.rank)
        for i in word:
            if not 0 <= i < self.semisimple_rank:
                raise ValueError(f"no simple reflection with index {i}")
            m = la.matmul(m, self.simple_reflection_matrices[i])
        el = WeylElement(_freeze(m), tuple(word))
        try:
            canon = self._weyl_index
        except CostGuardError:
            return el
        return canon[el.matrix]

    @cached_property
    def _weyl_elements(self) -> tuple[WeylElement, ...]:
        ident = self.identity()
        found = {ident.matrix: ident}
        order = [ident]
        head = 0
        while head < len(order):
            cur = order[head]
            head += 1
            for i, s in enumerate(self.simple_reflection_matrices):
                m = _freeze(la.matmul(cur.matrix, s))
                if m not in found:
                    el = WeylElement(m, cur.word + (i,))
                    found[m] = el
                    order.append(el)
                    if len(order) > MAX_WEYL_ORDER:
                        raise CostGuardError(f"|W| exceeds {MAX_WEYL_ORDER}")
        return tuple(order)

    @cached_property
    def _weyl_index(self) -> dict:
        return {w.matrix: w for w in self._weyl_elements}

    def __repr__(self):
        return f"BasedRootDatum({self.name or 'custom'}, rank={self.rank})"


# ---------------------------------------------------------------------------
# Operations


def weyl_group(D: BasedRootDatum) -> tuple[WeylElement, ...]:
    """All elements of W in shortlex order of their canonical words."""
    return D._weyl_elements


def dominant_representative(D: BasedRootDatum, lam: Sequence) -> tuple[tuple, WeylElement]:
    """Return (lam_dom, w) with w(lam) = lam_dom dominant.

    Repeatedly applies the lowest-index s_i with <alpha_i, lam> < 0.
    """
    lam = tuple(lam)
    applied: list[int] = []
    while True:
        i = next((k for k, p in enumerate(D.simple_pairings(lam)) if p < 0), None)
        if i is None:
            break
        lam = D.reflect(i, lam)
        applied.append(i)
    word = tuple(reversed(applied))
    m = la.identity(D.rank)
    for i in word:
        m = la.matmul(m, D.simple_reflection_matrices[i])
    return lam, WeylElement(_freeze(m), word)


def dominant_with_parity(D: BasedRootDatum, lam: Sequence) -> tuple[tuple, int]:
    """Fast variant returning (lam_dom, (-1)^{length of w})."""
    lam = tuple(lam)
    sign = 1
    roots = D.simple_roots
    while True:
        for i, a in enumerate(roots):
            if la.dot(a, lam) < 0:
                lam = D.reflect(i, lam)
                sign = -sign
                break
        else:
            return lam, sign


def dominance_leq(D: BasedRootDatum, lam: Sequence, mu: Sequence) -> bool:
    """lam <= mu iff mu - lam is a nonnegative integer combination of simple coroots."""
    c = D.coroot_coordinates(_sub(mu, lam))
    if c is None:
        return False
    return all(Fraction(x).denominator == 1 and x >= 0 for x in c)


def orbit(D: BasedRootDatum, lam: Sequence) -> frozenset:
    """The W-orbit of lam, by closure under simple reflections."""
    start = tuple(lam)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(D.semisimple_rank):
            u = D.reflect(i, v)
            if u not in seen:
                seen.add(u)
                if len(seen) > MAX_ORBIT_SIZE:
                    raise CostGuardError(f"orbit exceeds {MAX_ORBIT_SIZE} elements")
                queue.append(u)
    return frozenset(seen)


def dual(D: BasedRootDatum) -> BasedRootDatum:
    """The dual based root datum (roots and coroots exchanged)."""
    return BasedRootDatum(
        rank=D.rank,
        simple_roots=D.simple_coroots,
        simple_coroots=D.simple_roots,
        cochar_basis_labels=tuple(f"{x}*" for x in D.cochar_basis_labels),
        name=f"dual({D.name})" if D.name else "",
    )


# ---------------------------------------------------------------------------
# Diagram automorphisms


@dataclass(frozen=True)
class DiagramAutomorphism:
    """A permutation of the simple nodes with its induced lattice map.

    ``theta`` acts on X_* and sends alpha_i^v to alpha_{perm[i]}^v;
    ``theta_dual`` (its transpose inverse) acts on X^* likewise on roots.
    """

    perm: tuple[int, ...]
    theta: tuple[tuple[int, ...], ...]
    theta_dual: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def order(self) -> int:
        return matrix_order(self.theta)

    def __call__(self, v):
        return la.matvec(self.theta, v)

    def is_identity(self) -> bool:
        return self.theta == _freeze(la.identity(len(self.theta)))


def automorphism_from_permutation(
    D: BasedRootDatum, perm: Sequence[int], central: int | None = None
) -> DiagramAutomorphism:
    """Lattice automorphism of X_* induced by a Cartan-preserving node permutation.

    On the central directions (common kernel of the roots) theta acts by
    ``central`` (+1 or -1). The default is +1 for the identity permutation and
    -1 otherwise, which for GL_n gives the usual x -> -w_0(x) twist.
    """
    perm = tuple(int(p) for p in perm)
    r = D.semisimple_rank
    if sorted(perm) != list(range(r)):
        raise ValueError(f"{perm} is not a permutation of the {r} simple nodes")
    c = D.cartan
    if any(c[perm[i]][perm[j]] != c[i][j] for i in range(r) for j in range(r)):
        raise ValueError(f"permutation {perm} does not preserve the Cartan matrix")
    if central is None:
        central = 1 if perm == tuple(range(r)) else -1
    if central not in (1, -1):
        raise ValueError("central action must be +1 or -1")
    center = la.nullspace(D.simple_roots, D.rank) if r else [
        [Fraction(int(i == j)) for j in range(D.rank)] for i in range(D.rank)
    ]
    basis = [list(map(Fraction, cv)) for cv in D.simple_coroots] + center
    images = [list(map(Fraction, D.simple_coroots[perm[i]])) for i in range(r)]
    images += [[central * x for x in z] for z in center]
    # theta * B = I  where B has the basis as columns
    bmat = la.transpose(basis)
    imat = la.transpose(images)
    theta = la.matmul(imat, la.inverse(bmat))
    try:
        theta_int = _freeze(la.as_int_vector(row) for row in theta)
    except ValueError:
        raise ValueError("permutation does not induce an automorphism of X_*") from None
    if abs(la.det(theta_int)) != 1:
        raise ValueError("permutation does not induce an automorphism of X_*")
    theta_dual = _freeze(la.as_int_vector(row) for row in la.transpose(la.inverse(theta_int)))
    for i in range(r):
        if la.matvec(theta_dual, D.simple_roots[i]) != D.simple_roots[perm[i]]:
            raise ValueError("permutation does not map simple roots consistently")
    return DiagramAutomorphism(perm, theta_int, theta_dual)


def trivial_automorphism(D: BasedRootDatum) -> DiagramAutomorphism:
    return automorphism_from_permutation(D, range(D.semisimple_rank))


# ---------------------------------------------------------------------------
# Presets


def cartan_matrix(kind: str, n: int) -> list[list[int]]:
    """Cartan matrix of a simple type, Bourbaki numbering, C[i][j] = <alpha_j, alpha_i^v>."""
    kind = kind.upper()
    limits = {"A": 1, "B": 2, "C": 2, "D": 3}
    if kind in limits and n < limits[kind]:
        raise ValueError(f"rank {n} out of range for type {kind}")
    if kind == "E" and n not in (6, 7, 8):
        raise ValueError("type E needs rank 6, 7 or 8")
    if kind == "F" and n != 4:
        raise ValueError("type F needs rank 4")
    if kind == "G" and n != 2:
        raise ValueError("type G needs rank 2")
    if kind not in "ABCDEFG" or len(kind) != 1:
        raise ValueError(f"unknown Cartan type {kind!r}")
    c = [[2 * int(i == j) for j in range(n)] for i in range(n)]

    def link(i, j, a=-1, b=-1):
        c[i][j], c[j][i] = a, b

    if kind in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if kind == "B":
            c[n - 1][n - 2], c[n - 2][n - 1] = -2, -1
        elif kind == "C":
            c[n - 1][n - 2], c[n - 2][n - 1] = -1, -2
    elif kind == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif kind == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif kind == "F":
        link(0, 1)
        link(2, 3)
        c[1][2], c[2][1] = -1, -2
    elif kind == "G":
        c[0][1], c[1][0] = -3, -1
    return c


def from_cartan(cartan: Sequence[Sequence[int]], lattice: str = "sc", name: str = "") -> BasedRootDatum:
    """Semisimple datum from a Cartan matrix.

    ``lattice`` names the dual group, on which r_mu lives: "sc" takes X_* to
    be the coweight lattice (every fundamental coweight is a cocharacter),
    "ad" takes X_* to be the coroot lattice.
    """
    c = [list(map(int, row)) for row in cartan]
    n = len(c)
    unit = la.identity(n)
    if lattice == "sc":
        roots, coroots = unit, c
        labels = tuple(f"w{i + 1}" for i in range(n))
    elif lattice == "ad":
        roots, coroots = la.transpose(c), unit
        labels = tuple(f"a{i + 1}" for i in range(n))
    else:
        raise ValueError(f"lattice must be 'sc' or 'ad', got {lattice!r}")
    return BasedRootDatum(n, tuple(map(tuple, roots)), tuple(map(tuple, coroots)), labels, name)


def _classical(family: str, n: int) -> BasedRootDatum:
    def e(i, m):
        return tuple(int(k == i) for k in range(m))

    def diff(i, m):
        return _sub(e(i, m), e(i + 1, m))

    if family == "GL":
        if n < 1:
            raise ValueError("GL_n needs n >= 1")
        simple = tuple(diff(i, n) for i in range(n - 1))
        return BasedRootDatum(n, simple, simple, tuple(f"e{i + 1}" for i in range(n)), f"GL{n}")
    if family == "SL":
        if n < 2:
            raise ValueError("SL_n needs n >= 2")
        return from_cartan(cartan_matrix("A", n - 1), "ad", f"SL{n}")
    if family == "PGL":
        if n < 2:
            raise ValueError("PGL_n needs n >= 2")
        return from_cartan(cartan_matrix("A", n - 1), "sc", f"PGL{n}")
    if family == "SP":
        if n < 2 or n % 2:
            raise ValueError("Sp_n needs even n >= 2")
        m = n // 2
        roots = tuple(diff(i, m) for i in range(m - 1)) + (_scale(2, e(m - 1, m)),)
        coroots = tuple(diff(i, m) for i in range(m - 1)) + (e(m - 1, m),)
        return BasedRootDatum(m, roots, coroots, name=f"Sp{n}")
    if family == "SO-ODD":
        if n < 3 or n % 2 == 0:
            raise ValueError("SO-odd needs odd n >= 3")
        m = n // 2
        roots = tuple(diff(i, m) for i in range(m - 1)) + (e(m - 1, m),)
        coroots = tuple(diff(i, m) for i in range(m - 1)) + (_scale(2, e(m - 1, m)),)
        return BasedRootDatum(m, roots, coroots, name=f"SO{n}")
    if family == "SO-EVEN":
        if n < 4 or n % 2:
            raise ValueError("SO-even needs even n >= 4")
        m = n // 2
        last = _add(e(m - 2, m), e(m - 1, m))
        simple = tuple(diff(i, m) for i in range(m - 1)) + (last,)
        return BasedRootDatum(m, simple, simple, name=f"SO{n}")
    raise ValueError(f"unknown group family {family!r}")


_TYPE_RE = re.compile(r"^([A-Ga-g])(\d*)(?:-(sc|ad))?$")


def preset(name: str, n: int | None = None, lattice: str | None = None) -> BasedRootDatum:
    """Standard based root datum.

    ``name`` is a family (GL, SL, PGL, Sp, SO-odd, SO-even; ``n`` is the
    matrix size) or a Cartan type such as "A", "G2-sc", "B3" (``n`` is the
    rank, ``lattice`` defaults to "sc").
    """
    key = name.upper().replace("_", "-")
    if key in {"GL", "SL", "PGL", "SP", "SO-ODD", "SO-EVEN"}:
        if n is None:
            raise ValueError(f"{name} needs a size")
        return _classical(key, int(n))
    m = _TYPE_RE.match(name)
    if not m:
        raise ValueError(f"unknown group name {name!r}")
    kind, digits, lat = m.groups()
    if digits:
        if n is not None and int(n) != int(digits):
            raise ValueError(f"rank mismatch: {name} vs {n}")
        n = int(digits)
    if n is None:
        raise ValueError(f"{name} needs a rank")
    lat = lat or lattice or "sc"
    return from_cartan(cartan_matrix(kind, int(n)), lat, f"{kind.upper()}{n}-{lat}")
