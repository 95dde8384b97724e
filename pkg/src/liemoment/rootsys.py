"""Root systems for products of simple types with a central torus.

All weights live in fundamental-weight coordinates: coordinate i of a
weight is its pairing with the i-th simple coroot, so chamber membership
is a sign check and reflections are row operations with the Cartan
matrix.  Central-torus coordinates are appended after the semisimple
ones and are fixed by every reflection.

Simple-reflection indices are 0-based throughout.
"""

from __future__ import annotations

import re
from math import factorial
from typing import Dict, List, Tuple

from .errors import DomainError, ShapeError
from .exactq import (
    Q,
    Vec,
    dot,
    identity,
    inverse,
    matvec,
    q,
    qv,
    transpose,
    vneg,
    vsub,
    vscale,
)

_FACTOR_RE = re.compile(r"^([ABCDEFGT])(\d+)$")

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def _chain(n):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
    for i in range(n - 1):
        rows[i][i + 1] = -1
        rows[i + 1][i] = -1
    return rows


def _cartan_and_lengths(letter: str, n: int):
    """Cartan matrix (integer rows) and half-square-lengths d_i per type.

    Normalization: long roots have squared length 2 (d = 1).
    """
    half = Q(1, 2)
    if letter == "A":
        return _chain(n), [Q(1)] * n
    if letter == "B":
        rows = _chain(n)
        rows[n - 2][n - 1] = -2
        return rows, [Q(1)] * (n - 1) + [half]
    if letter == "C":
        rows = _chain(n)
        rows[n - 1][n - 2] = -2
        return rows, [half] * (n - 1) + [Q(1)]
    if letter == "D":
        rows = _chain(n)
        rows[n - 1][n - 2] = 0
        rows[n - 2][n - 1] = 0
        rows[n - 3][n - 1] = -1
        rows[n - 1][n - 3] = -1
        return rows, [Q(1)] * n
    if letter == "E":
        # Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 2
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            rows[a][b] = rows[b][a] = -1
        rows[1][3] = rows[3][1] = -1
        return rows, [Q(1)] * n
    if letter == "F":
        rows = _chain(4)
        rows[1][2] = -2
        rows[2][1] = -1
        return rows, [Q(1), Q(1), half, half]
    if letter == "G":
        return [[2, -1], [-3, 2]], [Q(1, 3), Q(1)]
    raise DomainError("unknown Cartan type %r" % letter)


def _weyl_order(letter: str, n: int) -> int:
    if letter == "A":
        return factorial(n + 1)
    if letter in ("B", "C"):
        return 2 ** n * factorial(n)
    if letter == "D":
        return 2 ** (n - 1) * factorial(n)
    if letter == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if letter == "F":
        return 1152
    return 12  # G2


class GroupSpec:
    """Product of simple factors plus a central torus, e.g. "A2xB3xT1"."""

    def __init__(self, factors, torus_rank=0):
        factors = tuple((str(l), int(n)) for l, n in factors)
        for letter, n in factors:
            if letter not in _RANK_BOUNDS:
                raise DomainError("unknown Cartan type %r" % letter)
            lo, hi = _RANK_BOUNDS[letter]
            if n < lo or (hi is not None and n > hi):
                raise DomainError("rank %d out of range for type %s" % (n, letter))
        if torus_rank < 0:
            raise DomainError("negative torus rank")
        self.factors = factors
        self.torus_rank = int(torus_rank)

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        factors = []
        torus = 0
        if not text:
            raise DomainError("empty group spec")
        for token in text.split("x"):
            m = _FACTOR_RE.match(token.strip())
            if not m:
                raise DomainError("bad group factor %r" % token)
            letter, n = m.group(1), int(m.group(2))
            if letter == "T":
                torus += n
            else:
                factors.append((letter, n))
        return cls(factors, torus)

    @property
    def ss_rank(self) -> int:
        return sum(n for _, n in self.factors)

    @property
    def rank(self) -> int:
        return self.ss_rank + self.torus_rank

    def __str__(self):
        parts = ["%s%d" % f for f in self.factors]
        if self.torus_rank:
            parts.append("T%d" % self.torus_rank)
        return "x".join(parts) if parts else "T0"

    def __eq__(self, other):
        return (
            isinstance(other, GroupSpec)
            and self.factors == other.factors
            and self.torus_rank == other.torus_rank
        )

    def __hash__(self):
        return hash((self.factors, self.torus_rank))


def _factor_roots(cartan_rows):
    """All roots of one simple factor by reflection closure, split by sign."""
    n = len(cartan_rows)
    simple = [qv(row) for row in cartan_rows]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(n):
            ref = vsub(beta, vscale(simple[i], beta[i]))
            if ref not in seen:
                seen.add(ref)
                queue.append(ref)
    cinv_t = transpose(inverse(tuple(simple)))
    positive = []
    for beta in seen:
        coeffs = matvec(cinv_t, beta)
        if all(c >= 0 for c in coeffs):
            positive.append((beta, coeffs))
    positive.sort()
    return positive


class RootSystem:
    """Cartan data, positive roots, chamber, and Weyl operations."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.ss_rank = spec.ss_rank
        self.rank = spec.ss_rank + spec.torus_rank
        self.torus_rank = spec.torus_rank

        cartan_rows: List[List[int]] = []
        lengths: List[Q] = []
        factor_of_index: List[int] = []
        offsets = []
        off = 0
        for fi, (letter, n) in enumerate(spec.factors):
            rows, ds = _cartan_and_lengths(letter, n)
            offsets.append(off)
            for r in rows:
                cartan_rows.append([0] * off + list(r) + [0] * (self.ss_rank - off - n))
            lengths.extend(ds)
            factor_of_index.extend([fi] * n)
            off += n
        self._offsets = offsets
        self._lengths = tuple(lengths)
        self._factor_of_index = tuple(factor_of_index)
        self.cartan = tuple(qv(r) for r in cartan_rows)

        pad = (Q(0),) * spec.torus_rank
        self.simple_roots = tuple(row + pad for row in self.cartan)

        positive = []
        pairing: Dict[Vec, Vec] = {}
        for fi, (letter, n) in enumerate(spec.factors):
            rows, ds = _cartan_and_lengths(letter, n)
            o = offsets[fi]
            for beta, coeffs in _factor_roots(rows):
                full = (Q(0),) * o + beta + (Q(0),) * (self.rank - o - n)
                # (lambda, coroot of beta) as a linear functional on weights:
                # coroot = sum_i c_i (d_i / d_beta) alpha_i-check.
                d_beta = sum(
                    coeffs[i] * coeffs[j] * rows[i][j] * ds[j]
                    for i in range(n)
                    for j in range(n)
                ) / 2
                check = tuple(coeffs[i] * ds[i] / d_beta for i in range(n))
                fullcheck = (Q(0),) * o + check + (Q(0),) * (self.rank - o - n)
                positive.append(full)
                pairing[full] = fullcheck
        positive.sort()
        self.positive_roots = tuple(positive)
        self._coroot_of = pairing
        self._root_set = frozenset(positive) | frozenset(vneg(b) for b in positive)

        # Weyl-invariant inner product in weight coordinates:
        # Gram = C^{-1} D on the semisimple block, identity on the torus.
        gram = [[Q(0)] * self.rank for _ in range(self.rank)]
        for fi, (letter, n) in enumerate(spec.factors):
            rows, ds = _cartan_and_lengths(letter, n)
            cinv = inverse(tuple(qv(r) for r in rows))
            o = offsets[fi]
            for i in range(n):
                for j in range(n):
                    gram[o + i][o + j] = cinv[i][j] * ds[j]
        for i in range(self.ss_rank, self.rank):
            gram[i][i] = Q(1)
        self.gram = tuple(tuple(r) for r in gram)
        self._star_matrix = None

    # -- basic predicates -------------------------------------------------

    def check_dim(self, v: Vec):
        if len(v) != self.rank:
            raise ShapeError(
                "weight has %d coordinates, expected %d" % (len(v), self.rank)
            )

    def is_dominant(self, v: Vec) -> bool:
        self.check_dim(v)
        return all(v[i] >= 0 for i in range(self.ss_rank))

    def is_integral(self, v: Vec) -> bool:
        self.check_dim(v)
        return all(x.denominator == 1 for x in v)

    def inner(self, a: Vec, b: Vec):
        self.check_dim(a)
        self.check_dim(b)
        return dot(a, matvec(self.gram, b))

    def coroot_pairing(self, alpha: Vec, lam: Vec):
        """Pairing (lam, coroot of alpha) for a positive root alpha."""
        try:
            check = self._coroot_of[alpha]
        except KeyError:
            raise DomainError("%r is not a positive root" % (alpha,))
        return dot(check, lam)

    def weyl_order(self) -> int:
        n = 1
        for letter, r in self.spec.factors:
            n *= _weyl_order(letter, r)
        return n


def build(spec) -> RootSystem:
    """Construct the root system for a GroupSpec or a spec string."""
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    return RootSystem(spec)


def reflect(rs: RootSystem, i: int, lam: Vec) -> Vec:
    """Simple reflection s_i (0-based): lam - lam_i * alpha_i."""
    if not 0 <= i < rs.ss_rank:
        raise DomainError("reflection index %d out of range" % i)
    rs.check_dim(lam)
    if lam[i] == 0:
        return lam
    return vsub(lam, vscale(rs.simple_roots[i], lam[i]))


def apply_word(rs: RootSystem, word, lam: Vec) -> Vec:
    for i in word:
        lam = reflect(rs, i, lam)
    return lam


def weyl_orbit(rs: RootSystem, lam: Vec) -> Tuple[Vec, ...]:
    """Full Weyl orbit, lexicographically sorted."""
    rs.check_dim(lam)
    seen = {lam}
    queue = [lam]
    while queue:
        mu = queue.pop()
        for i in range(rs.ss_rank):
            nu = reflect(rs, i, mu)
            if nu not in seen:
                seen.add(nu)
                queue.append(nu)
    return tuple(sorted(seen))


def dominantize(rs: RootSystem, lam: Vec):
    """Dominant orbit representative and the word of reflections applied."""
    rs.check_dim(lam)
    word = []
    cur = lam
    while True:
        for i in range(rs.ss_rank):
            if cur[i] < 0:
                cur = reflect(rs, i, cur)
                word.append(i)
                break
        else:
            return cur, tuple(word)


def star(rs: RootSystem, lam: Vec) -> Vec:
    """The involution lam -> dominantize(-lam) on dominant weights."""
    if not rs.is_dominant(lam):
        raise DomainError("star is defined on dominant weights")
    return dominantize(rs, vneg(lam))[0]


def star_matrix(rs: RootSystem):
    """Matrix of the linear involution -w0 in weight coordinates."""
    if rs._star_matrix is None:
        cols = [star(rs, basis) for basis in identity(rs.rank)]
        rs._star_matrix = transpose(tuple(cols))
    return rs._star_matrix


def star_linear(rs: RootSystem, v: Vec) -> Vec:
    """-w0 applied to an arbitrary (not necessarily dominant) vector."""
    rs.check_dim(v)
    return matvec(star_matrix(rs), v)


def dominant_roots(rs: RootSystem) -> Tuple[Vec, ...]:
    """Positive roots lying in the chamber (per-factor highest roots)."""
    if not rs.spec.factors:
        raise DomainError("no semisimple part: there are no roots")
    return tuple(b for b in rs.positive_roots if rs.is_dominant(b))


def reflection_word(rs: RootSystem, alpha: Vec):
    """Word of simple reflections whose composition is the reflection s_alpha."""
    if alpha not in rs._coroot_of:
        raise DomainError("%r is not a positive root" % (alpha,))
    if alpha in rs.simple_roots:
        return (rs.simple_roots.index(alpha),)
    for i in range(rs.ss_rank):
        if alpha[i] > 0:
            beta = reflect(rs, i, alpha)
            if beta in rs._coroot_of:
                inner_word = reflection_word(rs, beta)
                return (i,) + inner_word + (i,)
    raise DomainError("no descent found for %r" % (alpha,))
