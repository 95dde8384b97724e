"""Exact rational convex polyhedra with dual descriptions.

A Polyhedron is stored canonically with BOTH a generator form (points,
rays, lines) and a halfspace form (inequalities normal.x >= offset, plus
affine-hull equalities).  The double description method is the single
conversion engine between the two forms; every public constructor
canonicalizes, so structural equality of canonical fields is semantic
equality.

Conventions:
  * extreme rays, lines, and facet normals are scaled to primitive
    integer vectors; all lists are lexicographically sorted;
  * a Cone is a polyhedron whose canonical point list is {0};
  * the empty polyhedron is a first-class value, never an error;
  * lower-dimensional polyhedra carry their affine hull as equalities,
    serialized as paired halfspaces;  lines serialize as +/- ray pairs.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError, ShapeError
from .exactq import (
    Q,
    Vec,
    dot,
    format_vec,
    is_zero,
    parse_vec,
    q,
    qstr,
    qv,
    rank as mat_rank,
    rref,
    vadd,
    vneg,
    vscale,
    vsub,
    vzero,
)

# --------------------------------------------------------------------------
# primitive-vector normalization


def _primitive(v: Vec) -> Vec:
    """Scale by a positive rational so entries are coprime integers."""
    denom_lcm = 1
    for x in v:
        d = x.denominator
        denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
    ints = [int(x * denom_lcm) for x in v]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g == 0:
        return tuple(Q(0) for _ in v)
    return tuple(Q(n // g) for n in ints)


def _sign_normalized(v: Vec) -> Vec:
    for x in v:
        if x > 0:
            return v
        if x < 0:
            return vneg(v)
    return v


# --------------------------------------------------------------------------
# double description core


def _dd_cone(constraints: Sequence[Vec], dim: int):
    """Extreme rays and lineality basis of {x : a.x >= 0 for all a}.

    Incremental double description with the combinatorial adjacency test;
    lines are kept explicit so non-pointed cones are exact.
    """
    lines: List[Vec] = [tuple(Q(1) if j == i else Q(0) for j in range(dim)) for i in range(dim)]
    rays: List[List] = []  # [vector, active-constraint bitmask]
    cons: List[Vec] = []

    seen = set()
    todo = []
    for a in constraints:
        if len(a) != dim:
            raise ShapeError("constraint has %d coordinates, expected %d" % (len(a), dim))
        if is_zero(a):
            continue
        p = _primitive(a)
        if p not in seen:
            seen.add(p)
            todo.append(p)

    for a in todo:
        ci = len(cons)
        bit = 1 << ci

        pidx = None
        for idx, l in enumerate(lines):
            if dot(a, l) != 0:
                pidx = idx
                break
        if pidx is not None:
            piv = lines.pop(pidx)
            da = dot(a, piv)
            if da < 0:
                piv = vneg(piv)
                da = -da
            lines = [vsub(l, vscale(piv, dot(a, l) / da)) for l in lines]
            newrays = []
            for vec, mask in rays:
                dv = dot(a, vec)
                if dv != 0:
                    vec = _primitive(vsub(vec, vscale(piv, dv / da)))
                newrays.append([vec, mask | bit])
            full_mask = bit - 1  # the pivot was a line: orthogonal to all previous
            newrays.append([_primitive(piv), full_mask])
            rays = _dedupe_rays(newrays)
            cons.append(a)
            continue

        plus, zero, minus = [], [], []
        for entry in rays:
            s = dot(a, entry[0])
            if s > 0:
                plus.append(entry)
            elif s == 0:
                zero.append(entry)
            else:
                minus.append(entry)
        if not minus:
            for entry in zero:
                entry[1] |= bit
            cons.append(a)
            continue
        newrays = [[v, m] for v, m in plus] + [[v, m | bit] for v, m in zero]
        if plus:
            current = rays
            for pv, pm in plus:
                dp = dot(a, pv)
                for mv, mm in minus:
                    common = pm & mm
                    adjacent = True
                    for ov, om in current:
                        if ov is pv or ov is mv:
                            continue
                        if common & ~om == 0:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    dm = dot(a, mv)
                    w = _primitive(vsub(vscale(mv, dp), vscale(pv, dm)))
                    if is_zero(w):
                        continue
                    mask = bit
                    for j, c in enumerate(cons):
                        if dot(c, w) == 0:
                            mask |= 1 << j
                    newrays.append([w, mask])
        rays = _dedupe_rays(newrays)
        cons.append(a)

    return [v for v, _ in rays], lines


def _dedupe_rays(entries):
    seen = {}
    for vec, mask in entries:
        if vec not in seen:
            seen[vec] = [vec, mask]
    return list(seen.values())


# --------------------------------------------------------------------------
# canonicalization helpers


def _canonical_lines(lines: Sequence[Vec]):
    """Canonical basis (RREF, primitive, sign- and lex-normalized) and pivots."""
    rows = [l for l in lines if not is_zero(l)]
    if not rows:
        return (), ()
    reduced, pivots = rref(tuple(rows))
    out = tuple(sorted(_sign_normalized(_primitive(r)) for r in reduced))
    return out, pivots


def _reduce_mod(v: Vec, basis_rref: Sequence[Vec], pivots: Sequence[int]) -> Vec:
    """Subtract basis combinations to zero out the pivot coordinates."""
    for row, p in zip(basis_rref, pivots):
        if v[p] != 0:
            v = vsub(v, vscale(row, v[p] / row[p]))
    return v


class Polyhedron:
    """Canonical dual description of a rational convex polyhedron."""

    __slots__ = ("dim", "empty", "points", "rays", "lines", "ineqs", "eqs")

    def __init__(self, dim, empty, points, rays, lines, ineqs, eqs):
        self.dim = dim
        self.empty = empty
        self.points = points
        self.rays = rays
        self.lines = lines
        self.ineqs = ineqs  # tuple of (normal, offset): normal.x >= offset
        self.eqs = eqs      # tuple of (normal, offset): normal.x == offset

    # -- equality / hashing are structural on canonical data ---------------

    def _key(self):
        return (self.dim, self.empty, self.points, self.rays, self.lines,
                self.ineqs, self.eqs)

    def __eq__(self, other):
        return isinstance(other, Polyhedron) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.empty:
            return "Polyhedron(empty, dim=%d)" % self.dim
        return "Polyhedron(dim=%d, points=%d, rays=%d, lines=%d, ineqs=%d, eqs=%d)" % (
            self.dim, len(self.points), len(self.rays), len(self.lines),
            len(self.ineqs), len(self.eqs))

    # -- predicates ---------------------------------------------------------

    def is_cone(self) -> bool:
        return not self.empty and self.points == (vzero(self.dim),)

    def is_polytope(self) -> bool:
        return not self.empty and not self.rays and not self.lines

    def contains(self, x: Vec) -> bool:
        if len(x) != self.dim:
            raise ShapeError("point has %d coordinates, expected %d" % (len(x), self.dim))
        if self.empty:
            return False
        for n, b in self.eqs:
            if dot(n, x) != b:
                return False
        for n, b in self.ineqs:
            if dot(n, x) < b:
                return False
        return True

    def contains_polyhedron(self, other: "Polyhedron") -> bool:
        """Exact inclusion otherset <= self, checked generator-vs-facet."""
        if other.dim != self.dim:
            raise ShapeError("ambient dimension mismatch")
        if other.empty:
            return True
        if self.empty:
            return False
        for p in other.points:
            if not self.contains(p):
                return False
        normals = [n for n, _ in self.ineqs]
        eq_normals = [n for n, _ in self.eqs]
        for r in other.rays:
            if any(dot(n, r) < 0 for n in normals):
                return False
            if any(dot(n, r) != 0 for n in eq_normals):
                return False
        for l in other.lines:
            if any(dot(n, l) != 0 for n in normals):
                return False
            if any(dot(n, l) != 0 for n in eq_normals):
                return False
        return True


def _empty(dim: int) -> Polyhedron:
    return Polyhedron(dim, True, (), (), (), (), ())


def _assemble(dim, gen_rays, gen_lines, fac_rays, fac_lines) -> Polyhedron:
    points = []
    rays = []
    for r in gen_rays:
        if r[0] > 0:
            points.append(tuple(x / r[0] for x in r[1:]))
        else:
            rays.append(r[1:])
    if not points:
        return _empty(dim)
    lines = [l[1:] for l in gen_lines]

    lcanon, lpivots = _canonical_lines(lines)
    red_rays = set()
    for r in rays:
        rr = _primitive(_reduce_mod(r, lcanon, lpivots))
        if not is_zero(rr):
            red_rays.add(rr)
    red_points = sorted({_reduce_mod(p, lcanon, lpivots) for p in points})

    eq_rows = []
    for e in fac_lines:
        n, c0 = e[1:], e[0]
        if is_zero(n):
            # x0 == 0 would mean the polyhedron is empty; points exist, so skip
            continue
        eq_rows.append(tuple(n) + (-c0,))
    eq_canon = ()
    eq_pivots = ()
    if eq_rows:
        reduced, pivots = rref(tuple(eq_rows))
        eq_canon = tuple(_sign_normalized(_primitive(r)) for r in reduced)
        eq_pivots = pivots
    eqs = tuple(sorted((r[:-1], r[-1]) for r in eq_canon))

    ineqs = set()
    for f in fac_rays:
        n, c0 = f[1:], f[0]
        if is_zero(n):
            continue  # the homogenization facet x0 >= 0
        row = tuple(n) + (-c0,)
        for er, p in zip(eq_canon, eq_pivots):
            if p < dim and row[p] != 0:
                coef = row[p] / er[p]
                row = tuple(x - coef * y for x, y in zip(row, er))
        nn, bb = row[:-1], row[-1]
        if is_zero(nn):
            continue
        prow = _primitive(tuple(nn) + (bb,))
        # keep orientation: normal.x >= offset scales by positive factors only
        ineqs.add((prow[:-1], prow[-1]))

    return Polyhedron(
        dim,
        False,
        tuple(red_points),
        tuple(sorted(red_rays)),
        lcanon,
        tuple(sorted(ineqs)),
        eqs,
    )


def _canonicalize_from_gens(dim, points, rays=(), lines=()) -> Polyhedron:
    if not points:
        return _empty(dim)
    gens = [(Q(1),) + tuple(p) for p in points]
    gens += [(Q(0),) + tuple(r) for r in rays if not is_zero(r)]
    line_rows = [(Q(0),) + tuple(l) for l in lines if not is_zero(l)]
    polar_constraints = gens + line_rows + [vneg(l) for l in line_rows]
    fac_rays, fac_lines = _dd_cone(polar_constraints, dim + 1)
    return _canonicalize_from_homog_facets(dim, fac_rays, fac_lines)


def _canonicalize_from_homog_facets(dim, fac_rays, fac_lines) -> Polyhedron:
    e0 = (Q(1),) + vzero(dim)
    cons = list(fac_rays) + list(fac_lines) + [vneg(l) for l in fac_lines] + [e0]
    gen_rays, gen_lines = _dd_cone(cons, dim + 1)
    if not any(r[0] > 0 for r in gen_rays):
        return _empty(dim)
    # recompute exact facets from the canonical generators so both sides agree
    ggens = [r for r in gen_rays] + list(gen_lines) + [vneg(l) for l in gen_lines]
    fr, fl = _dd_cone(ggens, dim + 1)
    return _assemble(dim, gen_rays, gen_lines, fr, fl)


def _canonicalize_from_halfspaces(dim, ineqs, eqs=()) -> Polyhedron:
    rows = [(Q(-b),) + tuple(n) for n, b in ineqs]
    rows += [(Q(-b),) + tuple(n) for n, b in eqs]
    rows += [(Q(b),) + tuple(vneg(n)) for n, b in eqs]
    return _canonicalize_from_homog_facets(dim, rows, [])


# --------------------------------------------------------------------------
# public constructors


def from_generators(dim: int, points: Iterable[Vec], rays: Iterable[Vec] = (),
                    lines: Iterable[Vec] = ()) -> Polyhedron:
    pts = [tuple(p) for p in points]
    rys = [tuple(r) for r in rays]
    lns = [tuple(l) for l in lines]
    for v in pts + rys + lns:
        if len(v) != dim:
            raise ShapeError("generator has %d coordinates, expected %d" % (len(v), dim))
    return _canonicalize_from_gens(dim, pts, rys, lns)


def from_halfspaces(dim: int, ineqs: Iterable[Tuple[Vec, Q]],
                    eqs: Iterable[Tuple[Vec, Q]] = ()) -> Polyhedron:
    iq = [(tuple(n), b) for n, b in ineqs]
    ee = [(tuple(n), b) for n, b in eqs]
    for n, _ in iq + ee:
        if len(n) != dim:
            raise ShapeError("normal has %d coordinates, expected %d" % (len(n), dim))
    return _canonicalize_from_halfspaces(dim, iq, ee)


def empty_polyhedron(dim: int) -> Polyhedron:
    return _empty(dim)


def full_space(dim: int) -> Polyhedron:
    return from_halfspaces(dim, [])


def hull(points: Sequence[Vec]) -> Polyhedron:
    """Convex hull of finitely many points with irredundant vertex list."""
    pts = [tuple(p) for p in points]
    if not pts:
        raise DomainError("hull of an empty point set")
    dim = len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise ShapeError("points of mixed dimension in hull")
    if dim == 2 and len(pts) > 8:
        pts = _planar_hull(pts)
    return from_generators(dim, pts)


def _planar_hull(pts):
    """Exact monotone-chain prefilter: the extreme points of a 2-D set."""
    uniq = sorted(set(pts))
    if len(uniq) <= 2:
        return uniq

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and turn(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(uniq)
    upper = chain(reversed(uniq))
    return lower[:-1] + upper[:-1]


def cone_from_rays(rays: Sequence[Vec], dim: Optional[int] = None) -> Polyhedron:
    """Convex cone spanned by rays; {} spans the origin cone."""
    rys = [tuple(r) for r in rays]
    if dim is None:
        if not rys:
            raise ShapeError("cone_from_rays needs dim when the ray list is empty")
        dim = len(rys[0])
    return from_generators(dim, [vzero(dim)], rys)


def dd_convert(p: Polyhedron) -> Polyhedron:
    """Recompute the canonical dual description from the generator form."""
    if p.empty:
        return _empty(p.dim)
    return from_generators(p.dim, p.points, p.rays, p.lines)


def intersect(a: Polyhedron, b: Polyhedron) -> Polyhedron:
    if a.dim != b.dim:
        raise ShapeError("ambient dimension mismatch: %d vs %d" % (a.dim, b.dim))
    if a.empty or b.empty:
        return _empty(a.dim)
    return from_halfspaces(a.dim, a.ineqs + b.ineqs, a.eqs + b.eqs)


def join_with_origin(p: Polyhedron) -> Polyhedron:
    """Convex hull of a polytope with the origin."""
    if p.rays or p.lines:
        raise DomainError("join_with_origin requires a polytope (p has rays)")
    if p.empty:
        return from_generators(p.dim, [vzero(p.dim)])
    return from_generators(p.dim, list(p.points) + [vzero(p.dim)])


def cone_over(p: Polyhedron) -> Polyhedron:
    """Cone spanned by a polytope's vertices (an origin vertex is absorbed)."""
    if p.rays or p.lines:
        raise DomainError("cone_over requires a polytope (p has rays)")
    if p.empty:
        return cone_from_rays([], p.dim)
    return cone_from_rays(list(p.points), p.dim)


def shift(p: Polyhedron, v: Vec) -> Polyhedron:
    """Translate by v (canonical form is preserved by translation)."""
    if len(v) != p.dim:
        raise ShapeError("shift vector has %d coordinates, expected %d" % (len(v), p.dim))
    if p.empty:
        return p
    return Polyhedron(
        p.dim,
        False,
        tuple(vadd(pt, v) for pt in p.points),
        p.rays,
        p.lines,
        tuple((n, b + dot(n, v)) for n, b in p.ineqs),
        tuple((n, b + dot(n, v)) for n, b in p.eqs),
    )


def slice_subspace(p: Polyhedron, basis: Sequence[Vec]) -> Polyhedron:
    """Intersect with the span of basis, re-expressed in basis coordinates."""
    basis = [tuple(b) for b in basis]
    if not basis:
        raise DomainError("slice needs a nonempty subspace basis")
    for b in basis:
        if len(b) != p.dim:
            raise ShapeError("basis vector has %d coordinates, expected %d" % (len(b), p.dim))
    if mat_rank(tuple(basis)) != len(basis):
        raise DomainError("dependent subspace basis")
    k = len(basis)
    if p.empty:
        return _empty(k)
    ineqs = [(tuple(dot(n, b) for b in basis), off) for n, off in p.ineqs]
    eqs = [(tuple(dot(n, b) for b in basis), off) for n, off in p.eqs]
    return from_halfspaces(k, ineqs, eqs)


def is_proper(p: Polyhedron) -> bool:
    """Whether a cone contains no line."""
    if not p.is_cone():
        raise DomainError("is_proper is defined for cones")
    return not p.lines


def recession_cone(p: Polyhedron) -> Polyhedron:
    if p.empty:
        return cone_from_rays([], p.dim)
    return from_generators(p.dim, [vzero(p.dim)], p.rays, p.lines)


def contains(p: Polyhedron, x: Vec) -> bool:
    return p.contains(tuple(x))


def equal(a: Polyhedron, b: Polyhedron) -> bool:
    return a == b


# --------------------------------------------------------------------------
# serialization


def to_json(p: Polyhedron) -> dict:
    rays_out = sorted(set(p.rays) | set(p.lines) | {vneg(l) for l in p.lines})
    hs = [(n, b) for n, b in p.ineqs]
    for n, b in p.eqs:
        hs.append((n, b))
        hs.append((vneg(n), -b))
    hs.sort()
    return {
        "dim": p.dim,
        "empty": p.empty,
        "points": [format_vec(pt) for pt in p.points],
        "rays": [format_vec(r) for r in rays_out],
        "halfspaces": [
            {"normal": format_vec(n), "offset": qstr(b)} for n, b in hs
        ],
    }


def from_json(obj: dict) -> Polyhedron:
    """Parse the JSON form; generator fields win when both forms are present.

    A rays-only generator form is read as a cone with apex 0.
    """
    if not isinstance(obj, dict):
        raise ShapeError("polyhedron JSON must be an object")
    if obj.get("empty"):
        if "dim" not in obj:
            raise ShapeError("empty polyhedron JSON needs a dim field")
        return _empty(int(obj["dim"]))
    try:
        points = [parse_vec(v) for v in obj.get("points", [])]
        rays = [parse_vec(v) for v in obj.get("rays", [])]
        halfspaces = [
            (parse_vec(h["normal"]), q(h["offset"])) for h in obj.get("halfspaces", [])
        ]
    except (KeyError, TypeError):
        raise ShapeError("malformed polyhedron JSON")
    dims = {len(v) for v in points} | {len(v) for v in rays} | {len(n) for n, _ in halfspaces}
    if "dim" in obj:
        dims.add(int(obj["dim"]))
    if len(dims) != 1:
        raise ShapeError("inconsistent or missing dimensions in polyhedron JSON")
    dim = dims.pop()
    if rays and not points:
        points = [vzero(dim)]
    if points:
        return from_generators(dim, points, rays)
    return from_halfspaces(dim, halfspaces)
