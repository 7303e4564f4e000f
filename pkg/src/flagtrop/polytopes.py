"""Exact polytope computations: double description hulls, H/V duality, face
lattices and F-vectors, lattice points, Minkowski sums, combinatorial
equivalence, and the normalization polytope of a tropical cone."""

from __future__ import annotations

from itertools import combinations

from .exactmath import (
    QQ,
    IntMatrix,
    clear_denominators,
    dd_cone,
    dot,
    extend_to_unimodular,
    integer_kernel,
    primitive,
    qq_str,
    solve_in_row_space,
)

ZERO = QQ(0)
ONE = QQ(1)


class Unbounded(Exception):
    pass


class DimensionMismatch(Exception):
    pass


class GradingMismatch(Exception):
    pass


# ---------------------------------------------------------------------------
# polytopes


class Polytope:
    """Bounded convex polytope with exact V- and H-representations.

    Affine H-rows are (b, a_1..a_d): facets satisfy b + a*x >= 0, equalities
    b + a*x = 0.  Both representations are canonical (recomputed from the
    vertex set).
    """

    __slots__ = ("ambient", "vertices", "equalities", "facets", "_faces")

    def __init__(self, ambient, vertices, equalities, facets):
        self.ambient = ambient
        self.vertices = tuple(sorted(tuple(QQ(x) for x in v) for v in vertices))
        self.equalities = tuple(equalities)
        self.facets = tuple(facets)
        self._faces = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_points(cls, points):
        pts = sorted({tuple(QQ(x) for x in p) for p in points})
        if not pts:
            raise ValueError("empty point set")
        d = len(pts[0])
        rows = [(1,) + p for p in pts]
        # facet cone: {(b,a) : b + a*p >= 0 for all p}
        int_rows = []
        for r in rows:
            int_rows.append(clear_denominators([QQ(x) for x in r]))
        facet_rays, lin = dd_cone(1 + d, [], int_rows)
        equalities = [tuple(l) for l in lin]
        facets = sorted(_reduce_facet(f, equalities) for f in facet_rays)
        facets = [f for f in dict.fromkeys(facets) if any(f[1:])]
        # a point is a vertex iff its tight constraints have full rank d
        verts = []
        for p in pts:
            tight = [f[1:] for f in facets if QQ(f[0]) + dot(f[1:], p) == 0]
            tight += [e[1:] for e in equalities]
            if tight and IntMatrix(tight).rank() == d:
                verts.append(p)
            elif not tight and d == 0:
                verts.append(p)
        return cls(d, verts, equalities, facets)

    @classmethod
    def from_inequalities(cls, dim, eqs, ineqs):
        """Polytope {x : b + a*x >= 0}; rows are (b, a).  Raises Unbounded."""
        rows_eq = [clear_denominators([QQ(x) for x in r]) for r in eqs]
        rows_in = [clear_denominators([QQ(x) for x in r]) for r in ineqs]
        rays, lin = dd_cone(1 + dim, rows_eq, rows_in + [(1,) + (0,) * dim])
        if any(l[0] for l in lin):
            raise ValueError("inconsistent homogenization")
        if any(any(l) for l in lin):
            raise Unbounded("recession lineality present")
        points = []
        for r in rays:
            if r[0] == 0:
                if any(r):
                    raise Unbounded("recession ray present")
                continue
            t = QQ(r[0])
            points.append(tuple(QQ(x) / t for x in r[1:]))
        if not points:
            raise ValueError("empty polytope")
        return cls.from_points(points)

    # -- basic data ------------------------------------------------------------

    def dim(self):
        return self.ambient - len(self.equalities)

    def num_vertices(self):
        return len(self.vertices)

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __repr__(self):
        return f"Polytope(dim={self.dim()}, vertices={len(self.vertices)}, facets={len(self.facets)})"

    def contains(self, x):
        x = [QQ(v) for v in x]
        return all(QQ(e[0]) + dot(e[1:], x) == 0 for e in self.equalities) and all(
            QQ(f[0]) + dot(f[1:], x) >= 0 for f in self.facets
        )

    # -- face lattice ----------------------------------------------------------

    def vertex_facet_incidence(self):
        """List per facet of the frozenset of incident vertex indices."""
        inc = []
        for f in self.facets:
            inc.append(
                frozenset(
                    i
                    for i, v in enumerate(self.vertices)
                    if QQ(f[0]) + dot(f[1:], v) == 0
                )
            )
        return inc

    def faces_by_dimension(self):
        """All nonempty proper faces as vertex sets, grouped by dimension."""
        if self._faces is not None:
            return self._faces
        inc = self.vertex_facet_incidence()
        top = frozenset(range(len(self.vertices)))
        # closure of intersections, organized by descending dimension
        current = {top}
        seen = {top}
        levels = [set([top])]
        while True:
            nxt = set()
            for face in current:
                for f in inc:
                    g = face & f
                    if g and g != face and g not in seen:
                        nxt.add(g)
            if not nxt:
                break
            # keep only maximal new faces below the current level at each pass
            seen |= nxt
            levels.append(nxt)
            current = nxt
        # the sweep above can put a face in several levels; recompute dims by rank
        vsets = set()
        for lv in levels:
            vsets |= lv
        vsets.discard(top)
        by_dim = {}
        for face in vsets:
            fdim = self._face_dim(face)
            by_dim.setdefault(fdim, set()).add(face)
        self._faces = by_dim
        return by_dim

    def _face_dim(self, vset):
        vs = [self.vertices[i] for i in vset]
        if len(vs) == 1:
            return 0
        base = vs[0]
        dirs = [clear_denominators([x - y for x, y in zip(v, base)]) for v in vs[1:]]
        return IntMatrix(dirs).rank()

    def f_vector(self):
        """(f_0, ..., f_{d-1}) for a d-dimensional polytope."""
        d = self.dim()
        by_dim = self.faces_by_dimension()
        return tuple(len(by_dim.get(k, ())) for k in range(d))

    # -- lattice points ----------------------------------------------------------

    def lattice_points(self):
        """All integer points, by box recursion with inequality propagation."""
        if not self.vertices:
            return []
        d = self.ambient
        lo = []
        hi = []
        for j in range(d):
            cs = [v[j] for v in self.vertices]
            mn, mx = min(cs), max(cs)
            lo.append(-((-mn.numerator) // mn.denominator))  # ceil
            hi.append(mx.numerator // mx.denominator)  # floor
        rows = [tuple(int(x) for x in f) for f in self.facets]
        rows += [tuple(int(x) for x in e) for e in self.equalities]
        rows += [tuple(-int(x) for x in e) for e in self.equalities]
        out = []
        point = [0] * d

        def recurse(j, partial):
            # partial[i] = b_i + sum over fixed coords of a*x
            if j == d:
                out.append(tuple(point))
                return
            for val in range(lo[j], hi[j] + 1):
                ok = True
                nxt = []
                for ri, (row, p) in enumerate(zip(rows, partial)):
                    q = p + row[1 + j] * val
                    # optimistic bound over the remaining box
                    slack = q
                    for k in range(j + 1, d):
                        c = row[1 + k]
                        slack += c * (hi[k] if c > 0 else lo[k])
                    if slack < 0:
                        ok = False
                        break
                    nxt.append(q)
                if ok:
                    point[j] = val
                    recurse(j + 1, nxt)
            point[j] = 0

        recurse(0, [int(r[0]) for r in rows])
        return sorted(out)

    # -- operations ---------------------------------------------------------------

    def minkowski(self, other: "Polytope") -> "Polytope":
        if self.ambient != other.ambient:
            raise DimensionMismatch("ambient dimension mismatch")
        pts = {
            tuple(a + b for a, b in zip(v, w))
            for v in self.vertices
            for w in other.vertices
        }
        return Polytope.from_points(pts)

    def to_json(self):
        return {
            "ambient_dim": self.ambient,
            "dim": self.dim(),
            "vertices": [[qq_str(x) for x in v] for v in self.vertices],
            "equalities": [list(e) for e in self.equalities],
            "facets": [list(f) for f in self.facets],
            "f_vector": list(self.f_vector()),
        }


def _reduce_facet(row, equalities):
    """Canonical facet normal modulo the affine-hull equalities."""
    if not equalities:
        return primitive(row)
    row = [QQ(x) for x in row]
    for e in equalities:
        piv = next(i for i, x in enumerate(e) if x)
        if row[piv]:
            f = row[piv] / QQ(e[piv])
            row = [x - f * QQ(y) for x, y in zip(row, e)]
    return clear_denominators(row)


def convex_hull(points) -> Polytope:
    return Polytope.from_points(points)


def minkowski_sum(a: Polytope, b: Polytope) -> Polytope:
    return a.minkowski(b)


def f_vector(p: Polytope):
    return p.f_vector()


def lattice_points(p: Polytope):
    return p.lattice_points()


# ---------------------------------------------------------------------------
# combinatorial equivalence of vertex-facet incidence structures


def _refine(colors, neighbors):
    while True:
        sig = {}
        for v, c in colors.items():
            ns = sorted(colors[u] for u in neighbors[v])
            sig[v] = (c, tuple(ns))
        ranks = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: ranks[s] for v, s in sig.items()}
        if new == colors:
            return colors
        colors = new


def combinatorially_equivalent(p: Polytope, q: Polytope) -> bool:
    """Isomorphism of vertex-facet incidence bipartite graphs."""
    if p.dim() != q.dim() or p.f_vector() != q.f_vector():
        return False
    inc_p = p.vertex_facet_incidence()
    inc_q = q.vertex_facet_incidence()
    return _incidence_isomorphic(inc_p, len(p.vertices), inc_q, len(q.vertices))


def _incidence_isomorphic(inc_a, nva, inc_b, nvb):
    if nva != nvb or len(inc_a) != len(inc_b):
        return False
    # bipartite graphs: vertices 0..nv-1, facets nv..nv+nf-1
    def build(inc, nv):
        neighbors = {i: set() for i in range(nv + len(inc))}
        for fi, vs in enumerate(inc):
            for v in vs:
                neighbors[nv + fi].add(v)
                neighbors[v].add(nv + fi)
        return neighbors

    na = build(inc_a, nva)
    nb = build(inc_b, nvb)
    ca = _refine({v: (0 if v < nva else 1) for v in na}, na)
    cb = _refine({v: (0 if v < nvb else 1) for v in nb}, nb)
    if sorted(ca.values()) != sorted(cb.values()):
        return False
    by_color = {}
    for w, c in cb.items():
        by_color.setdefault(c, []).append(w)

    # explore smallest color classes first, then grow along adjacency so each
    # new node is constrained by already-mapped neighbors
    class_size = {c: len(ws) for c, ws in by_color.items()}
    order = []
    placed = set()
    pending = sorted(na, key=lambda v: (class_size[ca[v]], ca[v], v))
    while len(order) < len(na):
        seed = next(v for v in pending if v not in placed)
        stack = [seed]
        placed.add(seed)
        while stack:
            v = stack.pop()
            order.append(v)
            for u in sorted(na[v], key=lambda x: (class_size[ca[x]], ca[x], x)):
                if u not in placed:
                    placed.add(u)
                    stack.append(u)

    mapping = {}
    used = set()

    def compatible(v, w):
        mapped_nbrs_v = [mapping[u] for u in na[v] if u in mapping]
        if any(x not in nb[w] for x in mapped_nbrs_v):
            return False
        # injectivity plus equal counts forces non-neighbors to non-neighbors
        count_w = sum(1 for x in nb[w] if x in used)
        return len(mapped_nbrs_v) == count_w

    def backtrack(i):
        if i == len(order):
            return True
        v = order[i]
        for w in by_color[ca[v]]:
            if w in used or not compatible(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return backtrack(0)


# ---------------------------------------------------------------------------
# normalization polytope of a cone with matrix W (rows span the cone span)


def degree_one_points(bmat: IntMatrix, degree_rows: int):
    """Nonnegative integer combinations of the columns of bmat whose first
    degree_rows coordinates are all 1; returns the tail coordinates."""
    cols = list(zip(*bmat.data))
    m = len(cols)
    target = [1] * degree_rows
    points = set()
    stack = [(0, tuple(target), tuple([0] * (bmat.rows - degree_rows)))]
    while stack:
        j, rem, tail = stack.pop()
        if all(x == 0 for x in rem):
            points.add(tail)
            continue
        if j == m:
            continue
        # skip column j
        stack.append((j + 1, rem, tail))
        # use column j as often as the degree target allows
        col = cols[j]
        head = col[:degree_rows]
        use_rem, use_tail = list(rem), list(tail)
        while True:
            ok = True
            for i, h in enumerate(head):
                use_rem[i] -= h
                if use_rem[i] < 0:
                    ok = False
            if not ok:
                break
            for i in range(len(use_tail)):
                use_tail[i] += col[degree_rows + i]
            stack.append((j + 1, tuple(use_rem), tuple(use_tail)))
            if all(h == 0 for h in head):
                break  # zero-degree columns would loop forever
    return sorted(points)


def normalization_polytope(w_matrix: IntMatrix, grading: IntMatrix) -> Polytope:
    """Polytope of the normalization of the toric variety of a prime cone.

    The saturated column lattice of W is computed by the double-kernel
    construction; its basis is reordered so the leading rows realize the
    grading, and the degree-(1,..,1) semigroup points are collected.
    """
    ker = integer_kernel(w_matrix)
    sat = integer_kernel(ker.transpose())  # columns: saturated row lattice of W
    b = sat.transpose()  # rows form a basis of that lattice
    coeffs = solve_in_row_space(b, [list(r) for r in grading.data])
    if coeffs is None:
        raise GradingMismatch("grading rows are not in the saturated row lattice")
    t = extend_to_unimodular(IntMatrix(coeffs))
    bprime = t.mul(b)
    for i, row in enumerate(grading.data):
        if tuple(bprime.data[i]) != tuple(row):
            raise GradingMismatch("reordered basis does not reproduce the grading")
    pts = degree_one_points(bprime, grading.rows)
    return Polytope.from_points(pts)
