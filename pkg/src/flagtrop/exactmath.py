"""Exact rational/integer linear algebra: normal forms, kernels, cones, LP.

Everything here is exact.  Rationals are gmpy2.mpq when available (same
semantics as fractions.Fraction, much faster), integers are Python ints.
No floating point anywhere.
"""

from __future__ import annotations

from math import gcd

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

ZERO = QQ(0)
ONE = QQ(1)


class EmptyCone(Exception):
    """The H-system of a cone is infeasible (cannot happen for homogeneous rows)."""


def qq_str(x) -> str:
    """Canonical "p/q" / "p" string for an exact rational."""
    n, d = x.numerator, x.denominator
    return f"{n}/{d}" if d != 1 else str(n)


def parse_qq(s: str):
    if "/" in s:
        n, d = s.split("/")
        return QQ(int(n), int(d))
    return QQ(int(s))


def vec_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    v = tuple(int(x) for x in v)
    g = vec_gcd(v)
    if g <= 1:
        return v
    return tuple(x // g for x in v)


def clear_denominators(v):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    lcm = 1
    for x in v:
        d = x.denominator
        lcm = lcm * d // gcd(lcm, d)
    return primitive(int(x.numerator) * (lcm // x.denominator) for x in v)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# integer matrices


class IntMatrix:
    """Immutable integer matrix with exact normal forms."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = tuple(tuple(int(x) for x in row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.rows else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, r, c):
        return cls([[0] * c for _ in range(r)])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]})"

    def transpose(self):
        return IntMatrix(list(zip(*self.data))) if self.rows else IntMatrix([])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ot = list(zip(*other.data))
        return IntMatrix([[dot(r, c) for c in ot] for r in self.data])

    def mul_vec(self, v):
        return tuple(dot(r, v) for r in self.data)

    def rank(self) -> int:
        return len(_int_echelon([list(r) for r in self.data]))

    def hnf(self):
        """Row Hermite form: (H, U) with U unimodular, U*self = H."""
        return _hnf_rows(self)

    def snf(self):
        """Smith form: (U, S, V) with U*self*V = S diagonal, divisibility chain."""
        return smith_normal_form(self)

    def kernel(self) -> "IntMatrix":
        """Columns form a basis of {x in Z^cols : self*x = 0} (saturated)."""
        return integer_kernel(self)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("det of non-square matrix")
        return _det_bareiss([list(r) for r in self.data])


def _int_echelon(rows):
    """Fraction-free row echelon over Q of integer rows; returns primitive pivot rows."""
    ech = []  # list of (pivot_col, row)
    for row in rows:
        row = list(row)
        for pc, prow in ech:
            if row[pc]:
                a, b = prow[pc], row[pc]
                row = [a * x - b * y for x, y in zip(row, prow)]
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is not None:
            ech.append((piv, list(primitive(row))))
            ech.sort(key=lambda t: t[0])
    return [r for _, r in ech]


def _det_bareiss(m):
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def _hnf_rows(m: IntMatrix):
    """Row-style Hermite form by unimodular row operations."""
    h = [list(r) for r in m.data]
    u = [[1 if i == j else 0 for j in range(m.rows)] for i in range(m.rows)]
    r = 0
    for c in range(m.cols):
        piv = None
        for i in range(r, len(h)):
            if h[i][c]:
                piv = i
                break
        if piv is None:
            continue
        h[r], h[piv] = h[piv], h[r]
        u[r], u[piv] = u[piv], u[r]
        # clear below by gcd steps
        for i in range(r + 1, len(h)):
            while h[i][c]:
                q = h[r][c] // h[i][c]
                h[r] = [a - q * b for a, b in zip(h[r], h[i])]
                u[r] = [a - q * b for a, b in zip(u[r], u[i])]
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
        if h[r][c] < 0:
            h[r] = [-a for a in h[r]]
            u[r] = [-a for a in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[r])]
                u[i] = [a - q * b for a, b in zip(u[i], u[r])]
        r += 1
    return IntMatrix(h), IntMatrix(u)


def smith_normal_form(m: IntMatrix):
    """(U, S, V) with U*m*V = S, U and V unimodular, diagonal divisibility chain."""
    s = [list(r) for r in m.data]
    rows, cols = m.rows, m.cols
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):  # row_i -= q*row_j
        s[i] = [a - q * b for a, b in zip(s[i], s[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    def add_col(i, j, q):  # col_i -= q*col_j
        for row in s:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    n = min(rows, cols)
    for k in range(n):
        # move a nonzero pivot (smallest |entry| for stability) to (k,k)
        while True:
            piv = None
            best = None
            for i in range(k, rows):
                for j in range(k, cols):
                    a = abs(s[i][j])
                    if a and (best is None or a < best):
                        best, piv = a, (i, j)
            if piv is None:
                break
            i, j = piv
            if i != k:
                swap_rows(k, i)
            if j != k:
                swap_cols(k, j)
            dirty = False
            for i in range(k + 1, rows):
                q = s[i][k] // s[k][k]
                if q:
                    add_row(i, k, q)
                if s[i][k]:
                    dirty = True
            for j in range(k + 1, cols):
                q = s[k][j] // s[k][k]
                if q:
                    add_col(j, k, q)
                if s[k][j]:
                    dirty = True
            if not dirty:
                # ensure pivot divides the rest of the block
                stuck = False
                for i in range(k + 1, rows):
                    for j in range(k + 1, cols):
                        if s[i][j] % s[k][k]:
                            add_row(k, i, -1)  # row_k += row_i
                            stuck = True
                            break
                    if stuck:
                        break
                if not stuck:
                    break
        if s[k][k] < 0:
            s[k] = [-a for a in s[k]]
            u[k] = [-a for a in u[k]]
    return IntMatrix(u), IntMatrix(s), IntMatrix(v)


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the saturated lattice {x in Z^cols : m x = 0}."""
    # column operations on m tracked in V: columns of V under zero columns of m*V
    h, u = _hnf_rows(m.transpose())  # u * m^T = h
    rank = sum(1 for row in h.data if any(row))
    basis = [u.data[i] for i in range(rank, m.cols)]
    return IntMatrix(list(zip(*basis))) if basis else IntMatrix.zero(m.cols, 0) if m.cols else IntMatrix([])


def solve_in_row_space(m: IntMatrix, targets) -> list | None:
    """Integer X (list of rows) with X*m = targets, or None.

    Requires each target row to lie in the integer row lattice of m.
    """
    h, u = _hnf_rows(m)  # u*m = h
    pivots = []
    for i, row in enumerate(h.data):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is not None:
            pivots.append((i, piv))
    out = []
    for t in targets:
        t = list(t)
        coeff = [0] * m.rows
        for i, piv in pivots:
            if t[piv]:
                if t[piv] % h.data[i][piv]:
                    return None
                q = t[piv] // h.data[i][piv]
                coeff[i] = q
                t = [a - q * b for a, b in zip(t, h.data[i])]
        if any(t):
            return None
        out.append(tuple(dot(coeff, col) for col in zip(*u.data)))
    return out


def extend_to_unimodular(a: IntMatrix) -> IntMatrix:
    """Complete the rows of a (a direct summand of Z^cols) to a GL_n(Z) matrix.

    Returns T with T[:rows] == a and |det T| = 1.
    """
    u, s, v = smith_normal_form(a)
    for i in range(a.rows):
        if i >= a.cols or s.data[i][i] != 1:
            raise ValueError("rows are not a basis of a direct summand")
    # a = u^-1 [I 0] v^-1 ; complete [I 0] with [0 I] and push through v^-1
    vi = _unimodular_inverse(v)
    t_rows = [list(r) for r in a.data]
    t_rows += [list(vi.data[i]) for i in range(a.rows, a.cols)]
    t = IntMatrix(t_rows)
    if abs(t.det()) != 1:  # pragma: no cover - guarded by SNF check above
        raise ValueError("extension failed")
    return t


def _unimodular_inverse(m: IntMatrix) -> IntMatrix:
    h, u = _hnf_rows(m)
    if h != IntMatrix.identity(m.rows):
        raise ValueError("matrix is not unimodular")
    return u


class Echelon:
    """Incremental exact rank tracker over Q for integer vectors."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        self.rows = list(rows)  # list of (pivot, primitive int row)

    def copy(self):
        return Echelon(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        row = list(vec)
        for pc, prow in self.rows:
            if row[pc]:
                a, b = prow[pc], row[pc]
                row = [a * x - b * y for x, y in zip(row, prow)]
        return row

    def add(self, vec) -> bool:
        """Insert vec; True if the rank grew."""
        row = self.reduce(vec)
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            return False
        self.rows = self.rows + [(piv, list(primitive(row)))]
        self.rows.sort(key=lambda t: t[0])
        return True


# ---------------------------------------------------------------------------
# exact LP (two-phase primal simplex, Bland's rule)


def _simplex(tab, basis, ncols):
    """Minimize row -1 of the tableau in place.  Returns 'optimal'/'unbounded'."""
    m = len(tab) - 1
    while True:
        obj = tab[-1]
        enter = next((j for j in range(ncols) if obj[j] < 0), None)
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return "unbounded"
        _pivot(tab, leave, enter)
        basis[leave] = enter


def _pivot(tab, r, c):
    prow = tab[r]
    inv = ONE / prow[c]
    tab[r] = [x * inv for x in prow]
    prow = tab[r]
    for i, row in enumerate(tab):
        if i != r and row[c]:
            f = row[c]
            tab[i] = [x - f * y for x, y in zip(row, prow)]


def solve_lp(c, a_ge=(), b_ge=(), a_eq=(), b_eq=(), maximize=False):
    """Exact LP over free variables: optimize c*x s.t. a_ge*x >= b_ge, a_eq*x = b_eq.

    Returns (status, value, x) with status in {'optimal', 'unbounded', 'infeasible'}.
    """
    n = len(c)
    rows = []
    for a, b in zip(a_ge, b_ge):
        rows.append(([QQ(x) for x in a], QQ(b), "ge"))
    for a, b in zip(a_eq, b_eq):
        rows.append(([QQ(x) for x in a], QQ(b), "eq"))
    m = len(rows)
    nslack = sum(1 for r in rows if r[2] == "ge")
    width = 2 * n + nslack + m  # x+, x-, slacks, artificials
    tab = []
    si = 0
    for i, (a, b, kind) in enumerate(rows):
        row = [ZERO] * (width + 1)
        for j in range(n):
            row[j] = a[j]
            row[n + j] = -a[j]
        if kind == "ge":
            row[2 * n + si] = QQ(-1)
            si += 1
        if b < 0:
            row = [-x for x in row]
            b = -b
        row[2 * n + nslack + i] = ONE
        row[-1] = b
        tab.append(row)
    basis = [2 * n + nslack + i for i in range(m)]
    # phase 1: minimize sum of artificials
    obj = [ZERO] * (width + 1)
    for i in range(m):
        obj = [x - y for x, y in zip(obj, tab[i])]
    for i in range(m):
        obj[2 * n + nslack + i] = ZERO
    tab.append(obj)
    _simplex(tab, basis, 2 * n + nslack)
    if tab[-1][-1] < 0:
        return "infeasible", None, None
    tab.pop()
    # drive artificials out of the basis
    drop = []
    for i in range(m):
        if basis[i] >= 2 * n + nslack:
            piv = next((j for j in range(2 * n + nslack) if tab[i][j]), None)
            if piv is None:
                drop.append(i)
            else:
                _pivot(tab, i, piv)
                basis[i] = piv
    for i in sorted(drop, reverse=True):
        tab.pop(i)
        basis.pop(i)
    # phase 2
    sign = QQ(-1) if maximize else ONE
    obj = [ZERO] * (width + 1)
    for j in range(n):
        obj[j] = sign * QQ(c[j])
        obj[n + j] = -sign * QQ(c[j])
    for i, row in enumerate(tab):
        f = obj[basis[i]]
        if f:
            obj = [x - f * y for x, y in zip(obj, row)]
    tab.append(obj)
    status = _simplex(tab, basis, 2 * n + nslack)
    if status == "unbounded":
        return "unbounded", None, None
    x = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] += tab[i][-1]
        elif b < 2 * n:
            x[b - n] -= tab[i][-1]
    value = sum(QQ(ci) * xi for ci, xi in zip(c, x))
    return "optimal", value, x


# ---------------------------------------------------------------------------
# double description: V-representation of {x : eq*x = 0, ineq*x >= 0}


def dd_cone(dim, eqs, ineqs):
    """Extreme rays and lineality basis, deterministically.

    Rays are primitive integer vectors; constraints are inserted in sorted
    order; adjacency uses the combinatorial subset test on tight sets.
    """
    lineality = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays = []  # (vector, tight frozenset)
    constraints = []

    def cut_lineality(a, keep_ray):
        nonlocal lineality, rays
        pivot_idx = next((i for i, l in enumerate(lineality) if dot(a, l) != 0), None)
        if pivot_idx is None:
            return False
        l0 = lineality[pivot_idx]
        v0 = dot(a, l0)
        if v0 < 0:
            l0 = tuple(-x for x in l0)
            v0 = -v0
        newlin = []
        for i, l in enumerate(lineality):
            if i == pivot_idx:
                continue
            v = dot(a, l)
            if v:
                l = primitive([v0 * x - v * y for x, y in zip(l, l0)])
            if any(l):
                newlin.append(l)
        lineality = newlin
        newrays = []
        for r, tight in rays:
            v = dot(a, r)
            if v:
                r = primitive([v0 * x - v * y for x, y in zip(r, l0)])
            newrays.append((r, tight))
        rays = newrays
        if keep_ray:
            rays.append((l0, frozenset(range(len(constraints) - 1))))
        return True

    def insert(a, is_eq):
        nonlocal rays
        idx = len(constraints)
        constraints.append(a)
        if cut_lineality(a, keep_ray=not is_eq):
            rays[:] = [
                (r, (t | {idx}) if dot(a, r) == 0 else t) for r, t in rays
            ]
            return
        plus = []
        zero = []
        minus = []
        for r, tight in rays:
            v = dot(a, r)
            if v > 0:
                plus.append((r, tight, v))
            elif v == 0:
                zero.append((r, tight | {idx}))
            else:
                minus.append((r, tight, v))
        combos = []
        for rp, tp, vp in plus:
            for rm, tm, vm in minus:
                common = tp & tm
                adjacent = True
                for r2, t2, _ in plus + minus:
                    if r2 is rp or r2 is rm:
                        continue
                    if common <= t2:
                        adjacent = False
                        break
                if adjacent:
                    for r2, t2 in zero:
                        if common <= (t2 - {idx}):
                            adjacent = False
                            break
                if not adjacent:
                    continue
                new = primitive([vp * x - vm * y for x, y in zip(rm, rp)])
                combos.append((new, common | {idx}))
        kept = zero + combos
        if not is_eq:
            kept += [(r, t) for r, t, _ in plus]
        seen = {}
        for r, t in kept:
            if r in seen:
                seen[r] = seen[r] | t
            else:
                seen[r] = t
        rays = sorted(seen.items())

    for e in sorted({_norm_eq(e) for e in eqs if any(e)}):
        insert(e, True)
    for a in sorted({primitive(a) for a in ineqs if any(a)}):
        insert(a, False)
    lin = sorted(_reduce_lineality(lineality))
    return [r for r, _ in rays], lin


def _reduce_lineality(vectors):
    if not vectors:
        return []
    h, _ = _hnf_rows(IntMatrix(vectors))
    return [tuple(r) for r in h.data if any(r)]


# ---------------------------------------------------------------------------
# rational polyhedral cones (H-description, integer rows)


def _norm_eq(row):
    row = primitive(row)
    for x in row:
        if x:
            return row if x > 0 else tuple(-y for y in row)
    return row


class RationalCone:
    """Cone {x : eq*x = 0 for eq in eqs, a*x >= 0 for a in ineqs}.

    Geometric predicates run on the V-representation (extreme rays plus a
    lineality basis) computed once by a deterministic double description run.
    """

    __slots__ = ("dim", "eqs", "ineqs", "_vrep")

    def __init__(self, dim, eqs=(), ineqs=()):
        self.dim = dim
        self.eqs = tuple(sorted({_norm_eq(e) for e in eqs if any(e)}))
        self.ineqs = tuple(sorted({primitive(a) for a in ineqs if any(a)}))
        self._vrep = None

    def __repr__(self):
        return f"RationalCone(dim={self.dim}, eqs={len(self.eqs)}, ineqs={len(self.ineqs)})"

    def with_extra(self, eqs=(), ineqs=()):
        return RationalCone(self.dim, self.eqs + tuple(eqs), self.ineqs + tuple(ineqs))

    def vrep(self):
        """(rays, lineality basis) of the cone."""
        if self._vrep is None:
            self._vrep = dd_cone(self.dim, self.eqs, self.ineqs)
        return self._vrep

    def span_basis(self):
        """Integer basis (as vectors) of the linear span of the cone."""
        rays, lin = self.vrep()
        basis = []
        for row in _int_echelon([list(v) for v in list(lin) + list(rays)]):
            basis.append(tuple(row))
        return tuple(basis)

    def implicit_equalities(self):
        """Inequality rows that vanish identically on the cone."""
        rays, lin = self.vrep()
        out = []
        for a in self.ineqs:
            if all(dot(a, r) == 0 for r in rays) and all(dot(a, l) == 0 for l in lin):
                out.append(a)
        return tuple(out)

    def relative_interior_point(self):
        """Deterministic integer point: the sum of the extreme rays."""
        rays, lin = self.vrep()
        if not rays:
            return tuple([0] * self.dim)
        return primitive([sum(r[i] for r in rays) for i in range(self.dim)])

    def dimension(self) -> int:
        return len(self.span_basis())

    def contains_point(self, x, strict=False) -> bool:
        for e in self.eqs:
            if dot(e, x) != 0:
                return False
        implicit = set(self.implicit_equalities()) if strict else ()
        for a in self.ineqs:
            v = dot(a, x)
            if v < 0 or (strict and v == 0 and a not in implicit):
                return False
        return True

    def implies(self, row, equality=False) -> bool:
        """True if row*x >= 0 (or = 0) holds on the whole cone."""
        rays, lin = self.vrep()
        if any(dot(row, l) != 0 for l in lin):
            return False
        if equality:
            return all(dot(row, r) == 0 for r in rays)
        return all(dot(row, r) >= 0 for r in rays)

    def face(self, row):
        """The face where a valid inequality row is tight (rays filtered)."""
        rays, lin = self.vrep()
        sub = RationalCone(self.dim, self.eqs + (row,), self.ineqs)
        sub._vrep = ([r for r in rays if dot(row, r) == 0], lin)
        return sub


def cone_interior_point(c: RationalCone):
    return c.relative_interior_point()


def cone_dimension(c: RationalCone) -> int:
    return c.dimension()


def cone_contains(outer: RationalCone, inner: RationalCone) -> bool:
    """Every point of inner lies in outer."""
    for e in outer.eqs:
        if not inner.implies(e, equality=True):
            return False
    for a in outer.ineqs:
        if not inner.implies(a):
            return False
    return True


def cones_equal(a: RationalCone, b: RationalCone) -> bool:
    return cone_contains(a, b) and cone_contains(b, a)


def common_refinement(a: RationalCone, b: RationalCone) -> RationalCone:
    if a.dim != b.dim:
        raise ValueError("ambient dimension mismatch")
    return RationalCone(a.dim, a.eqs + b.eqs, a.ineqs + b.ineqs)
