import random
from itertools import combinations

import pytest

from flagtrop.exactmath import (
    Echelon,
    IntMatrix,
    RationalCone,
    cone_contains,
    cone_dimension,
    cone_interior_point,
    cones_equal,
    common_refinement,
    dot,
    extend_to_unimodular,
    integer_kernel,
    smith_normal_form,
    solve_in_row_space,
    solve_lp,
)


def minor_gcd_invariants(m: IntMatrix):
    """Oracle: k-th invariant factor product = gcd of all k x k minors."""
    from math import gcd

    out = []
    n = min(m.rows, m.cols)
    for k in range(1, n + 1):
        g = 0
        for rows in combinations(range(m.rows), k):
            for cols in combinations(range(m.cols), k):
                sub = IntMatrix([[m.data[r][c] for c in cols] for r in rows])
                g = gcd(g, abs(sub.det()))
        out.append(g)
    return out


def rational_kernel_oracle(rows, ncols):
    """Row-reduce over Q and read off a kernel basis (oracle for spans)."""
    from fractions import Fraction

    mat = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        mat[r] = [x / mat[r][c] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -mat[i][fc]
        basis.append(v)
    return basis


class TestSmithNormalForm:
    def test_identity(self):
        m = IntMatrix.identity(3)
        u, s, v = smith_normal_form(m)
        assert s == m

    def test_diag_2_3(self):
        m = IntMatrix([[2, 0], [0, 3]])
        u, s, v = smith_normal_form(m)
        assert [s.data[i][i] for i in range(2)] == [1, 6]
        assert u.mul(m).mul(v) == s
        assert abs(u.det()) == 1 and abs(v.det()) == 1
        # independent oracle: gcds of k x k minors
        assert minor_gcd_invariants(m) == [1, 6]

    def test_zero(self):
        m = IntMatrix([[0, 0], [0, 0]])
        _, s, _ = smith_normal_form(m)
        assert s == m

    def test_random_matches_minor_gcds(self):
        rng = random.Random(7)
        for _ in range(100):
            m = IntMatrix(
                [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
            )
            u, s, v = smith_normal_form(m)
            assert u.mul(m).mul(v) == s
            diag = [s.data[i][i] for i in range(4)]
            for i in range(3):
                if diag[i + 1]:
                    assert diag[i + 1] % diag[i] == 0
            gcds = minor_gcd_invariants(m)
            prod = 1
            for k, g in enumerate(gcds, start=1):
                prod *= diag[k - 1]
                assert prod == g


class TestIntegerKernel:
    def test_sum_row(self):
        k = integer_kernel(IntMatrix([[1, 1]]))
        cols = list(zip(*k.data))
        assert len(cols) == 1 and tuple(cols[0]) in {(1, -1), (-1, 1)}

    def test_coordinate_rows(self):
        k = integer_kernel(IntMatrix([[1, 0, 0], [0, 1, 0]]))
        cols = list(zip(*k.data))
        assert len(cols) == 1 and tuple(cols[0]) in {(0, 0, 1), (0, 0, -1)}

    def test_toy_cone_matrix(self):
        m = IntMatrix([[0, 0, -1], [1, 1, 1]])
        k = integer_kernel(m)
        cols = [tuple(c) for c in zip(*k.data)]
        oracle = rational_kernel_oracle(m.data, 3)
        assert len(cols) == len(oracle) == 1
        x, y = cols[0], oracle[0]
        # same line
        assert x[0] * y[1] == x[1] * y[0] and x[1] * y[2] == x[2] * y[1]

    def test_rank_nullity_and_saturation(self):
        rng = random.Random(11)
        for _ in range(100):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 6)
            m = IntMatrix(
                [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
            )
            k = integer_kernel(m)
            assert m.rank() + k.cols == cols
            for col in zip(*k.data):
                assert all(x == 0 for x in m.mul_vec(col))
            if k.cols:
                _, s, _ = smith_normal_form(k.transpose())
                diag = [s.data[i][i] for i in range(min(s.rows, s.cols))]
                assert all(d == 1 for d in diag if d)


class TestSolvers:
    def test_solve_in_row_space(self):
        m = IntMatrix([[1, 2, 0], [0, 1, 1]])
        sol = solve_in_row_space(m, [(1, 3, 1)])
        assert sol is not None
        assert tuple(dot(sol[0], col) for col in zip(*m.data)) == (1, 3, 1)
        assert solve_in_row_space(m, [(0, 0, 1)]) is None

    def test_extend_to_unimodular(self):
        a = IntMatrix([[1, 0, 2], [0, 1, 5]])
        t = extend_to_unimodular(a)
        assert t.data[:2] == a.data
        assert abs(t.det()) == 1

    def test_lp_bounded(self):
        # max x + y on the triangle x,y >= 0, x + y <= 3
        st, v, x = solve_lp(
            [1, 1], a_ge=[(1, 0), (0, 1), (-1, -1)], b_ge=[0, 0, -3], maximize=True
        )
        assert st == "optimal" and v == 3

    def test_lp_unbounded(self):
        st, _, _ = solve_lp([1], a_ge=[(1,)], b_ge=[0], maximize=True)
        assert st == "unbounded"

    def test_lp_infeasible(self):
        st, _, _ = solve_lp([1], a_ge=[(1,), (-1,)], b_ge=[1, 1])
        assert st == "infeasible"


class TestCones:
    def test_orthant_interior(self):
        c = RationalCone(2, ineqs=[(1, 0), (0, 1)])
        p = cone_interior_point(c)
        assert p[0] == p[1] and p[0] > 0

    def test_diagonal_cone(self):
        c = RationalCone(2, eqs=[(1, -1)], ineqs=[(1, 0)])
        p = cone_interior_point(c)
        assert p[0] == p[1] and p[0] > 0

    def test_dimensions(self):
        assert cone_dimension(RationalCone(3, ineqs=[(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 3
        assert cone_dimension(RationalCone(2, ineqs=[(1, 0), (-1, 0)])) == 1
        refined = common_refinement(
            RationalCone(2, ineqs=[(1, 0)]), RationalCone(2, ineqs=[(1, 1)])
        )
        assert cone_dimension(refined) == 2

    def test_contains_and_equal(self):
        orthant = RationalCone(2, ineqs=[(1, 0), (0, 1)])
        diag = RationalCone(2, eqs=[(1, -1)], ineqs=[(1, 0)])
        assert cone_contains(orthant, diag)
        assert not cone_contains(diag, orthant)
        same = RationalCone(2, ineqs=[(2, 0), (0, 3), (1, 1)])
        assert cones_equal(orthant, same)

    def test_interior_point_strictness_random(self):
        rng = random.Random(3)
        for _ in range(100):
            dim = rng.randint(2, 4)
            ineqs = [
                tuple(rng.randint(-2, 2) for _ in range(dim))
                for _ in range(rng.randint(1, 5))
            ]
            c = RationalCone(dim, ineqs=ineqs)
            p = cone_interior_point(c)
            span = c.span_basis()
            implicit = set(c.implicit_equalities())
            for a in c.ineqs:
                v = dot(a, p)
                assert v >= 0
                if a not in implicit and any(dot(a, b) for b in span):
                    assert v > 0


class TestEchelon:
    def test_incremental_rank(self):
        e = Echelon()
        assert e.add((1, 1, 0))
        assert not e.add((2, 2, 0))
        assert e.add((0, 1, 1))
        assert e.rank == 2
