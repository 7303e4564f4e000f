import random

import pytest

from flagtrop.exactmath import QQ
from flagtrop.poly import (
    ElimOrder,
    GrevlexOrder,
    Ideal,
    NotHomogeneous,
    Poly,
    PolyRing,
    WeightOrder,
    degree_via_hilbert,
    dehomogenize,
    groebner_basis,
    homogenize,
    initial_data,
    initial_form,
    initial_ideal,
    is_binomial,
    is_monomial_free,
    krull_dimension,
    minimal_generator_count,
    poly_str,
    reduced_grevlex_basis,
    saturate,
    saturate_all_variables,
    saturate_variable,
)


@pytest.fixture
def rxyz():
    return PolyRing(["x", "y", "z"])


def gb_strs(ideal):
    return [poly_str(g) for g in reduced_grevlex_basis(ideal).polys]


class TestInitialForm:
    def test_three_dot_products(self, rxyz):
        f = rxyz.parse("x*y + x*z + y*z")
        # oracle: w = (0,0,1) gives dots 0, 1, 1 so the minimum is x*y alone
        dots = {m: sum(w * e for w, e in zip((0, 0, 1), m)) for m in f.terms}
        assert sorted(dots.values()) == [0, 1, 1]
        assert poly_str(initial_form(f, (0, 0, 1))) == "x*y"

    def test_zero_weight_identity(self, rxyz):
        f = rxyz.parse("x*y + x*z + y*z")
        assert initial_form(f, (0, 0, 0)) == f

    def test_interior_of_shared_cone(self, rxyz):
        # w interior to the cone whose initial ideal the worked example lists
        f = rxyz.parse("x*y + x*z + y*z")
        assert poly_str(initial_form(f, (1, 1, 0))) == "x*z + y*z"


class TestGroebner:
    def test_two_lines(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x - 1"), rxyz.parse("y - x")])
        assert gb_strs(i) == ["y - 1", "x - 1"]

    def test_single_relation_is_its_own_basis(self):
        from flagtrop.flag import plucker_ideal

        i3 = plucker_ideal(3)
        assert len(i3.gens) == 1
        gb = reduced_grevlex_basis(i3)
        assert [poly_str(g) for g in gb.polys] == [poly_str(g) for g in i3.gens]

    def test_weight_gb_of_flag4_table_row(self):
        # the tabulated word weights select maximal terms: negate for the
        # minimum-convention machinery
        from flagtrop.flag import plucker_ideal

        i4 = plucker_ideal(4)
        w = (0, 32, 24, 7, 0, 16, 6, 48, 38, 30, 0, 4, 20, 52)
        gens, _ = initial_data(i4, tuple(-x for x in w))
        assert is_binomial(gens)
        assert minimal_generator_count(gens) == 10

    def test_idempotent_and_deterministic(self, rxyz):
        rng = random.Random(5)
        for _ in range(100):
            gens = []
            for _ in range(rng.randint(1, 3)):
                e1 = tuple(rng.randint(0, 2) for _ in range(3))
                e2 = tuple(rng.randint(0, 2) for _ in range(3))
                if e1 == e2:
                    continue
                gens.append(
                    rxyz.monomial(e1, 1) + rxyz.monomial(e2, rng.choice([-2, -1, 1, 3]))
                )
            if not gens:
                continue
            gb1 = groebner_basis(gens, GrevlexOrder(rxyz))
            gb2 = groebner_basis(list(gb1.polys), GrevlexOrder(rxyz))
            assert [poly_str(g) for g in gb1.polys] == [poly_str(g) for g in gb2.polys]
            gb3 = groebner_basis(list(reversed(gens)), GrevlexOrder(rxyz))
            assert [poly_str(g) for g in gb1.polys] == [poly_str(g) for g in gb3.polys]

    def test_weight_order_requires_homogeneous(self, rxyz):
        with pytest.raises(NotHomogeneous):
            groebner_basis([rxyz.parse("x^2 + y")], WeightOrder(rxyz, (1, 1, 1)))


class TestInitialIdeal:
    def test_zero_weight(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x*y + x*z + y*z")])
        assert gb_strs(initial_ideal(i, (0, 0, 0))) == gb_strs(i)

    def test_shared_cone_value(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x*y + x*z + y*z")])
        assert gb_strs(initial_ideal(i, (1, 1, 0))) == ["x*z + y*z"]

    def test_fflv_weight_vector_prime_row(self):
        from flagtrop.flag import plucker_ideal
        from flagtrop.tropfan import weight_vector_membership

        i4 = plucker_ideal(4)
        w = (0, 2, 2, 1, 0, 1, 1, 2, 1, 2, 0, 1, 1, 1)
        report = weight_vector_membership(i4, w)
        assert report["binomial"] and report["prime"]

    def test_lineality_invariance(self):
        from flagtrop.flag import grading_matrix, plucker_ideal

        i4 = plucker_ideal(4)
        d = grading_matrix(4)
        rng = random.Random(23)
        w = tuple(rng.randint(0, 9) for _ in range(14))
        gens1, _ = initial_data(i4, w)
        shift = tuple(
            x + 3 * d.data[0][j] - 2 * d.data[1][j] + d.data[2][j]
            for j, x in enumerate(w)
        )
        gens2, _ = initial_data(i4, shift)
        assert [poly_str(g) for g in gens1] == [poly_str(g) for g in gens2]

    def test_membership_soundness(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x*y + x*z + y*z")])
        w = (1, 1, 0)
        gens, gb = initial_data(i, w)
        for h in gens:
            assert any(initial_form(g, w) == h for g in gb.polys)


class TestPredicates:
    def test_binomial_and_monomial_free(self, rxyz):
        gens = (rxyz.parse("x*z + y*z"),)
        assert is_binomial(gens) and is_monomial_free(gens)
        assert not is_monomial_free((rxyz.parse("x"),))


class TestSaturation:
    def test_factor_out_variable(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x*z + y*z")])
        # oracle by hand: xz + yz = z(x + y)
        assert gb_strs(saturate(i, rxyz.parse("x*y*z"))) == ["x + y"]
        assert [poly_str(g) for g in saturate_all_variables(i).gens] == ["x + y"]

    def test_unit_ideal(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x")])
        assert gb_strs(saturate(i, rxyz.parse("x"))) == ["1"]

    def test_prime_fixed_point(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x + y")])
        assert gb_strs(saturate(i, rxyz.parse("z"))) == ["x + y"]
        assert gb_strs(saturate_all_variables(i)) == ["x + y"]

    def test_variable_path_matches_elimination(self, rxyz):
        rng = random.Random(17)
        for _ in range(25):
            e1 = tuple(rng.randint(0, 2) for _ in range(3))
            e2 = tuple(rng.randint(0, 2) for _ in range(3))
            if sum(e1) != sum(e2) or e1 == e2:
                continue
            i = Ideal(rxyz, [rxyz.monomial(e1, 1) - rxyz.monomial(e2, 1)])
            for var in range(3):
                a = saturate_variable(i, var)
                b = saturate(i, rxyz.var(var))
                assert gb_strs(a) == gb_strs(b)


class TestHilbert:
    def test_hypersurface_degrees(self, rxyz):
        assert degree_via_hilbert(Ideal(rxyz, [rxyz.parse("x^2 + y*z")])) == 2
        r4 = PolyRing(["x", "y", "z", "w"])
        assert degree_via_hilbert(Ideal(r4, [r4.parse("x*y - z*w")])) == 2

    def test_not_homogeneous(self, rxyz):
        with pytest.raises(NotHomogeneous):
            degree_via_hilbert(Ideal(rxyz, [rxyz.parse("x^2 + y")]))

    def test_degree_order_independent(self, rxyz):
        from flagtrop.poly import PermutedGrevlexOrder, hilbert_dim_degree

        i = Ideal(rxyz, [rxyz.parse("x^2 - y*z"), rxyz.parse("x*y - z^2")])
        d1 = degree_via_hilbert(i)
        gb = groebner_basis(list(i.gens), PermutedGrevlexOrder(rxyz, (2, 0, 1)))
        _, d2 = hilbert_dim_degree(gb.leads, rxyz.degrees)
        assert d1 == d2

    def test_krull_dimension(self, rxyz):
        assert krull_dimension(Ideal(rxyz, [rxyz.parse("x*y + x*z + y*z")])) == 2


class TestHomogenize:
    def test_linear_unchanged(self):
        r = PolyRing(["u", "x", "y"])
        i = Ideal(r, [r.parse("u - x - y")])
        h = homogenize(i)
        assert [poly_str(g) for g in dehomogenize(h, r).gens] == [
            poly_str(g) for g in i.gens
        ]
        assert all(g.is_homogeneous() for g in h.gens)

    def test_parabola(self):
        r = PolyRing(["x", "y"])
        h = homogenize(Ideal(r, [r.parse("y - x^2")]))
        (g,) = h.gens
        assert sorted(g.terms) == [(0, 1, 1), (2, 0, 0)]

    def test_roundtrip(self, rxyz):
        i = Ideal(rxyz, [rxyz.parse("x^3 + y*z - 2*x")])
        assert [poly_str(g) for g in dehomogenize(homogenize(i), rxyz).gens] == [
            poly_str(g) for g in i.gens
        ]


class TestSerialization:
    def test_roundtrip(self, rxyz):
        f = rxyz.parse("3/2*x^2*y - z^3 + 1")
        assert rxyz.parse(poly_str(f)) == f

    def test_canonical_order(self, rxyz):
        f = rxyz.parse("y*z + x*y + x*z")
        assert poly_str(f) == "x*y + x*z + y*z"
