"""Tropical variety of a small ideal as a fan of maximal cones with certified
initial ideals; toric components, binomial primality, multiplicity-one
certificates, and weight-vector membership reports.

Architecture: enumerate the cells of the tropical prevariety (one min-pair
selection per generator), keep cells of the expected dimension, certify each
kept cell against the Groebner cone of its interior point (splitting cells
that straddle Groebner walls), discard cells whose initial ideal contains a
monomial, and merge cells with identical initial ideals into maximal cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .exactmath import (
    Echelon,
    IntMatrix,
    RationalCone,
    dot,
    integer_kernel,
    primitive,
    smith_normal_form,
    solve_in_row_space,
)
from .poly import (
    GrevlexOrder,
    Ideal,
    Poly,
    groebner_basis,
    hilbert_dim_degree,
    initial_form,
    is_binomial,
    is_monomial_free,
    poly_str,
    reduced_grevlex_basis,
    saturate_all_variables,
)


class CellBudgetExceeded(Exception):
    pass


class DimensionMismatch(Exception):
    pass


class NotBinomialAfterSaturation(Exception):
    pass


class RescalingObstruction(Exception):
    """The binomial coefficients admit no rational unit rescaling."""


class NoneMissing(Exception):
    """Raised by the re-embedding layer when a cone is already prime."""


SPLIT_DEPTH_CAP = 8


# ---------------------------------------------------------------------------
# tropical hypersurface fans


class TropicalHypersurfaceFan:
    """Maximal cones of trop(V(f)): one cone per pair of terms attaining the minimum."""

    __slots__ = ("poly", "selections")

    def __init__(self, f: Poly):
        self.poly = f
        exps = sorted(f.terms)
        n = len(exps)
        self.selections = []
        for a in range(n):
            for b in range(a + 1, n):
                eq = tuple(x - y for x, y in zip(exps[a], exps[b]))
                ineqs = tuple(
                    tuple(x - y for x, y in zip(exps[c], exps[a]))
                    for c in range(n)
                    if c not in (a, b)
                )
                self.selections.append((eq, ineqs))

    def cones(self, dim):
        return [RationalCone(dim, [eq], ineqs) for eq, ineqs in self.selections]


# ---------------------------------------------------------------------------
# maximal cones


@dataclass
class MaximalCone:
    cone: RationalCone
    initial_gens: tuple
    witness: tuple
    W: IntMatrix
    binomial: bool
    monomial_free: bool
    prime: bool | None = None
    prime_obstruction: str | None = None
    mult_one: bool | None = None
    orbit: int | None = None

    def key(self):
        return tuple(poly_str(g) for g in self.initial_gens)

    def generator_count(self):
        return len(self.initial_gens)


class TropicalFan:
    def __init__(self, ideal, grading, target_dim, cones):
        self.ideal = ideal
        self.grading = grading
        self.ambient = ideal.ring.nvars
        self.target_dim = target_dim
        self.lineality_dim = grading.rank()
        self.cones = list(cones)
        self._by_key = {c.key(): i for i, c in enumerate(self.cones)}

    def cone_index_for_ideal_key(self, key):
        return self._by_key.get(key)

    def dimension_mod_lineality(self):
        return self.target_dim - self.lineality_dim

    def prime_cones(self):
        return [c for c in self.cones if c.prime]


# ---------------------------------------------------------------------------
# Groebner cones


def groebner_cone(gb, w) -> RationalCone:
    """Closed cone of weight vectors sharing in_w(I), from the marked reduced GB.

    Equalities tie the terms of each initial form together; inequalities say
    every tail term weighs at least the initial terms.
    """
    ring = gb.ring
    eqs = []
    ineqs = []
    for g in gb.polys:
        vals = {e: dot(w, e) for e in g.terms}
        m = min(vals.values())
        head = [e for e, v in vals.items() if v == m]
        tail = [e for e, v in vals.items() if v > m]
        h0 = head[0]
        for h in head[1:]:
            eqs.append(tuple(a - b for a, b in zip(h, h0)))
        for t in tail:
            ineqs.append(tuple(a - b for a, b in zip(t, h0)))
    return RationalCone(ring.nvars, eqs, ineqs)


def make_w_matrix(cone: RationalCone, interior) -> IntMatrix:
    """Rows: dim(cone) independent integer vectors in the cone's relative
    interior, spanning its linear span."""
    basis = cone.span_basis()
    d = len(basis)
    if d == 0:
        raise ValueError("zero-dimensional cone has no W matrix")
    rows = None
    m = 1
    while True:
        cand = [tuple(m * wi + bi for wi, bi in zip(interior, b)) for b in basis]
        if all(cone.contains_point(r) for r in cand) and IntMatrix(cand).rank() == d:
            rows = cand
            break
        m *= 2
        if m > 2 ** 40:  # pragma: no cover
            raise RuntimeError("failed to build W matrix")
    return IntMatrix([primitive(r) for r in rows])


# ---------------------------------------------------------------------------
# prevariety cell enumeration


def _cell_signature(eqs, ineqs):
    return (tuple(sorted(eqs)), tuple(sorted(ineqs)))


def _enumerate_cells(gen_selections, nvars, max_eq_rank, budget):
    """DFS over per-generator selections with incremental rank pruning."""
    total = prod(len(s) for s in gen_selections)
    if total > budget:
        raise CellBudgetExceeded(
            f"{total} prevariety cells exceed the budget of {budget}"
        )
    out = []
    seen = set()

    def rec(level, ech, eqs, ineqs):
        if level == len(gen_selections):
            sig = _cell_signature(eqs, ineqs)
            if sig not in seen:
                seen.add(sig)
                out.append(sig)
            return
        for eq, ins in gen_selections[level]:
            ech2 = ech.copy()
            if ech2.add(eq) and ech2.rank > max_eq_rank:
                continue
            rec(level + 1, ech2, eqs + [primitive(eq)], ineqs + list(ins))

    rec(0, Echelon(), [], [])
    return out


class _CellCertifier:
    """Exact classification of trop(V(I)) inside prevariety cells.

    certify(cone) discovers every maximal tropical class meeting the cone in
    the target dimension: cones straddling Groebner walls are split; cones
    inside one Groebner cone either carry a monomial-free initial ideal (then
    they have exactly the target dimension and are recorded) or their
    relative interior misses the tropical variety entirely and the search
    descends into their facets, where any remaining tropical piece must live.
    """

    def __init__(self, ideal, target_dim):
        self.ideal = ideal
        self.target_dim = target_dim
        self.classes = {}
        self._seen = set()
        self._gb_cache = {}
        self._mono_cache = {}

    def _initial_data(self, w):
        hit = self._gb_cache.get(w)
        if hit is None:
            from .poly import initial_data

            hit = initial_data(self.ideal, w)
            self._gb_cache[w] = hit
        return hit

    def certify(self, cone, split_depth=0):
        sig = (cone.eqs, cone.ineqs)
        if sig in self._seen:
            return
        self._seen.add(sig)
        if cone.dimension() < self.target_dim:
            return
        w = tuple(cone.relative_interior_point())
        init_gens, gb = self._initial_data(w)
        gcone = groebner_cone(gb, w)
        for row in gcone.eqs + gcone.ineqs:
            if not cone.implies(row):
                if split_depth >= SPLIT_DEPTH_CAP:
                    raise RuntimeError("Groebner cone refinement exceeded the depth cap")
                self.certify(cone.with_extra(ineqs=[row]), split_depth + 1)
                self.certify(
                    cone.with_extra(ineqs=[tuple(-x for x in row)]), split_depth + 1
                )
                return
        if self._monomial_free(init_gens, gb):
            key = tuple(poly_str(g) for g in init_gens)
            if key not in self.classes:
                self.classes[key] = (init_gens, gb, w, gcone)
            return
        # constant monomial-containing initial ideal on the relative interior:
        # any tropical piece of full target dimension lies on a facet
        implicit = set(cone.implicit_equalities())
        for row in cone.ineqs:
            if row in implicit:
                continue
            self.certify(cone.face(row), split_depth)

    def _monomial_free(self, init_gens, gb):
        key = tuple(poly_str(g) for g in init_gens)
        hit = self._mono_cache.get(key)
        if hit is None:
            hit = certified_monomial_free(init_gens)
            self._mono_cache[key] = hit
        return hit


def certified_monomial_free(init_gens) -> bool:
    """Complete monomial-containment test with an explicit certificate.

    The reduced-GB scan decides binomial ideals (their reduced bases expose
    every monomial); a general ideal can hide a monomial behind a
    monomial-free basis, so remaining cases are settled by saturating at all
    variables.  A discard always certifies a witness monomial by a zero
    normal form in the ideal.
    """
    if not is_monomial_free(init_gens):
        return False
    if is_binomial(init_gens):
        return True
    ring = init_gens[0].ring
    sat = saturate_all_variables(Ideal(ring, init_gens))
    if [poly_str(g) for g in sat.gens] != ["1"]:
        return True
    gb_init = groebner_basis(list(init_gens), GrevlexOrder(ring))
    product = ring.monomial(tuple([1] * ring.nvars), 1)
    power = product
    for _ in range(sum(g.total_degree() for g in init_gens) + 1):
        if not gb_init.normal_form(power):
            break
        power = power * product
    else:  # pragma: no cover
        raise RuntimeError("saturation witness not found")
    assert not gb_init.normal_form(power), "discard witness failed"
    return False


def enumerate_tropical_fan(
    ideal: Ideal,
    grading: IntMatrix,
    budget: int = 400000,
    classify: bool = True,
    progress=None,
) -> TropicalFan:
    """Maximal cones of trop(V(I)) with certified constant initial ideals."""
    ring = ideal.ring
    n = ring.nvars
    gb0 = reduced_grevlex_basis(ideal)
    target_dim, _ = hilbert_dim_degree(gb0.leads, ring.degrees)
    gen_selections = []
    for g in ideal.gens:
        fan = TropicalHypersurfaceFan(g)
        gen_selections.append(fan.selections)
    cells = _enumerate_cells(gen_selections, n, n - target_dim, budget)
    if progress:
        progress(f"{len(cells)} candidate cells after rank pruning")

    certifier = _CellCertifier(ideal, target_dim)
    for idx, (eqs, ineqs) in enumerate(cells):
        certifier.certify(RationalCone(n, eqs, ineqs))
        if progress and (idx + 1) % 2000 == 0:
            progress(
                f"processed {idx + 1}/{len(cells)} cells, {len(certifier.classes)} cones"
            )
    classes = certifier.classes

    if not classes:
        raise DimensionMismatch("no cell reached the expected dimension")

    cones = []
    for key in sorted(classes):
        init_gens, gb, w, gcone = classes[key]
        cdim = gcone.dimension()
        if cdim != target_dim:
            raise DimensionMismatch(
                f"Groebner cone dimension {cdim} differs from the fan dimension {target_dim}"
            )
        W = make_w_matrix(gcone, w)
        cones.append(
            MaximalCone(
                cone=gcone,
                initial_gens=init_gens,
                witness=tuple(w),
                W=W,
                binomial=is_binomial(init_gens),
                monomial_free=True,
            )
        )
    fan = TropicalFan(ideal, grading, target_dim, cones)
    if classify:
        for c in fan.cones:
            classify_cone(c, ideal)
    return fan


# ---------------------------------------------------------------------------
# toric components and primality


@dataclass
class LatticeIdealData:
    ideal_gens: tuple  # reduced grevlex GB of the saturation I(W_C)
    lattice: IntMatrix  # integer kernel of W (columns)
    coeffs: tuple  # ((lattice_vector, coefficient), ...) from the binomials
    index: int  # index of the span of the binomial differences inside the kernel
    in_gens: tuple  # reduced grevlex GB of the input initial ideal


def _binomial_data(ring, gens):
    """(difference vector, coefficient) for monic binomials x^a - c x^b."""
    out = []
    key = GrevlexOrder(ring).key
    for g in gens:
        if g.num_terms() == 1:
            raise NotBinomialAfterSaturation("monomial appeared after saturation")
        if g.num_terms() != 2:
            raise NotBinomialAfterSaturation("saturation is not binomial")
        (e1, c1), (e2, c2) = sorted(g.terms.items(), key=lambda t: key(t[0]), reverse=True)
        # monic head: g = x^e1 - c x^e2 with c = -c2/c1
        out.append((tuple(a - b for a, b in zip(e1, e2)), -c2 / c1))
    return out


def toric_component(cone: MaximalCone, ideal: Ideal) -> LatticeIdealData:
    """I(W_C) = (in_C(I) : (prod x_i)^infinity) plus its lattice data."""
    if not cone.monomial_free or not cone.binomial:
        raise NotBinomialAfterSaturation("toric component needs a binomial, monomial-free cone")
    ring = ideal.ring
    sat = saturate_all_variables(Ideal(ring, cone.initial_gens))
    pairs = _binomial_data(ring, sat.gens)
    lattice = integer_kernel(cone.W)
    # verify the differences lie in ker(W) and compute their index inside it
    basis_rows = [tuple(col) for col in zip(*lattice.data)] if lattice.cols else []
    diffs = [d for d, _ in pairs]
    coords = solve_in_row_space(IntMatrix(basis_rows), diffs) if basis_rows else []
    if coords is None:
        raise NotBinomialAfterSaturation("saturation binomials leave the cone lattice")
    index = 0
    if basis_rows:
        mat = IntMatrix(coords)
        _, s, _ = smith_normal_form(mat)
        invariants = [s.data[i][i] for i in range(min(s.rows, s.cols)) if s.data[i][i]]
        if len(invariants) == len(basis_rows):
            index = 1
            for x in invariants:
                index *= x
    # in_C(I) must sit inside its saturation
    gb_sat = groebner_basis(list(sat.gens), GrevlexOrder(ring))
    for g in cone.initial_gens:
        if gb_sat.normal_form(g):
            raise NotBinomialAfterSaturation("initial ideal not contained in saturation")
    return LatticeIdealData(
        ideal_gens=tuple(sat.gens),
        lattice=lattice,
        coeffs=tuple(pairs),
        index=index,
        in_gens=cone.initial_gens,
    )


def _character_rescalable(pairs, nvars) -> bool:
    """Is there a rational scaling of the variables making every coefficient 1?

    Needs lambda^ell = c_ell for each lattice vector: one integer linear system
    per prime appearing in a coefficient plus a sign system over GF(2).
    """
    primes = set()
    vals = []
    for ell, c in pairs:
        num, den = int(c.numerator), int(c.denominator)
        if num == 0:
            return False
        fac = {}
        for n, sgn in ((abs(num), 1), (den, -1)):
            d = 2
            while d * d <= n:
                while n % d == 0:
                    fac[d] = fac.get(d, 0) + sgn
                    n //= d
                d += 1
            if n > 1:
                fac[n] = fac.get(n, 0) + sgn
        primes |= set(fac)
        vals.append((ell, fac, 1 if num > 0 else -1))
    ells = IntMatrix([ell for ell, _, _ in vals]) if vals else None
    for p in sorted(primes):
        target = [fac.get(p, 0) for _, fac, _ in vals]
        # integer solution v with ells * v = target
        sol = solve_in_row_space(ells.transpose(), [tuple(target)])
        if sol is None:
            return False
    # sign system over GF(2): ell . s = [c < 0]
    rows = [tuple(x % 2 for x in ell) for ell, _, _ in vals]
    rhs = [0 if sgn > 0 else 1 for _, _, sgn in vals]
    return _gf2_solvable(rows, rhs, nvars)


def _gf2_solvable(rows, rhs, n):
    mat = [list(r) + [b] for r, b in zip(rows, rhs)]
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                mat[i] = [(a + b) % 2 for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return not any(all(x == 0 for x in row[:-1]) and row[-1] for row in mat)


def is_prime_binomial(data: LatticeIdealData) -> bool:
    """Paper test: unit-rescalable coefficients, saturated lattice, and
    equality of the initial ideal with its toric component."""
    if data.index != 1:
        return False
    # equality in_C(I) = I(W_C): the saturation added nothing
    in_keys = {poly_str(g) for g in data.in_gens}
    sat_keys = {poly_str(g) for g in data.ideal_gens}
    if in_keys != sat_keys:
        return False
    ring = data.ideal_gens[0].ring
    if not _character_rescalable(data.coeffs, ring.nvars):
        raise RescalingObstruction(
            "prime over C undetermined, not prime over Q by this test"
        )
    return True


def multiplicity_one_certificate(cone: MaximalCone, ideal: Ideal) -> bool:
    """Degree equality of in_C(I) and I(W_C): the paper's sufficient certificate."""
    data = toric_component(cone, ideal)
    ring = ideal.ring
    gb_in = groebner_basis(list(cone.initial_gens), GrevlexOrder(ring))
    gb_toric = groebner_basis(list(data.ideal_gens), GrevlexOrder(ring))
    _, deg_in = hilbert_dim_degree(gb_in.leads, ring.degrees)
    _, deg_toric = hilbert_dim_degree(gb_toric.leads, ring.degrees)
    return deg_in == deg_toric


def classify_cone(cone: MaximalCone, ideal: Ideal):
    """Fill the prime / multiplicity-one flags of a maximal cone in place."""
    if not cone.binomial:
        cone.prime = False
        cone.prime_obstruction = "not binomial"
        return cone
    try:
        data = toric_component(cone, ideal)
        cone.prime = is_prime_binomial(data)
    except RescalingObstruction as exc:
        cone.prime = False
        cone.prime_obstruction = str(exc)
    except NotBinomialAfterSaturation as exc:
        cone.prime = False
        cone.prime_obstruction = str(exc)
    return cone


# ---------------------------------------------------------------------------
# membership reports


def weight_vector_membership(
    ideal: Ideal,
    w,
    grading: IntMatrix = None,
    fan: TropicalFan = None,
    select: str = "min",
) -> dict:
    """Classification of in_w(I): monomial-freeness, binomiality, primality.

    select='min' keeps the terms of minimal weight (the convention of the fan
    machinery); select='max' classifies the degeneration by maximal weight,
    used by weight vectors built from representation-theoretic degrees.
    """
    from .poly import initial_data

    if select == "max":
        w = tuple(-x for x in w)
    elif select != "min":
        raise ValueError("select must be 'min' or 'max'")
    init_gens, gb = initial_data(ideal, w)
    report = {
        "weight": list(int(x) for x in w),
        "initial_ideal": [poly_str(g) for g in init_gens],
        "generator_count": len(init_gens),
        "monomial_free": certified_monomial_free(init_gens),
        "binomial": is_binomial(init_gens),
        "prime": None,
        "prime_obstruction": None,
        "cone": None,
    }
    if report["monomial_free"] and report["binomial"]:
        gcone = groebner_cone(gb, w)
        cone = MaximalCone(
            cone=gcone,
            initial_gens=init_gens,
            witness=tuple(w),
            W=make_w_matrix(gcone, w),
            binomial=True,
            monomial_free=True,
        )
        classify_cone(cone, ideal)
        report["prime"] = cone.prime
        report["prime_obstruction"] = cone.prime_obstruction
    if fan is not None:
        key = tuple(poly_str(g) for g in init_gens)
        report["cone"] = fan.cone_index_for_ideal_key(key)
    return report


def groebner_cone_for_weight(ideal: Ideal, w):
    """(MaximalCone, marked GB) of the weight vector's Groebner cone."""
    from .poly import initial_data

    init_gens, gb = initial_data(ideal, w)
    gcone = groebner_cone(gb, w)
    cone = MaximalCone(
        cone=gcone,
        initial_gens=init_gens,
        witness=tuple(w),
        W=make_w_matrix(gcone, w),
        binomial=is_binomial(init_gens),
        monomial_free=is_monomial_free(init_gens),
    )
    return cone, gb
