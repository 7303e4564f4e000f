"""Pluecker ideal of the full flag variety, its multigrading, and the
signed S_n x Z_2 symmetry action on variables, weights, cones and ideals."""

from __future__ import annotations

from itertools import combinations, permutations

from .exactmath import IntMatrix
from .poly import (
    GrevlexOrder,
    Ideal,
    Poly,
    PolyRing,
    groebner_basis,
    poly_str,
    reduced_grevlex_basis,
)

class ItemNotClosed(Exception):
    """An orbit computation hit an image outside the supplied item list."""


def plucker_subsets(n):
    """All nonempty proper subsets of {1..n}, ordered by (size, lex)."""
    out = []
    for k in range(1, n):
        out.extend(combinations(range(1, n + 1), k))
    return out


class FlagRing:
    """Pluecker polynomial ring for Flag_n with the paper ordering of variables."""

    __slots__ = ("n", "subsets", "ring", "subset_index")

    def __init__(self, n):
        self.n = n
        self.subsets = plucker_subsets(n)
        names = ["p_" + "".join(str(j) for j in s) for s in self.subsets]
        self.ring = PolyRing(names)
        self.subset_index = {s: i for i, s in enumerate(self.subsets)}

    @property
    def nvars(self):
        return len(self.subsets)

    def var_of(self, subset):
        return self.subset_index[tuple(sorted(subset))]


def grading_matrix(n) -> IntMatrix:
    """(n-1) x (2^n - 2) matrix: row k-1 marks the size-k Pluecker variables."""
    subs = plucker_subsets(n)
    return IntMatrix([[1 if len(s) == k else 0 for s in subs] for k in range(1, n)])


# ---------------------------------------------------------------------------
# the ideal


def _minor_poly(xring, n, cols):
    """Minor of the generic (n-1) x n matrix on rows 1..|cols| and the given columns."""
    k = len(cols)
    terms = {}
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        # parity by counting inversions
        inv = sum(1 for a in range(k) for b in range(a + 1, k) if seen[a] > seen[b])
        sign = -1 if inv % 2 else 1
        e = [0] * xring.nvars
        for r in range(k):
            e[(r) * n + (cols[perm[r]] - 1)] += 1
        e = tuple(e)
        terms[e] = terms.get(e, 0) + sign
    return Poly(xring, terms)


class PlueckerMap:
    """The substitution p_J -> minor(rows 1..|J|, columns J) of a generic matrix."""

    def __init__(self, n):
        self.n = n
        self.xring = PolyRing([f"x{i}{j}" for i in range(1, n) for j in range(1, n + 1)])
        self._minors = {}

    def minor(self, subset):
        s = tuple(sorted(subset))
        if s not in self._minors:
            self._minors[s] = _minor_poly(self.xring, self.n, s)
        return self._minors[s]

    def image(self, fr: FlagRing, f: Poly) -> Poly:
        out = self.xring.zero()
        for e, c in f.terms.items():
            term = self.xring.one().scale(c)
            for i, m in enumerate(e):
                for _ in range(m):
                    term = term * self.minor(fr.subsets[i])
            out = out + term
        return out


def incidence_relation(fr: FlagRing, iset, jset) -> Poly:
    """sum over j in J\\I of (-1)^{l_j} p_{I+j} p_{J-j} with the paper's sign."""
    iset = tuple(sorted(iset))
    jset = tuple(sorted(jset))
    f = fr.ring.zero()
    for j in jset:
        if j in iset:
            continue
        lj = sum(1 for k in jset if j < k) + sum(1 for i in iset if i < j)
        a = fr.var_of(iset + (j,))
        b = fr.var_of(tuple(x for x in jset if x != j))
        e = [0] * fr.nvars
        e[a] += 1
        e[b] += 1
        f = f + fr.ring.monomial(e, (-1) ** lj)
    return f


def _quadric_coeff_vector(fr: FlagRing, f: Poly, monomial_index):
    vec = [0] * len(monomial_index)
    for e, c in f.terms.items():
        vec[monomial_index[e]] = c
    return vec


def plucker_ideal(n) -> Ideal:
    """Minimal quadratic generating set of the defining ideal of Flag_n.

    Candidates come from the incidence relations over all pairs (I, J) with
    |I| + 2 <= |J|; membership in ker(phi_n) is verified symbolically and the
    set is minimalized by exact linear algebra on the quadric slice.
    """
    if not 3 <= n <= 6:
        raise ValueError("supported range is 3 <= n <= 6")
    fr = FlagRing(n)
    phi = PlueckerMap(n)
    ground = list(range(1, n + 1))
    candidates = []
    for jsize in range(2, n + 1):
        for jset in combinations(ground, jsize):
            for isize in range(0, jsize - 1):
                for iset in combinations(ground, isize):
                    f = incidence_relation(fr, iset, jset)
                    if not f:
                        continue
                    if phi.image(fr, f):
                        continue
                    candidates.append(f)
    # canonical sign and dedupe
    key = GrevlexOrder(fr.ring).key
    seen = {}
    for f in candidates:
        lead = max(f.terms, key=key)
        if f.terms[lead] < 0:
            f = -f
        seen.setdefault(poly_str(f), f)
    cands = sorted(seen.values(), key=lambda f: (f.num_terms(), poly_str(f)))
    # minimal generators: the degree-2 slice of the ideal is their linear span
    monos = sorted({e for f in cands for e in f.terms})
    midx = {e: i for i, e in enumerate(monos)}
    from .exactmath import Echelon

    ech = Echelon()
    kept = []
    for f in cands:
        num = [0] * len(monos)
        # clear rational coefficients to integers (they are already integers here)
        for e, c in f.terms.items():
            num[midx[e]] = int(c)
        if ech.add(num):
            kept.append(f)
    return Ideal(fr.ring, kept)


def flag_ring(n) -> FlagRing:
    return FlagRing(n)


# ---------------------------------------------------------------------------
# the S_n x Z_2 action


def _sort_sign(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return tuple(seq), sign


def _complement_sign(n, subset):
    """Sign of the shuffle permutation (J, complement of J) of 1..n."""
    comp = tuple(x for x in range(1, n + 1) if x not in subset)
    _, sign = _sort_sign(subset + comp)
    return comp, sign


class SignedSymmetry:
    """Group element (sigma, flip): sigma permutes column labels, flip complements."""

    __slots__ = ("n", "perm", "flip")

    def __init__(self, n, perm, flip=False):
        self.n = n
        self.perm = tuple(perm)  # perm[i-1] = image of i
        self.flip = bool(flip)

    def __repr__(self):
        return f"SignedSymmetry({self.perm}, flip={self.flip})"

    def on_subset(self, subset):
        """(signed image) of a sorted Pluecker index set."""
        img = tuple(self.perm[j - 1] for j in subset)
        img, sign = _sort_sign(img)
        if self.flip:
            img, s2 = _complement_sign(self.n, img)
            sign *= s2
        return img, sign

    def on_weight(self, fr: FlagRing, w):
        out = [0] * len(w)
        for i, s in enumerate(fr.subsets):
            img, _ = self.on_subset(s)
            out[fr.subset_index[img]] = w[i]
        return tuple(out)

    def on_row(self, fr: FlagRing, row):
        # constraint rows transform exactly like weight vectors
        return self.on_weight(fr, row)

    def on_cone(self, fr: FlagRing, cone):
        from .exactmath import RationalCone

        return RationalCone(
            cone.dim,
            [self.on_row(fr, e) for e in cone.eqs],
            [self.on_row(fr, a) for a in cone.ineqs],
        )

    def on_poly(self, fr: FlagRing, f: Poly) -> Poly:
        out = {}
        for e, c in f.terms.items():
            sign = 1
            e2 = [0] * len(e)
            for i, m in enumerate(e):
                if not m:
                    continue
                img, s = self.on_subset(fr.subsets[i])
                e2[fr.subset_index[img]] += m
                if m % 2:
                    sign *= s
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + sign * c
        return Poly(fr.ring, out)

    def on_ideal(self, fr: FlagRing, gens):
        return [self.on_poly(fr, g) for g in gens]


def symmetry_group(n):
    """All 2 * n! signed symmetries."""
    out = []
    for perm in permutations(range(1, n + 1)):
        out.append(SignedSymmetry(n, perm, False))
        out.append(SignedSymmetry(n, perm, True))
    return out


def apply_symmetry(g: SignedSymmetry, fr: FlagRing, x):
    """Dispatch on weight vectors (tuples), cones and generator lists."""
    from .exactmath import RationalCone

    if isinstance(x, RationalCone):
        return g.on_cone(fr, x)
    if isinstance(x, Poly):
        return g.on_poly(fr, x)
    if isinstance(x, Ideal):
        return Ideal(fr.ring, g.on_ideal(fr, x.gens))
    return g.on_weight(fr, x)


def canonical_ideal_key(gens) -> tuple:
    """Canonical serialization: reduced grevlex GB, as sorted text."""
    if isinstance(gens, Ideal):
        gens = gens.gens
    ring = gens[0].ring
    gb = groebner_basis(list(gens), GrevlexOrder(ring))
    return tuple(poly_str(g) for g in gb.polys)


def orbit_decomposition(items, images):
    """Partition items into orbits.

    items: list of hashable canonical keys.
    images: callable mapping an item index to the canonical keys of its images.
    Returns a list of orbit index lists, sorted by smallest member key.
    """
    index = {k: i for i, k in enumerate(items)}
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[rb] = ra

    for i in range(len(items)):
        for k in images(i):
            j = index.get(k)
            if j is None:
                raise ItemNotClosed(f"image of item {i} not among items")
            union(i, j)
    groups = {}
    for i in range(len(items)):
        groups.setdefault(find(i), []).append(i)
    orbits = sorted(groups.values(), key=lambda idxs: min(items[i] for i in idxs))
    return orbits
