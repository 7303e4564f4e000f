"""Sparse multivariate polynomials over Q, Groebner bases under weight orders,
initial ideals, saturation, homogenization and Hilbert-series degrees.

Convention: initial forms select the terms with MINIMAL weight (weight orders
internally compare -w then graded reverse lexicographic, so a single MAX-style
code path serves everything).
"""

from __future__ import annotations

import heapq
from math import gcd

from .exactmath import QQ, IntMatrix, dot, qq_str, parse_qq

ZERO = QQ(0)
ONE = QQ(1)


class NotHomogeneous(Exception):
    pass


# ---------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """Variable table plus the positive weights used for degrees and termination."""

    __slots__ = ("names", "index", "degrees")

    def __init__(self, names, degrees=None):
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        self.degrees = tuple(degrees) if degrees is not None else (1,) * len(self.names)
        if len(self.degrees) != len(self.names) or any(d <= 0 for d in self.degrees):
            raise ValueError("degrees must be positive, one per variable")

    @property
    def nvars(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names and self.degrees == other.degrees

    def __hash__(self):
        return hash((self.names, self.degrees))

    def __repr__(self):
        return f"PolyRing({','.join(self.names)})"

    def extend(self, names, degrees):
        return PolyRing(self.names + tuple(names), self.degrees + tuple(degrees))

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {(0,) * self.nvars: ONE})

    def var(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): ONE})

    def monomial(self, exps, coeff=ONE):
        return Poly(self, {tuple(int(x) for x in exps): QQ(coeff)})

    def wdeg(self, exps):
        return dot(self.degrees, exps)

    def parse(self, text: str) -> "Poly":
        return _parse_poly(self, text)


class Poly:
    """Immutable sparse polynomial: dict from exponent tuple to nonzero rational."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms, normalize=True):
        self.ring = ring
        if normalize:
            self.terms = {e: QQ(c) for e, c in terms.items() if c != 0}
        else:
            self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, ZERO) + c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        return Poly(self.ring, res, normalize=False)

    def __sub__(self, other):
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, ZERO) - c
            if s:
                res[e] = s
            else:
                res.pop(e, None)
        return Poly(self.ring, res, normalize=False)

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()}, normalize=False)

    def __mul__(self, other):
        if isinstance(other, Poly):
            res = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = res.get(e, ZERO) + c1 * c2
                    if s:
                        res[e] = s
                    else:
                        res.pop(e, None)
            return Poly(self.ring, res, normalize=False)
        return self.scale(other)

    def scale(self, c):
        c = QQ(c)
        if not c:
            return self.ring.zero()
        return Poly(self.ring, {e: c * v for e, v in self.terms.items()}, normalize=False)

    def num_terms(self):
        return len(self.terms)

    def total_degree(self):
        return max(self.ring.wdeg(e) for e in self.terms) if self.terms else -1

    def is_homogeneous(self):
        degs = {self.ring.wdeg(e) for e in self.terms}
        return len(degs) <= 1

    def is_term(self):
        return len(self.terms) == 1

    def canonical_str(self) -> str:
        return poly_str(self)

    def __repr__(self):
        return poly_str(self)


def _mono_str(ring, e):
    parts = []
    for i, x in enumerate(e):
        if x == 1:
            parts.append(ring.names[i])
        elif x > 1:
            parts.append(f"{ring.names[i]}^{x}")
    return "*".join(parts)


def poly_str(f: Poly) -> str:
    """Canonical text: terms sorted by graded reverse lex, descending."""
    if not f.terms:
        return "0"
    key = GrevlexOrder(f.ring).key
    out = []
    for e in sorted(f.terms, key=key, reverse=True):
        c = f.terms[e]
        mono = _mono_str(f.ring, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{qq_str(mag)}*{mono}"
        else:
            body = qq_str(mag)
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def _parse_poly(ring, text):
    text = text.replace("- ", "-").replace("+ ", "+").replace(" ", "")
    if not text or text == "0":
        return ring.zero()
    chunks = []
    cur = ""
    for ch in text:
        if ch in "+-" and cur and cur[-1] not in "^*+-":
            chunks.append(cur)
            cur = ch if ch == "-" else ""
        else:
            cur += ch
    chunks.append(cur)
    result = ring.zero()
    for chunk in chunks:
        sign = ONE
        if chunk.startswith("-"):
            sign, chunk = -ONE, chunk[1:]
        elif chunk.startswith("+"):
            chunk = chunk[1:]
        coeff = sign
        exps = [0] * ring.nvars
        for factor in chunk.split("*"):
            if not factor:
                continue
            if factor[0].isdigit():
                coeff *= parse_qq(factor)
                continue
            if "^" in factor:
                name, p = factor.split("^")
                exps[ring.index[name]] += int(p)
            else:
                exps[ring.index[factor]] += 1
        result = result + ring.monomial(exps, coeff)
    return result


# ---------------------------------------------------------------------------
# monomial orders: objects exposing key(exps) with leading term = max key


class GrevlexOrder:
    """Graded (by ring degrees) reverse lexicographic order."""

    __slots__ = ("ring", "degrees")

    def __init__(self, ring):
        self.ring = ring
        self.degrees = ring.degrees

    def key(self, e):
        return (dot(self.degrees, e),) + tuple(-x for x in reversed(e))

    @property
    def needs_homogeneous(self):
        return False

    def tag(self):
        return "grevlex"


class PermutedGrevlexOrder:
    """Grevlex on a permuted variable list; perm[-1] plays the revlex-cheapest slot."""

    __slots__ = ("ring", "perm", "degrees")

    def __init__(self, ring, perm):
        self.ring = ring
        self.perm = tuple(perm)
        self.degrees = ring.degrees

    def key(self, e):
        return (dot(self.degrees, e),) + tuple(-e[i] for i in reversed(self.perm))

    @property
    def needs_homogeneous(self):
        return False

    def tag(self):
        return f"grevlex{self.perm}"


class WeightOrder:
    """MIN-convention weight order: leading terms have minimal w*u, grevlex tiebreak."""

    __slots__ = ("ring", "weights", "_gk")

    def __init__(self, ring, weights):
        if len(weights) != ring.nvars:
            raise ValueError("weight length mismatch")
        self.ring = ring
        self.weights = tuple(int(x) for x in weights)
        self._gk = GrevlexOrder(ring)

    def key(self, e):
        return (-dot(self.weights, e),) + self._gk.key(e)

    @property
    def needs_homogeneous(self):
        # -w refined by grevlex is not a well-order; homogeneity restores termination
        return True

    def tag(self):
        return f"w{self.weights}"


class ElimOrder:
    """Block order eliminating the given variables (their total degree first)."""

    __slots__ = ("ring", "elim", "_gk")

    def __init__(self, ring, elim_indices):
        self.ring = ring
        self.elim = tuple(sorted(elim_indices))
        self._gk = GrevlexOrder(ring)

    def key(self, e):
        return (sum(e[i] for i in self.elim),) + self._gk.key(e)

    @property
    def needs_homogeneous(self):
        return False

    def tag(self):
        return f"elim{self.elim}"


def initial_form(f: Poly, w) -> Poly:
    """Sum of the terms of f attaining the minimum of w*u."""
    if not f.terms:
        return f
    vals = {e: dot(w, e) for e in f.terms}
    m = min(vals.values())
    return Poly(f.ring, {e: c for e, c in f.terms.items() if vals[e] == m}, normalize=False)


# ---------------------------------------------------------------------------
# ideals and Groebner bases


class Ideal:
    __slots__ = ("ring", "gens")

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = tuple(g for g in gens if g)

    def __repr__(self):
        return f"Ideal<{len(self.gens)} gens>"

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.gens == other.gens

    def canonical_strs(self):
        return tuple(poly_str(g) for g in self.gens)


class GroebnerBasis:
    """Reduced Groebner basis with marked leading exponents."""

    __slots__ = ("ring", "order", "polys", "leads")

    def __init__(self, ring, order, polys):
        self.ring = ring
        self.order = order
        self.polys = tuple(polys)
        self.leads = tuple(max(g.terms, key=order.key) for g in self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def normal_form(self, f: Poly) -> Poly:
        key = self.order.key
        gens = [_sorted_terms(g, key) for g in self.polys]
        return _from_terms(self.ring, _reduce_full(_sorted_terms(f, key), gens, key))

    def contains(self, f: Poly) -> bool:
        return not self.normal_form(f)

    def ideal_contains(self, other: Ideal) -> bool:
        return all(self.contains(g) for g in other.gens)


# internal representation: term list [(key, exps, coeff)] sorted descending


def _sorted_terms(f: Poly, key):
    return sorted(((key(e), e, c) for e, c in f.terms.items()), reverse=True)


def _from_terms(ring, terms):
    return Poly(ring, {e: c for _, e, c in terms}, normalize=False)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _reduce_full(f, gens, key):
    """Full normal form of term list f modulo marked term lists gens."""
    out = []
    work = list(f)
    while work:
        _, e, c = work[0]
        red = None
        for g in gens:
            if _divides(g[0][1], e):
                red = g
                break
        if red is None:
            out.append(work.pop(0))
            continue
        _, ge, gc = red[0]
        shift = tuple(x - y for x, y in zip(e, ge))
        factor = c / gc
        merged = {ee: cc for _, ee, cc in work}
        for _, ee, cc in red:
            e2 = tuple(x + y for x, y in zip(ee, shift))
            s = merged.get(e2, ZERO) - factor * cc
            if s:
                merged[e2] = s
            else:
                merged.pop(e2, None)
        work = sorted(((key(ee), ee, cc) for ee, cc in merged.items()), reverse=True)
    return out


def groebner_basis(gens, order) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger with the Gebauer-Moeller criteria."""
    ring = gens[0].ring if gens else None
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("no nonzero generators")
    ring = gens[0].ring
    if order.needs_homogeneous:
        for g in gens:
            if not g.is_homogeneous():
                raise NotHomogeneous(
                    "weight orders require generators homogeneous for the ring degrees"
                )
    key = order.key

    basis = []  # term lists
    leads = []  # exponent tuples
    pairs = []  # heap of (lcm_key, i, j, lcm)

    def lcm_of(i, j):
        return tuple(max(a, b) for a, b in zip(leads[i], leads[j]))

    def add_pairs(t):
        # Gebauer-Moeller update for the new element with index t
        new = []
        lt = leads[t]
        for i in range(t):
            new.append((lcm_of(i, t), i))
        # criterion M/F: drop (i,t) whose lcm is a proper multiple of another lcm(j,t)
        keep = []
        for lcm, i in new:
            redundant = False
            for lcm2, j in new:
                if j != i and lcm2 != lcm and _divides(lcm2, lcm):
                    redundant = True
                    break
            if redundant:
                continue
            keep.append((lcm, i))
        # equal-lcm duplicates: keep a single representative, prefer coprime pairs
        bucket = {}
        for lcm, i in keep:
            bucket.setdefault(lcm, []).append(i)
        for lcm, idxs in bucket.items():
            chosen = None
            for i in idxs:
                if all(a == 0 or b == 0 for a, b in zip(leads[i], lt)):
                    chosen = None  # product criterion: drop the whole class
                    break
            else:
                chosen = idxs[0]
            if chosen is not None:
                heapq.heappush(pairs, (key(lcm), chosen, t, lcm))
        # prune old pairs via the new lead (chain criterion)
        survivors = []
        while pairs:
            item = heapq.heappop(pairs)
            _, i, j, lcm = item
            if (
                _divides(lt, lcm)
                and lcm_of(i, t) != lcm
                and lcm_of(j, t) != lcm
            ):
                continue
            survivors.append(item)
        for item in survivors:
            heapq.heappush(pairs, item)

    for g in sorted(gens, key=lambda p: _sorted_terms(p, key)[0][0]):
        terms = _sorted_terms(g, key)
        terms = _reduce_full(terms, basis, key)
        if not terms:
            continue
        basis.append(terms)
        leads.append(terms[0][1])
        add_pairs(len(basis) - 1)

    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        gi, gj = basis[i], basis[j]
        ki, ei, ci = gi[0]
        kj, ej, cj = gj[0]
        si = tuple(a - b for a, b in zip(lcm, ei))
        sj = tuple(a - b for a, b in zip(lcm, ej))
        merged = {}
        for _, e, c in gi:
            e2 = tuple(a + b for a, b in zip(e, si))
            merged[e2] = merged.get(e2, ZERO) + c / ci
        for _, e, c in gj:
            e2 = tuple(a + b for a, b in zip(e, sj))
            merged[e2] = merged.get(e2, ZERO) - c / cj
        spair = sorted(((key(e), e, c) for e, c in merged.items() if c), reverse=True)
        rem = _reduce_full(spair, basis, key)
        if rem:
            basis.append(rem)
            leads.append(rem[0][1])
            add_pairs(len(basis) - 1)

    # minimalize: drop elements whose lead is divisible by another lead.
    # Sort by exponent sum so divisors are seen before their multiples
    # (weight-order keys are not compatible with divisibility).
    order_idx = sorted(range(len(basis)), key=lambda i: (sum(leads[i]), key(leads[i])))
    minimal = []
    for i in order_idx:
        if any(_divides(basis[j][0][1], leads[i]) for j in minimal if j != i):
            continue
        minimal.append(i)
    # inter-reduce tails and normalize to monic
    final = []
    chosen = [basis[i] for i in minimal]
    for idx, terms in enumerate(chosen):
        others = chosen[:idx] + chosen[idx + 1 :]
        red = _reduce_full(list(terms), others, key)
        lead_c = red[0][2]
        red = [(k, e, c / lead_c) for k, e, c in red]
        final.append(red)
        chosen[idx] = red
    polys = sorted((_from_terms(ring, t) for t in final), key=lambda p: key(max(p.terms, key=key)))
    return GroebnerBasis(ring, order, polys)


# ---------------------------------------------------------------------------
# derived operations


def initial_data(ideal: Ideal, w):
    """(reduced generators of in_w(I), marked GB of I for the weight order).

    The initial forms of the reduced weight-order GB are the reduced grevlex
    GB of the initial ideal, so the first component is canonical in the ideal.
    """
    order = WeightOrder(ideal.ring, w)
    gb = groebner_basis(list(ideal.gens), order)
    gkey = GrevlexOrder(ideal.ring).key
    init_gens = tuple(
        sorted(
            (initial_form(g, w) for g in gb.polys),
            key=lambda p: gkey(max(p.terms, key=gkey)),
        )
    )
    return init_gens, gb


def initial_ideal(ideal: Ideal, w) -> Ideal:
    gens, _ = initial_data(ideal, w)
    return Ideal(ideal.ring, gens)


def is_binomial(gens) -> bool:
    """All reduced generators have at most two terms."""
    return all(g.num_terms() <= 2 for g in gens)


def is_monomial_free(gens) -> bool:
    """No reduced generator is a single term (complete for reduced GBs)."""
    return all(g.num_terms() != 1 for g in gens)


def reduced_grevlex_basis(ideal: Ideal) -> GroebnerBasis:
    return groebner_basis(list(ideal.gens), GrevlexOrder(ideal.ring))


def minimal_generator_count(gens) -> int:
    """Size of a minimal homogeneous generating set (gens must be homogeneous)."""
    ring = gens[0].ring
    items = sorted(gens, key=lambda g: (g.total_degree(), poly_str(g)))
    kept = []
    count = 0
    for g in items:
        if kept:
            gb = groebner_basis(kept, GrevlexOrder(ring))
            if not gb.normal_form(g):
                continue
        kept.append(g)
        count += 1
    return count


def ideals_equal(a: Ideal, b: Ideal) -> bool:
    ga = reduced_grevlex_basis(a)
    gb = reduced_grevlex_basis(b)
    return tuple(poly_str(p) for p in ga.polys) == tuple(poly_str(p) for p in gb.polys)


def saturate(ideal: Ideal, f: Poly) -> Ideal:
    """(I : f^infinity) via elimination of t from I + <1 - t*f>."""
    if not f:
        raise ValueError("cannot saturate by zero")
    ring = ideal.ring
    # fresh variable name
    tname = "t_"
    while tname in ring.index:
        tname += "_"
    big = ring.extend([tname], [1])
    ti = big.nvars - 1

    def lift(p):
        return Poly(big, {e + (0,): c for e, c in p.terms.items()}, normalize=False)

    rel = big.one() - big.var(ti) * lift(f)
    gens = [lift(g) for g in ideal.gens] + [rel]
    gb = groebner_basis(gens, ElimOrder(big, [ti]))
    out = []
    for g in gb.polys:
        if all(e[ti] == 0 for e in g.terms):
            out.append(Poly(ring, {e[:-1]: c for e, c in g.terms.items()}, normalize=False))
    return Ideal(ring, out)


def saturate_variable(ideal: Ideal, i: int) -> Ideal:
    """(I : x_i^infinity) for homogeneous I, via reverse lex with x_i cheapest.

    With x_i last in a graded reverse lex order, dividing each reduced GB
    element by its x_i power generates the saturation.
    """
    ring = ideal.ring
    for g in ideal.gens:
        if not g.is_homogeneous():
            return saturate(ideal, ring.var(i))
    if all(all(e[i] == 0 for e in g.terms) for g in ideal.gens):
        return ideal
    perm = [j for j in range(ring.nvars) if j != i] + [i]
    gb = groebner_basis(list(ideal.gens), PermutedGrevlexOrder(ring, perm))
    out = []
    for g in gb.polys:
        m = min(e[i] for e in g.terms)
        if m:
            g = Poly(ring, {e[:i] + (e[i] - m,) + e[i + 1 :]: c for e, c in g.terms.items()}, normalize=False)
        out.append(g)
    return Ideal(ring, out)


def saturate_all_variables(ideal: Ideal) -> Ideal:
    """(I : (x_1...x_n)^infinity), variable by variable."""
    cur = ideal
    for i in range(ideal.ring.nvars):
        cur = saturate_variable(cur, i)
    return Ideal(ideal.ring, reduced_grevlex_basis(cur).polys)


def homogenize(ideal: Ideal, name="h") -> Ideal:
    """Homogenize generators with a fresh weight-1 variable."""
    ring = ideal.ring
    hname = name
    while hname in ring.index:
        hname += "_"
    big = ring.extend([hname], [1])
    out = []
    for g in ideal.gens:
        d = max(ring.wdeg(e) for e in g.terms)
        out.append(Poly(big, {e + (d - ring.wdeg(e),): c for e, c in g.terms.items()}, normalize=False))
    return Ideal(big, out)


def dehomogenize(ideal: Ideal, small: PolyRing) -> Ideal:
    """Set the last variable to 1, landing in the given ring."""
    out = []
    for g in ideal.gens:
        terms = {}
        for e, c in g.terms.items():
            e2 = e[:-1]
            terms[e2] = terms.get(e2, ZERO) + c
        out.append(Poly(small, terms))
    return Ideal(small, [g for g in out if g])


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals: dimension and degree


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _minimalize(gens):
    out = []
    for g in sorted(gens, key=sum):
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _kpoly(gens, weights, memo):
    """Numerator of the Hilbert series of S/<gens> over prod (1-t^w_i)^0 ... as dict."""
    gens = _minimalize(gens)
    if not gens:
        return {0: 1}
    cached = memo.get(gens)
    if cached is not None:
        return cached
    if all(_coprime(gens[i], gens[j]) for i in range(len(gens)) for j in range(i + 1, len(gens))):
        out = {0: 1}
        for g in gens:
            d = dot(weights, g)
            nxt = dict(out)
            for k, c in out.items():
                nxt[k + d] = nxt.get(k + d, 0) - c
            out = {k: c for k, c in nxt.items() if c}
        memo[gens] = out
        return out
    # pivot on the most shared variable
    counts = [0] * len(gens[0])
    for g in gens:
        for j, x in enumerate(g):
            if x:
                counts[j] += 1
    pj = max(range(len(counts)), key=lambda j: counts[j])
    pivot = tuple(1 if j == pj else 0 for j in range(len(counts)))
    plus = tuple(g for g in gens if g[pj] == 0) + (pivot,)
    colon = tuple(tuple(x - 1 if j == pj and x > 0 else x for j, x in enumerate(g)) for g in gens)
    ka = _kpoly(plus, weights, memo)
    kb = _kpoly(colon, weights, memo)
    w = weights[pj]
    out = dict(ka)
    for k, c in kb.items():
        out[k + w] = out.get(k + w, 0) + c
    out = {k: c for k, c in out.items() if c}
    memo[gens] = out
    return out


def hilbert_dim_degree(lead_exps, weights):
    """(Krull dimension, degree) of S/<monomials> from the Hilbert numerator."""
    n = len(weights)
    memo = {}
    k = _kpoly(tuple(tuple(g) for g in lead_exps), tuple(weights), memo)
    # strip (1-t) factors: q_i = k_i + q_{i-1}
    e = 0
    coeffs = k
    while coeffs and sum(coeffs.values()) == 0:
        maxd = max(coeffs)
        q = {}
        acc = 0
        for d in range(0, maxd + 1):
            acc += coeffs.get(d, 0)
            if acc:
                q[d] = acc
        coeffs = q
        e += 1
    degree = sum(coeffs.values()) if coeffs else 0
    return n - e, degree


def degree_via_hilbert(ideal: Ideal) -> int:
    """Degree of Proj(S/I) for I homogeneous in the ring grading."""
    for g in ideal.gens:
        if not g.is_homogeneous():
            raise NotHomogeneous("degree requires homogeneous generators")
    gb = reduced_grevlex_basis(ideal)
    _, deg = hilbert_dim_degree(gb.leads, ideal.ring.degrees)
    return deg


def krull_dimension(ideal: Ideal) -> int:
    gb = reduced_grevlex_basis(ideal)
    dim, _ = hilbert_dim_degree(gb.leads, ideal.ring.degrees)
    return dim
