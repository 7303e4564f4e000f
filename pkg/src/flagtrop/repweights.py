"""Weight vectors on Pluecker variables from PBW monomials acting on wedge powers.

A root vector for the positive root a_{p,q} maps e_p to e_{q+1} and kills the
other basis vectors; on a wedge power it acts by the Leibniz rule.  For each
Pluecker index set J the minimal PBW monomial moving the highest wedge vector
to +-e_J is evaluated by a 2-adic linear form to give one weight coordinate.
"""

from __future__ import annotations

from itertools import combinations

from .exactmath import IntMatrix, solve_in_row_space
from .flag import FlagRing


class Unreachable(Exception):
    """No PBW monomial reaches the requested wedge basis vector."""


def positive_roots(n):
    """Type A_(n-1) positive roots a_{p,q} = a_p + ... + a_q as (p, q) pairs."""
    return [(p, q) for p in range(1, n) for q in range(p, n)]


def root_action(root, subset):
    """Apply f_{a_{p,q}} to the sorted wedge e_subset: (sign, new_subset) or None.

    f sends e_p to e_{q+1}; the result is resorted, None on a collision or
    when e_p does not occur.
    """
    p, q = root
    target = q + 1
    if p not in subset:
        return None
    if target in subset:
        return None
    pos_old = subset.index(p)
    rest = [x for x in subset if x != p]
    new = sorted(rest + [target])
    pos_new = new.index(target)
    sign = -1 if (pos_old - pos_new) % 2 else 1
    return sign, tuple(new)


def apply_pbw(seq, m, subset):
    """Apply f_{seq[0]}^{m[0]} ... f_{seq[-1]}^{m[-1]} (rightmost factor first).

    Returns (coeff, subset) or None when the result is zero.  On wedge powers
    every root vector squares to zero, so exponents above 1 give None.
    """
    coeff = 1
    cur = tuple(subset)
    for root, mi in zip(reversed(seq), reversed(m)):
        if mi == 0:
            continue
        if mi > 1:
            return None
        step = root_action(root, cur)
        if step is None:
            return None
        s, cur = step
        coeff *= s
    return coeff, cur


def minimal_monomial(seq, jset, n):
    """The minimal exponent m with f^m (e_1 ^ ... ^ e_k) = +-e_J.

    Order: smaller total degree first, then lexicographically LARGER exponent
    (the term order makes lex-smaller exponents larger, so its minimum is the
    lex-largest vector of minimal degree).
    """
    k = len(jset)
    start = tuple(range(1, k + 1))
    target = tuple(sorted(jset))
    nseq = len(seq)
    best = None
    for mask in range(1 << nseq):
        m = tuple((mask >> (nseq - 1 - i)) & 1 for i in range(nseq))
        deg = sum(m)
        if best is not None and deg > best[0]:
            continue
        res = apply_pbw(seq, m, start)
        if res is None or res[1] != target:
            continue
        cand = (deg, tuple(-x for x in m))  # lex-larger m sorts smaller
        if best is None or cand < best:
            best = cand
    if best is None:
        raise Unreachable(f"no monomial reaches {jset}")
    return tuple(-x for x in best[1])


def pbw_degree_oracle(seq, jset, n):
    """Breadth-first minimal number of root-vector moves from {1..k} to J."""
    k = len(jset)
    start = tuple(range(1, k + 1))
    target = tuple(sorted(jset))
    frontier = {start}
    seen = {start}
    dist = 0
    roots = set(seq)
    while True:
        if target in frontier:
            return dist
        nxt = set()
        for s in frontier:
            for r in roots:
                step = root_action(r, s)
                if step and step[1] not in seen:
                    seen.add(step[1])
                    nxt.add(step[1])
        if not nxt:
            raise Unreachable(f"{jset} unreachable")
        frontier = nxt
        dist += 1


def evaluation_form(m):
    """2-adic form: 2^{N-1} m_1 + ... + 2 m_{N-1} + m_N."""
    n = len(m)
    return sum(mi << (n - 1 - i) for i, mi in enumerate(m))


def word_root_sequence(letters):
    """Simple-root sequence of a reduced word (letter i -> a_{i,i})."""
    return [(i, i) for i in letters]


def string_weight_vector(letters, fr: FlagRing):
    """Weight of p_J = e(m_J) for the word's PBW sequence, in ring order."""
    seq = word_root_sequence(letters)
    return tuple(
        evaluation_form(minimal_monomial(seq, s, fr.n)) for s in fr.subsets
    )


# ---------------------------------------------------------------------------
# FFLV weight vectors over the good (height-ordered) PBW sequence


def fflv_sequence(n):
    """All positive roots ordered by decreasing height, then by (p, q)."""
    roots = positive_roots(n)
    return sorted(roots, key=lambda r: (-(r[1] - r[0]), r))


FFLV_FORMS_4 = {
    "min": (1, 2, 1, 2, 1, 1),
    "reg": (3, 4, 2, 3, 2, 1),
}


def _fflv_targets_5():
    from .tables import FFLV_MIN_5, FFLV_REG_5

    return {"min": FFLV_MIN_5, "reg": FFLV_REG_5}


def _fflv_minimal_monomials(n, fr: FlagRing):
    seq = fflv_sequence(n)
    return seq, [minimal_monomial(seq, s, n) for s in fr.subsets]


def derive_fflv_forms(n, fr: FlagRing):
    """Integer linear forms on exponents reproducing the tabulated vectors."""
    if n == 4:
        return FFLV_FORMS_4
    seq, monos = _fflv_minimal_monomials(n, fr)
    mat = IntMatrix(list(zip(*monos)))  # rows: coordinates of the form
    forms = {}
    for tag, target in _fflv_targets_5().items():
        sol = solve_in_row_space(mat, [target])
        if sol is None:
            raise Unreachable("no integer form reproduces the tabulated vector")
        forms[tag] = sol[0]
    return forms


def fflv_weight_vectors(n, fr: FlagRing = None):
    """(w_min, w_reg) for the height-ordered PBW sequence."""
    if n not in (4, 5):
        raise ValueError("supported for n in {4, 5}")
    fr = fr or FlagRing(n)
    seq, monos = _fflv_minimal_monomials(n, fr)
    forms = derive_fflv_forms(n, fr)
    wmin = tuple(sum(c * m for c, m in zip(forms["min"], mono)) for mono in monos)
    wreg = tuple(sum(c * m for c, m in zip(forms["reg"], mono)) for mono in monos)
    return wmin, wreg
