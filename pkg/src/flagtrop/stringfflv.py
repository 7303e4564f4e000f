"""String cones and polytopes from pseudoline arrangements and rigorous paths;
FFLV polytopes from Dyck paths; weak Minkowski property; Weyl dimensions."""

from __future__ import annotations

from itertools import combinations

from .exactmath import QQ, RationalCone
from .polytopes import Polytope, minkowski_sum
from .repweights import positive_roots


class NotReduced(Exception):
    pass


class NonDominant(Exception):
    pass


def longest_word_length(n):
    return n * (n - 1) // 2


def is_reduced_word(letters, n) -> bool:
    """True when the letters multiply to the longest permutation reducedly."""
    if len(letters) != longest_word_length(n):
        return False
    perm = list(range(1, n + 1))
    for i in letters:
        if not 1 <= i <= n - 1:
            return False
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm == list(range(n, 0, -1))


def reduced_words(n):
    """All reduced words of the longest element, by reverse search on permutations."""
    target = tuple(range(n, 0, -1))
    out = []

    def rec(perm, word):
        if perm == target:
            out.append(tuple(word))
            return
        for i in range(1, n):
            if perm[i - 1] < perm[i]:
                nxt = list(perm)
                nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
                rec(tuple(nxt), word + [i])

    rec(tuple(range(1, n + 1)), [])
    return out


def orthogonality_class(word):
    """Words reachable by swapping adjacent commuting letters |i - j| >= 2."""
    word = tuple(word)
    seen = {word}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            if abs(w[i] - w[i + 1]) >= 2:
                w2 = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
                if w2 not in seen:
                    seen.add(w2)
                    stack.append(w2)
    return sorted(seen)


def orthogonality_classes(words):
    classes = []
    seen = set()
    for w in sorted(tuple(x) for x in words):
        if w in seen:
            continue
        cls = orthogonality_class(w)
        seen.update(cls)
        classes.append(cls)
    return classes


# ---------------------------------------------------------------------------
# pseudoline arrangements


class PseudolineArrangement:
    """Wiring diagram of a reduced word.

    Lines are labeled 1..n bottom to top on the left; the crossing at word
    position k involves the two lines occupying levels i_k, i_k + 1 there.
    Line l_j visits its crossings in left-to-right order and ends at L_j.
    """

    __slots__ = ("n", "letters", "crossings", "line_paths")

    def __init__(self, letters, n):
        letters = [int(x) for x in letters]
        if not is_reduced_word(letters, n):
            raise NotReduced(f"{letters} is not a reduced word for n={n}")
        self.n = n
        self.letters = tuple(letters)
        levels = list(range(1, n + 1))  # levels[k] = line currently at level k+1
        crossings = []
        line_paths = {j: [] for j in range(1, n + 1)}
        for pos, i in enumerate(letters):
            a, b = levels[i - 1], levels[i]
            pair = (min(a, b), max(a, b))
            crossings.append(pair)
            line_paths[a].append(pos)
            line_paths[b].append(pos)
            levels[i - 1], levels[i] = b, a
        self.crossings = tuple(crossings)
        self.line_paths = {j: tuple(ps) for j, ps in line_paths.items()}

    def crossing_index(self, i, j):
        return self.crossings.index((min(i, j), max(i, j)))

    def rigorous_paths(self, i):
        """All rigorous paths from L_i to L_{i+1} with their weight vectors.

        Orientation induced by l_i: lines k <= i run right to left, lines
        k > i run left to right.  Paths are simple (no repeated vertices);
        weights are the signed sum of c_{from,to} at line-changing crossings.
        """
        n = self.n
        N = len(self.crossings)

        def oriented_right(line):
            return line > i

        # vertex model: ('L', j) right ends, ('x', pos) crossings
        # edges: consecutive stops along each line, directed by orientation
        succ = {}

        def add_edge(u, v, line):
            succ.setdefault(u, []).append((v, line))

        for line in range(1, n + 1):
            stops = [("x", p) for p in self.line_paths[line]] + [("L", line)]
            if oriented_right(line):
                for a, b in zip(stops, stops[1:]):
                    add_edge(a, b, line)
            else:
                for a, b in zip(stops, stops[1:]):
                    add_edge(b, a, line)

        start, goal = ("L", i), ("L", i + 1)
        paths = []

        def line_of_step(u, v):
            # the unique line both vertices lie on, respecting direction
            for w, line in succ.get(u, ()):
                if w == v:
                    return line
            return None

        def rec(vertex, visited, trail):
            if vertex == goal:
                paths.append(list(trail))
                return
            for nxt, line in succ.get(vertex, ()):
                if nxt in visited:
                    continue
                # rigorous rule: no straight pass through a crossing in the two
                # forbidden orientation patterns
                if len(trail) >= 2 and trail[-1][0] == "x":
                    prev_line = line_of_step(trail[-2], trail[-1])
                    if prev_line == line:
                        a, b = self.crossings[trail[-1][1]]
                        other = a if b == line else b
                        both_right = oriented_right(line) and oriented_right(other)
                        both_left = not oriented_right(line) and not oriented_right(other)
                        if (line < other and both_left) or (line > other and both_right):
                            continue
                visited.add(nxt)
                trail.append(nxt)
                rec(nxt, visited, trail)
                trail.pop()
                visited.discard(nxt)

        rec(start, {start}, [start])

        out = []
        for trail in paths:
            weight = [0] * N
            for a, b, c in zip(trail, trail[1:], trail[2:]):
                if b[0] != "x":
                    continue
                line_in = line_of_step(a, b)
                line_out = line_of_step(b, c)
                if line_in == line_out:
                    continue
                pos = b[1]
                # moving from line_in to line_out contributes c_{line_in, line_out}
                if line_in < line_out:
                    weight[pos] += 1
                else:
                    weight[pos] -= 1
            out.append((tuple(trail), tuple(weight)))
        return out


def build_arrangement(letters, n) -> PseudolineArrangement:
    return PseudolineArrangement(letters, n)


# ---------------------------------------------------------------------------
# string cones and polytopes


def string_cone_rows(letters, n):
    """Inequality rows of the string cone in R^N (one per rigorous path)."""
    arr = PseudolineArrangement(letters, n)
    rows = []
    for i in range(1, n):
        for _, weight in arr.rigorous_paths(i):
            rows.append(weight)
    return sorted(set(rows))


def string_cone(letters, n) -> RationalCone:
    N = longest_word_length(n)
    return RationalCone(N, [], string_cone_rows(letters, n))


def weighted_string_cone_rows(letters, n):
    """Rows over (y_1..y_N, m_1..m_{n-1}) adding the weight inequalities."""
    N = longest_word_length(n)
    rows = [tuple(r) + (0,) * (n - 1) for r in string_cone_rows(letters, n)]
    for i in range(1, n):
        positions = [k for k, a in enumerate(letters) if a == i]
        adjacent = [k for k, a in enumerate(letters) if abs(a - i) == 1]
        for j in positions:
            row = [0] * (N + n - 1)
            row[N + i - 1] = 1
            row[j] -= 1
            for r in positions:
                if r > j:
                    row[r] -= 2
            for k in adjacent:
                if k > j:
                    row[k] += 1
            rows.append(tuple(row))
    return rows


def weighted_string_cone(letters, n) -> RationalCone:
    N = longest_word_length(n)
    return RationalCone(N + n - 1, [], weighted_string_cone_rows(letters, n))


def string_polytope(letters, n, lam) -> Polytope:
    """Q_{w0}(lambda) in R^N: substitute m_i = a_i in the weighted cone."""
    lam = tuple(int(a) for a in lam)
    if len(lam) != n - 1 or any(a < 0 for a in lam):
        raise NonDominant("lambda must be a nonnegative coefficient vector")
    N = longest_word_length(n)
    ineqs = []
    for row in weighted_string_cone_rows(letters, n):
        const = sum(c * a for c, a in zip(row[N:], lam))
        ineqs.append((const,) + tuple(row[:N]))
    return Polytope.from_inequalities(N, [], ineqs)


RHO = "rho"


def rho(n):
    return (1,) * (n - 1)


def fundamental_weight(n, i):
    return tuple(1 if j == i else 0 for j in range(1, n))


def weyl_dimension(n, lam) -> int:
    """Product formula for dim V(lambda) in type A_(n-1)."""
    lam = tuple(int(a) for a in lam)
    if len(lam) != n - 1 or any(a < 0 for a in lam):
        raise NonDominant("lambda must be dominant")
    num = 1
    den = 1
    for p, q in positive_roots(n):
        h = q - p + 1
        num *= sum(lam[p - 1 : q]) + h
        den *= h
    assert num % den == 0
    return num // den


def minkowski_property(letters, n):
    """The paper's count test for the weak Minkowski property at rho.

    Returns (verdict, lattice point count of the fundamental sum, dim V(rho)).
    The test counts lattice points of Q(w_1)+...+Q(w_{n-1}) and compares with
    dim V(rho); equality certifies MP, a deficit refutes it.
    """
    target = weyl_dimension(n, rho(n))
    summands = [
        string_polytope(letters, n, fundamental_weight(n, i)) for i in range(1, n)
    ]
    total = summands[0]
    for s in summands[1:]:
        total = minkowski_sum(total, s)
    count = len(total.lattice_points())
    return count == target, count, target


# ---------------------------------------------------------------------------
# Dyck paths and the FFLV polytope


def dyck_paths(n):
    """All Dyck paths: sequences of positive roots from a_i to a_j (i <= j)."""
    out = []

    def extend(path):
        p, q = path[-1]
        if p == q and len(path) > 1:
            out.append(tuple(path))
        elif p == q:
            out.append(tuple(path))
        for nxt in ((p, q + 1), (p + 1, q)):
            np, nq = nxt
            if np <= nq and nq <= n - 1:
                path.append(nxt)
                extend(path)
                path.pop()

    for i in range(1, n):
        extend([(i, i)])
    # keep only paths whose endpoints are simple roots
    return sorted(p for p in out if p[0][0] == p[0][1] and p[-1][0] == p[-1][1])


def fflv_polytope(n, lam) -> Polytope:
    """P(lambda) in root coordinates ordered by the height-descending sequence."""
    lam = tuple(int(a) for a in lam)
    if len(lam) != n - 1 or any(a < 0 for a in lam):
        raise NonDominant("lambda must be a nonnegative coefficient vector")
    from .repweights import fflv_sequence

    roots = fflv_sequence(n)
    index = {r: i for i, r in enumerate(roots)}
    N = len(roots)
    # r_i >= 0 rows; Dyck rows: sum of r_beta along the path <= m_i + ... + m_j
    rows = [(0,) + tuple(1 if j == i else 0 for j in range(N)) for i in range(N)]
    for path in dyck_paths(n):
        i, j = path[0][0], path[-1][1]
        bound = sum(lam[i - 1 : j])
        row = [bound] + [0] * N
        for beta in path:
            row[1 + index[beta]] -= 1
        rows.append(tuple(row))
    return Polytope.from_inequalities(N, [], rows)


def fflv_dyck_rows(n, lam):
    """The Dyck inequality rows (bound, coefficients) in sequence order."""
    from .repweights import fflv_sequence

    roots = fflv_sequence(n)
    index = {r: i for i, r in enumerate(roots)}
    out = []
    for path in dyck_paths(n):
        i, j = path[0][0], path[-1][1]
        bound = sum(int(a) for a in lam[i - 1 : j])
        row = [0] * len(roots)
        for beta in path:
            row[index[beta]] += 1
        out.append((bound, tuple(row)))
    return out
