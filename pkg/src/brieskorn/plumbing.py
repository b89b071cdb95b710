"""Star-shaped plumbing trees and exact integer linear algebra.

The canonical plumbing of Sigma(p,q,r) is a star: one central vertex of
weight b and one leg per exceptional fiber, the leg for (alpha, beta) carrying
weights -c1, ..., -ck where alpha/beta = c1 - 1/(c2 - 1/(... - 1/ck)) is the
negative (Hirzebruch-Jung) continued fraction, all ci >= 2.

Everything here is exact: determinants by fraction-free elimination (with an
integer tree recursion for forest-shaped matrices), inertia by Sylvester-style
symmetric elimination over rationals.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import InvalidFraction, NotStarShaped, SingularMatrix
from .seifert import BrieskornTriple, SeifertData, seifert_invariants


@dataclass(frozen=True)
class IntMatrix:
    """Symmetric matrix of exact (arbitrary-precision) integers."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError("matrix is not symmetric")

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        out = []
        for row in rows:
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise ValueError(f"matrix entry {x!r} is not an integer")
            out.append(tuple(row))
        return cls(tuple(out))

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted tree; ``origin`` optionally records the triple it encodes."""

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    origin: tuple[BrieskornTriple, SeifertData] | None = field(
        default=None, compare=False
    )

    def __post_init__(self):
        n = len(self.weights)
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad edge ({i},{j})")
        if n == 0:
            if self.edges:
                raise ValueError("empty graph cannot have edges")
            return
        if len(self.edges) != n - 1 or not self._connected():
            raise ValueError("plumbing graph must be a tree")

    def _connected(self) -> bool:
        n = len(self.weights)
        adj = [[] for _ in range(n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for k in adj[stack.pop()]:
                if k not in seen:
                    seen.add(k)
                    stack.append(k)
        return len(seen) == n

    @property
    def vertex_count(self) -> int:
        return len(self.weights)

    def degrees(self) -> list[int]:
        deg = [0] * len(self.weights)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def to_json_obj(self) -> dict:
        """Wire format: {"weights": [...], "edges": [[i, j], ...]}."""
        return {
            "weights": list(self.weights),
            "edges": [[i, j] for i, j in self.edges],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "PlumbingGraph":
        return cls(
            tuple(int(w) for w in obj["weights"]),
            tuple((int(i), int(j)) for i, j in obj["edges"]),
        )

    def to_dot(self, name: str = "plumbing") -> str:
        lines = [f"graph {name} {{"]
        for i, w in enumerate(self.weights):
            lines.append(f'  v{i} [label="{w}"];')
        for i, j in self.edges:
            lines.append(f"  v{i} -- v{j};")
        lines.append("}")
        return "\n".join(lines)


def hj_expand(a: int, b: int) -> list[int]:
    """Negative continued fraction a/b = [c1, ..., ck], all ci >= 2.

    Requires 0 < b < a and gcd(a, b) = 1.
    """
    if not (0 < b < a):
        raise InvalidFraction(f"need 0 < {b} < {a}")
    if gcd(a, b) != 1:
        raise InvalidFraction(f"gcd({a},{b}) != 1")
    out = []
    while b > 0:
        c = -((-a) // b)  # ceiling of a/b
        out.append(c)
        a, b = b, c * b - a
    return out


def hj_evaluate(cs) -> tuple[int, int]:
    """Fold [c1, ..., ck] back to (a, b) with a/b = c1 - 1/(c2 - ...)."""
    num, den = 1, 0
    for c in reversed(cs):
        num, den = c * num - den, num
    return num, den


def star_plumbing(s: SeifertData) -> PlumbingGraph:
    """Canonical star plumbing: center b, then legs outward in leg order."""
    weights = [s.b]
    edges = []
    for a, beta in s.legs:
        prev = 0
        for c in hj_expand(a, beta):
            weights.append(-c)
            edges.append((prev, len(weights) - 1))
            prev = len(weights) - 1
    return PlumbingGraph(tuple(weights), tuple(edges), origin=None)


def brieskorn_plumbing(t: BrieskornTriple) -> PlumbingGraph:
    """star_plumbing of the triple's Seifert data, with origin attached."""
    s = seifert_invariants(t)
    g = star_plumbing(s)
    return PlumbingGraph(g.weights, g.edges, origin=(t, s))


def intersection_matrix(g: PlumbingGraph) -> IntMatrix:
    n = g.vertex_count
    m = [[0] * n for _ in range(n)]
    for i, w in enumerate(g.weights):
        m[i][i] = w
    for i, j in g.edges:
        m[i][j] = m[j][i] = 1
    return IntMatrix.from_rows(m)


def graph_to_seifert(g: PlumbingGraph) -> SeifertData:
    """Invert star_plumbing: read (b; (alpha_i, beta_i)) off a 3-legged star."""
    n = g.vertex_count
    deg = g.degrees()
    centers = [i for i in range(n) if deg[i] >= 3]
    if len(centers) != 1 or deg[centers[0]] != 3:
        raise NotStarShaped("need exactly one vertex of degree 3")
    center = centers[0]
    adj = [[] for _ in range(n)]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    legs = []
    for start in sorted(adj[center]):
        chain = []
        prev, cur = center, start
        while True:
            chain.append(cur)
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        cs = []
        for v in chain:
            if g.weights[v] > -2:
                raise NotStarShaped(f"leg weight {g.weights[v]} > -2")
            cs.append(-g.weights[v])
        legs.append(hj_evaluate(cs))
    legs.sort()
    return SeifertData(g.weights[center], tuple(legs))


# ---------------------------------------------------------------------------
# exact linear algebra


def _forest_structure(m: IntMatrix):
    """Adjacency lists of the nonzero off-diagonal graph, or None if cyclic."""
    n = m.n
    adj = [[] for _ in range(n)]
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            if m.entries[i][j] != 0:
                adj[i].append(j)
                adj[j].append(i)
                count += 1
    # a forest has < n edges; verify acyclicity by leaf stripping
    if count >= n and n > 0:
        return None
    deg = [len(a) for a in adj]
    order = [i for i in range(n) if deg[i] <= 1]
    removed = [False] * n
    seen = 0
    idx = 0
    while idx < len(order):
        v = order[idx]
        idx += 1
        if removed[v]:
            continue
        removed[v] = True
        seen += 1
        for u in adj[v]:
            if not removed[u]:
                deg[u] -= 1
                if deg[u] <= 1:
                    order.append(u)
    return adj if seen == n else None


def _forest_determinant(m: IntMatrix, adj) -> int:
    """Exact determinant of a forest-shaped symmetric matrix, O(n).

    For a rooted tree let D(v) = det of the subtree at v and E(v) = det of
    that subtree with v deleted; then with children c_i and edge values a_i:
        D(v) = w_v * prod D(c_i) - sum a_i^2 * E(c_i) * prod_{j != i} D(c_j)
        E(v) = prod D(c_i)
    """
    n = m.n
    visited = [False] * n
    det = 1
    for root in range(n):
        if visited[root]:
            continue
        # iterative post-order
        stack = [(root, -1, False)]
        dvals = {}
        evals = {}
        while stack:
            v, parent, processed = stack.pop()
            if not processed:
                visited[v] = True
                stack.append((v, parent, True))
                for u in adj[v]:
                    if u != parent:
                        stack.append((u, v, False))
                continue
            children = [u for u in adj[v] if u != parent]
            prod = 1
            for c in children:
                prod *= dvals[c]
            dv = m.entries[v][v] * prod
            for i, c in enumerate(children):
                others = 1
                for j, c2 in enumerate(children):
                    if j != i:
                        others *= dvals[c2]
                dv -= m.entries[v][c] ** 2 * evals[c] * others
            dvals[v] = dv
            evals[v] = prod
        det *= dvals[root]
    return det


def _bareiss_determinant(m: IntMatrix) -> int:
    """Fraction-free (Bareiss) elimination over arbitrary-precision ints."""
    n = m.n
    if n == 0:
        return 1
    a = m.rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant(m: IntMatrix) -> int:
    """Exact determinant; linear-time on forest-shaped matrices."""
    if m.n > 8:
        adj = _forest_structure(m)
        if adj is not None:
            return _forest_determinant(m, adj)
    return _bareiss_determinant(m)


def inertia(m: IntMatrix) -> tuple[int, int, int]:
    """(n_plus, n_minus, n_zero) by symmetric elimination over rationals.

    Sylvester's law: congruence preserves inertia, and each elimination step
    is a congruence.  Diagonal pivots are preferred low-degree-first (linear
    work on trees); a 2x2 hyperbolic block [[0,a],[a,0]] contributes (1,1,0).
    """
    n = m.n
    a: dict[int, dict[int, Fraction]] = {}
    for i in range(n):
        row = {}
        for j in range(n):
            if m.entries[i][j] != 0:
                row[j] = Fraction(m.entries[i][j])
        a[i] = row
    alive = set(range(n))
    n_pos = n_neg = n_zero = 0

    def set_sym(i: int, j: int, value: Fraction):
        if value:
            a[i][j] = value
            a[j][i] = value
        else:
            a[i].pop(j, None)
            a[j].pop(i, None)

    while alive:
        # prefer a diagonal pivot of minimal off-diagonal degree
        best = None
        for i in alive:
            if a[i].get(i):
                deg = sum(1 for j in a[i] if j != i and j in alive)
                if best is None or deg < best[0]:
                    best = (deg, i)
                    if deg <= 1:
                        break
        if best is not None:
            p = best[1]
            pivot = a[p][p]
            if pivot > 0:
                n_pos += 1
            else:
                n_neg += 1
            alive.discard(p)
            nbrs = [(i, a[p][i]) for i in list(a[p]) if i != p and i in alive]
            for x, (i, vpi) in enumerate(nbrs):
                for j, vpj in nbrs[x:]:
                    set_sym(i, j, a[i].get(j, Fraction(0)) - vpi * vpj / pivot)
                a[i].pop(p, None)
            continue
        # all live diagonals are zero: find a hyperbolic pair
        pair = None
        for i in sorted(alive):
            for j in sorted(a[i]):
                if j != i and j in alive:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            n_zero += len(alive)
            break
        i, j = pair
        v = a[i][j]
        n_pos += 1
        n_neg += 1
        alive.discard(i)
        alive.discard(j)
        # Schur complement of the block [[0, v], [v, 0]]
        nbrs = sorted(
            k for k in alive if i in a.get(k, {}) or j in a.get(k, {})
        )
        coeffs = {k: (a[k].get(i, Fraction(0)), a[k].get(j, Fraction(0))) for k in nbrs}
        for x, k in enumerate(nbrs):
            cki, ckj = coeffs[k]
            for l in nbrs[x:]:
                cli, clj = coeffs[l]
                delta = (cki * clj + ckj * cli) / v
                set_sym(k, l, a[k].get(l, Fraction(0)) - delta)
            a[k].pop(i, None)
            a[k].pop(j, None)
    return n_pos, n_neg, n_zero


def signature(m: IntMatrix) -> int:
    """n_plus - n_minus; raises SingularMatrix when det = 0."""
    n_pos, n_neg, n_zero = inertia(m)
    if n_zero:
        raise SingularMatrix("matrix is singular")
    return n_pos - n_neg


def is_negative_definite(m: IntMatrix) -> bool:
    n_pos, n_neg, n_zero = inertia(m)
    return n_pos == 0 and n_zero == 0
