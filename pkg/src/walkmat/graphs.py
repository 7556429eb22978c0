"""Simple undirected graphs: construction, graph6 I/O, rooted products.

Vertices are numbered 1..n in the public API. The adjacency matrix is
stored as a tuple of tuples of 0/1 ints, so Graph values are immutable
and hashable.
"""

from dataclasses import dataclass
from itertools import combinations, permutations


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the offending byte offset."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    adj: tuple

    def __post_init__(self):
        n = len(self.adj)
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        for i, row in enumerate(self.adj):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            if row[i] != 0:
                raise ValueError(f"nonzero diagonal at vertex {i + 1}")
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"non-0/1 adjacency entry at ({i + 1},{j + 1})")
                if v != self.adj[j][i]:
                    raise ValueError(f"asymmetric adjacency at ({i + 1},{j + 1})")

    @property
    def n(self):
        return len(self.adj)

    def edges(self):
        """Edges as 1-based (u, v) pairs with u < v."""
        return [
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.adj[i][j]
        ]

    @property
    def edge_count(self):
        return sum(row.count(1) for row in self.adj) // 2

    def degree(self, v):
        return sum(self.adj[v - 1])

    def adjacency_rows(self):
        """Adjacency as mutable list-of-lists (for the exact kernels)."""
        return [list(row) for row in self.adj]


def _graph_from_rows(rows):
    return Graph(tuple(tuple(r) for r in rows))


def graph_from_edges(n, edges):
    """Graph on n vertices with the given 1-based edges (duplicates collapse)."""
    if n < 1:
        raise ValueError("vertex count must be positive")
    rows = [[0] * n for _ in range(n)]
    for e in edges:
        u, v = e
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge {e} has an endpoint outside 1..{n}")
        if u == v:
            raise ValueError(f"loop {e} not allowed")
        rows[u - 1][v - 1] = 1
        rows[v - 1][u - 1] = 1
    return _graph_from_rows(rows)


def path_graph(m):
    """The path P_m with vertices labeled 1..m along the path."""
    if m < 1:
        raise ValueError("path length must be >= 1")
    return graph_from_edges(m, [(j, j + 1) for j in range(1, m)])


def complement(g):
    n = g.n
    rows = [
        [0 if i == j else 1 - g.adj[i][j] for j in range(n)] for i in range(n)
    ]
    return _graph_from_rows(rows)


def delete_vertex(g, v):
    """Graph with 1-based vertex v (and incident edges) removed."""
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range")
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    keep = [i for i in range(g.n) if i != v - 1]
    return _graph_from_rows([[g.adj[i][j] for j in keep] for i in keep])


@dataclass(frozen=True)
class RootedProductSpec:
    """Path length m and root position ell for G o P_m^(ell).

    ell > (m+1)/2 is accepted and normalized to m+1-ell: the two rooted
    products are isomorphic and gcd(ell, m+1) = gcd(m+1-ell, m+1).
    """

    m: int
    ell: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("path length m must be >= 1")
        if not (1 <= self.ell <= self.m):
            raise ValueError(f"root position {self.ell} not in 1..{self.m}")

    def normalized(self):
        ell = self.ell
        if 2 * ell > self.m + 1:
            ell = self.m + 1 - ell
        return self.m, ell


def rooted_product_path(g, m, ell=None):
    """The rooted product of g with P_m rooted at vertex ell of the path.

    Vertex (i, j) -- copy i of the path, position j -- gets index
    (j-1)*n + i, so the adjacency matrix equals
    A(P_m) (x) I_n + D_ell (x) A(g) entrywise.
    """
    if isinstance(m, RootedProductSpec):
        spec = m
    else:
        spec = RootedProductSpec(m, ell)
    m, ell = spec.normalized()
    n = g.n
    size = m * n
    rows = [[0] * size for _ in range(size)]
    for j in range(m - 1):  # path rungs between layers j and j+1
        for i in range(n):
            a, b = j * n + i, (j + 1) * n + i
            rows[a][b] = rows[b][a] = 1
    base = (ell - 1) * n  # copy of g at the root layer
    for i in range(n):
        for j in range(n):
            if g.adj[i][j]:
                rows[base + i][base + j] = 1
    return _graph_from_rows(rows)


def enumerate_graphs(n):
    """All 2^(n(n-1)/2) labeled graphs on n <= 6 vertices, in mask order."""
    if not (1 <= n <= 6):
        raise ValueError("labeled enumeration supported only for 1 <= n <= 6")
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_edges(
            n, [p for k, p in enumerate(pairs) if mask >> k & 1]
        )


def are_isomorphic(g, h):
    """Brute-force isomorphism test, intended for n <= 10."""
    if g.n != h.n:
        return False
    if sorted(map(sum, g.adj)) != sorted(map(sum, h.adj)):
        return False
    for perm in permutations(range(g.n)):
        if all(
            g.adj[i][j] == h.adj[perm[i]][perm[j]]
            for i in range(g.n)
            for j in range(i + 1, g.n)
        ):
            return True
    return False


# graph6 (McKay's format): N(n) followed by the upper triangle read in
# column order, packed into 6-bit groups offset by 63.

_G6_HEADER = ">>graph6<<"


def _g6_size(data, pos):
    if pos >= len(data):
        raise Graph6Error("missing size field", pos)
    c = data[pos]
    if not (63 <= c <= 126):
        raise Graph6Error(f"byte {c} outside graph6 range 63..126", pos)
    if c < 126:
        return c - 63, pos + 1
    # 4-byte form: 126 then 18 bits
    if pos + 4 > len(data):
        raise Graph6Error("truncated 4-byte size field", pos)
    if data[pos + 1] == 126:
        raise Graph6Error("8-byte graph6 sizes not supported", pos)
    n = 0
    for k in range(1, 4):
        c = data[pos + k]
        if not (63 <= c <= 126):
            raise Graph6Error(f"byte {c} outside graph6 range 63..126", pos + k)
        n = n << 6 | (c - 63)
    return n, pos + 4


def graph6_decode(text):
    """Decode one graph6 string (optional >>graph6<< header)."""
    if isinstance(text, bytes):
        data = text
    else:
        data = text.encode("ascii", "replace")
    data = data.strip()
    if data.startswith(_G6_HEADER.encode()):
        data = data[len(_G6_HEADER):]
    n, pos = _g6_size(data, 0)
    if n == 0:
        raise Graph6Error("graph6 with zero vertices", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6Error(
            f"expected {nbytes} data bytes for n={n}, got {len(data) - pos}", pos
        )
    bits = []
    for k in range(nbytes):
        c = data[pos + k]
        if not (63 <= c <= 126):
            raise Graph6Error(f"byte {c} outside graph6 range 63..126", pos + k)
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    rows = [[0] * n for _ in range(n)]
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i][j] = rows[j][i] = 1
            k += 1
    return _graph_from_rows(rows)


def graph6_encode(g):
    """Encode a Graph as a graph6 string (no header)."""
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        raise ValueError("graphs beyond the 4-byte graph6 size are unsupported")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(g.adj[i][j])
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = v << 1 | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


def parse_edge_list(text):
    """Parse the plain-text edge-list format: "n\\nu v\\n..."."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty edge-list input")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)


def format_edge_list(g):
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
