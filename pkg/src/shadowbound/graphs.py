"""Simple graphs as per-vertex adjacency bitmasks, plus triangle-degree analysis.

Also holds the two halves of the hypergraph/graph correspondence: the shadow
graph of a triple system, and the family of cliques spanned by a graph.
"""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, TextIO

from .families import SetFamily, bits


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if row >> self.n:
                raise ValueError(f"neighbor out of range at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex i is the old vertex ``order[i]``."""
        pos = {old: new for new, old in enumerate(order)}
        return Graph.from_edges(self.n, ((pos[u], pos[v]) for u, v in self.edges()))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def edge_count_within(self, mask: int) -> int:
        return sum((self.adj[u] & mask).bit_count() for u in bits(mask)) // 2


def neighborhood_edge_count(G: Graph, v: int) -> int:
    """e(N(v)), i.e. the number of triangles through v."""
    nb = G.adj[v]
    adj = G.adj
    return sum((adj[u] & nb).bit_count() for u in bits(nb)) // 2


def triangle_degrees(G: Graph) -> list[int]:
    return [neighborhood_edge_count(G, v) for v in range(G.n)]


def min_triangle_degree(G: Graph) -> int:
    if G.n < 1:
        raise ValueError("graph has no vertices")
    return min(triangle_degrees(G))


def max_triangle_degree(G: Graph) -> int:
    if G.n < 1:
        raise ValueError("graph has no vertices")
    return max(triangle_degrees(G))


def shadow_graph(F: SetFamily) -> Graph:
    if F.k != 3:
        raise ValueError(f"shadow_graph needs a 3-uniform family, got k={F.k}")
    edges = set()
    for e in F.edges:
        a, b, c = bits(e)
        edges.update(((a, b), (a, c), (b, c)))
    return Graph.from_edges(F.n, edges)


def clique_family(G: Graph, k: int) -> SetFamily:
    """All k-subsets of V(G) spanning a complete subgraph (empty when k > n)."""
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    out = []

    def extend(mask: int, cands: int, size: int) -> None:
        if size == k:
            out.append(mask)
            return
        for v in bits(cands):
            # only larger candidates, so each clique is produced once
            extend(mask | 1 << v, cands & G.adj[v] & ~((2 << v) - 1), size + 1)

    extend(0, (1 << G.n) - 1, 0)
    return SetFamily(G.n, k, frozenset(out))


# ---------------------------------------------------------------- graph6 / edge lists


def _n_to_graph6(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def to_graph6(G: Graph) -> str:
    """Encode as graph6 (no header, no trailing newline)."""
    out = bytearray(_n_to_graph6(G.n))
    chunk = nbits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            chunk = chunk << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chunk + 63)
                chunk = nbits = 0
    if nbits:
        out.append((chunk << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(s: str | bytes) -> Graph:
    if isinstance(s, str):
        s = s.encode("ascii")
    s = s.strip()
    if s.startswith(b">>graph6<<"):
        s = s[10:]
    data = [c - 63 for c in s]
    if any(not 0 <= c < 64 for c in data):
        raise ValueError("invalid graph6 character")
    if data[0] < 63:
        n, data = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = 0
        for c in data[2:8]:
            n = n << 6 | c
        data = data[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) != need:
        raise ValueError(f"graph6 body has {len(data)} bytes, expected {need}")
    bitstream = (c >> s & 1 for c in data for s in range(5, -1, -1))
    edges = []
    for j in range(1, n):
        for i in range(j):
            if next(bitstream):
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def write_edgelist(G: Graph, fh: TextIO) -> None:
    fh.write(f"{G.n}\n")
    for u, v in G.edges():
        fh.write(f"{u} {v}\n")


def read_edgelist(fh: TextIO) -> Graph:
    lines = [ln.split() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 1:
        raise ValueError("edge-list file must start with a header line 'n'")
    n = int(lines[0][0])
    edges = []
    for ln in lines[1:]:
        if len(ln) != 2:
            raise ValueError(f"bad edge line: {' '.join(ln)}")
        edges.append((int(ln[0]), int(ln[1])))
    return Graph.from_edges(n, edges)


def format_edgelist(G: Graph) -> str:
    buf = io.StringIO()
    write_edgelist(G, buf)
    return buf.getvalue()


def parse_edgelist(text: str) -> Graph:
    return read_edgelist(io.StringIO(text))


# ---------------------------------------------------------------- canonical form


def _refine(G: Graph, colors: list) -> list[int]:
    """Colour refinement with canonical renumbering of the classes."""
    uniq = sorted(set(colors))
    cur = [uniq.index(c) for c in colors]
    while True:
        sigs = [(cur[v], tuple(sorted(cur[u] for u in bits(G.adj[v])))) for v in range(G.n)]
        uniq = sorted(set(sigs))
        new = [uniq.index(s) for s in sigs]
        if len(uniq) == len(set(cur)):
            return new
        cur = new


def _code(G: Graph, order: Sequence[int]) -> int:
    code = 0
    adj = G.adj
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def _canonical_order(G: Graph) -> list[int]:
    best: list = [None, None]

    def search(colors: list[int]) -> None:
        if len(set(colors)) == G.n:
            order = sorted(range(G.n), key=colors.__getitem__)
            code = _code(G, order)
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, order
            return
        # first smallest non-singleton cell, chosen by colour only
        sizes = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        cell_color = min((s, c) for c, s in sizes.items() if s > 1)[1]
        done: list[int] = []
        for v in range(G.n):
            if colors[v] != cell_color:
                continue
            # swapping twins is an automorphism fixing the colouring: same subtree
            if any(G.adj[u] & ~(1 << v) == G.adj[v] & ~(1 << u) for u in done):
                continue
            done.append(v)
            search(_refine(G, [(c, 0 if u == v else 1) for u, c in enumerate(colors)]))

    search(_refine(G, G.degrees()))
    return best[1]


def canonical_form(G: Graph) -> Graph:
    """Isomorphism-invariant relabeling of G (exponential worst case, meant for small n)."""
    if G.n <= 1:
        return G
    return G.relabel(_canonical_order(G))


def canonical_graph6(G: Graph) -> str:
    return to_graph6(canonical_form(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges != H.num_edges or sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_form(G) == canonical_form(H)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, (pairs[i] for i in bits(mask)))


def triangles(G: Graph) -> Iterator[tuple[int, int, int]]:
    for u, v in G.edges():
        for w in bits(G.adj[u] & G.adj[v] & ~((2 << v) - 1)):
            yield (u, v, w)

