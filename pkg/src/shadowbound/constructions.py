"""Generators for the (near-)extremal graphs, each certified on the way out.

Every builder takes the requirement either as a real ``t`` (each vertex in at
least C(t, 2) triangles) or as an integer ``threshold``. Internally only the
integer threshold T = ceil(C(t, 2)) is used: ceil(t) is the least c with
C(c, 2) >= T, and ceil(r) the least R >= 1 with C(h-1, 2) + 3 C(R, 2) >= T,
so no float is ever rounded up by accident.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .combinatorics import binom_inverse, binom_real, ceil_tol, min_int_with_binom_at_least
from .graphs import Graph, min_triangle_degree, triangles


class Kind(str, Enum):
    G1 = "G1"
    G2 = "G2"
    G2_PRIME = "G2_PRIME"
    DISJOINT_CLIQUES = "DISJOINT_CLIQUES"
    K_MINUS_EDGE = "K_MINUS_EDGE"
    K_MINUS_MATCHING = "K_MINUS_MATCHING"
    COMPL_2REGULAR = "COMPL_2REGULAR"


class CertificationError(RuntimeError):
    """A built graph failed its triangle-degree requirement."""


class SideConditionWarning(UserWarning):
    """The graph was built, but outside the range where it is known to be extremal."""


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    n: int
    t: float
    threshold: int
    derived: dict = field(default_factory=dict, compare=False)


def required_triangles(t=None, threshold=None) -> int:
    """Integer triangle-degree requirement ceil(C(t, 2)) (or ceil(threshold))."""
    if (t is None) == (threshold is None):
        raise ValueError("pass exactly one of t or threshold")
    if threshold is not None:
        if threshold < 0:
            raise ValueError("threshold must be >= 0")
        return math.ceil(Fraction(threshold))
    return max(0, ceil_tol(binom_real(t, 2)))


def regular_layer_degree(h: int, T: int) -> int:
    """ceil(r): least R >= 1 with C(h-1, 2) + 3 C(R, 2) >= T."""
    rest = T - math.comb(h - 1, 2) if h >= 1 else T
    R = 1
    while 3 * math.comb(R, 2) < rest:
        R += 1
    return R


def plan(kind: Kind | str, n: int, t=None, *, threshold=None, **options) -> ConstructionSpec:
    """Resolve the integer parameters of a construction and check feasibility."""
    kind = Kind(kind)
    T = required_triangles(t, threshold)
    if t is None:
        t = binom_inverse(T, 2)
    t = float(t)
    c = min_int_with_binom_at_least(T, 2)  # ceil(t)
    derived: dict = {}

    if kind is Kind.G1:
        overlap = 2 * c + 2 - n
        if c + 1 > n or overlap < 0:
            raise ValueError(f"G1 infeasible for n={n}, ceil(t)={c}: overlap {overlap}")
        derived = {"clique_order": c + 1, "overlap": overlap}
    elif kind in (Kind.G2, Kind.G2_PRIME):
        if kind is Kind.G2 and n % 2:
            raise ValueError("G2 needs even n")
        if kind is Kind.G2_PRIME and n % 2 == 0:
            raise ValueError("G2_PRIME needs odd n")
        h = n // 2
        R = regular_layer_degree(h, T)
        if R > h:
            raise ValueError(f"{kind.value} infeasible for n={n}: layer degree {R} > {h}")
        derived = {"half": h, "layer_degree": R}
    elif kind is Kind.DISJOINT_CLIQUES:
        if n % (c + 1):
            raise ValueError(f"{c + 1} does not divide n={n}")
        derived = {"clique_order": c + 1, "copies": n // (c + 1)}
    else:
        gap = {Kind.K_MINUS_EDGE: 2, Kind.K_MINUS_MATCHING: 3, Kind.COMPL_2REGULAR: 4}[kind]
        if T > math.comb(n - gap, 2) or n - gap < 0:
            raise ValueError(f"{kind.value} certifies only C({n - gap},2) triangles, need {T}")
        if kind is Kind.COMPL_2REGULAR and n < 5:
            raise ValueError("complement of a triangle-free 2-regular graph needs n >= 5")
        derived = {"gap": gap}
        derived.update(options)
    return ConstructionSpec(kind, n, t, T, derived)


def construction_size(spec: ConstructionSpec) -> int:
    """Edge count of the construction, from its parameters alone."""
    n, D = spec.n, spec.derived
    k = spec.kind
    if k is Kind.G1:
        return 2 * math.comb(D["clique_order"], 2) - math.comb(D["overlap"], 2)
    if k is Kind.G2:
        h = D["half"]
        return h * (h + D["layer_degree"] - 1)
    if k is Kind.G2_PRIME:
        h = D["half"]
        return (h + 1) * (h + D["layer_degree"] - 1)
    if k is Kind.DISJOINT_CLIQUES:
        return D["copies"] * math.comb(D["clique_order"], 2)
    if k is Kind.K_MINUS_EDGE:
        return math.comb(n, 2) - 1
    if k is Kind.K_MINUS_MATCHING:
        return math.comb(n, 2) - n // 2
    return math.comb(n, 2) - n


def _cliques_edges(groups):
    for g in groups:
        g = list(g)
        for i, u in enumerate(g):
            for v in g[i + 1:]:
                yield (u, v)


def _split_graph(h: int, R: int) -> list[tuple[int, int]]:
    edges = list(_cliques_edges((range(h), range(h, 2 * h))))
    # circulant R-regular bipartite layer
    edges += [(i, h + (i + j) % h) for i in range(h) for j in range(R)]
    return edges


def _check_two_regular(G: Graph) -> None:
    if any(d != 2 for d in G.degrees()):
        raise ValueError("supplied graph is not 2-regular")
    if next(triangles(G), None) is not None:
        raise ValueError("supplied graph contains a triangle")


def build(spec: ConstructionSpec) -> Graph:
    """Build and certify the graph described by ``spec``."""
    n, D, k = spec.n, spec.derived, spec.kind
    if k is Kind.G1:
        size = D["clique_order"]
        G = Graph.from_edges(n, _cliques_edges((range(size), range(n - size, n))))
    elif k is Kind.G2:
        G = Graph.from_edges(n, _split_graph(D["half"], D["layer_degree"]))
    elif k is Kind.G2_PRIME:
        h = D["half"]
        base = Graph.from_edges(2 * h, _split_graph(h, D["layer_degree"]))
        # new vertex n-1 copies the neighbourhood of vertex 0, not adjacent to it
        G = Graph.from_edges(n, base.edges() + [(u, n - 1) for u in base.neighbors(0)])
    elif k is Kind.DISJOINT_CLIQUES:
        s = D["clique_order"]
        G = Graph.from_edges(n, _cliques_edges(range(i, i + s) for i in range(0, n, s)))
    elif k is Kind.K_MINUS_EDGE:
        G = Graph.from_edges(n, [(0, 1)]).complement()
    elif k is Kind.K_MINUS_MATCHING:
        t = n - 3
        if n % 2 == 0 and t <= 5:
            warnings.warn(f"K_n minus a perfect matching is only known extremal for t > 5 (t={t})",
                          SideConditionWarning, stacklevel=2)
        if n % 2 == 1 and t <= 6:
            warnings.warn(f"K_n minus a near-perfect matching is only known extremal for t > 6 (t={t})",
                          SideConditionWarning, stacklevel=2)
        G = Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)]).complement()
    else:
        H = D.get("two_regular")
        if H is None:
            H = Graph.cycle(n)
        if H.n != n:
            raise ValueError("supplied 2-regular graph has the wrong order")
        _check_two_regular(H)
        G = H.complement()
    certify(G, spec.threshold)
    return G


def certify(G: Graph, threshold: int) -> int:
    """Raise CertificationError unless every vertex lies in >= threshold triangles."""
    got = min_triangle_degree(G) if G.n else 0
    if got < threshold:
        raise CertificationError(f"min triangle-degree {got} < required {threshold}")
    return got


def build_G1(n: int, t=None, *, threshold=None) -> Graph:
    """Two cliques of order ceil(t)+1 sharing 2 ceil(t) + 2 - n vertices."""
    return build(plan(Kind.G1, n, t, threshold=threshold))


def build_G2(n: int, t=None, *, threshold=None) -> Graph:
    """Two disjoint K_{n/2} joined by a ceil(r)-regular circulant bipartite layer."""
    return build(plan(Kind.G2, n, t, threshold=threshold))


def build_G2_prime(n: int, t=None, *, threshold=None) -> Graph:
    """Odd-n variant: G2 on n-1 vertices plus a clone of vertex 0."""
    return build(plan(Kind.G2_PRIME, n, t, threshold=threshold))


def build_disjoint_cliques(n: int, t: int) -> Graph:
    if int(t) != t:
        raise ValueError("disjoint cliques need integer t")
    return build(plan(Kind.DISJOINT_CLIQUES, n, int(t)))


def build_exact_small_case(n: int, t: int, two_regular: Graph | None = None) -> Graph:
    """The known extremal graphs when n - t is 2, 3 or 4."""
    if int(t) != t:
        raise ValueError("exact small cases need integer t")
    kind = {2: Kind.K_MINUS_EDGE, 3: Kind.K_MINUS_MATCHING, 4: Kind.COMPL_2REGULAR}.get(n - int(t))
    if kind is None:
        raise ValueError(f"n - t must be 2, 3 or 4, got {n - t}")
    opts = {"two_regular": two_regular} if two_regular is not None else {}
    return build(plan(kind, n, int(t), **opts))


def applicable(n: int, t=None, *, threshold=None) -> list[ConstructionSpec]:
    """Every construction kind that is feasible for the requirement."""
    out = []
    for kind in Kind:
        try:
            out.append(plan(kind, n, t, threshold=threshold))
        except ValueError:
            continue
    return out


def best_construction(n: int, t=None, *, threshold=None) -> ConstructionSpec | None:
    """Feasible construction with the fewest edges (None if nothing applies)."""
    specs = applicable(n, t, threshold=threshold)
    if not specs:
        return None
    return min(specs, key=lambda s: (construction_size(s), list(Kind).index(s.kind)))
