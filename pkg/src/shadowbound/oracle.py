"""Exhaustive ground truth for small instances.

``min_edges_graph`` finds the fewest edges an n-vertex graph can have when
every vertex lies in at least T triangles; ``min_shadow_family`` finds the
smallest shadow of a triple system with minimum degree at least T. Both are
depth-first branch and bound over include/exclude decisions.

Graph search breaks symmetry by fixing vertex 0 as a minimum-degree vertex
adjacent to exactly 1..delta; every isomorphism class has such a labeling, so
the minimum and the set of witness classes are unaffected.
"""

from __future__ import annotations

import itertools
import json
import math
import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .combinatorics import min_int_with_binom_at_least
from .constructions import build_G1
from .families import SetFamily, bits, canonical_family, format_family, min_degree, shadow, to_mask
from .graphs import (
    Graph,
    all_graphs,
    canonical_form,
    min_triangle_degree,
    to_graph6,
    triangle_degrees,
)

MAX_N_GRAPH = 8
MAX_N_FAMILY = 6
MAX_N_UNPRUNED = 5
WORKERS_ENV = "SHADOWBOUND_WORKERS"


@dataclass
class SearchResult:
    n: int
    threshold: int
    minimum: int
    witnesses: list = field(default_factory=list)
    nodes_explored: int = 0
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        if self.witnesses and isinstance(self.witnesses[0], SetFamily):
            wit = [format_family(F).splitlines() for F in self.witnesses]
        else:
            wit = [to_graph6(G) for G in self.witnesses]
        return {
            "n": self.n,
            "threshold": self.threshold,
            "minimum": self.minimum,
            "witnesses": wit,
            "nodes_explored": self.nodes_explored,
            "wall_time": self.wall_time,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def default_workers() -> int:
    return int(os.environ.get(WORKERS_ENV, "1"))


def _min_degree_for(T: int) -> int:
    """Least d with C(d, 2) >= T (0 when T = 0)."""
    return 0 if T <= 0 else min_int_with_binom_at_least(T, 2)


class _Incumbent:
    """Best-so-far value, optionally shared between processes."""

    def __init__(self, start: int, shared=None):
        self.shared = shared
        self.value = start if shared is None else min(start, shared.value)

    def get(self) -> int:
        if self.shared is not None:
            v = self.shared.value
            if v < self.value:
                self.value = v
        return self.value

    def offer(self, v: int) -> None:
        if v < self.value:
            self.value = v
        if self.shared is not None:
            with self.shared.get_lock():
                if v < self.shared.value:
                    self.shared.value = v


# ---------------------------------------------------------------- graph search


def _edge_order(n: int, delta: int) -> list[tuple[int, int]]:
    inner = [(a, b) for a in range(1, delta + 1) for b in range(a + 1, delta + 1)]
    rest = [(a, b) for a in range(1, n) for b in range(a + 1, n) if b > delta]
    return inner + rest


def _graph_task(n: int, T: int, delta: int, prefix: tuple[int, ...], collect: bool,
                incumbent: _Incumbent) -> tuple[int, list[tuple[int, ...]], int]:
    """Search one subtree: vertex 0 has degree delta, first decisions fixed by prefix."""
    order = _edge_order(n, delta)
    inc = [0] * n
    up = [0] * n
    for j in range(1, delta + 1):
        inc[0] |= 1 << j
        inc[j] |= 1
    up[0] = inc[0]
    for a in range(1, n):
        up[a] = inc[a] | (((1 << n) - 1) & ~(1 << a) & ~1)
    ecount = delta

    for (a, b), take in zip(order, prefix):
        if take:
            inc[a] |= 1 << b
            inc[b] |= 1 << a
            ecount += 1
        else:
            up[a] &= ~(1 << b)
            up[b] &= ~(1 << a)

    def tri(adj: list[int], v: int) -> int:
        nb = adj[v]
        s = 0
        m = nb
        while m:
            low = m & -m
            s += (adj[low.bit_length() - 1] & nb).bit_count()
            m ^= low
        return s >> 1

    if any(up[v].bit_count() < delta or tri(up, v) < T for v in range(n)):
        return math.inf, [], 1

    best_local = math.inf
    found: list[tuple[int, ...]] = []
    nodes = 0
    n_order = len(order)
    verts = range(n)

    def dfs(i: int, ecount: int) -> None:
        nonlocal best_local, nodes, found
        nodes += 1
        best = incumbent.get() if nodes & 255 == 0 else incumbent.value
        degs = [inc[v].bit_count() for v in verts]
        lb2 = sum(d if d > delta else delta for d in degs)
        lb = (lb2 + 1) >> 1
        if lb > best or (not collect and lb >= best):
            return
        if lb2 == 2 * ecount and all(tri(inc, v) >= T for v in verts):
            # any completion only adds edges
            if ecount < best_local:
                best_local = ecount
                found = []
            if collect and ecount == best_local:
                found.append(tuple(inc))
            incumbent.offer(ecount)
            return
        if i == n_order:
            return
        a, b = order[i]
        ba, bb = 1 << a, 1 << b
        # exclude first: sparse graphs give good incumbents early
        up[a] ^= bb
        up[b] ^= ba
        ok = up[a].bit_count() >= delta and up[b].bit_count() >= delta
        if ok:
            common = up[a] & up[b]
            ok = tri(up, a) >= T and tri(up, b) >= T
            while ok and common:
                low = common & -common
                ok = tri(up, low.bit_length() - 1) >= T
                common ^= low
        if ok:
            dfs(i + 1, ecount)
        up[a] |= bb
        up[b] |= ba
        inc[a] |= bb
        inc[b] |= ba
        dfs(i + 1, ecount + 1)
        inc[a] ^= bb
        inc[b] ^= ba

    dfs(len(prefix), ecount)
    return best_local, found, nodes


_SHARED = None


def _init_worker(shared) -> None:
    global _SHARED
    _SHARED = shared


def _run_task(args):
    n, T, delta, prefix, collect, start = args
    return _graph_task(n, T, delta, prefix, collect, _Incumbent(start, _SHARED))


def _graph_tasks(n: int, T: int, workers: int) -> list[tuple[int, tuple[int, ...]]]:
    depth = max(0, math.ceil(math.log2(workers))) if workers > 1 else 0
    tasks = []
    for delta in range(_min_degree_for(T), n):
        free = len(_edge_order(n, delta))
        for prefix in itertools.product((0, 1), repeat=min(depth, free)):
            tasks.append((delta, prefix))
    return tasks


def min_edges_graph(n: int, T: int, *, workers: int | None = None, witnesses: bool = True,
                    prune: bool = True, progress: Callable[[str], None] | None = None) -> SearchResult:
    """Minimum e(G) over n-vertex graphs with every vertex in >= T triangles."""
    if not 1 <= n <= MAX_N_GRAPH:
        raise ValueError(f"min_edges_graph supports 1 <= n <= {MAX_N_GRAPH}, got {n}")
    if T < 0:
        raise ValueError("threshold must be >= 0")
    if T > math.comb(n - 1, 2):
        raise ValueError(f"no {n}-vertex graph has every vertex in {T} triangles")
    start = time.perf_counter()
    if not prune:
        return _brute_force_graph(n, T, start)

    workers = default_workers() if workers is None else max(1, workers)
    upper = math.comb(n, 2)  # K_n always qualifies
    tasks = _graph_tasks(n, T, workers)
    results = []
    if workers == 1:
        inc = _Incumbent(upper)
        for k, (delta, prefix) in enumerate(tasks):
            results.append(_graph_task(n, T, delta, prefix, witnesses, inc))
            if progress:
                progress(f"task {k + 1}/{len(tasks)} delta={delta} best={inc.value}")
    else:
        ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
        shared = ctx.Value("q", upper)
        with ProcessPoolExecutor(workers, mp_context=ctx, initializer=_init_worker,
                                 initargs=(shared,)) as pool:
            args = [(n, T, d, p, witnesses, upper) for d, p in tasks]
            for k, res in enumerate(pool.map(_run_task, args)):
                results.append(res)
                if progress:
                    progress(f"task {k + 1}/{len(tasks)} best={shared.value}")

    minimum = min(r[0] for r in results)
    nodes = sum(r[2] for r in results)
    if minimum == math.inf:
        # only possible if every task was cut by the initial K_n incumbent
        minimum = upper
        raw = [Graph.complete(n).adj]
    else:
        raw = [w for r in results if r[0] == minimum for w in r[1]]
    wit = _dedupe_graphs(n, T, minimum, raw) if witnesses else []
    return SearchResult(n, T, int(minimum), wit, nodes, time.perf_counter() - start)


def _dedupe_graphs(n: int, T: int, minimum: int, raw) -> list[Graph]:
    seen = {}
    for adj in raw:
        G = Graph(n, tuple(adj))
        # re-verify every candidate before it is reported
        if G.num_edges != minimum or (n and min_triangle_degree(G) < T):
            raise AssertionError("search produced an invalid witness")
        C = canonical_form(G)
        seen.setdefault(to_graph6(C), C)
    return [seen[k] for k in sorted(seen)]


def _brute_force_graph(n: int, T: int, start: float) -> SearchResult:
    if n > MAX_N_UNPRUNED:
        raise ValueError(f"unpruned search is limited to n <= {MAX_N_UNPRUNED}")
    best, raw, nodes = math.inf, [], 0
    for G in all_graphs(n):
        nodes += 1
        if min(triangle_degrees(G)) < T:
            continue
        e = G.num_edges
        if e < best:
            best, raw = e, []
        if e == best:
            raw.append(G.adj)
    return SearchResult(n, T, best, _dedupe_graphs(n, T, best, raw), nodes,
                        time.perf_counter() - start)


# ---------------------------------------------------------------- triple-system search


def min_shadow_family(n: int, T: int, *, witnesses: bool = True, prune: bool = True) -> SearchResult:
    """Minimum |shadow F| over 3-uniform F on n vertices with min degree >= T.

    Witnesses are the inclusion-minimal optimal families, up to isomorphism.
    """
    if not 1 <= n <= MAX_N_FAMILY:
        raise ValueError(f"min_shadow_family supports 1 <= n <= {MAX_N_FAMILY}, got {n}")
    if T < 0:
        raise ValueError("threshold must be >= 0")
    if T > math.comb(n - 1, 2):
        raise ValueError(f"no triple system on {n} vertices has minimum degree {T}")
    start = time.perf_counter()
    if not prune:
        return _brute_force_family(n, T, start)

    trip = list(itertools.combinations(range(n), 3))
    pair_index = {p: i for i, p in enumerate(itertools.combinations(range(n), 2))}
    # pair-mask of each triple, and per-vertex pair masks for shadow degrees
    tmask = [sum(1 << pair_index[p] for p in itertools.combinations(t, 2)) for t in trip]
    vpairs = [sum(1 << i for p, i in pair_index.items() if v in p) for v in range(n)]
    smin = _min_degree_for(T)

    deg = [0] * n
    avail = [math.comb(n - 1, 2)] * n
    chosen: list[int] = []
    best = math.comb(n, 2) + 1
    found: list[tuple[int, ...]] = []
    nodes = 0

    def dfs(i: int, sh: int) -> None:
        nonlocal best, found, nodes
        nodes += 1
        lb2 = 0
        for v in range(n):
            s = (sh & vpairs[v]).bit_count()
            lb2 += s if s > smin else smin
        lb = (lb2 + 1) >> 1
        if lb > best or (not witnesses and lb >= best):
            return
        if all(d >= T for d in deg):
            size = sh.bit_count()
            if size < best:
                best, found = size, []
            if witnesses and size == best:
                found.append(tuple(chosen))
            return
        if i == len(trip):
            return
        a, b, c = trip[i]
        for v in (a, b, c):
            avail[v] -= 1
        if avail[a] >= T and avail[b] >= T and avail[c] >= T:
            dfs(i + 1, sh)
        for v in (a, b, c):
            avail[v] += 1
            deg[v] += 1
        chosen.append(i)
        dfs(i + 1, sh | tmask[i])
        chosen.pop()
        for v in (a, b, c):
            deg[v] -= 1

    dfs(0, 0)
    fams = [SetFamily.from_sets(n, 3, (trip[i] for i in w)) for w in found]
    fams = [F for F in fams if _is_minimal(F, T)]
    return SearchResult(n, T, best, _dedupe_families(fams, T, best), nodes,
                        time.perf_counter() - start)


def _is_minimal(F: SetFamily, T: int) -> bool:
    """No triple can be dropped without some vertex falling below degree T."""
    deg = [F.degree(v) for v in range(F.n)]
    return all(any(deg[v] == T for v in bits(e)) for e in F.edges)


def _dedupe_families(fams: list[SetFamily], T: int, minimum: int) -> list[SetFamily]:
    seen = {}
    for F in fams:
        if len(shadow(F)) != minimum or min_degree(F) < T:
            raise AssertionError("search produced an invalid witness")
        C = canonical_family(F)
        seen.setdefault(tuple(C.tuples()), C)
    return [seen[k] for k in sorted(seen)]


def _brute_force_family(n: int, T: int, start: float) -> SearchResult:
    if n > MAX_N_UNPRUNED:
        raise ValueError(f"unpruned search is limited to n <= {MAX_N_UNPRUNED}")
    trip = [to_mask(t) for t in itertools.combinations(range(n), 3)]
    best, raw, nodes = math.inf, [], 0
    for mask in range(1 << len(trip)):
        nodes += 1
        F = SetFamily(n, 3, frozenset(trip[i] for i in range(len(trip)) if mask >> i & 1))
        if min_degree(F) < T:
            continue
        s = len(shadow(F)) if F.edges else 0
        if s < best:
            best, raw = s, []
        if s == best:
            raw.append(F)
    # keep the inclusion-minimal ones, matching what the pruned search reports
    minimal = [F for F in raw if not any(G.edges < F.edges for G in raw)]
    return SearchResult(n, T, best, _dedupe_families(minimal, T, best), nodes,
                        time.perf_counter() - start)


# ---------------------------------------------------------------- structural checks


def verify_isolated_clique(G: Graph, t: int) -> bool:
    """True iff some degree-t vertex has a closed neighbourhood forming an isolated K_{t+1}."""
    for v in range(G.n):
        if G.degree(v) != t:
            continue
        closed = G.adj[v] | 1 << v
        if all(G.adj[u] | 1 << u == closed for u in range(G.n) if closed >> u & 1):
            return True
    return False


def verify_remark_structure(result: SearchResult, n: int, t: int, r: int) -> bool | None:
    """Check the witnesses against the known extremal structure at integer points.

    Returns None when n/2, t, r are not all integers satisfying
    C(n/2-1, 2) + 3 C(r, 2) = C(t, 2), since nothing is claimed there.
    """
    if any(int(x) != x for x in (t, r)) or n % 2:
        return None
    t, r = int(t), int(r)
    if math.comb(n // 2 - 1, 2) + 3 * math.comb(r, 2) != math.comb(t, 2):
        return None
    six = 6 * (r + t)
    G1 = canonical_form(build_G1(n, t)) if six <= 5 * n else None
    deg = n // 2 + r - 1

    def fits(W: Graph) -> bool:
        if G1 is not None and canonical_form(W) == G1:
            return True
        return six >= 5 * n and all(d == deg for d in W.degrees())

    return all(fits(W) for W in result.witnesses)
