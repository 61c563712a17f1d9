"""k-uniform set families on a labeled vertex set {0, ..., n-1}.

Edges are stored as integer bitmasks (bit i set means vertex i belongs to the
edge). Python ints are unbounded, so the same encoding serves every n.
"""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class SetFamily:
    n: int
    k: int
    edges: frozenset[int]

    def __post_init__(self):
        if self.n < 0 or self.k < 1:
            raise ValueError(f"invalid family parameters n={self.n}, k={self.k}")
        full = (1 << self.n) - 1
        for e in self.edges:
            if e & ~full or e.bit_count() != self.k:
                raise ValueError(f"edge {sorted(bits(e))} is not a {self.k}-subset of range({self.n})")

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        masks = []
        for s in sets:
            s = list(s)
            if len(set(s)) != len(s):
                raise ValueError(f"repeated vertex in edge {s}")
            masks.append(to_mask(s))
        return cls(n, k, frozenset(masks))

    @classmethod
    def complete(cls, n: int, k: int) -> "SetFamily":
        return cls.from_sets(n, k, itertools.combinations(range(n), k))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.tuples())

    def tuples(self) -> list[tuple[int, ...]]:
        """Edges as ascending tuples, in lexicographic order."""
        return sorted(tuple(bits(e)) for e in self.edges)

    def degree(self, x: int) -> int:
        bit = 1 << x
        return sum(1 for e in self.edges if e & bit)


def shadow(F: SetFamily) -> SetFamily:
    """All (k-1)-subsets contained in some edge of F."""
    if F.k < 2:
        raise ValueError("shadow needs k >= 2")
    out = set()
    for e in F.edges:
        rest = e
        while rest:
            low = rest & -rest
            out.add(e ^ low)
            rest ^= low
    return SetFamily(F.n, F.k - 1, frozenset(out))


def link(F: SetFamily, x: int) -> SetFamily:
    """The (k-1)-uniform family {E - x : x in E}."""
    if not 0 <= x < F.n:
        raise ValueError(f"vertex {x} out of range for n={F.n}")
    bit = 1 << x
    return SetFamily(F.n, F.k - 1, frozenset(e ^ bit for e in F.edges if e & bit))


def min_degree(F: SetFamily) -> int:
    if F.n < 1:
        raise ValueError("min_degree needs n >= 1")
    counts = [0] * F.n
    for e in F.edges:
        for v in bits(e):
            counts[v] += 1
    return min(counts)


def write_family(F: SetFamily, fh: TextIO) -> None:
    fh.write(f"{F.n} {F.k}\n")
    for edge in F.tuples():
        fh.write(" ".join(map(str, edge)) + "\n")


def read_family(fh: TextIO) -> SetFamily:
    lines = [ln.split() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("family file must start with a header line 'n k'")
    n, k = map(int, lines[0])
    return SetFamily.from_sets(n, k, ([int(x) for x in ln] for ln in lines[1:]))


def format_family(F: SetFamily) -> str:
    buf = io.StringIO()
    write_family(F, buf)
    return buf.getvalue()


def parse_family(text: str) -> SetFamily:
    return read_family(io.StringIO(text))


def relabel_family(F: SetFamily, perm) -> SetFamily:
    """Family with every vertex v renamed perm[v]."""
    out = []
    for e in F.edges:
        m = 0
        for v in bits(e):
            m |= 1 << perm[v]
        out.append(m)
    return SetFamily(F.n, F.k, frozenset(out))


def canonical_family(F: SetFamily) -> SetFamily:
    """Isomorphism-invariant relabeling by trying every permutation (small n only)."""
    best = None
    for perm in itertools.permutations(range(F.n)):
        key = tuple(sorted(relabel_family(F, perm).edges))
        if best is None or key < best[0]:
            best = (key, perm)
    return SetFamily(F.n, F.k, frozenset(best[0])) if best else F
