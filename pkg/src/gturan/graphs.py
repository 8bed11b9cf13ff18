"""Immutable simple-graph value type on adjacency bitmasks.

Conventions used throughout the package:

* A graph on ``n`` vertices has vertex set ``{0, ..., n-1}``.  Vertices are
  0-indexed internally; human-readable output (``str(g)``, CLI tables)
  shows them 1-indexed.
* Vertex sets are plain Python ints used as bitmasks (bit ``i`` set means
  vertex ``i`` is in the set).  Python ints are arbitrary-precision, so a
  single representation covers every graph up to ``MAX_VERTICES``.
* ``adj[i]`` is the bitmask of neighbours of ``i``.  Every constructor
  validates symmetry (``j in adj[i]`` iff ``i in adj[j]``), irreflexivity
  (no loops) and that no bits at positions >= ``n`` are set.

All operations are pure: a "mutation" always builds a new Graph.  Graphs
are hashable and therefore safe to share, memoize, and send between
workers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 256


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {i} has bits beyond vertex range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in iter_bits(self.adj[i]):
                if j > i and not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def edges(self) -> Iterator[tuple[int, int]]:
        for i in range(self.n):
            for j in iter_bits(self.adj[i] >> (i + 1) << (i + 1)):
                yield (i, j)

    def __str__(self) -> str:
        es = ", ".join(f"{i + 1}-{j + 1}" for i, j in self.edges())
        return f"Graph(n={self.n}; {es or 'no edges'})"


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``n`` vertices with the given edges (duplicates collapse)."""
    rows = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise ValueError(f"loop edge at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def add_vertex(g: Graph, neighbours: int) -> Graph:
    """New graph with one extra vertex adjacent to ``neighbours`` (bitmask)."""
    if neighbours >> g.n:
        raise ValueError("neighbour mask outside host graph")
    v = g.n
    rows = [row | ((neighbours >> i & 1) << v) for i, row in enumerate(g.adj)]
    rows.append(neighbours)
    return Graph(v + 1, tuple(rows))


def disjoint_union(parts: Sequence[tuple[Graph, int]]) -> Graph:
    """Disjoint union of ``multiplicity`` relabeled copies of each part."""
    total = sum(g.n * k for g, k in parts)
    if total > MAX_VERTICES:
        raise ValueError(f"union on {total} vertices exceeds cap {MAX_VERTICES}")
    rows: list[int] = []
    offset = 0
    for g, k in parts:
        if k < 0:
            raise ValueError("negative multiplicity")
        for _ in range(k):
            rows.extend(row << offset for row in g.adj)
            offset += g.n
    return Graph(total, tuple(rows))


def union_of(*graphs: Graph) -> Graph:
    return disjoint_union([(g, 1) for g in graphs])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    total = g1.n + g2.n
    if total > MAX_VERTICES:
        raise ValueError(f"join on {total} vertices exceeds cap {MAX_VERTICES}")
    right = ((1 << g2.n) - 1) << g1.n
    left = (1 << g1.n) - 1
    rows = [row | right for row in g1.adj]
    rows.extend((row << g1.n) | left for row in g2.adj)
    return Graph(total, tuple(rows))


def induced_subgraph(g: Graph, vertices: int | Iterable[int]) -> Graph:
    """Relabeled subgraph induced on the given vertex set.

    Kept vertices are renumbered 0.. in ascending order of old label.
    """
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set not contained in the graph")
    keep = set_of(mask)
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in iter_bits(g.adj[v] & mask):
            row |= 1 << pos[w]
        rows.append(row)
    return Graph(len(keep), tuple(rows))


def delete_vertices(g: Graph, vertices: int | Iterable[int]) -> Graph:
    mask = vertices if isinstance(vertices, int) else mask_of(vertices)
    return induced_subgraph(g, g.vertex_mask & ~mask)


def common_neighborhood(g: Graph, c: int | Iterable[int]) -> int:
    """Bitmask of vertices adjacent to every vertex of ``c``.

    The empty set is rejected: its common neighbourhood is ambiguous.
    """
    mask = c if isinstance(c, int) else mask_of(c)
    if mask == 0:
        raise ValueError("common neighbourhood of the empty set is undefined")
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set not contained in the graph")
    out = g.vertex_mask
    for v in iter_bits(mask):
        out &= g.adj[v]
    return out


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << i) for i, row in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under vertex permutation ``perm`` (old -> new)."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    rows = [0] * g.n
    for old, new in enumerate(perm):
        row = 0
        for w in iter_bits(g.adj[old]):
            row |= 1 << perm[w]
        rows[new] = row
    return Graph(g.n, tuple(rows))


def connected_components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, lowest vertex first."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = g.adj[v] & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & ~comp
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------
#
# Individualization-refinement canonical labeling: iterated equitable
# refinement of an ordered partition, branching on the first non-singleton
# cell, taking the lexicographically least relabeled adjacency over all
# leaves.  The leaf set is isomorphism-invariant, so equal codes <=>
# isomorphic graphs.  No external dependency; intended for the small
# graphs this package traffics in (search caps at n <= 9, corpus checks
# at n <= 30 where refinement almost always discretizes immediately).


def _refine(adj: Sequence[int], cells: list[int], queue: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition.

    Splits every cell by the number of neighbours its vertices have in
    each splitter; subcell order (descending count) is isomorphism
    invariant, keeping the cell sequence canonical.
    """
    while queue:
        splitter = queue.pop()
        out: list[int] = []
        for cell in cells:
            if cell & (cell - 1) == 0:  # singleton
                out.append(cell)
                continue
            groups: dict[int, int] = {}
            for v in iter_bits(cell):
                k = (adj[v] & splitter).bit_count()
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for k in sorted(groups, reverse=True):
                    out.append(groups[k])
                    queue.append(groups[k])
        cells = out
    return cells


def _is_twin_cell(adj: Sequence[int], cell: int) -> bool:
    """True when all cell members are pairwise twins: identical adjacency
    outside the cell and the cell induces a clique or an independent set.
    Any permutation inside such a cell is then an automorphism, so one
    branching representative suffices."""
    outside = None
    inner_clique = inner_indep = True
    for v in iter_bits(cell):
        out_v = adj[v] & ~cell
        if outside is None:
            outside = out_v
        elif out_v != outside:
            return False
        in_v = adj[v] & cell
        if in_v != cell ^ (1 << v):
            inner_clique = False
        if in_v:
            inner_indep = False
        if not (inner_clique or inner_indep):
            return False
    return True


def _canonical_rows(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n == 0:
        return ()
    comps = connected_components(g)
    if len(comps) > 1:
        # canonicalize per component and assemble block-diagonally in a
        # canonical component order; avoids branching over the
        # component-permutation symmetry of disjoint unions
        keyed = []
        for comp in comps:
            sub = induced_subgraph(g, comp)
            rows = _canonical_rows(sub)
            keyed.append((sub.n, rows))
        keyed.sort()
        out: list[int] = []
        offset = 0
        for size, rows in keyed:
            out.extend(row << offset for row in rows)
            offset += size
        return tuple(out)
    adj = g.adj
    best: tuple[int, ...] | None = None

    def leaf_rows(cells: list[int]) -> tuple[int, ...]:
        order = [next(iter_bits(c)) for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            row = 0
            for w in iter_bits(adj[v]):
                row |= 1 << pos[w]
            rows.append(row)
        return tuple(rows)

    def descend(cells: list[int]) -> None:
        nonlocal best
        target = -1
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                target = idx
                break
        if target < 0:
            cand = leaf_rows(cells)
            if best is None or cand < best:
                best = cand
            return
        cell = cells[target]
        if _is_twin_cell(adj, cell):
            branch = [next(iter_bits(cell))]
        else:
            branch = list(iter_bits(cell))
        for v in branch:
            split = cells[:target] + [1 << v, cell ^ (1 << v)] + cells[target + 1 :]
            descend(_refine(adj, split, [1 << v]))

    descend(_refine(adj, [(1 << n) - 1], [(1 << n) - 1]))
    assert best is not None
    return best


def canonical_code(g: Graph) -> bytes:
    """Isomorphism-invariant byte encoding: equal codes iff isomorphic."""
    rows = _canonical_rows(g)
    n = g.n
    bits = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            bits = bits << 1 | (rows[i] >> j & 1)
            nbits += 1
    nbytes = (nbits + 7) // 8
    bits <<= nbytes * 8 - nbits
    return bytes([n >> 8, n & 0xFF]) + bits.to_bytes(nbytes, "big")


def isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    return canonical_code(g1) == canonical_code(g2)


# ---------------------------------------------------------------------------
# graph6 interchange format
# ---------------------------------------------------------------------------


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    raise ValueError("graph too large for this graph6 encoder")


def graph6_encode(g: Graph) -> str:
    """Encode in the standard graph6 ASCII format (bit-exact)."""
    n = g.n
    out = bytearray(_g6_size_bytes(n))
    group = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            group = group << 1 | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return out.decode("ascii")


def graph6_decode(s: str | bytes) -> Graph:
    """Decode a graph6 string; round trip identity with graph6_encode."""
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("graph6: empty input")
    data = s.encode("ascii")
    for b in data:
        if not 63 <= b <= 126:
            raise ValueError(f"graph6: byte {b} outside printable range")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6: >68-bit vertex counts not supported")
        if len(data) < 4:
            raise ValueError("graph6: truncated header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6: vertex count {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        kind = "truncated" if len(body) < need else "trailing garbage in"
        raise ValueError(f"graph6: {kind} bit vector")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[idx // 6] - 63
            if byte >> (5 - idx % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    # padding bits must be zero
    if nbits % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise ValueError("graph6: nonzero padding bits")
    return Graph(n, tuple(rows))


def write_g6(path: str, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(graph6_encode(g) + "\n")


def read_g6(path: str) -> list[Graph]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(graph6_decode(line))
    return out
