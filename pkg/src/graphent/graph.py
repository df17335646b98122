"""Simple undirected graphs: edge-list I/O, named families, connectivity,
and exhaustive enumeration of labeled connected graphs.

Vertices are 0-based everywhere, including the text format. Edges are
stored as sorted pairs (i, j) with i < j; the adjacency bitmask uses the
row-major upper-triangle bit order, bit k <-> pair_list(n)[k].
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class EdgeListError(ValueError):
    """Malformed edge-list document."""


class DisconnectedGraphError(ValueError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: vertex count plus a set of sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        for i, j in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError(f"invalid edge ({i}, {j}) for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing each pair to (min, max)."""
        norm = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        """Edges in lexicographic order; the canonical iteration order."""
        return sorted(self.edges)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return d

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.sorted_edges():
            adj[i].append(j)
            adj[j].append(i)
        return adj


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "i j".

    Rejects self-loops, duplicate edges, out-of-range indices, and
    documents whose line count disagrees with the header.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise EdgeListError("empty document")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError(f"header must be 'n m', got {lines[0]!r}") from None
    if n < 1:
        raise EdgeListError(f"vertex count must be >= 1, got {n}")
    if len(lines) - 1 != m:
        raise EdgeListError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges: set[tuple[int, int]] = set()
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise EdgeListError(f"edge line must be 'i j', got {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"edge line must be 'i j', got {ln!r}") from None
        if i == j:
            raise EdgeListError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise EdgeListError(f"vertex index out of range in edge ({i}, {j})")
        e = (min(i, j), max(i, j))
        if e in edges:
            raise EdgeListError(f"duplicate edge ({e[0]}, {e[1]})")
        edges.add(e)
    return Graph(n, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    """Emit the edge-list format with edges sorted lexicographically."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.sorted_edges())
    return "\n".join(lines) + "\n"


def complete(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"complete bipartite graph needs a, b >= 1, got {a}, {b}")
    return Graph(a + b, frozenset((i, j) for i in range(a) for j in range(a, a + b)))


def star(n: int) -> Graph:
    """Hub vertex 0 joined to the n-1 leaves."""
    if n < 2:
        raise ValueError(f"star graph needs n >= 2, got {n}")
    return Graph(n, frozenset((0, i) for i in range(1, n)))


def cycle(n: int) -> Graph:
    """The canonical 2-regular connected graph on n vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    edges = {(min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)}
    return Graph(n, frozenset(edges))


FAMILIES = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "cycle": cycle,
}


def is_connected(g: Graph) -> bool:
    """Breadth-first search from vertex 0 reaching all n vertices."""
    if g.n == 1:
        return True
    adj = g.neighbors()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def is_bipartite(g: Graph) -> bool:
    """Two-colorability check over every component."""
    adj = g.neighbors()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def pair_list(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in row-major upper-triangle order; bit k of a bitmask."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def bitmask(g: Graph) -> int:
    pairs = pair_list(g.n)
    index = {p: k for k, p in enumerate(pairs)}
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def from_bitmask(n: int, mask: int) -> Graph:
    pairs = pair_list(n)
    if not (0 <= mask < 1 << len(pairs)):
        raise ValueError(f"bitmask {mask} out of range for n={n}")
    return Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


MAX_ENUM_N = 7


def _mask_connected(n: int, mask: int, pairs: list[tuple[int, int]]) -> bool:
    # BFS over per-vertex neighbor bitsets; cheap enough to filter the full
    # 2^(n(n-1)/2) space without building Graph objects.
    nbr = [0] * n
    k = 0
    while mask >> k:
        if mask >> k & 1:
            i, j = pairs[k]
            nbr[i] |= 1 << j
            nbr[j] |= 1 << i
        k += 1
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        f = frontier
        while f:
            low = f & -f
            reach |= nbr[low.bit_length() - 1]
            f ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def connected_masks(n: int, start: int = 0, stop: int | None = None) -> Iterator[int]:
    """Bitmasks of connected graphs in increasing order over [start, stop).

    The range form is the partitioning hook for parallel scans; each
    sub-range is independent.
    """
    if not (2 <= n <= MAX_ENUM_N):
        raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUM_N}, got {n}")
    pairs = pair_list(n)
    total = 1 << len(pairs)
    if stop is None:
        stop = total
    for mask in range(max(start, 0), min(stop, total)):
        if _mask_connected(n, mask, pairs):
            yield mask


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Every labeled simple connected graph on n vertices exactly once,
    in increasing adjacency-bitmask order."""
    pairs = pair_list(n)
    for mask in connected_masks(n):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
