"""Tree representation, wire-format parsing, rooting and diameter."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property


class TreeFormatError(ValueError):
    """Malformed tree input. Carries the 1-based line of the offense."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True, eq=False)
class Tree:
    """Unrooted tree on vertices 0..n-1.

    Edges are stored as (min, max) pairs in no particular order. Instances
    are immutable and safe to share. Use `from_edges` or `parse_edge_list`
    to construct with validation; the raw constructor trusts its input
    (generators that build trees by construction use it directly).
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, edges) -> "Tree":
        if n < 1:
            raise TreeFormatError(f"vertex count must be >= 1, got {n}")
        norm = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise TreeFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise TreeFormatError(f"vertex out of range in edge ({u}, {v})")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise TreeFormatError(f"duplicate edge ({e[0]}, {e[1]})")
            seen.add(e)
            norm.append(e)
        if len(norm) != n - 1:
            raise TreeFormatError(f"expected {n - 1} edges, got {len(norm)}")
        t = cls(n, tuple(norm))
        if n > 1 and len(_bfs_reach(t.adjacency, 0)) != n:
            raise TreeFormatError("edges do not form a connected tree")
        return t

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))


@dataclass(frozen=True, eq=False)
class RootedTree:
    """Tree rooted at a leaf, with parent/children/depth arrays.

    `children` lists are ascending by vertex id so that every downstream
    tie-break is total and deterministic. `order` is a BFS order from the
    root (so depths are non-decreasing along it). Treat all fields as
    immutable after construction.
    """

    tree: Tree
    root: int
    parent: list  # parent[v] is an int, None for the root
    children: list  # list[list[int]], each ascending
    depth: list  # list[int]
    order: list  # list[int], BFS order from root

    @property
    def n(self) -> int:
        return self.tree.n


def parse_edge_list(data) -> Tree:
    """Parse the tree wire format: first line n, then n-1 lines "u v".

    Accepts bytes or str. Raises TreeFormatError with the offending line
    number on malformed integers, wrong edge counts, duplicate edges, or
    disconnected/cyclic input.
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as e:
            raise TreeFormatError(f"input is not ASCII text: {e}") from None
    lines = data.split("\n")
    # a trailing LF yields one empty trailing field; drop empty tail lines
    while lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise TreeFormatError("empty input", line=1)
    try:
        n = int(lines[0])
    except ValueError:
        raise TreeFormatError(f"malformed vertex count {lines[0]!r}", line=1) from None
    if n < 1:
        raise TreeFormatError(f"vertex count must be >= 1, got {n}", line=1)
    if len(lines) - 1 != n - 1:
        raise TreeFormatError(
            f"expected {n - 1} edge lines, got {len(lines) - 1}", line=len(lines)
        )
    edges = []
    seen = set()
    for i, raw in enumerate(lines[1:], start=2):
        parts = raw.split()
        if len(parts) != 2:
            raise TreeFormatError(f"expected 'u v', got {raw!r}", line=i)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise TreeFormatError(f"malformed integer in {raw!r}", line=i) from None
        if not (0 <= u < n and 0 <= v < n):
            raise TreeFormatError(f"vertex out of range in edge ({u}, {v})", line=i)
        if u == v:
            raise TreeFormatError(f"self-loop at vertex {u}", line=i)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise TreeFormatError(f"duplicate edge ({e[0]}, {e[1]})", line=i)
        seen.add(e)
        edges.append(e)
    t = Tree(n, tuple(edges))
    if n > 1 and len(_bfs_reach(t.adjacency, 0)) != n:
        raise TreeFormatError("edges do not form a connected tree (cycle or forest)")
    return t


def serialize(t: Tree) -> str:
    """Emit the wire format; edges sorted by (min endpoint, max endpoint)."""
    out = [str(t.n)]
    out.extend(f"{u} {v}" for u, v in sorted(t.edges))
    out.append("")
    return "\n".join(out)


def leaves(t: Tree) -> list[int]:
    if t.n == 1:
        return [0]
    adj = t.adjacency
    return [v for v in range(t.n) if len(adj[v]) == 1]


def root_at(t: Tree, preferred: int | None = None) -> RootedTree:
    """Root the tree at a leaf: `preferred` if given, else the smallest leaf.

    The single-vertex tree roots at 0 even though it has no degree-1 vertex.
    """
    n = t.n
    if n == 1:
        if preferred not in (None, 0):
            raise ValueError(f"vertex {preferred} is not a vertex of the tree")
        return RootedTree(t, 0, [None], [[]], [0], [0])
    adj = t.adjacency
    if preferred is None:
        root = next(v for v in range(n) if len(adj[v]) == 1)
    else:
        if not (0 <= preferred < n):
            raise ValueError(f"vertex {preferred} is not a vertex of the tree")
        if len(adj[preferred]) != 1:
            raise ValueError(f"vertex {preferred} is not a leaf")
        root = preferred

    parent: list = [None] * n
    depth = [0] * n
    order = [root]
    head = 0
    seen = bytearray(n)
    seen[root] = 1
    while head < len(order):
        v = order[head]
        head += 1
        dv = depth[v]
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                parent[w] = v
                depth[w] = dv + 1
                order.append(w)
    # ascending children lists without per-vertex sorting
    children: list = [[] for _ in range(n)]
    for v in range(n):
        p = parent[v]
        if p is not None:
            children[p].append(v)
    return RootedTree(t, root, parent, children, depth, order)


def diameter(t: Tree) -> int:
    """Longest path length in edges, by double BFS sweep; 0 for n=1."""
    if t.n == 1:
        return 0
    far, _ = _bfs_far(t.adjacency, 0)
    _, dist = _bfs_far(t.adjacency, far)
    return dist


def _bfs_reach(adj, start):
    seen = {start}
    q = deque([start])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                q.append(w)
    return seen


def _bfs_far(adj, start):
    """Return (farthest vertex, its distance) from start; ties to min id."""
    n = len(adj)
    dist = [-1] * n
    dist[start] = 0
    q = deque([start])
    best, best_d = start, 0
    while q:
        v = q.popleft()
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                if dist[w] > best_d:
                    best, best_d = w, dist[w]
                q.append(w)
    return best, best_d
