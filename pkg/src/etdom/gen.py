"""Tree generators: seeded random trees and non-isomorphic enumeration."""

from __future__ import annotations

import random

from .trees import Tree


def random_tree(n: int, rng: random.Random) -> Tree:
    """Random labeled tree: each vertex i >= 1 attaches to a uniform parent < i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    edges = tuple((rng.randrange(i), i) for i in range(1, n))
    return Tree(n, edges)


def centers(t: Tree) -> list[int]:
    """The 1 or 2 middle vertices of the tree, by iterative leaf peeling."""
    n = t.n
    if n == 1:
        return [0]
    deg = [len(a) for a in t.adjacency]
    adj = t.adjacency
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in adj[v]:
                if deg[w] > 1:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_encoding(t: Tree, root: int) -> str:
    """Canonical parenthesis string of the tree rooted at `root` (AHU).

    Iterative so that long paths do not hit the recursion limit.
    """
    n = t.n
    adj = t.adjacency
    parent = [-2] * n
    parent[root] = -1
    order = [root]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in adj[v]:
            if parent[w] == -2:
                parent[w] = v
                order.append(w)
    enc = [""] * n
    kids: list[list[str]] = [[] for _ in range(n)]
    for v in reversed(order):
        enc[v] = "(" + "".join(sorted(kids[v])) + ")"
        p = parent[v]
        if p >= 0:
            kids[p].append(enc[v])
    return enc[root]


def canonical_form(t: Tree) -> str:
    """Isomorphism-invariant encoding: AHU string minimized over centers."""
    return min(rooted_encoding(t, c) for c in centers(t))


def nonisomorphic_trees(n: int) -> list[Tree]:
    """All non-isomorphic trees on n vertices.

    Grown by attaching a new leaf to every vertex of every (n-1)-tree and
    rejecting duplicates by canonical form. Returned in canonical-form
    order, so the output is deterministic.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    level = {canonical_form(Tree(1, ())): Tree(1, ())}
    for m in range(2, n + 1):
        nxt: dict[str, Tree] = {}
        for t in level.values():
            for v in range(t.n):
                cand = Tree(m, t.edges + ((v, m - 1),))
                key = canonical_form(cand)
                if key not in nxt:
                    nxt[key] = cand
        level = nxt
    return [level[k] for k in sorted(level)]


def nonisomorphic_trees_up_to(n: int):
    """Yield (size, tree) for every non-isomorphic tree with 1 <= size <= n."""
    for m in range(1, n + 1):
        for t in nonisomorphic_trees(m):
            yield m, t
