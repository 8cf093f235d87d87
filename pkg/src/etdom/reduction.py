"""Leaf reductions computing the eternal domination number of a tree.

Two moves shrink the tree, always applied at a leaf of maximum depth:

* pair: the deepest leaf's parent has that leaf as its only child; both
  vertices are deleted and contribute one auxiliary edge.
* bunch: the parent has several children (all leaves, by depth
  maximality); the children are deleted and each contributes an
  auxiliary edge to the parent.

Each application is worth one guard; the process ends at one or two
vertices worth one more, so the guard count is (number of steps) + 1.
The recorded auxiliary edges later induce the tree's partition into
defended parts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .trees import RootedTree, Tree, root_at

PAIR = "pair"
BUNCH = "bunch"


@dataclass(frozen=True)
class ReductionStep:
    """One shrink move.

    For a pair step, `x` is the deleted parent and removed == (x, leaf);
    for a bunch step, `x` is the retained parent and removed lists its
    deleted children in ascending order. `h_edges` are the auxiliary
    edges the step contributes: (leaf, x) pairs.
    """

    kind: str
    x: int
    removed: tuple[int, ...]
    h_edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ReductionTrace:
    """Full reduction record: ordered steps plus the surviving vertices.

    `terminal` holds 1 vertex (K1) or 2 vertices (K2, shallower first).
    The eternal domination number equals rho + 1.
    """

    steps: list
    terminal: tuple[int, ...]

    @property
    def rho(self) -> int:
        return len(self.steps)


class ReductionRun:
    """Mutable reduction over a rooted tree; yields one step at a time.

    Vertices are bucketed by depth and scanned deepest-first, ascending
    id within a depth. Every vertex enters and leaves the structure once,
    so a full run is linear in n.
    """

    def __init__(self, rt: RootedTree):
        self.rt = rt
        n = rt.n
        self.alive = bytearray([1]) * n
        self.child_cnt = [len(c) for c in rt.children]
        self.n_alive = n
        maxd = max(rt.depth) if n else 0
        buckets: list[list[int]] = [[] for _ in range(maxd + 1)]
        for v in range(n):  # ascending ids within each bucket
            buckets[rt.depth[v]].append(v)
        self._buckets = buckets
        self._d = maxd
        self._i = 0

    def step(self) -> ReductionStep | None:
        """Apply one reduction at the deepest remaining leaf, or None if done."""
        if self.n_alive <= 2:
            return None
        rt = self.rt
        parent = rt.parent
        alive = self.alive
        while self._d > 0:
            bucket = self._buckets[self._d]
            while self._i < len(bucket):
                c = bucket[self._i]
                self._i += 1
                if not alive[c]:
                    continue
                # every alive vertex at the current depth is a leaf here:
                # all deeper vertices were consumed by earlier steps
                if self.child_cnt[c] != 0:
                    raise RuntimeError(
                        f"vertex {c} at depth {self._d} still has children; "
                        "depth-bucket invariant broken"
                    )
                p = parent[c]
                if self.child_cnt[p] == 1:
                    # lone child: delete parent and leaf together
                    alive[c] = 0
                    alive[p] = 0
                    self.n_alive -= 2
                    self.child_cnt[p] = 0
                    g = parent[p]
                    if g is None:
                        raise RuntimeError(f"pair step at the root (parent {p})")
                    self.child_cnt[g] -= 1
                    return ReductionStep(PAIR, p, (p, c), ((p, c),))
                # several children, all leaves: delete them all
                removed = tuple(w for w in rt.children[p] if alive[w])
                for w in removed:
                    alive[w] = 0
                self.n_alive -= len(removed)
                self.child_cnt[p] = 0
                if parent[p] is None:
                    raise RuntimeError(f"bunch step at the root ({p})")
                return ReductionStep(BUNCH, p, removed, tuple((w, p) for w in removed))
            self._d -= 1
            self._i = 0
        raise RuntimeError("ran out of leaves with more than 2 vertices alive")

    def terminal(self) -> tuple[int, ...]:
        """Surviving vertices once no step applies; shallower vertex first."""
        if self.n_alive > 2:
            raise RuntimeError("reduction not finished")
        alive = [v for v in range(self.rt.n) if self.alive[v]]
        alive.sort(key=lambda v: self.rt.depth[v])
        return tuple(alive)


def reduce_step(run: ReductionRun) -> ReductionStep | None:
    return run.step()


def run_reduction(rt: RootedTree) -> ReductionTrace:
    """Exhaustively reduce a rooted tree and record the trace."""
    run = ReductionRun(rt)
    steps = []
    while True:
        s = run.step()
        if s is None:
            break
        steps.append(s)
    return ReductionTrace(steps, run.terminal())


def compute_edn(t: Tree, root: int | None = None) -> tuple[int, ReductionTrace]:
    """Eternal domination number of the tree, with the reduction trace.

    Roots at `root` (must be a leaf) or the smallest-index leaf. The count
    is independent of the choice; the trace is deterministic given it.
    """
    if t.n == 1:
        return 1, ReductionTrace([], (0,))
    rt = root_at(t, root)
    trace = run_reduction(rt)
    return trace.rho + 1, trace


def trace_to_text(trace: ReductionTrace) -> str:
    """Line-oriented log: "P x y" / "B x c1 .. ck", then "T K1 v" or "T K2 u v"."""
    out = []
    for s in trace.steps:
        if s.kind == PAIR:
            out.append(f"P {s.removed[0]} {s.removed[1]}")
        else:
            out.append("B " + " ".join(str(v) for v in (s.x, *s.removed)))
    kind = "K1" if len(trace.terminal) == 1 else "K2"
    out.append("T " + " ".join([kind, *[str(v) for v in trace.terminal]]))
    out.append("")
    return "\n".join(out)
