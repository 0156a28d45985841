"""Isomorphism-free enumeration of connected graphs with fixed (n, m).

Generation follows the canonical-augmentation scheme: spanning trees on n
vertices are grown by leaf additions, then edges are added one at a time
up to the target size.  A child is kept only when the edge (or leaf) that
produced it lies in the automorphism orbit of the child's canonical
deletion edge, which guarantees exactly one representative per isomorphism
class with no global dedup state.  That memorylessness is what makes the
parallel split trivial: every spanning-tree seed owns an independent
subtree of the generation forest, and fold results merge associatively,
so output is identical for any worker count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Callable, Iterator, Optional

from .canon import CANON_MAX_N, CanonCapacityError, CanonResult, canon, pair_orbit_reps
from .graphs import Graph, write_graph6
from .indices import edge_mostar


@dataclass(frozen=True)
class EnumerationTask:
    n: int
    m: int
    min_degree: int = 0

    def validate(self) -> None:
        if self.n < 0 or self.m < 0:
            raise ValueError("order and size must be nonnegative")
        if self.n > CANON_MAX_N:
            raise CanonCapacityError(
                f"enumeration supports n <= {CANON_MAX_N}, got {self.n}"
            )

    @property
    def feasible(self) -> bool:
        return self.n >= 1 and self.n - 1 <= self.m <= self.n * (self.n - 1) // 2

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "min_degree": self.min_degree}


@dataclass(frozen=True)
class EnumerationResult:
    task: EnumerationTask
    graphs_visited: int
    max_value: Optional[int]
    maximizers: tuple[str, ...]          # canonical graph6, sorted
    histogram: Optional[dict[int, int]] = None

    def to_dict(self) -> dict:
        return {
            "task": self.task.to_dict(),
            "graphs_visited": self.graphs_visited,
            "max_value": self.max_value,
            "maximizers": list(self.maximizers),
            "histogram": (
                {str(k): v for k, v in sorted(self.histogram.items())}
                if self.histogram is not None
                else None
            ),
        }


# -- spanning-tree seeds -----------------------------------------------------


def _tree_children(k: int, adj: tuple[int, ...], cres: CanonResult):
    """Canonically accepted leaf extensions of a k-vertex tree."""
    out = []
    seen_orbits = set()
    for v in range(k):
        o = cres.orbit_of[v]
        if o in seen_orbits:
            continue
        seen_orbits.add(o)
        child = tuple(
            row | (1 << k) if i == v else row for i, row in enumerate(adj)
        ) + (1 << v,)
        ccres = canon(Graph(k + 1, child))
        lam = ccres.labeling
        best_leaf = None
        for w in range(k + 1):
            if child[w].bit_count() == 1:
                if best_leaf is None or lam[w] < lam[best_leaf]:
                    best_leaf = w
        if ccres.orbit_of[k] == ccres.orbit_of[best_leaf]:
            out.append((child, ccres))
    return out


def trees(n: int) -> Iterator[tuple[tuple[int, ...], CanonResult]]:
    """One representative per isomorphism class of trees on n vertices."""
    if n < 1:
        return
    start = (0,)
    if n == 1:
        yield start, canon(Graph(1, start))
        return
    level = [((0,), canon(Graph(1, (0,))))]
    for k in range(1, n):
        nxt = []
        for adj, cres in level:
            nxt.extend(_tree_children(k, adj, cres))
        level = nxt
    yield from level


# -- canonical edge augmentation ---------------------------------------------


def _bridges(n: int, adj: tuple[int, ...]) -> set[tuple[int, int]]:
    disc = [-1] * n
    low = [0] * n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, -1)]
        iters = {}
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent = stack[-1]
            it = iters.get(v)
            if it is None:
                it = iters[v] = iter(
                    [w for w in range(n) if adj[v] >> w & 1]
                )
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v))
                    advanced = True
                    break
                elif w != parent:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] > disc[pv]:
                        out.add((pv, v) if pv < v else (v, pv))
    return out


def _edge_inv(adj: tuple[int, ...], deg: list[int], a: int, b: int):
    """Cheap isomorphism-invariant edge score used to pre-filter the
    canonical-deletion test before paying for a full canonical labeling."""
    da, db = deg[a], deg[b]
    if da > db:
        da, db = db, da
    nbr = []
    row = adj[a] | adj[b]
    while row:
        low = row & -row
        nbr.append(deg[low.bit_length() - 1])
        row ^= low
    nbr.sort()
    return (da, db, tuple(nbr))


def _accept_edge_child(
    n: int, child: tuple[int, ...], a: int, b: int
) -> Optional[CanonResult]:
    """McKay acceptance: does (a, b) sit in the orbit of the canonical
    deletion edge of `child`?  Returns the child's canon data when yes."""
    deg = [row.bit_count() for row in child]
    bridges = _bridges(n, child)
    nonbridge = []
    for u in range(n):
        row = child[u] >> (u + 1)
        base = u + 1
        while row:
            low = row & -row
            v = base + low.bit_length() - 1
            row ^= low
            if (u, v) not in bridges:
                nonbridge.append((u, v))
    invs = {f: _edge_inv(child, deg, *f) for f in nonbridge}
    e = (a, b) if a < b else (b, a)
    min_inv = min(invs.values())
    if invs[e] != min_inv:
        return None
    cres = canon(Graph(n, child))
    lam = cres.labeling
    best_pair = None
    best_key = None
    for f in nonbridge:
        if invs[f] != min_inv:
            continue
        x, y = lam[f[0]], lam[f[1]]
        key = (x, y) if x < y else (y, x)
        if best_key is None or key < best_key:
            best_key = key
            best_pair = f
    reps = pair_orbit_reps(n, cres.generators, nonbridge)
    if reps[e] == reps[best_pair]:
        return cres
    return None


def _augment(
    n: int,
    adj: tuple[int, ...],
    cres: CanonResult,
    m_cur: int,
    m_target: int,
) -> Iterator[tuple[tuple[int, ...], CanonResult]]:
    if m_cur == m_target:
        yield adj, cres
        return
    full = (1 << n) - 1
    nonedges = []
    for u in range(n):
        row = (~adj[u]) & full & ~((1 << (u + 1)) - 1)
        while row:
            low = row & -row
            nonedges.append((u, low.bit_length() - 1))
            row ^= low
    if not nonedges:
        return
    reps = pair_orbit_reps(n, cres.generators, nonedges)
    for u, v in sorted(set(reps.values())):
        child = tuple(
            r | (1 << v) if i == u else (r | (1 << u) if i == v else r)
            for i, r in enumerate(adj)
        )
        ccres = _accept_edge_child(n, child, u, v)
        if ccres is not None:
            yield from _augment(n, child, ccres, m_cur + 1, m_target)


def _enumerate_raw(
    task: EnumerationTask,
) -> Iterator[tuple[tuple[int, ...], CanonResult]]:
    task.validate()
    if not task.feasible:
        return
    n, m = task.n, task.m
    for adj, cres in trees(n):
        yield from _augment(n, adj, cres, n - 1, m)


def enumerate_connected(task: EnumerationTask) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of connected graphs
    with the task's order and size (optionally filtered by min degree)."""
    for adj, _ in _enumerate_raw(task):
        if task.min_degree and any(
            row.bit_count() < task.min_degree for row in adj
        ):
            continue
        yield Graph(task.n, adj)


# -- folds -------------------------------------------------------------------


def _fold_seed(args) -> tuple:
    (n, m, min_degree, seed_adj, want_histogram, target_values, want_census) = args
    seed = Graph(n, seed_adj)
    cres = canon(seed)
    count = 0
    best: Optional[int] = None
    argmax: list[str] = []
    histogram: Counter = Counter()
    matches: dict[int, list[str]] = {v: [] for v in target_values}
    census: Counter = Counter()
    if m == n - 1:
        stream = iter([(seed_adj, cres)])
    else:
        stream = _augment(n, seed_adj, cres, n - 1, m)
    for adj, ccres in stream:
        if min_degree and any(row.bit_count() < min_degree for row in adj):
            continue
        count += 1
        g = Graph(n, adj)
        value = edge_mostar(g)
        if want_histogram:
            histogram[value] += 1
        canon_g6 = write_graph6(Graph(n, ccres.canon_adj))
        if best is None or value > best:
            best = value
            argmax = [canon_g6]
        elif value == best:
            argmax.append(canon_g6)
        if value in matches:
            matches[value].append(canon_g6)
        if want_census:
            from .braces import classify

            cls = classify(g)
            census[(cls.kind, cls.path_parameters)] += 1
    return (count, best, argmax, dict(histogram), matches, dict(census))


@dataclass(frozen=True)
class Survey:
    """Result of a single enumeration pass with optional extras."""

    result: EnumerationResult
    matches: dict[int, tuple[str, ...]]
    census: dict[tuple, int]


def survey(
    task: EnumerationTask,
    workers: int = 1,
    histogram: bool = False,
    target_values: tuple[int, ...] = (),
    census: bool = False,
) -> Survey:
    """Enumerate once, folding max/argmax plus any requested extras.

    Deterministic: the outcome is independent of `workers`.
    """
    task.validate()
    n, m = task.n, task.m
    partials = []
    if task.feasible:
        seeds = [adj for adj, _ in trees(n)]
        args = [
            (n, m, task.min_degree, s, histogram, tuple(target_values), census)
            for s in seeds
        ]
        if workers > 1 and len(args) > 1:
            ctx = get_context("fork")
            with ctx.Pool(processes=workers) as pool:
                partials = pool.map(_fold_seed, args, chunksize=1)
        else:
            partials = [_fold_seed(a) for a in args]
    count = sum(p[0] for p in partials)
    bests = [p[1] for p in partials if p[1] is not None]
    best = max(bests) if bests else None
    argmax: list[str] = []
    hist: Counter = Counter()
    matches: dict[int, list[str]] = {v: [] for v in target_values}
    cens: Counter = Counter()
    for p in partials:
        if p[1] == best and best is not None:
            argmax.extend(p[2])
        hist.update(p[3])
        for v, lst in p[4].items():
            matches[v].extend(lst)
        cens.update(p[5])
    result = EnumerationResult(
        task=task,
        graphs_visited=count,
        max_value=best,
        maximizers=tuple(sorted(argmax)),
        histogram=dict(hist) if histogram else None,
    )
    return Survey(
        result=result,
        matches={v: tuple(sorted(lst)) for v, lst in matches.items()},
        census=dict(cens),
    )


def maximize(
    task: EnumerationTask, workers: int = 1, histogram: bool = False
) -> EnumerationResult:
    """Fold edge_mostar over the enumeration stream; collect all argmax
    canonical forms.  Empty classes yield graphs_visited=0 explicitly."""
    return survey(task, workers=workers, histogram=histogram).result


def tricyclic_task(m: int) -> EnumerationTask:
    return EnumerationTask(n=m - 2, m=m)


def bicyclic_task(m: int) -> EnumerationTask:
    return EnumerationTask(n=m - 1, m=m)


def unicyclic_task(m: int) -> EnumerationTask:
    return EnumerationTask(n=m, m=m)


def maximize_tricyclic(m: int, workers: int = 1, **kw) -> EnumerationResult:
    return maximize(tricyclic_task(m), workers=workers, **kw)


def maximize_bicyclic(m: int, workers: int = 1, **kw) -> EnumerationResult:
    return maximize(bicyclic_task(m), workers=workers, **kw)


def maximize_unicyclic(m: int, workers: int = 1, **kw) -> EnumerationResult:
    return maximize(unicyclic_task(m), workers=workers, **kw)
