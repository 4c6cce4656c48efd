"""Graph corpora, brute-force oracles, the double banana and discrepancy scans."""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .graph import CANONICAL_MAX_N, Multigraph, canonical_form
from .rigidity import DEFAULT_TRIALS, rigid_target
from .theorem import Comparison, compare_with_rank

ENUMERATE_MAX_N = 8
LAMAN_MAX_N = 10


def enumerate_graphs(n: int, m: int, connected: bool = True) -> list[Multigraph]:
    """One simple graph per isomorphism class with ``n`` vertices and ``m`` edges."""
    if not 0 <= n <= ENUMERATE_MAX_N:
        raise ValueError(f"enumerate_graphs supports 0 <= n <= {ENUMERATE_MAX_N}")
    pairs = list(itertools.combinations(range(n), 2))
    seen: set[bytes] = set()
    out = []
    for chosen in itertools.combinations(pairs, m):
        g = Multigraph(n, chosen)
        if connected and not g.is_connected():
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def enumerate_multigraphs(n: int, m: int, connected: bool = True) -> list[Multigraph]:
    """One loopless multigraph per isomorphism class, grown edge by edge."""
    if not 0 <= n <= CANONICAL_MAX_N:
        raise ValueError(f"enumerate_multigraphs supports 0 <= n <= {CANONICAL_MAX_N}")
    pairs = list(itertools.combinations(range(n), 2))
    level = {canonical_form(Multigraph(n)): Multigraph(n)}
    for _ in range(m):
        nxt: dict[bytes, Multigraph] = {}
        for g in level.values():
            for pr in pairs:
                h = Multigraph(n, tuple(sorted(g.edges + (pr,))))
                nxt.setdefault(canonical_form(h), h)
        level = nxt
    graphs = [level[k] for k in sorted(level)]
    return [g for g in graphs if g.is_connected()] if connected else graphs


def laman_check(g: Multigraph) -> bool:
    """Exhaustive Laman count: ``m = 2n - 3`` and every ``k >= 2`` vertices span at most ``2k - 3`` edges."""
    if not g.is_simple():
        raise ValueError("laman_check expects a simple graph")
    if not 2 <= g.n <= LAMAN_MAX_N:
        raise ValueError(f"laman_check supports 2 <= n <= {LAMAN_MAX_N}")
    if g.m != 2 * g.n - 3:
        return False
    for mask in range(1, 1 << g.n):
        k = bin(mask).count("1")
        if k < 2:
            continue
        inside = sum(1 for u, v in g.edges if mask >> u & 1 and mask >> v & 1)
        if inside > 2 * k - 3:
            return False
    return True


def exhaustive_tree_partition(g: Multigraph, k: int) -> tuple[tuple[int, ...], ...] | None:
    """Backtracking search over all assignments of edges to ``k`` forests.

    Returns a partition into ``k`` spanning trees or None. Independent of
    the matroid-union code; meant as an oracle for small inputs.
    """
    n, m = g.n, g.m
    if m != k * (n - 1):
        return None
    if n <= 1:
        return tuple(() for _ in range(k))
    parents = [list(range(n)) for _ in range(k)]
    assign: list[list[int]] = [[] for _ in range(k)]

    def find(par, x):
        while par[x] != x:
            x = par[x]
        return x

    def go(e: int) -> bool:
        if e == m:
            return True
        u, v = g.edges[e]
        tried_empty = False
        for i in range(k):
            if len(assign[i]) == n - 1:
                continue
            # forests that are still empty are interchangeable
            if not assign[i]:
                if tried_empty:
                    continue
                tried_empty = True
            par = parents[i]
            ru, rv = find(par, u), find(par, v)
            if ru == rv:
                continue
            par[ru] = rv
            assign[i].append(e)
            if go(e + 1):
                return True
            assign[i].pop()
            par[ru] = ru
        return False

    if go(0):
        return tuple(tuple(a) for a in assign)
    return None


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def nash_williams_check(g: Multigraph, k: int) -> bool:
    """Every vertex partition has at least ``k(|P| - 1)`` crossing edges."""
    for part in set_partitions(range(g.n)):
        where = {v: i for i, blk in enumerate(part) for v in blk}
        cross = sum(1 for u, v in g.edges if where[u] != where[v])
        if cross < k * (len(part) - 1):
            return False
    return True


def double_banana() -> Multigraph:
    """Two copies of K5 minus an edge glued along the missing edge's endpoints 0 and 1."""
    edges = []
    for tips in ((2, 3, 4), (5, 6, 7)):
        block = (0, 1) + tips
        edges += [e for e in itertools.combinations(block, 2) if e != (0, 1)]
    return Multigraph(8, tuple(edges))


def complete_graph(n: int) -> Multigraph:
    return Multigraph(n, tuple(itertools.combinations(range(n), 2)))


@dataclass
class ScanReport:
    corpus: str
    d: int
    trials: int
    seed: int
    size: int
    agreements: int = 0
    not_applicable: int = 0
    discrepancies: list[tuple[int, Comparison]] = field(default_factory=list)
    elapsed: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "corpus": self.corpus,
            "d": self.d,
            "trials": self.trials,
            "seed": self.seed,
            "size": self.size,
            "agreements": self.agreements,
            "not_applicable": self.not_applicable,
            "discrepancies": [
                {"index": i, **c.to_dict()} for i, c in self.discrepancies
            ],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out


def _scan_one(args):
    g, d, trials, seed = args
    if g.n < d + 1:
        return None
    return compare_with_rank(g, d, trials, seed)


def scan_corpus(
    graphs, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0, corpus: str = "", jobs: int = 1
) -> ScanReport:
    """Compare both methods on every graph; results keep corpus order.

    ``discrepancies`` holds ``(corpus index, Comparison)`` pairs.
    """
    graphs = list(graphs)
    start = time.perf_counter()
    work = [(g, d, trials, seed) for g in graphs]
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_one, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        results = [_scan_one(w) for w in work]
    report = ScanReport(corpus, d, trials, seed, len(graphs))
    for i, res in enumerate(results):
        if res is None:
            report.not_applicable += 1
        elif res.discrepancy:
            report.discrepancies.append((i, res))
        else:
            report.agreements += 1
    report.elapsed = time.perf_counter() - start
    return report


def rigid_count_corpus(d: int, n_values) -> list[Multigraph]:
    """Connected simple graphs with ``m = dn - C(d+1, 2)`` for each ``n``."""
    out = []
    for n in n_values:
        m = rigid_target(n, d)
        if m >= 0:
            out.extend(enumerate_graphs(n, m))
    return out
