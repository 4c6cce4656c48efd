"""Path-augmentation rigidity test and its comparison with the rank criterion.

For every directed path on ``d`` distinct vertices, the ``i``-th path edge
is duplicated ``d - i`` times and the result must split into ``d``
edge-disjoint spanning trees; the graph is then claimed minimally rigid.
This claim is known to be false in general for ``d >= 3``; the module
exists to test it against the rigidity matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import Multigraph, OrderedPath, augment, enumerate_paths
from .rigidity import (
    DEFAULT_TRIALS,
    RigidityVerdict,
    Verdict,
    find_stress_circuit,
    rigid_target,
    rigidity_verdict,
)
from .treedecomp import DecompositionRefusal, TreeDecomposition, decompose_into_spanning_trees

MAX_DIM = 6


class Claim(str, Enum):
    MINIMALLY_RIGID = "claims-minimally-rigid"
    NOT_RIGID = "claims-not-rigid"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class PathResult:
    path: OrderedPath
    outcome: TreeDecomposition | DecompositionRefusal

    @property
    def decomposable(self) -> bool:
        return self.outcome.feasible

    def to_dict(self, summary: bool = False) -> dict:
        out = {"path": list(self.path.vertices), "decomposable": self.decomposable}
        if not summary:
            out["outcome"] = self.outcome.to_dict()
        return out


@dataclass(frozen=True)
class TheoremReport:
    graph: Multigraph
    d: int
    edge_count_ok: bool
    claim: Claim
    path_results: tuple[PathResult, ...] = ()
    diagnostic: str = ""

    @property
    def paths_checked(self) -> int:
        return len(self.path_results)

    def failing_paths(self) -> list[PathResult]:
        return [r for r in self.path_results if not r.decomposable]

    def to_dict(self, summary: bool = False) -> dict:
        out = {
            "graph": self.graph.to_dict(),
            "d": self.d,
            "edge_count_ok": self.edge_count_ok,
            "claim": self.claim.value,
            "paths_checked": self.paths_checked,
            "failing_paths": len(self.failing_paths()),
            "diagnostic": self.diagnostic,
        }
        if not summary:
            out["path_results"] = [r.to_dict() for r in self.path_results]
        return out


def evaluate_path(g: Multigraph, path: OrderedPath, d: int) -> PathResult:
    aug = augment(g, path, d)
    return PathResult(path, decompose_into_spanning_trees(aug.result, d))


def path_augmentation_test(g: Multigraph, d: int, fast: bool = False, max_dim: int = MAX_DIM) -> TheoremReport:
    """Run the path-augmentation test for dimension ``d``.

    All paths are evaluated unless ``fast`` is set, in which case the first
    non-decomposable augmentation ends the run.
    """
    if d < 2:
        raise ValueError("dimension must be >= 2")
    if d > max_dim:
        raise ValueError(f"dimension {d} exceeds the configured cap {max_dim}")
    target = rigid_target(g.n, d)
    ok = g.m == target
    if g.n < d + 1:
        return TheoremReport(g, d, ok, Claim.NOT_APPLICABLE, diagnostic=f"n={g.n} < d+1={d + 1}")
    if not ok:
        return TheoremReport(
            g, d, ok, Claim.NOT_RIGID, diagnostic=f"edge count {g.m} != dn - C(d+1,2) = {target}"
        )
    paths = enumerate_paths(g, d)
    if not paths:
        return TheoremReport(
            g, d, ok, Claim.NOT_RIGID, diagnostic=f"no path on {d} distinct vertices; quantifier is vacuous"
        )
    results = []
    for path in paths:
        res = evaluate_path(g, path, d)
        results.append(res)
        if fast and not res.decomposable:
            break
    claim = Claim.MINIMALLY_RIGID if all(r.decomposable for r in results) else Claim.NOT_RIGID
    return TheoremReport(g, d, ok, claim, tuple(results))


@dataclass(frozen=True)
class Comparison:
    """Both verdicts for one graph.

    ``discrepancy`` is set when exactly one side asserts minimal rigidity.
    ``stress_circuit`` (a minimal dependent edge set) is attached whenever
    the rigidity matrix has dependent rows.
    """

    theorem: TheoremReport
    rigidity: RigidityVerdict
    stress_circuit: frozenset[int] | None = field(default=None)

    @property
    def theorem_says_rigid(self) -> bool:
        return self.theorem.claim is Claim.MINIMALLY_RIGID

    @property
    def rank_says_rigid(self) -> bool:
        return self.rigidity.verdict is Verdict.MINIMALLY_RIGID

    @property
    def discrepancy(self) -> bool:
        return self.theorem_says_rigid != self.rank_says_rigid

    @property
    def kind(self) -> str:
        if not self.discrepancy:
            return "agreement"
        return "theorem-claims-rigid" if self.theorem_says_rigid else "rank-claims-rigid"

    def to_dict(self, summary: bool = False) -> dict:
        out = {
            "kind": self.kind,
            "discrepancy": self.discrepancy,
            "theorem": self.theorem.to_dict(summary),
            "rigidity": self.rigidity.to_dict(),
        }
        if self.stress_circuit is not None:
            g = self.theorem.graph
            verts = sorted({v for e in self.stress_circuit for v in g.edges[e]})
            out["stress_circuit"] = {"edges": sorted(self.stress_circuit), "vertices": verts}
        return out


def compare_with_rank(
    g: Multigraph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0, fast: bool = False
) -> Comparison:
    if g.n < d + 1:
        raise ValueError(f"comparison needs n >= d+1, got n={g.n}, d={d}")
    report = path_augmentation_test(g, d, fast=fast)
    verdict = rigidity_verdict(g, d, trials, seed)
    circuit = find_stress_circuit(g, d, seed) if verdict.rank < g.m else None
    return Comparison(report, verdict, circuit)


def path_budget(g: Multigraph, d: int = 3) -> tuple[int, int]:
    """``(ordered d-vertex paths, m(m-1))``."""
    return len(enumerate_paths(g, d)), g.m * (g.m - 1)


def path_budget_check(g: Multigraph, d: int = 3) -> bool:
    """True iff the number of ordered paths is strictly below ``m(m-1)``.

    Equality happens exactly when every two edges share a vertex (a
    triangle or a star), so this is reported rather than asserted.
    """
    if d != 3:
        raise ValueError("the budget remark concerns d = 3")
    if not g.is_simple():
        raise ValueError("path budget is defined for simple graphs")
    count, bound = path_budget(g, d)
    return count < bound
