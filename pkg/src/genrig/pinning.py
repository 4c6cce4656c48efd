"""Pinned rigidity systems along a path, and tree extraction by elimination.

Supports are placed along a path ``v_0 .. v_{d-1}``: joint ``v_j`` is held
in directions ``j .. d-1``. Support rows of ``v_j`` then have the matching
rows of ``v_{j-1}`` subtracted, turning them into single-direction copies
of the path edge. Dropping ``v_0``'s rows and columns leaves a square
system whose transpose is eliminated to split its columns (edges plus
added copies) into ``d`` groups, one per direction; each group is then
checked for being a spanning tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import exact
from .graph import Multigraph, OrderedPath, augment, check_path
from .rigidity import Framework, build_rigidity_matrix
from .treedecomp import TreeDecomposition, verify_decomposition

PIVOT_RULES = ("direction-major", "vertex-major")


@dataclass(frozen=True)
class PinnedSystem:
    """The four matrix stages.

    ``support_labels`` are the ``(vertex, direction)`` of each stage-A support
    row; ``y_labels`` those retained in stage C; ``d_columns`` label the
    columns of stage D (equivalently the rows of its transpose).
    """

    framework: Framework
    path: OrderedPath
    stage_a: tuple[tuple, ...]
    stage_b: tuple[tuple, ...]
    stage_c: tuple[tuple, ...]
    stage_d: tuple[tuple, ...]
    support_labels: tuple[tuple[int, int], ...]
    y_labels: tuple[tuple[int, int], ...]
    d_columns: tuple[tuple[int, int], ...]

    @property
    def modulus(self):
        return self.framework.modulus

    @property
    def augmented(self) -> Multigraph:
        f = self.framework
        return augment(f.graph, self.path, f.d).result


@dataclass(frozen=True)
class EliminationPartition:
    """Column groups of ``D^T`` by pivot direction and their tree reading.

    ``trees`` holds augmented-graph edge ids per direction when every group
    reads as a spanning tree; otherwise it is None and ``failure`` explains.
    """

    pivot_rule: str
    groups: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[tuple, ...], ...]
    trees: tuple[tuple[int, ...], ...] | None
    failure: str | None
    pivot_trace: tuple[tuple[int, int, int], ...]

    def to_dict(self) -> dict:
        return {
            "pivot_rule": self.pivot_rule,
            "groups": [list(s) for s in self.groups],
            "trees": None if self.trees is None else [list(t) for t in self.trees],
            "failure": self.failure,
            "pivot_trace": [
                {"column": c, "vertex": v, "direction": a} for c, v, a in self.pivot_trace
            ],
        }


def build_pinned_system(f: Framework, path: OrderedPath) -> PinnedSystem:
    d, n = f.d, f.graph.n
    check_path(f.graph, path, d)
    p = f.modulus
    verts = path.vertices
    r = [list(row) for row in build_rigidity_matrix(f).rows]
    m = len(r)

    labels = [(verts[j], a) for j in range(d) for a in range(j, d)]
    assert len(labels) == comb(d + 1, 2)
    supports = []
    for v, a in labels:
        row = [0] * (d * n)
        row[v * d + a] = 1
        supports.append(row)
    stage_a = r + supports

    index = {lab: i for i, lab in enumerate(labels)}
    stage_b = [list(row) for row in stage_a]
    for j in range(1, d):
        for a in range(j, d):
            dst = m + index[verts[j], a]
            src = stage_a[m + index[verts[j - 1], a]]
            stage_b[dst] = [x - y if p is None else (x - y) % p for x, y in zip(stage_b[dst], src)]

    keep = [i for i, (v, _) in enumerate(labels) if v != verts[0]]
    stage_c = stage_b[:m] + [stage_b[m + i] for i in keep]
    y_labels = tuple(labels[i] for i in keep)

    v0 = verts[0]
    cols = [c for c in range(d * n) if c // d != v0]
    stage_d = [[row[c] for c in cols] for row in stage_c]
    d_columns = tuple((c // d, c % d) for c in cols)

    def freeze(rows):
        return tuple(tuple(row) for row in rows)

    return PinnedSystem(
        f,
        path,
        freeze(stage_a),
        freeze(stage_b),
        freeze(stage_c),
        freeze(stage_d),
        tuple(labels),
        y_labels,
        d_columns,
    )


def pinned_invertible(ps: PinnedSystem) -> bool:
    rows = ps.stage_d
    if not rows or len(rows) != len(rows[0]):
        return len(rows) == 0 and not ps.d_columns
    return exact.determinant(rows, ps.modulus) != 0


def _row_order(labels, rule: str) -> list[int]:
    if rule == "direction-major":
        key = lambda i: (labels[i][1], labels[i][0])  # noqa: E731
    elif rule == "vertex-major":
        key = lambda i: (labels[i][0], labels[i][1])  # noqa: E731
    else:
        raise ValueError(f"unknown pivot rule {rule!r}; choose from {PIVOT_RULES}")
    return sorted(range(len(labels)), key=key)


def extract_tree_partition(ps: PinnedSystem, pivot_rule: str = "direction-major") -> EliminationPartition:
    """Split the columns of ``D^T`` by the direction of their pivot row.

    Each group, restricted to its direction's rows, is read as a reduced
    incidence matrix (``v_0``'s row removed) after scaling every column by
    its edge's coordinate difference; a failure is reported, not raised.
    """
    if not pinned_invertible(ps):
        raise ValueError("stage D is singular; no elimination partition exists")
    f, p = ps.framework, ps.modulus
    d, n = f.d, f.graph.n
    dt = exact.transpose([list(r) for r in ps.stage_d])
    labels = ps.d_columns
    _, pivots = exact.echelon(dt, p, row_order=_row_order(labels, pivot_rule))
    groups: list[list[int]] = [[] for _ in range(d)]
    trace = []
    for col, row in pivots:
        v, a = labels[row]
        groups[a].append(col)
        trace.append((col, v, a))

    aug = ps.augmented
    v0 = ps.path.vertices[0]
    blocks = []
    failure = None
    for a in range(d):
        rows_a = [i for i in sorted(range(len(labels)), key=lambda i: labels[i][0]) if labels[i][1] == a]
        block = tuple(tuple(dt[i][c] for c in groups[a]) for i in rows_a)
        blocks.append(block)
        if failure is None:
            failure = _incidence_failure(aug, v0, a, groups[a], [labels[i][0] for i in rows_a], block, p)

    trees = None
    if failure is None:
        dec = TreeDecomposition(aug, d, tuple(tuple(sorted(g)) for g in groups))
        if verify_decomposition(dec):
            trees = dec.trees
        else:
            failure = "groups read as incidence columns but do not form spanning trees"
    return EliminationPartition(
        pivot_rule,
        tuple(tuple(g) for g in groups),
        tuple(blocks),
        trees,
        failure,
        tuple(trace),
    )


def _incidence_failure(aug: Multigraph, v0, a, cols, row_vertices, block, p) -> str | None:
    n = aug.n
    if len(cols) != n - 1:
        return f"direction {a}: {len(cols)} columns, a spanning tree needs {n - 1}"
    for j, e in enumerate(cols):
        u, v = aug.edges[e]
        entries = {row_vertices[i]: block[i][j] for i in range(len(block)) if block[i][j] != 0}
        expected = {u, v} - {v0}
        if set(entries) != expected:
            return (
                f"direction {a}: column of edge {e} ({u},{v}) has nonzeros at "
                f"{sorted(entries)}, not at its endpoints {sorted(expected)}"
            )
        if len(entries) == 2:
            total = entries[u] + entries[v]
            if (total % p if p else total) != 0:
                return f"direction {a}: column of edge {e} is not a scaled incidence column"
    return None
