"""Multigraphs, ingestion formats, ordered paths and path augmentation."""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from math import comb

GRAPH6_MAX_N = 2**18


class GraphFormatError(ValueError):
    """Raised for malformed graph input; ``offset`` points at the bad byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph on vertices ``0..n-1``.

    Edge ids are the positions in ``edges``; parallel edges are allowed,
    self-loops are not.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for eid, (u, v) in enumerate(edges):
            if u < 0 or v < 0:
                raise GraphFormatError(f"edge {eid} has a negative endpoint ({u}, {v})")
            if u >= self.n or v >= self.n:
                raise GraphFormatError(f"edge {eid} endpoint out of range for n={self.n}: ({u}, {v})")
            if u == v:
                raise GraphFormatError(f"edge {eid} is a self-loop at vertex {u}")
        object.__setattr__(self, "edges", edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_ids(self) -> range:
        return range(len(self.edges))

    def pair(self, eid: int) -> tuple[int, int]:
        u, v = self.edges[eid]
        return (u, v) if u < v else (v, u)

    def multiplicities(self) -> Counter:
        return Counter(self.pair(e) for e in self.edge_ids())

    def is_simple(self) -> bool:
        return all(c == 1 for c in self.multiplicities().values())

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        """Sorted distinct neighbours of every vertex."""
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return [sorted(s) for s in nbrs]

    def components(self, edge_ids=None) -> list[list[int]]:
        """Connected components (restricted to ``edge_ids`` if given), each sorted."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edge_ids() if edge_ids is None else edge_ids:
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def add_edges(self, pairs) -> Multigraph:
        return Multigraph(self.n, self.edges + tuple(pairs))

    def relabel(self, perm) -> Multigraph:
        return Multigraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class OrderedPath:
    """Directed simple path ``v_0 .. v_{d-1}`` inside a host graph."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    def reversed(self) -> OrderedPath:
        return OrderedPath(self.vertices[::-1], self.edge_ids[::-1])

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edge_ids": list(self.edge_ids)}


@dataclass(frozen=True)
class Augmentation:
    base: Multigraph
    path: OrderedPath
    result: Multigraph
    added_count: int


# -- graph6 -----------------------------------------------------------------


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return ``(n, header_length)`` for a graph6 body."""
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    for i, b in enumerate(data[:8]):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"invalid graph6 character {chr(b)!r}", i)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise GraphFormatError("truncated 8-byte graph6 size header", len(data))
        digits, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise GraphFormatError("truncated 4-byte graph6 size header", len(data))
        digits, start = data[1:4], 4
    n = 0
    for b in digits:
        n = (n << 6) | (b - 63)
    return n, start


def parse_graph6(text: str | bytes) -> Multigraph:
    """Decode a one-line graph6 string into a simple :class:`Multigraph`.

    Edge ids follow row-major order of the upper triangle, i.e. pairs
    ``(i, j)`` with ``i < j`` sorted lexicographically.
    """
    data = text.encode("ascii", errors="replace") if isinstance(text, str) else bytes(text)
    data = data.strip()
    offset = 0
    if data.startswith(b">>graph6<<"):
        data = data[10:]
        offset = 10
    try:
        n, start = _decode_size(data)
    except GraphFormatError as err:
        raise GraphFormatError(str(err).split(" (byte")[0], (err.offset or 0) + offset) from None
    if n > GRAPH6_MAX_N:
        raise GraphFormatError(f"graph6 vertex count {n} exceeds {GRAPH6_MAX_N}", offset)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    payload = data[start:]
    if len(payload) != nbytes:
        raise GraphFormatError(
            f"graph6 payload has {len(payload)} bytes, expected {nbytes} for n={n}",
            offset + start + min(len(payload), nbytes),
        )
    for i, b in enumerate(payload):
        if not 63 <= b <= 126:
            raise GraphFormatError(f"invalid graph6 character {chr(b)!r}", offset + start + i)
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = payload[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                pairs.append((i, j))
            k += 1
    if nbits % 6 and (payload[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError("nonzero padding bits in graph6 payload", offset + start + nbytes - 1)
    pairs.sort()
    return Multigraph(n, tuple(pairs))


def to_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise GraphFormatError("graph6 cannot encode parallel edges")
    n = g.n
    if n <= 62:
        header = [n + 63]
    elif n <= 258047:
        header = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        header = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    present = set(g.multiplicities())
    bits = [1 if (i, j) in present else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = [
        63 + sum(b << (5 - t) for t, b in enumerate(bits[k : k + 6]))
        for k in range(0, len(bits), 6)
    ]
    return bytes(header + body).decode("ascii")


# -- JSON edge list ---------------------------------------------------------


def graph_from_dict(doc) -> Multigraph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise GraphFormatError('edge-list document needs "n" and "edges"')
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphFormatError(f"n must be an integer, got {n!r}")
    pairs = []
    for eid, e in enumerate(doc["edges"]):
        if (
            not isinstance(e, (list, tuple))
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"edge {eid} is not an integer pair: {e!r}")
        pairs.append((e[0], e[1]))
    return Multigraph(n, tuple(pairs))


def parse_edge_list(text: str) -> Multigraph:
    """Parse ``{"n": int, "edges": [[u, v], ...]}``; duplicates become parallel edges."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise GraphFormatError(f"invalid JSON: {err.msg}", err.pos) from None
    return graph_from_dict(doc)


def to_edge_list(g: Multigraph) -> str:
    return json.dumps(g.to_dict())


def parse_graph(text: str, fmt: str = "auto") -> Multigraph:
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "graph6"
    if fmt == "json":
        return parse_edge_list(text)
    if fmt == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {fmt!r}")


# -- paths and augmentation ---------------------------------------------------


def _first_edge_ids(g: Multigraph) -> dict[tuple[int, int], int]:
    first: dict[tuple[int, int], int] = {}
    for e in g.edge_ids():
        first.setdefault(g.pair(e), e)
    return first


def enumerate_paths(g: Multigraph, d: int) -> list[OrderedPath]:
    """All directed simple paths on ``d`` distinct vertices of ``g``.

    Both orientations are listed. With parallel edges only one path per
    vertex sequence is emitted, using the lowest edge id of each pair.
    """
    if d < 2:
        raise ValueError("paths need d >= 2")
    nbrs = g.neighbors()
    first = _first_edge_ids(g)
    out: list[OrderedPath] = []

    def extend(seq: list[int]):
        if len(seq) == d:
            eids = tuple(first[min(a, b), max(a, b)] for a, b in zip(seq, seq[1:]))
            out.append(OrderedPath(tuple(seq), eids))
            return
        for w in nbrs[seq[-1]]:
            if w not in seq:
                seq.append(w)
                extend(seq)
                seq.pop()

    for v in range(g.n):
        extend([v])
    return out


def check_path(g: Multigraph, path: OrderedPath, d: int) -> None:
    verts = path.vertices
    if len(verts) != d or len(path.edge_ids) != d - 1:
        raise ValueError(f"path {verts} does not have {d} vertices and {d - 1} edges")
    if len(set(verts)) != d:
        raise ValueError(f"path {verts} repeats a vertex")
    for (a, b), e in zip(zip(verts, verts[1:]), path.edge_ids):
        if not 0 <= e < g.m or g.pair(e) != (min(a, b), max(a, b)):
            raise ValueError(f"edge id {e} does not join {a} and {b}")


def path_from_vertices(g: Multigraph, vertices) -> OrderedPath:
    """Build an :class:`OrderedPath` from a vertex sequence of ``g``."""
    verts = tuple(int(v) for v in vertices)
    first = _first_edge_ids(g)
    try:
        eids = tuple(first[min(a, b), max(a, b)] for a, b in zip(verts, verts[1:]))
    except KeyError as err:
        raise ValueError(f"{verts} is not a path of the graph: missing edge {err.args[0]}") from None
    path = OrderedPath(verts, eids)
    check_path(g, path, len(verts))
    return path


def augment(g: Multigraph, path: OrderedPath, d: int) -> Augmentation:
    """Add ``d - i`` copies of the ``i``-th path edge (1-indexed)."""
    check_path(g, path, d)
    verts = path.vertices
    extra = []
    for i in range(1, d):
        extra.extend([(verts[i - 1], verts[i])] * (d - i))
    return Augmentation(g, path, g.add_edges(extra), comb(d, 2))


# -- canonical form -------------------------------------------------------------

CANONICAL_MAX_N = 9


def _refined_colors(n: int, mult: Counter) -> list[int]:
    adj: list[dict[int, int]] = [{} for _ in range(n)]
    for (u, v), c in mult.items():
        adj[u][v] = c
        adj[v][u] = c
    colors = [sum(a.values()) for a in adj]
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], c) for w, c in adj[v].items())))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Multigraph) -> bytes:
    """Isomorphism-invariant encoding of ``g``.

    Vertices are first split into classes by iterated degree refinement
    (an invariant partition); the result is the lexicographically least
    sorted edge encoding over all relabelings that keep the classes in
    order. Equal outputs iff the multigraphs are isomorphic.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {n}")
    mult = g.multiplicities()
    colors = _refined_colors(n, mult)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    blocks = [classes[c] for c in sorted(classes)]
    pairs = [p for p, c in mult.items() for _ in range(c)]
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        label = [0] * n
        pos = 0
        for block in choice:
            for v in block:
                label[v] = pos
                pos += 1
        enc = sorted(
            (label[u], label[v]) if label[u] < label[v] else (label[v], label[u]) for u, v in pairs
        )
        if best is None or enc < best:
            best = enc
    return bytes([n] + [a * 16 + b for a, b in best or ()])
