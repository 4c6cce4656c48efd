"""Generic placements, the rigidity matrix and rank-based rigidity verdicts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb

from . import exact
from .exact import MERSENNE_61 as P
from .graph import Multigraph

DEFAULT_TRIALS = 3
RATIONAL_RANGE = 2**31


class Verdict(str, Enum):
    MINIMALLY_RIGID = "minimally-rigid"
    RIGID_WITH_REDUNDANCY = "rigid-with-redundancy"
    FLEXIBLE = "flexible"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class Framework:
    """A multigraph with a placement of its vertices in ``d``-space.

    ``domain`` is ``"zp"`` (coordinates in Z_p, p = 2^61 - 1) or ``"q"``
    (exact rationals).
    """

    graph: Multigraph
    d: int
    placement: tuple[tuple, ...]
    seed: int
    domain: str = "zp"

    @property
    def modulus(self) -> int | None:
        return P if self.domain == "zp" else None


@dataclass(frozen=True)
class RigidityMatrixView:
    rows: tuple[tuple, ...]
    d: int
    n: int
    modulus: int | None

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.d * self.n

    def rank(self) -> int:
        return exact.rank(self.rows, self.modulus)


@dataclass(frozen=True)
class StressVector:
    coefficients: tuple
    modulus: int | None

    @property
    def support(self) -> frozenset[int]:
        return frozenset(e for e, c in enumerate(self.coefficients) if c != 0)

    def is_equilibrium(self, matrix: RigidityMatrixView) -> bool:
        p = self.modulus
        for col in range(matrix.d * matrix.n):
            s = sum(w * row[col] for w, row in zip(self.coefficients, matrix.rows))
            if (s % p if p else s) != 0:
                return False
        return True


@dataclass(frozen=True)
class RigidityVerdict:
    graph: Multigraph
    d: int
    rank: int
    target: int
    edge_count_ok: bool
    verdict: Verdict
    flex_dim: int
    seed: int
    trials: int

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.to_dict(),
            "d": self.d,
            "rank": self.rank,
            "target": self.target,
            "m": self.graph.m,
            "verdict": self.verdict.value,
            "flex_dim": self.flex_dim,
            "seed": self.seed,
            "trials": self.trials,
        }


def rigid_target(n: int, d: int) -> int:
    """Rank of a rigid framework on ``n >= d+1`` vertices: ``dn - C(d+1, 2)``."""
    return d * n - comb(d + 1, 2)


def random_generic_placement(g: Multigraph, d: int, seed: int, domain: str = "zp") -> Framework:
    """Sample coordinates uniformly from Z_p, or small-height rationals for ``domain="q"``.

    Resamples on the (astronomically unlikely) event that two vertices coincide.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if domain not in ("zp", "q"):
        raise ValueError(f"unknown arithmetic domain {domain!r}")
    rng = random.Random(seed)
    while True:
        if domain == "zp":
            pts = tuple(tuple(rng.randrange(P) for _ in range(d)) for _ in range(g.n))
        else:
            pts = tuple(
                tuple(
                    Fraction(rng.randint(-RATIONAL_RANGE, RATIONAL_RANGE), rng.randint(1, RATIONAL_RANGE))
                    for _ in range(d)
                )
                for _ in range(g.n)
            )
        if len(set(pts)) == len(pts):
            return Framework(g, d, pts, seed, domain)


def build_rigidity_matrix(f: Framework) -> RigidityMatrixView:
    d, n, p = f.d, f.graph.n, f.modulus
    rows = []
    for u, v in f.graph.edges:
        row = [0] * (d * n)
        for a in range(d):
            diff = f.placement[u][a] - f.placement[v][a]
            if p is not None:
                diff %= p
                row[u * d + a] = diff
                row[v * d + a] = -diff % p
            else:
                row[u * d + a] = diff
                row[v * d + a] = -diff
        rows.append(tuple(row))
    return RigidityMatrixView(tuple(rows), d, n, p)


def _trial_seeds(seed: int, trials: int) -> list[int]:
    rng = random.Random(seed)
    return [seed] + [rng.randrange(2**63) for _ in range(trials - 1)]


def generic_rank(g: Multigraph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0, domain: str = "zp") -> int:
    """Max rank of the rigidity matrix over ``trials`` random placements.

    Each trial is a lower bound on the generic rank; over Z_p a trial falls
    short only with probability about (degree bound)/p.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    best = 0
    cap = min(g.m, d * g.n)
    for s in _trial_seeds(seed, trials):
        best = max(best, build_rigidity_matrix(random_generic_placement(g, d, s, domain)).rank())
        if best == cap:
            break
    return best


def rigidity_verdict(
    g: Multigraph, d: int, trials: int = DEFAULT_TRIALS, seed: int = 0, domain: str = "zp"
) -> RigidityVerdict:
    target = rigid_target(g.n, d)
    r = generic_rank(g, d, trials, seed, domain)
    ok = g.m == target
    if g.n < d + 1:
        verdict = Verdict.NOT_APPLICABLE
    elif r < target:
        verdict = Verdict.FLEXIBLE
    elif ok:
        verdict = Verdict.MINIMALLY_RIGID
    else:
        verdict = Verdict.RIGID_WITH_REDUNDANCY
    return RigidityVerdict(g, d, r, target, ok, verdict, target - r, seed, trials)


def find_self_stress(f: Framework) -> StressVector | None:
    """Nonzero ``w`` with ``w^T R = 0``, scaled so its lowest-id nonzero entry is 1."""
    mat = build_rigidity_matrix(f)
    p = mat.modulus
    w = exact.left_null_vector([list(r) for r in mat.rows], p)
    if w is None:
        return None
    lead = next(c for c in w if c != 0)
    inv = 1 / lead if p is None else pow(lead, -1, p)
    coeffs = tuple(c * inv if p is None else c * inv % p for c in w)
    stress = StressVector(coeffs, p)
    if not stress.is_equilibrium(mat):
        raise ArithmeticError("computed stress is not in equilibrium")
    return stress


def find_stress_circuit(g: Multigraph, d: int, seed: int = 0, domain: str = "zp") -> frozenset[int] | None:
    """Minimal dependent edge set of the rigidity matroid, by greedy deletion.

    Edges are tried in ascending id at a single placement drawn from ``seed``.
    """
    mat = build_rigidity_matrix(random_generic_placement(g, d, seed, domain))
    p = mat.modulus

    def dependent(ids):
        return exact.rank([mat.rows[e] for e in ids], p) < len(ids)

    current = list(g.edge_ids())
    if not dependent(current):
        return None
    for e in list(current):
        trial = [x for x in current if x != e]
        if dependent(trial):
            current = trial
    return frozenset(current)
