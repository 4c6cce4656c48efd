import itertools
import json
from math import factorial

import pytest

from genrig.graph import Multigraph, canonical_form
from genrig.rigidity import Verdict, generic_rank, rigidity_verdict
from genrig.search import (
    complete_graph,
    double_banana,
    enumerate_graphs,
    enumerate_multigraphs,
    laman_check,
    rigid_count_corpus,
    scan_corpus,
    set_partitions,
)

from .conftest import all_simple_graphs


def automorphism_count(g):
    key = sorted(g.pair(e) for e in g.edge_ids())
    count = 0
    for p in itertools.permutations(range(g.n)):
        if sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges) == key:
            count += 1
    return count


def test_enumerate_graphs_examples():
    assert [g.m for g in enumerate_graphs(3, 3)] == [3]
    assert len(enumerate_graphs(4, 5)) == 1
    assert enumerate_graphs(4, 7) == []
    with pytest.raises(ValueError):
        enumerate_graphs(9, 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumerate_graphs_orbit_count(n):
    """Sum of n!/|Aut(G)| over classes equals the number of labelled connected graphs."""
    labelled = {}
    for g in all_simple_graphs(n):
        if g.is_connected():
            labelled[g.m] = labelled.get(g.m, 0) + 1
    for m, count in labelled.items():
        classes = enumerate_graphs(n, m)
        assert len({canonical_form(g) for g in classes}) == len(classes)
        assert sum(factorial(n) // automorphism_count(g) for g in classes) == count


def test_connected_graph_totals():
    # connected graphs on n unlabelled vertices: 1, 2, 6, 21, 112
    totals = [sum(len(enumerate_graphs(n, m)) for m in range(n * (n - 1) // 2 + 1)) for n in range(2, 7)]
    assert totals == [1, 2, 6, 21, 112]


def test_enumerate_multigraphs_orbit_count():
    n, m = 4, 5
    pairs = list(itertools.combinations(range(n), 2))
    labelled = 0
    for combo in itertools.combinations_with_replacement(pairs, m):
        labelled += Multigraph(n, combo).is_connected()
    classes = enumerate_multigraphs(n, m)

    def aut(g):
        key = sorted(g.pair(e) for e in g.edge_ids())
        return sum(
            sorted(tuple(sorted((p[u], p[v]))) for u, v in g.edges) == key
            for p in itertools.permutations(range(n))
        )

    assert sum(factorial(n) // aut(g) for g in classes) == labelled


def test_laman_examples():
    assert laman_check(complete_graph(3))
    assert not laman_check(complete_graph(4))
    k33 = Multigraph(6, tuple((a, b) for a in range(3) for b in range(3, 6)))
    assert laman_check(k33)
    assert rigidity_verdict(k33, 2).verdict is Verdict.MINIMALLY_RIGID
    with pytest.raises(ValueError):
        laman_check(Multigraph(2, ((0, 1), (0, 1))))
    with pytest.raises(ValueError):
        laman_check(Multigraph(11))


def test_laman_matches_rank_on_all_small_graphs():
    for n in range(2, 7):
        for g in enumerate_graphs(n, 2 * n - 3):
            rigid = generic_rank(g, 2) == 2 * n - 3
            assert laman_check(g) == rigid


def test_double_banana_fixture():
    g = double_banana()
    assert (g.n, g.m) == (8, 18) == (8, 3 * 8 - 6)
    assert g.degrees() == [6, 6, 4, 4, 4, 4, 4, 4]
    assert (0, 1) not in g.multiplicities()
    assert g.is_simple() and g.is_connected()
    v = rigidity_verdict(g, 3)
    assert (v.rank, v.flex_dim) == (17, 1)


def test_set_partitions_count():
    assert [sum(1 for _ in set_partitions(range(k))) for k in range(6)] == [1, 1, 2, 5, 15, 52]


def test_scan_d2_corpus_has_no_discrepancy():
    corpus = rigid_count_corpus(2, range(3, 7))
    rep = scan_corpus(corpus, 2)
    assert rep.discrepancies == [] and rep.agreements == len(corpus)
    assert rep.agreements + len(rep.discrepancies) + rep.not_applicable == rep.size


def test_scan_double_banana_and_k4():
    rep = scan_corpus([double_banana()], 3)
    assert len(rep.discrepancies) == 1 and rep.discrepancies[0][0] == 0
    assert scan_corpus([complete_graph(4)], 3).discrepancies == []


def test_scan_counts_not_applicable():
    rep = scan_corpus([complete_graph(3), complete_graph(4)], 3)
    assert (rep.not_applicable, rep.agreements) == (1, 1)


def test_scan_is_deterministic_and_parallel_safe():
    corpus = rigid_count_corpus(2, range(3, 6)) + [double_banana()]
    a = json.dumps(scan_corpus(corpus, 3, seed=4).to_dict(), sort_keys=True)
    b = json.dumps(scan_corpus(corpus, 3, seed=4).to_dict(), sort_keys=True)
    c = json.dumps(scan_corpus(corpus, 3, seed=4, jobs=2).to_dict(), sort_keys=True)
    assert a == b == c
    assert "elapsed_seconds" in scan_corpus(corpus[:1], 3).to_dict(timing=True)


@pytest.mark.slow
def test_d3_scan_up_to_seven_vertices():
    corpus = rigid_count_corpus(3, range(4, 8))
    rep = scan_corpus(corpus, 3, jobs=4)
    assert rep.agreements + len(rep.discrepancies) == len(corpus)
