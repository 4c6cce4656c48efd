import pytest

from genrig.graph import Multigraph, augment, enumerate_paths
from genrig.rigidity import Verdict
from genrig.search import complete_graph, exhaustive_tree_partition, nash_williams_check, rigid_count_corpus
from genrig.theorem import (
    Claim,
    compare_with_rank,
    path_augmentation_test,
    path_budget,
    path_budget_check,
)
from genrig.treedecomp import verify_decomposition

from .conftest import path_graph


def test_triangle_claims_rigid(k3):
    rep = path_augmentation_test(k3, 2)
    assert rep.claim is Claim.MINIMALLY_RIGID and rep.paths_checked == 6
    for res in rep.path_results:
        aug = augment(k3, res.path, 2).result
        assert exhaustive_tree_partition(aug, 2) is not None
        assert verify_decomposition(res.outcome)


def test_path_graph_fails_edge_count():
    rep = path_augmentation_test(path_graph(3), 2)
    assert rep.claim is Claim.NOT_RIGID and not rep.edge_count_ok and rep.paths_checked == 0
    assert "edge count" in rep.diagnostic


def test_not_applicable_below_hypothesis(k3):
    assert path_augmentation_test(k3, 3).claim is Claim.NOT_APPLICABLE


def test_vacuous_path_set_is_not_rigid():
    # right edge count for d=3, n=4 but no path on three vertices
    g = Multigraph(4, ((0, 1),) * 3 + ((2, 3),) * 3)
    rep = path_augmentation_test(g, 3)
    assert rep.edge_count_ok and rep.paths_checked == 0
    assert rep.claim is Claim.NOT_RIGID and "vacuous" in rep.diagnostic


def test_dimension_guards(k3):
    with pytest.raises(ValueError):
        path_augmentation_test(k3, 1)
    with pytest.raises(ValueError):
        path_augmentation_test(complete_graph(8), 7)
    with pytest.raises(ValueError):
        path_augmentation_test(complete_graph(5), 4, max_dim=3)
    assert path_augmentation_test(complete_graph(5), 4, max_dim=4).claim is Claim.MINIMALLY_RIGID


def test_double_banana_every_augmentation_decomposes(banana):
    rep = path_augmentation_test(banana, 3)
    assert rep.claim is Claim.MINIMALLY_RIGID
    assert rep.paths_checked == len(enumerate_paths(banana, 3)) == 132
    for res in rep.path_results:
        aug = augment(banana, res.path, 3).result
        assert nash_williams_check(aug, 3)
        assert verify_decomposition(res.outcome)


def test_fast_mode_stops_early():
    g = Multigraph(5, ((0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (3, 4)))  # K4 plus pendant, m = 2n-3
    full = path_augmentation_test(g, 2)
    fast = path_augmentation_test(g, 2, fast=True)
    assert full.claim is fast.claim is Claim.NOT_RIGID
    assert fast.paths_checked < full.paths_checked
    assert not fast.path_results[-1].decomposable


def test_compare_examples(k3, banana):
    assert not compare_with_rank(k3, 2).discrepancy
    c = compare_with_rank(complete_graph(4), 3)
    assert c.kind == "agreement" and c.rank_says_rigid and c.theorem_says_rigid
    c = compare_with_rank(banana, 3)
    assert c.discrepancy and c.kind == "theorem-claims-rigid"
    assert c.rigidity.verdict is Verdict.FLEXIBLE and c.rigidity.rank == 17
    assert c.stress_circuit is not None
    doc = c.to_dict(summary=True)
    assert doc["kind"] == "theorem-claims-rigid" and "path_results" not in doc["theorem"]
    assert len(c.to_dict()["theorem"]["path_results"]) == 132


def test_compare_requires_hypothesis(k3):
    with pytest.raises(ValueError):
        compare_with_rank(k3, 3)


def test_path_budget_examples(k3, k4):
    assert path_budget(k4) == (24, 30) and path_budget_check(k4)
    assert path_budget(k3) == (6, 6) and not path_budget_check(k3)
    assert path_budget(Multigraph(4)) == (0, 0) and not path_budget_check(Multigraph(4))
    with pytest.raises(ValueError):
        path_budget_check(k4, d=2)


def test_d2_report_properties():
    for g in rigid_count_corpus(2, range(3, 7)):
        rep = path_augmentation_test(g, 2)
        if rep.claim is Claim.MINIMALLY_RIGID:
            assert rep.edge_count_ok
        by_path = {r.path.vertices: r.decomposable for r in rep.path_results}
        assert set(by_path) == {p[::-1] for p in by_path}
