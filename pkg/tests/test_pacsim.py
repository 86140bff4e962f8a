import math

import pytest

from conscheck.core import InvalidArgumentError, Problem, PSet, VSet, is_consistent
from conscheck.pacsim import (
    HiddenConcept,
    SampleDistribution,
    Scenario,
    draw_labeled_samples,
    generalization_error,
    log2_hypothesis_count,
    occam_sample_bound,
    pac_learn,
    simulate,
)
from conscheck.solvers import solve


def test_occam_bound_values():
    assert occam_sample_bound(0.1, 0.1, 10) == 93
    assert occam_sample_bound(0.5, 0.5, 1) == 3
    for bits in (0, 1, 7.5, 20):
        assert occam_sample_bound(1, 1, bits) == math.ceil(round(bits * math.log(2), 9))


@pytest.mark.parametrize("eps,delta", [(0, 0.1), (0.1, 0), (-1, 0.5), (1.5, 0.5), (0.5, 2)])
def test_occam_bound_domain(eps, delta):
    with pytest.raises(ValueError):
        occam_sample_bound(eps, delta, 3)


def test_log2_hypothesis_counts():
    assert log2_hypothesis_count(Problem.SPLIT_GRAPH, 6) == 6
    assert log2_hypothesis_count(Problem.DOMINATING_SET_DEG, 6, 2) == 6
    assert log2_hypothesis_count(Problem.MATCHING, 4, 2) == pytest.approx(math.log2(15))
    assert log2_hypothesis_count(Problem.EDGE_CLIQUE_COVER, 3, 1) == pytest.approx(2.0)


def test_distribution_validation():
    with pytest.raises(InvalidArgumentError):
        SampleDistribution((((0, 1),),), (0.9,))
    with pytest.raises(InvalidArgumentError):
        SampleDistribution((((0, 1),), ()), (1.2, -0.2))
    SampleDistribution((((0, 1),), ()), (0.5, 0.5 + 1e-12))


def test_point_mass_draws():
    concept = HiddenConcept(Problem.TWO_COLORING, VSet((0,)), 2)
    dist = SampleDistribution.point_mass(((0, 1),))
    drawn = draw_labeled_samples(dist, concept, 7, seed=3)
    assert len(drawn) == 7 and all(s.edges == ((0, 1),) and s.label == 1 for s in drawn)


def test_matching_concept_labels_supergraph_positive():
    concept = HiddenConcept(Problem.MATCHING, PSet(((0, 1), (2, 3))), 5, k=2)
    dist = SampleDistribution.point_mass(((0, 1), (1, 2), (2, 3), (3, 4)))
    assert draw_labeled_samples(dist, concept, 1)[0].label == 1


def test_uniform_draw_frequency():
    concept = HiddenConcept(Problem.TWO_COLORING, VSet(()), 3)
    dist = SampleDistribution.uniform([((0, 1),), ((1, 2),)])
    drawn = draw_labeled_samples(dist, concept, 10_000, seed=42)
    freq = sum(s.edges == ((0, 1),) for s in drawn) / len(drawn)
    assert 0.47 <= freq <= 0.53


def test_draws_are_reproducible():
    concept = HiddenConcept(Problem.TWO_COLORING, VSet(()), 3)
    dist = SampleDistribution.uniform([((0, 1),), ((1, 2),), ()])
    assert draw_labeled_samples(dist, concept, 50, seed=[1, 2]) == draw_labeled_samples(dist, concept, 50, seed=[1, 2])


def test_point_mass_learning_has_zero_error():
    concept = HiddenConcept(Problem.MATCHING, PSet(((0, 1),)), 4, k=1)
    dist = SampleDistribution.point_mass(((0, 1), (2, 3)))
    run = pac_learn(dist, concept, 0.1, 0.1, seed=0)
    assert run.err == 0.0 and run.hypothesis is not None


def test_zero_samples_learns_the_only_candidate():
    # one vertex: the hypothesis space is {{}, {0}} with log2 = 1; eps = delta
    # = 1 with log2 |H| = 0 would need a 1-candidate space, so check the m = 0
    # path through a custom bound instead
    concept = HiddenConcept(Problem.DOMINATING_SET_DEG, VSet((0,)), 1, k=1, d=0)
    dist = SampleDistribution.point_mass(())
    assert occam_sample_bound(1, 1, 0) == 0
    run = pac_learn(dist, concept, 1, 1, seed=0)
    assert run.hypothesis == VSet((0,)) and run.err == 0.0


def test_error_of_concept_against_itself_is_zero():
    concept = HiddenConcept(Problem.SPLIT_GRAPH, VSet((0,)), 4)
    dist = SampleDistribution.uniform([((0, 1), (0, 2)), ((1, 2),), (), ((0, 1), (1, 2), (0, 2))])
    assert generalization_error(dist, concept, concept.solution) == 0.0
    assert generalization_error(dist, concept, None) == 1.0
    err = generalization_error(dist, concept, VSet((1,)))
    assert 0.0 <= err <= 1.0


def test_split_graph_concept_runs():
    concept = HiddenConcept(Problem.SPLIT_GRAPH, VSet((0,)), 4)
    dist = SampleDistribution.uniform([((0, 1), (0, 2)), ((1, 2),), (), ((0, 1), (0, 2), (0, 3))])
    report = simulate(Scenario(concept, dist), 0.2, 0.2, 200, seed=0)
    assert report.fraction_within >= 0.8


def test_hypotheses_consistent_with_drawn_samples():
    concept = HiddenConcept(Problem.MATCHING, PSet(((0, 1), (2, 3))), 5, k=2)
    dist = SampleDistribution.uniform([((0, 1), (2, 3)), ((0, 1), (1, 2), (2, 3), (3, 4)), ((0, 1),), ((1, 2), (3, 4))])
    seen = []

    def spy(instance):
        sol = solve(instance)
        seen.append((instance, sol))
        return sol

    simulate(Scenario(concept, dist), 0.3, 0.3, 20, seed=1, solver=spy)
    assert len(seen) == 20
    for instance, sol in seen:
        assert sol is not None and is_consistent(instance, sol)
        assert len(set(instance.samples)) == len(instance.samples)


def test_report_csv():
    concept = HiddenConcept(Problem.TWO_COLORING, VSet((0,)), 2)
    report = simulate(Scenario(concept, SampleDistribution.point_mass(((0, 1),))), 0.5, 0.5, 3, seed=9)
    lines = report.to_csv().splitlines()
    assert lines[0].startswith("# problem=two-coloring")
    assert lines[1] == "run,m,err,tneg"
    assert len(lines) == 2 + 3 + 1
    assert lines[-1].startswith("# runs=3 fraction_err_le_eps=1.0000")
