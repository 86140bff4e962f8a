"""Regenerate the bundled PAC scenarios in src/conscheck/data.

Each scenario mixes graphs labelled positive and negative by the hidden
concept, with non-uniform probabilities drawn from a fixed seed.
"""

import random
from pathlib import Path

from conscheck.core import Problem, PSet, VSet, all_pairs
from conscheck.io import serialize_scenario
from conscheck.pacsim import HiddenConcept, SampleDistribution, Scenario

DATA = Path(__file__).resolve().parents[1] / "src" / "conscheck" / "data"


def bounded_graph(rng, n, density, d=None, must=()):
    edges = set(must)
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    pairs = all_pairs(n)
    rng.shuffle(pairs)
    for u, v in pairs:
        if (u, v) in edges or rng.random() > density:
            continue
        if d is not None and (deg[u] >= d or deg[v] >= d):
            continue
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    return tuple(sorted(edges))


def build(concept, graphs, rng):
    seen, support = set(), []
    for g in graphs:
        if g not in seen:
            seen.add(g)
            support.append(g)
    # power-law masses so that rare graphs are often missed by the learner
    weights = [1 / (i + 1) ** 1.5 for i in range(len(support))]
    rng.shuffle(weights)
    total = sum(weights)
    probs = [round(w / total, 6) for w in weights]
    probs[-1] = round(1 - sum(probs[:-1]), 6)
    return Scenario(concept, SampleDistribution(tuple(support), tuple(probs)))


def split_scenario(rng):
    n, X = 6, (0, 1, 2)
    concept = HiddenConcept(Problem.SPLIT_GRAPH, VSet(X), n)
    clique = [(0, 1), (0, 2), (1, 2)]
    graphs = []
    for _ in range(10):  # split graphs with clique side {0,1,2}
        cross = [(u, v) for u in X for v in range(3, n) if rng.random() < 0.5]
        graphs.append(tuple(sorted(clique + cross)))
    for _ in range(10):
        graphs.append(bounded_graph(rng, n, rng.uniform(0.2, 0.7)))
    return build(concept, graphs, rng)


def matching_scenario(rng):
    n, F = 6, ((0, 1), (2, 3))
    concept = HiddenConcept(Problem.MATCHING, PSet(F), n, k=2)
    graphs = [bounded_graph(rng, n, rng.uniform(0.1, 0.6), must=F) for _ in range(10)]
    graphs += [bounded_graph(rng, n, rng.uniform(0.2, 0.8)) for _ in range(10)]
    return build(concept, graphs, rng)


def ds_scenario(rng):
    n, X = 6, (0, 3)
    concept = HiddenConcept(Problem.DOMINATING_SET_DEG, VSet(X), n, k=2, d=2)
    graphs = [bounded_graph(rng, n, 0.9, 2, must=((0, 1), (0, 2), (3, 4), (3, 5))) for _ in range(6)]
    graphs += [bounded_graph(rng, n, rng.uniform(0.3, 0.9), 2) for _ in range(14)]
    return build(concept, graphs, rng)


def main():
    rng = random.Random(2024)
    for name, make in [("split-graph", split_scenario), ("matching", matching_scenario), ("dominating-set-deg", ds_scenario)]:
        sc = make(rng)
        (DATA / f"{name}.scenario").write_text(serialize_scenario(sc), encoding="utf-8")
        labels = [sc.concept.label(e) for e in sc.distribution.support]
        print(f"{name}: {len(labels)} graphs, {sum(labels)} positive")


if __name__ == "__main__":
    main()
