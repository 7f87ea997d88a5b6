"""
Relabeling and graph generation
"""

import random
from typing import Dict, Iterator, List, Sequence, Tuple

import networkx as nx

from common.exceptions import InvalidGraphError
from common.models import Graph


def validate_permutation(sigma: Sequence[int], d: int) -> Tuple[int, ...]:
    values = tuple(int(x) for x in sigma)
    if len(values) != d or sorted(values) != list(range(1, d + 1)):
        raise InvalidGraphError(f"{list(values)} is not a bijection of 1..{d}")
    return values


def relabel(graph: Graph, sigma: Sequence[int]) -> Graph:
    """Apply sigma (sigma[v-1] is the image of v) to every edge"""
    sigma = validate_permutation(sigma, graph.d)
    return Graph(graph.d, tuple((sigma[i - 1], sigma[j - 1]) for i, j in graph.edges))


def vertex_pairs(d: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]


def all_labeled_graphs(d: int) -> Iterator[Graph]:
    """All 2^C(d,2) labeled graphs on [d]; bit k of the code selects the k-th vertex pair"""
    pairs = vertex_pairs(d)
    for code in range(1 << len(pairs)):
        yield Graph(d, tuple(p for k, p in enumerate(pairs) if code >> k & 1))


def random_graph(d: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph(d, tuple(pair for pair in vertex_pairs(d) if rng.random() < p))


def random_permutation(d: int, rng: random.Random) -> Tuple[int, ...]:
    values = list(range(1, d + 1))
    rng.shuffle(values)
    return tuple(values)


def isomorphism_class_representatives(d: int) -> List[Graph]:
    """
    One labeled graph per isomorphism class on d vertices, the first met in
    all_labeled_graphs order; buckets by Weisfeiler-Lehman hash, confirmed with VF2.
    """
    buckets: Dict[str, List[Tuple[Graph, nx.Graph]]] = {}
    representatives = []
    for graph in all_labeled_graphs(d):
        nx_graph = graph.to_networkx()
        bucket = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(nx_graph), [])
        if not any(nx.is_isomorphic(nx_graph, other) for _, other in bucket):
            bucket.append((graph, nx_graph))
            representatives.append(graph)
    return representatives
