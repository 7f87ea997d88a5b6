"""
Graph instance families for the verification sweep: exhaustive, per
isomorphism class, seeded samples, and the fixture graphs.
"""

import logging
import random
from functools import lru_cache
from pathlib import Path
from typing import List, Tuple

from common.exceptions import InvalidGraphError
from common.models import Graph
from config.models import EnumerationBounds, VerifyConfig
from graph_core.operations import (
    all_labeled_graphs,
    isomorphism_class_representatives,
    random_graph,
    random_permutation,
)
from graph_core.oracles import chromatic_class_signature, chromatic_polynomial
from graph_core.parsers import load_graph

logger = logging.getLogger(__name__)

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


class InstanceSet:
    """Deterministic graph families derived from a VerifyConfig"""

    def __init__(self, config: VerifyConfig, bounds: EnumerationBounds, fixtures_dir: Path = FIXTURES_DIR):
        self.config = config
        self.bounds = bounds
        self.fixtures_dir = Path(fixtures_dir)
        # per-instance caches
        self.exhaustive = lru_cache(maxsize=None)(self._exhaustive)
        self.representatives = lru_cache(maxsize=None)(self._representatives)
        self.sampled = lru_cache(maxsize=None)(self._sampled)
        self.fixture = lru_cache(maxsize=None)(self._fixture)

    def _exhaustive(self, d: int) -> Tuple[Graph, ...]:
        return tuple(all_labeled_graphs(d))

    def _representatives(self, d: int) -> Tuple[Graph, ...]:
        return tuple(isomorphism_class_representatives(d))

    def _sampled(self, d: int) -> Tuple[Graph, ...]:
        rng = random.Random(self.config.seed * 1000 + d)
        return tuple(random_graph(d, rng) for _ in range(self.config.sample_count))

    def _fixture(self, name: str) -> Graph:
        return load_graph(self.fixtures_dir / f"{name}.txt")

    def up_to_relabeling(self, d: int) -> Tuple[Graph, ...]:
        """Every labeled graph while d <= exhaustive_d, one per isomorphism class above"""
        if d <= self.config.exhaustive_d:
            return self.exhaustive(d)
        return self.representatives(d)

    def family(self, min_d: int, max_d: int) -> List[Graph]:
        graphs: List[Graph] = []
        for d in range(min_d, max_d + 1):
            graphs.extend(self.up_to_relabeling(d))
        return graphs

    def label_pairs(self) -> List[Tuple[Graph, Tuple[int, ...]]]:
        """Seeded (graph, relabeling) pairs with 4 <= d <= 6"""
        rng = random.Random(self.config.seed)
        pairs = []
        for _ in range(self.config.label_pairs):
            d = rng.randint(4, 6)
            pairs.append((random_graph(d, rng), random_permutation(d, rng)))
        return pairs

    def equivalent_pair(self) -> Tuple[Graph, Graph]:
        """The chromatically equivalent pair, checked to share the coloring-class signature"""
        g, h = self.fixture("bowtie"), self.fixture("chorded_c4_pendant")
        if chromatic_polynomial(g) != chromatic_polynomial(h):
            raise InvalidGraphError("equivalent-pair fixtures are not chromatically equivalent")
        if chromatic_class_signature(g, bounds=self.bounds) != chromatic_class_signature(h, bounds=self.bounds):
            raise InvalidGraphError("equivalent-pair fixtures have different coloring-class signatures")
        logger.debug("equivalent-pair fixtures share chromatic polynomial and class signature")
        return g, h
