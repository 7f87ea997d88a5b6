"""
Check Registry - every identity the verification suite replays, in report order
"""

from typing import Dict, List, Optional, Type
import logging

from config.models import EnumerationBounds, VerifyConfig
from verifier.checks.base import BaseCheck
from verifier.checks.complex_checks import (
    AcyclicOrientationCheck,
    FacetCountCheck,
    TreeComplexCheck,
    MinimalNonFaceCheck,
    StructureCheck,
    TailHVectorCheck,
    TwoEdgeCheck,
)
from verifier.checks.cut_checks import (
    ChromaticIdentityCheck,
    ColoringBijectionCheck,
    LabelInvarianceCheck,
    WorkedExampleCheck,
    WTheoremCheck,
)
from verifier.checks.ideal_checks import (
    CodecExampleCheck,
    CodecRoundTripCheck,
    EquivalentPairCheck,
    HilbertIdentityCheck,
    MembershipAgreementCheck,
)
from verifier.checks.oracle_checks import OracleConsistencyCheck
from verifier.instances import InstanceSet

logger = logging.getLogger(__name__)


class CheckRegistry:
    """Registry for all available checks"""

    _checks: Dict[str, Type[BaseCheck]] = {
        # Permutations and W
        'w_theorem': WTheoremCheck,
        'label_invariance': LabelInvarianceCheck,
        'binomial_identity': ChromaticIdentityCheck,
        'worked_example': WorkedExampleCheck,
        'coloring_bijection': ColoringBijectionCheck,

        # Coloring ideal
        'hilbert_identity': HilbertIdentityCheck,
        'membership_agreement': MembershipAgreementCheck,
        'codec_examples': CodecExampleCheck,
        'codec_roundtrip': CodecRoundTripCheck,
        'equivalent_pair': EquivalentPairCheck,

        # Coloring complex
        'tail_h_vector': TailHVectorCheck,
        'facet_count': FacetCountCheck,
        'acyclic_orientations': AcyclicOrientationCheck,
        'tree_complexes': TreeComplexCheck,
        'two_edge_graphs': TwoEdgeCheck,
        'structure': StructureCheck,
        'minimal_non_faces': MinimalNonFaceCheck,

        # Oracles
        'oracle_consistency': OracleConsistencyCheck,
    }

    @classmethod
    def get_check_class(cls, name: str) -> Optional[Type[BaseCheck]]:
        return cls._checks.get(name.lower())

    @classmethod
    def create_check(
        cls,
        name: str,
        instances: InstanceSet,
        config: VerifyConfig,
        bounds: EnumerationBounds,
    ) -> Optional[BaseCheck]:
        check_class = cls.get_check_class(name)
        if check_class is None:
            logger.warning(f"Unknown check: {name}")
            return None
        return check_class(instances, config, bounds)

    @classmethod
    def get_available_checks(cls) -> List[str]:
        return list(cls._checks.keys())

    @classmethod
    def register_check(cls, name: str, check_class: Type[BaseCheck]) -> None:
        cls._checks[name.lower()] = check_class
        logger.info(f"Registered new check: {name}")
