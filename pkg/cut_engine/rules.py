"""
Cut rules.

A rule decides whether position k (1 <= k <= d-1) is a cut from the path
lengths and letters at positions k and k+1. Position 0 is a cut under every
rule and never reaches the rule.
"""

from typing import Callable, Dict

CutRule = Callable[[int, int, int, int], bool]


def standard_cut_rule(ell_k: int, ell_next: int, a_k: int, a_next: int) -> bool:
    """Cut iff ell rises, or ell ties and the letters ascend"""
    if ell_k < ell_next:
        return True
    return ell_k == ell_next and a_k < a_next


def ties_never_cut_rule(ell_k: int, ell_next: int, a_k: int, a_next: int) -> bool:
    """Broken rule for negative controls: ascending ties stay inside a block"""
    return ell_k < ell_next


CUT_RULES: Dict[str, CutRule] = {
    "standard": standard_cut_rule,
    "ties_never_cut": ties_never_cut_rule,
}


def get_cut_rule(name: str) -> CutRule:
    try:
        return CUT_RULES[name]
    except KeyError:
        raise ValueError(f"Unknown cut rule: {name}. Available: {sorted(CUT_RULES)}") from None
