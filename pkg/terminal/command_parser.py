"""
Command Parser for the chromaplex CLI
Builds the argparse tree and parses the small inline syntaxes (colorings)
"""

import argparse
from enum import Enum
from typing import Dict

from common.exceptions import ImproperColoringError
from common.models import Coloring
from cut_engine.rules import CUT_RULES


class CommandType(Enum):
    """Subcommands supported by the CLI"""
    CHROMATIC = "chromatic"
    WPOLY = "wpoly"
    COMPLEX = "complex"
    IDEAL = "ideal"
    MONOMIAL = "monomial"
    ISO = "iso"
    VERIFY = "verify"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromaplex",
        description="Coloring ideals and coloring complexes of labeled graphs",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logs on stderr")
    parser.add_argument("--format", dest="output_format", choices=["text", "json"], help="output format (default from config)")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("--workers", type=_positive_int, help="threads for partitioned sweeps")

    subparsers = parser.add_subparsers(dest="command", required=True, help="Command to execute")

    chromatic = subparsers.add_parser(CommandType.CHROMATIC.value, help="chromatic polynomial")
    chromatic.add_argument("--graph", required=True, help="edge-list or graph6 file")
    chromatic.add_argument("--n", type=_nonneg_int, help="print only chi(n)")

    wpoly = subparsers.add_parser(CommandType.WPOLY.value, help="W-polynomial by enumeration of S_d")
    wpoly.add_argument("--graph", required=True)
    wpoly.add_argument("--perm", help="show the cut profile of one permutation instead, e.g. 5236417")
    wpoly.add_argument("--rule", choices=sorted(CUT_RULES), default="standard", help="cut rule")

    complex_ = subparsers.add_parser(CommandType.COMPLEX.value, help="coloring complex")
    complex_.add_argument("--graph", required=True)
    view = complex_.add_mutually_exclusive_group()
    view.add_argument("--fvector", action="store_true")
    view.add_argument("--hvector", action="store_true")
    view.add_argument("--euler", action="store_true")
    view.add_argument("--facets", action="store_true")
    view.add_argument("--json", action="store_true", help="full JSON export")
    view.add_argument("--nontruncated", action="store_true", help="h-vector with the cone point [d] kept")

    ideal = subparsers.add_parser(CommandType.IDEAL.value, help="coloring ideal")
    ideal.add_argument("--graph", required=True)
    view = ideal.add_mutually_exclusive_group()
    view.add_argument("--basic", action="store_true", help="basic coloring monomials")
    view.add_argument("--generators", action="store_true", help="minimal generators")
    view.add_argument("--stats", action="store_true", help="generator statistics")
    view.add_argument("--hilbert", type=_nonneg_int, metavar="N", help="monomial counts for degrees 0..N")

    monomial = subparsers.add_parser(CommandType.MONOMIAL.value, help="monomial <-> coloring codec")
    codec = monomial.add_subparsers(dest="action", required=True)
    decode = codec.add_parser("decode", help="coloring of a monomial of K_G")
    decode.add_argument("--graph", required=True)
    decode.add_argument("--m", required=True, help="e.g. 'x{}^2 * x{2,5}^3 * x{2,3,5}^2'")
    encode = codec.add_parser("encode", help="monomial of a proper coloring")
    encode.add_argument("--graph", required=True)
    encode.add_argument("--coloring", required=True, help="e.g. '1:1,2:2,3:1'")
    encode.add_argument("--palette", type=_positive_int, help="number of colors (default: largest used)")

    iso = subparsers.add_parser(CommandType.ISO.value, help="isomorphism of coloring complexes")
    iso.add_argument("--graph1")
    iso.add_argument("--graph2")
    iso.add_argument("--scan", type=_positive_int, metavar="D",
                     help="compare all chromatically equivalent pairs on D vertices")

    verify = subparsers.add_parser(CommandType.VERIFY.value, help="replay every identity against the oracles")
    verify.add_argument("--exhaustive-d", type=_positive_int)
    verify.add_argument("--sample-d", type=_positive_int, nargs="+")
    verify.add_argument("--count", type=_positive_int, help="random graphs per sampled d")
    verify.add_argument("--seed", type=int)
    verify.add_argument("--check", action="append", help="run only this check (repeatable)")
    verify.add_argument("--inject-fault", choices=sorted(set(CUT_RULES) - {"standard"}),
                        help="swap in a broken cut rule as a negative control")

    return parser


def parse_coloring(text: str, d: int, palette: int = None) -> Coloring:
    """'1:1,2:2,3:1' -> Coloring; every vertex of 1..d must appear once"""
    mapping: Dict[int, int] = {}
    for item in (part.strip() for part in text.split(",")):
        if not item:
            continue
        vertex, sep, color = item.partition(":")
        if not sep:
            raise ImproperColoringError(f"expected 'vertex:color', got {item!r}")
        try:
            v, c = int(vertex), int(color)
        except ValueError:
            raise ImproperColoringError(f"expected integers in {item!r}") from None
        if v in mapping:
            raise ImproperColoringError(f"vertex {v} colored twice")
        mapping[v] = c
    return Coloring.from_mapping(mapping, d, palette)
