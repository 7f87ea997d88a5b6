"""
chromaplex CLI
Command-line interface over the graph, ideal and complex packages
"""

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from coloring_complex import (
    build_complex,
    complex_summary,
    complex_to_json,
    complexes_isomorphic,
    euler_characteristics,
    f_vector,
    h_vector,
    nontruncated_h_vector,
    scan_isomorphic_complexes,
)
from coloring_ideal import (
    basic_coloring_monomials,
    count_degree_monomials,
    decode_monomial,
    encode_coloring,
    generator_stats,
    minimal_generators,
    parse_monomial,
)
from common.exceptions import ChromaError
from common.models import Graph
from config.models import RunConfig
from cut_engine import cut_profile, get_cut_rule, parse_permutation, w_polynomial
from graph_core import chromatic_polynomial, load_graph
from terminal.command_parser import CommandType, build_parser, parse_coloring
from terminal.formatter import ResponseFormatter
from verifier import VerificationReporter, VerificationSuite

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CommandResult:
    output: str
    exit_code: int = EXIT_OK


def _sorted_monomials(monomials) -> List:
    return sorted(monomials, key=lambda m: (m.degree, str(m)))


class ChromaTerminal:
    """Runs one parsed subcommand against a RunConfig"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.formatter = ResponseFormatter()
        self._handlers: Dict[CommandType, Callable[[argparse.Namespace], CommandResult]] = {
            CommandType.CHROMATIC: self._handle_chromatic,
            CommandType.WPOLY: self._handle_wpoly,
            CommandType.COMPLEX: self._handle_complex,
            CommandType.IDEAL: self._handle_ideal,
            CommandType.MONOMIAL: self._handle_monomial,
            CommandType.ISO: self._handle_iso,
            CommandType.VERIFY: self._handle_verify,
        }

    @property
    def json_output(self) -> bool:
        return self.config.output_format == "json"

    def _emit(self, text: str, payload) -> CommandResult:
        return CommandResult(self.formatter.format_json(payload) if self.json_output else text)

    def _load(self, path: str) -> Graph:
        graph = load_graph(path)
        logger.info(f"Loaded {path}: d={graph.d}, {graph.edge_count} edges")
        return graph

    def execute(self, args: argparse.Namespace) -> CommandResult:
        command = CommandType(args.command)
        return self._handlers[command](args)

    def _handle_chromatic(self, args: argparse.Namespace) -> CommandResult:
        graph = self._load(args.graph)
        chi = chromatic_polynomial(graph)
        if args.n is not None:
            value = chi(args.n)
            return self._emit(str(value), {"n": args.n, "value": value})
        text = "\n".join([
            f"chi(n) = {chi}",
            f"coefficients: {self.formatter.format_vector(chi.coeffs)}",
        ])
        return self._emit(text, {"d": graph.d, "coefficients": list(chi.coeffs)})

    def _handle_wpoly(self, args: argparse.Namespace) -> CommandResult:
        graph = self._load(args.graph)
        rule = get_cut_rule(args.rule)
        if args.perm:
            profile = cut_profile(graph, parse_permutation(args.perm, graph.d), rule)
            payload = profile.to_dict()
            payload["block_order_ok"] = profile.block_order_ok()
            return self._emit(self.formatter.format_profile(profile), payload)
        w = w_polynomial(graph, self.config.bounds, self.config.workers, rule)
        coeffs = w.padded(graph.d + 1)
        return self._emit(
            self.formatter.format_vector(coeffs),
            {"d": graph.d, "rule": args.rule, "coefficients": coeffs},
        )

    def _handle_complex(self, args: argparse.Namespace) -> CommandResult:
        graph = self._load(args.graph)
        if args.nontruncated:
            h = nontruncated_h_vector(graph, self.config.bounds)
            return self._emit(self.formatter.format_vector(h.entries), h.to_dict())

        complex_ = build_complex(graph, self.config.bounds, self.config.workers)
        if args.json:
            return CommandResult(complex_to_json(complex_))
        if args.fvector:
            f = f_vector(complex_)
            return self._emit(self.formatter.format_vector(f.entries), f.to_dict())
        if args.hvector:
            h = h_vector(complex_)
            return self._emit(self.formatter.format_vector(h.entries), h.to_dict())
        if args.euler:
            chars = euler_characteristics(complex_)
            text = f"euler {chars.euler} reduced {chars.reduced}" + (" (void complex)" if chars.void else "")
            return self._emit(text, chars.to_dict())
        if args.facets:
            facets = complex_.sorted_facets()
            text = "\n".join(self.formatter.format_chain(f, graph.d) for f in facets) if facets else "void"
            return self._emit(text, complex_.to_dict())

        summary = complex_summary(complex_)
        chars = euler_characteristics(complex_)
        text = "\n".join([
            f"f: {self.formatter.format_vector(summary['f'])}",
            f"h: {self.formatter.format_vector(summary['h'])}",
            f"euler: {chars.euler} (reduced {chars.reduced})",
            f"facets: {len(summary['facets'])}",
        ])
        return self._emit(text, summary)

    def _handle_ideal(self, args: argparse.Namespace) -> CommandResult:
        graph = self._load(args.graph)
        bounds = self.config.bounds
        if args.hilbert is not None:
            rows = [[n, count_degree_monomials(graph, n, bounds)] for n in range(args.hilbert + 1)]
            return self._emit(
                self.formatter.format_table(["n", "H(K_G,n)"], rows),
                {"hilbert": {str(n): count for n, count in rows}},
            )
        if args.stats:
            stats = generator_stats(graph, bounds)
            histogram = " ".join(f"{k}:{v}" for k, v in sorted(stats.degree_histogram.items()))
            text = "\n".join([
                f"generators: {stats.generator_count}",
                f"degree histogram: {histogram}",
                f"multiplicities: {self.formatter.format_vector(stats.indeterminate_multiplicities)}",
            ])
            return self._emit(text, stats.to_dict())

        if args.basic:
            monomials = _sorted_monomials(basic_coloring_monomials(graph, bounds, self.config.workers))
        else:
            monomials = _sorted_monomials(minimal_generators(graph, bounds))
        return self._emit(
            "\n".join(str(m) for m in monomials),
            {"monomials": [str(m) for m in monomials]},
        )

    def _handle_monomial(self, args: argparse.Namespace) -> CommandResult:
        graph = self._load(args.graph)
        if args.action == "decode":
            monomial = parse_monomial(args.m, graph.d)
            coloring = decode_monomial(graph, monomial)
            return self._emit(self.formatter.format_coloring(coloring), coloring.to_dict())
        coloring = parse_coloring(args.coloring, graph.d, args.palette)
        monomial = encode_coloring(graph, coloring)
        payload = {"monomial": str(monomial)}
        payload.update(monomial.to_dict())
        return self._emit(str(monomial), payload)

    def _handle_iso(self, args: argparse.Namespace) -> CommandResult:
        if args.scan is not None:
            entries = scan_isomorphic_complexes(args.scan, self.config.bounds)
            verdicts = {True: "yes", False: "no", None: "skipped"}
            rows = [
                [self.formatter.format_edges(e.graph1.edges), self.formatter.format_edges(e.graph2.edges),
                 verdicts[e.isomorphic]]
                for e in entries
            ]
            text = self.formatter.format_table(["graph1", "graph2", "isomorphic complexes"], rows)
            if not rows:
                text = f"no chromatically equivalent pairs on {args.scan} vertices"
            return self._emit(text, {"d": args.scan, "pairs": [e.to_dict() for e in entries]})

        g1, g2 = self._load(args.graph1), self._load(args.graph2)
        result = complexes_isomorphic(
            build_complex(g1, self.config.bounds, self.config.workers),
            build_complex(g2, self.config.bounds, self.config.workers),
            self.config.bounds,
        )
        if result.isomorphic:
            lines = [f"isomorphic ({result.reason})"]
            lines.extend(self.formatter.format_witness(result.witness or {}, g1.d))
        else:
            lines = [f"not isomorphic ({result.reason})"]
        return self._emit("\n".join(lines), result.to_dict(g1.d))

    def _handle_verify(self, args: argparse.Namespace) -> CommandResult:
        verify = self.config.verify
        if args.exhaustive_d is not None:
            verify.exhaustive_d = args.exhaustive_d
        if args.sample_d is not None:
            verify.sample_d = list(args.sample_d)
        if args.count is not None:
            verify.sample_count = args.count
        if args.seed is not None:
            verify.seed = args.seed
        if args.inject_fault:
            logger.warning(f"Injecting cut rule fault '{args.inject_fault}'")
            verify.fault = args.inject_fault

        report = VerificationSuite(self.config).run(args.check)
        text = VerificationReporter().render(report, self.config.output_format)
        return CommandResult(text, EXIT_OK if report.passed else EXIT_VERIFY_FAILED)


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def build_config(args: argparse.Namespace) -> RunConfig:
    """YAML defaults, then command-line overrides"""
    config = RunConfig.from_yaml(args.config)
    if args.output_format:
        config.output_format = args.output_format
    if args.workers:
        config.workers = args.workers
    config.verbosity = args.verbose
    config.input_paths = [
        p for p in (getattr(args, name, None) for name in ("graph", "graph1", "graph2")) if p
    ]
    return config


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    if args.command == CommandType.ISO.value and args.scan is None and not (args.graph1 and args.graph2):
        print("error: iso needs --graph1 and --graph2, or --scan D", file=sys.stderr)
        return EXIT_USAGE

    configure_logging(args.verbose)
    try:
        config = build_config(args)
        result = ChromaTerminal(config).execute(args)
    except ChromaError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"error: cannot read {e.filename or 'input'}: {e.strerror or e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(result.output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
