"""
Graph ingestion: edge-list text and graph6
"""

import io
import logging
from pathlib import Path
from typing import List, TextIO, Tuple, Union

import networkx as nx

from common.exceptions import GraphFormatError, InvalidGraphError
from common.models import Edge, Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"

TextSource = Union[str, TextIO]


def _read_text(source: TextSource) -> str:
    if isinstance(source, str):
        return source
    return source.read()


def parse_edge_list(source: TextSource) -> Graph:
    """
    Parse the edge-list format.

    The first non-comment line holds d; every following line is "i j" with
    1 <= i, j <= d and i != j. Lines starting with '#' and blank lines are
    ignored. Duplicate edges collapse.
    """
    d = None
    edges: List[Edge] = []
    for lineno, raw in enumerate(io.StringIO(_read_text(source)), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if d is None:
            if len(parts) != 1:
                raise GraphFormatError(f"expected the vertex count, got {line!r}", line=lineno)
            try:
                d = int(parts[0])
            except ValueError:
                raise GraphFormatError(f"vertex count is not an integer: {parts[0]!r}", line=lineno)
            if d < 1:
                raise GraphFormatError(f"vertex count must be positive, got {d}", line=lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'i j', got {line!r}", line=lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"edge endpoints must be integers: {line!r}", line=lineno)
        for v in (i, j):
            if not 1 <= v <= d:
                raise GraphFormatError(f"vertex {v} out of range 1..{d}", line=lineno)
        if i == j:
            raise GraphFormatError(f"loop edge at vertex {i}", line=lineno)
        edges.append((i, j))

    if d is None:
        raise GraphFormatError("no vertex count found")
    return Graph(d, tuple(edges))


def format_edge_list(graph: Graph) -> str:
    lines = [str(graph.d)] + [f"{i} {j}" for i, j in graph.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(source: TextSource) -> Graph:
    """
    Decode a graph6 string (optional >>graph6<< header).

    graph6 vertex 0 becomes label 1. Characters are validated here, the bit
    decoding itself is networkx's.
    """
    text = _read_text(source).strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise GraphFormatError("empty graph6 string")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", position=pos)
    try:
        nx_graph = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise GraphFormatError(f"graph6 length mismatch: {e}")
    d = nx_graph.number_of_nodes()
    if d < 1:
        raise GraphFormatError("graph6 code declares zero vertices")
    return Graph(d, tuple((u + 1, v + 1) for u, v in nx_graph.edges()))


def encode_graph6(graph: Graph) -> str:
    """graph6 code word without header or trailing newline"""
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def _looks_like_graph6(text: str) -> bool:
    stripped = text.strip()
    if stripped.startswith(GRAPH6_HEADER):
        return True
    tokens = stripped.split()
    if len(tokens) != 1:
        return False
    token = tokens[0]
    return not token.isdigit() and all(63 <= ord(ch) <= 126 for ch in token)


def load_graph(path: Union[str, Path]) -> Graph:
    """Read a graph file, graph6 or edge list, chosen by content"""
    try:
        with open(path, "r") as f:
            text = f.read()
    except OSError as e:
        raise GraphFormatError(f"cannot read graph file {path}: {e.strerror}")
    if _looks_like_graph6(text):
        logger.debug(f"Reading {path} as graph6")
        return parse_graph6(text)
    logger.debug(f"Reading {path} as edge list")
    try:
        return parse_edge_list(text)
    except InvalidGraphError as e:
        raise GraphFormatError(str(e))
