"""
Response Formatter for the chromaplex CLI
Plain-text rendering of vectors, polynomials, colorings and chains.
No colors or timestamps: stdout must be identical across identical runs.
"""

import json
from collections import Counter
from typing import Any, Iterable, List, Sequence

from common.bitsets import format_set, members
from common.models import Coloring
from cut_engine.models import CutProfile


class ResponseFormatter:
    """Format command results for terminal display"""

    def format_vector(self, entries: Iterable[int]) -> str:
        """Space-separated entries; 'void' for the void complex"""
        values = [str(x) for x in entries]
        return " ".join(values) if values else "void"

    def format_chain(self, chain: Sequence[int], d: int) -> str:
        if not chain:
            return "()"
        return " ".join(format_set(s, d) for s in chain)

    def format_coloring(self, coloring: Coloring) -> str:
        """
        Vertices listed by color, then label, e.g. '2↦3 5↦3 3↦6 others↦8, palette 8'.

        The largest color class (highest color on ties) is folded into
        'others' when some other class is nonempty.
        """
        sizes = Counter(coloring.assignment)
        folded = max(sizes, key=lambda c: (sizes[c], c))
        listed = sorted(
            (c, v) for v, c in enumerate(coloring.assignment, start=1) if len(sizes) == 1 or c != folded
        )
        if len(sizes) == 1:
            parts = [f"all↦{folded}"]
        else:
            parts = [f"{v}↦{c}" for c, v in listed] + [f"others↦{folded}"]
        return f"{' '.join(parts)}, palette {coloring.palette}"

    def format_profile(self, profile: CutProfile) -> str:
        d = profile.d
        return "\n".join([
            f"perm: {self.format_vector(profile.perm)}",
            f"ell: {self.format_vector(profile.ell)}",
            f"cuts: {self.format_vector(profile.cuts)}",
            f"G-sequence: {' '.join(format_set(b, d) for b in profile.gseq)}",
            f"within-block order: {'ok' if profile.block_order_ok() else 'violated'}",
        ])

    def format_edges(self, edges: Iterable[Sequence[int]]) -> str:
        rendered = [f"{i}-{j}" for i, j in edges]
        return ",".join(rendered) if rendered else "(none)"

    def format_witness(self, witness: dict, d: int) -> List[str]:
        ordered = sorted(witness.items(), key=lambda p: (len(members(p[0])), p[0]))
        return [f"  {format_set(src, d)} -> {format_set(dst, d)}" for src, dst in ordered]

    def format_table(self, headers: List[str], rows: List[List[Any]]) -> str:
        """Format data as a left-aligned table"""
        if not headers or not rows:
            return "No data"

        widths = [len(h) for h in headers]
        for row in rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(str(cell)))

        fmt = "  ".join([f"{{:<{w}}}" for w in widths])

        output = [fmt.format(*headers).rstrip()]
        output.append("-" * (sum(widths) + 2 * (len(widths) - 1)))
        for row in rows:
            output.append(fmt.format(*[str(c) for c in row]).rstrip())
        return "\n".join(output)

    def format_json(self, payload: Any) -> str:
        return json.dumps(payload, indent=2, ensure_ascii=False)
