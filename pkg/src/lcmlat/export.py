"""JSON loading with located errors, and DOT rendering of Hasse diagrams."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping

from .lattice_core import FiniteAtomicLattice, bits, popcount


class ParseError(ValueError):
    def __init__(self, source: str, line: int, column: int, msg: str):
        self.source, self.line, self.column = source, line, column
        super().__init__(f"{source}:{line}:{column}: {msg}")


class SchemaError(ValueError):
    def __init__(self, source: str, field: str, msg: str):
        self.source, self.field = source, field
        super().__init__(f"{source}: field {field!r}: {msg}")


def load_json(path: str | Path) -> dict:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(str(path), e.lineno, e.colno, e.msg) from None


def require(data, source: str, *fields: str, types: Mapping[str, type] | None = None):
    if not isinstance(data, dict):
        raise SchemaError(source, "<root>", "expected a JSON object")
    for f in fields:
        if f not in data:
            raise SchemaError(source, f, "missing")
        if types and f in types and not isinstance(data[f], types[f]):
            raise SchemaError(source, f, f"expected {types[f].__name__}")


def dumps(obj) -> str:
    """Stable JSON text (sorted keys are not used: field order is part of the format)."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _element_name(P: FiniteAtomicLattice, p: int) -> str:
    if p == P.bottom:
        return "0"
    return "{" + ",".join(str(i + 1) for i in bits(P.support(p))) + "}"


def lattice_to_dot(P: FiniteAtomicLattice, labels: Mapping[int, str] | None = None,
                   extra: Mapping[int, str] | None = None, name: str = "lattice",
                   colors: Mapping[int, str] | None = None) -> str:
    """Hasse diagram in DOT; nodes are grouped in ranks by support size.

    ``labels`` and ``extra`` are printed under the support (for instance a
    labeling and its induced labeling side by side).
    """
    labels = labels or {}
    extra = extra or {}
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    for p in P:
        text = _element_name(P, p)
        parts = [labels.get(p), extra.get(p)]
        parts = [s for s in parts if s]
        if parts:
            text += "\\n" + " | ".join(parts)
        attrs = [f'label="{text}"']
        if colors and p in colors:
            attrs.append(f'style=filled, fillcolor="{colors[p]}"')
        lines.append(f"  n{p} [{', '.join(attrs)}];")
    ranks: dict[int, list[int]] = {}
    for p in P:
        ranks.setdefault(popcount(P.support(p)), []).append(p)
    for r in sorted(ranks):
        lines.append("  { rank=same; " + " ".join(f"n{p};" for p in ranks[r]) + " }")
    for a, b in P.covers:
        lines.append(f"  n{a} -> n{b} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def labeling_to_dot(M, induced=None, name: str = "lattice") -> str:
    order = M.variables.names
    labels = {p: m.format(order) for p, m in M.labels.items()}
    extra = None
    if induced is not None:
        extra = {p: "D:" + m.format(order) for p, m in induced.labels.items()}
    return lattice_to_dot(M.lattice, labels, extra, name)
