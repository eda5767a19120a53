"""JSON and Graphviz DOT round-tripping for signed trees."""
from __future__ import annotations

import json
import re

from .core import Sign, SignedTree


class FormatError(ValueError):
    """Malformed serialized tree."""


def to_json(T: SignedTree) -> str:
    payload = {
        "order": T.order,
        "edges": [{"u": u, "v": v, "sign": s.symbol} for u, v, s in T.edges],
    }
    return json.dumps(payload, separators=(",", ":"))


def to_dict(T: SignedTree) -> dict:
    return json.loads(to_json(T))


def from_dict(data: dict) -> SignedTree:
    try:
        order = data["order"]
        raw = data["edges"]
        if not isinstance(order, int) or not isinstance(raw, list):
            raise FormatError("'order' must be an int and 'edges' a list")
        edges = [(e["u"], e["v"], Sign.parse(e["sign"])) for e in raw]
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed tree JSON: {exc}") from None
    return SignedTree(order, tuple(edges))


def from_json(text: str) -> SignedTree:
    """Parse and validate; raises FormatError or TreeError."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FormatError("tree JSON must be an object")
    return from_dict(data)


def to_dot(T: SignedTree, *, sdeg: bool = False, name: str = "T") -> str:
    """Undirected DOT; negative edges are dashed and labelled ``-``."""
    lines = [f"graph {name} {{"]
    sd = T.signed_degrees() if sdeg else None
    for v in range(T.order):
        label = f"{v}" if sd is None else f"{v} sdeg={sd[v]}"
        lines.append(f'  {v} [label="{label}"];')
    for u, v, s in T.edges:
        if s is Sign.NEG:
            lines.append(f'  {u} -- {v} [style=dashed, label="-"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r"^\s*(\d+)\s*(\[.*\])?\s*;?\s*$")
_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*(\[(.*)\])?\s*;?\s*$")


def from_dot(text: str) -> SignedTree:
    """Read back the DOT written by :func:`to_dot`."""
    body = text.strip()
    m = re.match(r"^graph\s+\w*\s*\{(.*)\}$", body, re.S)
    if not m:
        raise FormatError("expected 'graph NAME { ... }'")
    nodes: set[int] = set()
    edges = []
    for line in m.group(1).splitlines():
        if not line.strip():
            continue
        em = _EDGE.match(line)
        if em:
            attrs = em.group(4) or ""
            sign = Sign.NEG if "dashed" in attrs else Sign.POS
            edges.append((int(em.group(1)), int(em.group(2)), sign))
            continue
        nm = _NODE.match(line)
        if nm:
            nodes.add(int(nm.group(1)))
            continue
        raise FormatError(f"unrecognised DOT line: {line.strip()!r}")
    if nodes != set(range(len(nodes))):
        raise FormatError("node ids must be 0..n-1")
    return SignedTree(len(nodes), tuple(edges))
