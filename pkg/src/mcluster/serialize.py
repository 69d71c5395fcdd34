"""JSON and Graphviz DOT documents for quivers, decompositions and cones.

Vertex ids are the normalized ``"i-j"`` strings.  All listings are sorted,
so the same input always produces byte-identical output.
"""

from __future__ import annotations

import json
import re

from .decomposition import ComponentReport, PredictedDecomposition
from .polygon import Diagonal, PolygonConfig
from .tquiver import QuotientSpec, TranslationQuiver


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def config_doc(cfg: PolygonConfig) -> dict:
    return {"n": cfg.n, "m": cfg.m, "N": cfg.N}


def spec_doc(spec: QuotientSpec | None):
    if spec is None:
        return None
    return {"p": spec.p, "r": spec.r, "s": spec.s, "shape": "moebius" if spec.is_moebius else "cylinder"}


def quiver_doc(cfg: PolygonConfig, Q: TranslationQuiver, components=(), reports=()) -> dict:
    arrows = []
    for (u, v), c in sorted(Q.arrows.items()):
        arrows.extend([[u.id, v.id]] * c)
    return {
        "config": config_doc(cfg),
        "vertices": [{"id": d.id, "diagonal": [d.i, d.j]} for d in Q.vertices],
        "arrows": arrows,
        "tau": [[v.id, Q.tau[v].id] for v in Q.vertices],
        "components": [[d.id for d in comp.vertices] for comp in components],
        "reports": list(reports),
    }


def report_doc(report: ComponentReport) -> dict:
    return {
        "name": report.name,
        "label": str(report.label),
        "size": report.size,
        "shape": report.shape.value,
        "rank_p": report.rank_p,
        "is_gamma_m": report.is_gamma_m,
        "matched_spec": spec_doc(report.matched_spec),
        "canonical_spec": spec_doc(report.canonical_spec),
        "u_cluster": report.u_cluster,
    }


def prediction_doc(pred: PredictedDecomposition) -> list:
    return [dict(spec_doc(e.spec), multiplicity=e.multiplicity, role=e.role) for e in pred.entries]


def diagonal_list(ds) -> list:
    return [[d.i, d.j] for d in ds]


# ---------------------------------------------------------------- DOT

def to_dot(doc: dict) -> str:
    """Render a quiver document; vertices sharing an i-column are ranked together."""
    cfg = doc["config"]
    lines = ["digraph gamma {",
             f'  graph [comment="n={cfg["n"]} m={cfg["m"]} N={cfg["N"]}", rankdir=LR];',
             "  node [shape=plaintext];"]
    columns = {}
    for v in doc["vertices"]:
        columns.setdefault(v["diagonal"][0], []).append(v)
    for i in sorted(columns):
        members = " ".join(f'"{v["id"]}";' for v in columns[i])
        lines.append(f"  {{ rank=same; {members} }}")
    for v in doc["vertices"]:
        i, j = v["diagonal"]
        lines.append(f'  "{v["id"]}" [label="({i},{j})"];')
    for u, v in doc["arrows"]:
        lines.append(f'  "{u}" -> "{v}";')
    for v, w in doc["tau"]:
        lines.append(f'  "{v}" -> "{w}" [class="tau", style=dashed, constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_COMMENT = re.compile(r'comment="n=(\d+) m=(\d+) N=(\d+)"')
_NODE = re.compile(r'^\s*"([^"]+)" \[label="\((\d+),(\d+)\)"\];$')
_EDGE = re.compile(r'^\s*"([^"]+)" -> "([^"]+)"( \[class="tau"[^\]]*\])?;$')


def from_dot(text: str) -> dict:
    """Parse the DOT written by :func:`to_dot` back into a quiver document."""
    m = _COMMENT.search(text)
    if not m:
        raise ValueError("DOT text carries no configuration comment")
    n, mm, N = map(int, m.groups())
    vertices, arrows, tau = [], [], []
    for line in text.splitlines():
        node = _NODE.match(line)
        if node:
            vertices.append({"id": node.group(1), "diagonal": [int(node.group(2)), int(node.group(3))]})
            continue
        edge = _EDGE.match(line)
        if edge:
            (tau if edge.group(3) else arrows).append([edge.group(1), edge.group(2)])
    return {"config": {"n": n, "m": mm, "N": N}, "vertices": vertices, "arrows": arrows, "tau": tau,
            "components": [], "reports": []}


def diagonal_from_id(vid: str) -> Diagonal:
    i, j = vid.split("-")
    return Diagonal(int(i), int(j))
