"""ASCII, Graphviz DOT and JSON views of crossed diagrams and reports."""

from __future__ import annotations

import json

from .fibration import FibrationReport, ReductionReport
from .parabolic import CrossedDiagram, OrbitAnalysis

__all__ = ["render_diagram", "to_json", "diagram_dict", "report_dict", "dumps"]

TRIVIAL = "(trivial)"


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _display_labels(cd: CrossedDiagram) -> dict[int, str]:
    labels = cd.satake.labels
    name = cd.satake.name or ""
    if name.startswith("complex("):
        half = len(labels) // 2
        return {l: (str(l) if l <= half else f"{l - half}'") for l in labels}
    return {l: str(l) for l in labels}


def diagram_dict(cd: CrossedDiagram) -> dict:
    """Canonical JSON-ready description; round-trips through :func:`parse_spec`."""
    g = cd.satake.graph
    type_string = g.type_string()
    out = {
        "type": type_string[0] if g.rank and "+" not in type_string and g.is_standard() else type_string,
        "rank": g.rank,
        "black": sorted(cd.satake.black),
        "arrows": [list(a) for a in sorted(cd.satake.arrows)],
        "cross": sorted(cd.crosses),
    }
    if not g.is_standard():
        out["labels"] = list(g.labels)
        out["cartan"] = [list(r) for r in g.cartan]
    return out


def to_json(cd: CrossedDiagram) -> str:
    return dumps(diagram_dict(cd))


def _ascii(cd: CrossedDiagram) -> str:
    g = cd.satake.graph
    if g.rank == 0:
        return TRIVIAL
    shown = _display_labels(cd)
    labels = list(g.labels)
    w = max(3, max(len(s) for s in shown.values()) + 1)
    bonds = {(e[0], e[1]): e for e in g.edges}
    glyphs, notes = [], []
    for k, l in enumerate(labels):
        glyphs.append("*" if l in cd.satake.black else "o")
        if k + 1 == len(labels):
            break
        e = bonds.pop((l, labels[k + 1]), None)
        if e is None:
            glyphs.append(" " * (w - 1))
            continue
        fill = {1: "-", 2: "=", 3: "#"}[e[2]]
        if e[2] == 1:
            glyphs.append(fill * (w - 1))
        elif e[3] == e[1]:
            glyphs.append(fill * (w - 2) + ">")
        else:
            glyphs.append("<" + fill * (w - 2))
    for i, j, mult, shorter in sorted(bonds.values()):
        sym = {1: "-", 2: "=", 3: "#"}[mult]
        notes.append(f"[{shown[i]}{sym}{shown[j]}]")
    for i, j in sorted(cd.satake.arrows):
        notes.append(f"({shown[i]}~{shown[j]})")
    top = "".join(glyphs)
    if notes:
        top += "   " + " ".join(notes)
    names = "".join(shown[l].ljust(w) for l in labels).rstrip()
    marks = "".join(("x" if l in cd.crosses else " ").ljust(w) for l in labels).rstrip()
    return "\n".join([top, names, marks])


def _dot(cd: CrossedDiagram) -> str:
    shown = _display_labels(cd)
    title = cd.satake.name or cd.satake.graph.type_string() or "trivial"
    lines = [f'graph "{title}" {{', "  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];"]
    for l in cd.satake.labels:
        attrs = [f'label="{shown[l]}"']
        if l in cd.satake.black:
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
        if l in cd.crosses:
            attrs.append('xlabel="x"')
        lines.append(f"  n{l} [{', '.join(attrs)}];")
    for i, j, mult, shorter in cd.satake.graph.edges:
        if mult == 1:
            lines.append(f"  n{i} -- n{j};")
        else:
            direction = "forward" if shorter == j else "back"
            lines.append(f'  n{i} -- n{j} [label="{mult}", penwidth={mult}, dir={direction}];')
    for i, j in sorted(cd.satake.arrows):
        lines.append(f"  n{i} -- n{j} [style=dashed, dir=both, constraint=false];")
    lines.append("}")
    return "\n".join(lines)


def render_diagram(obj, fmt: str = "ascii") -> str:
    """Render a :class:`CrossedDiagram` or the effective fiber of a report."""
    if isinstance(obj, FibrationReport):
        obj = obj.effective_fiber
    if fmt == "ascii":
        return _ascii(obj)
    if fmt == "dot":
        return _dot(obj)
    if fmt == "json":
        return to_json(obj)
    raise ValueError(f"unknown format {fmt!r}")


def _roots(rs) -> list:
    return [list(b) for b in sorted(rs)]


def report_dict(obj) -> dict:
    """JSON-ready view of an analysis, fibration or reduction result."""
    if isinstance(obj, OrbitAnalysis):
        return {
            "cr_dim": obj.cr_dim,
            "cr_codim": obj.cr_codim,
            "dim_g": obj.dim_g,
            "dim_isotropy": obj.dim_isotropy,
            **obj.flags(),
        }
    if isinstance(obj, FibrationReport):
        return {
            "psi": sorted(obj.psi),
            "Rprime": _roots(obj.Rprime),
            "Qprime": _roots(obj.Qprime),
            "Rsecond": _roots(obj.Rsecond),
            "Qsecond": _roots(obj.Qsecond),
            "Bsecond": sorted(obj.Bsecond),
            "fiber_diagram": diagram_dict(obj.fiber_diagram),
            "effective_fiber": diagram_dict(obj.effective_fiber),
            "is_cr_fibration": obj.is_cr_fibration,
        }
    if isinstance(obj, ReductionReport):
        return {
            "fundamental_psi": sorted(obj.fundamental_psi),
            "fundamental_base": diagram_dict(obj.fundamental_base),
            "fundamental_fiber": diagram_dict(obj.fundamental_fiber),
            "weak_removed": sorted(obj.weak_removed),
            "weak_base": diagram_dict(obj.weak_base),
            "weak_fiber": diagram_dict(obj.weak_fiber),
            "composite": {k: diagram_dict(v) for k, v in obj.composite.items()},
            "diagnostics": list(obj.diagnostics),
        }
    raise TypeError(f"cannot serialize {type(obj).__name__}")
