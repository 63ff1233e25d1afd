"""Plain-text input format for generic quiver instances.

One directive per line, ``#`` starts a comment::

    variables q h a
    vertex 1 v=1 w=1
    arrow 1 1 a*h^-1
    framing 1 1
    point 1 1

``variables`` must come first and list the coefficient variables (``q`` and
``h`` with hbar = h^2 are required).  ``arrow SRC TGT [TWIST]`` adds an
arrow, loops allowed.  ``framing`` and ``point`` take comma-separated
monomials: the characters of W_i and the restrictions x_{i,j}(p).
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Dict, List, Tuple, Union

from .algebra import AlgebraError, VariableTable
from .algebra.laurent import Exps
from .algebra.textform import parse_polynomial
from .geometry.quiver import Arrow, FixedPointData, QuiverData
from .vertex import VertexInstance


class QuiverFileError(ValueError):
    def __init__(self, source: str, line: int, field: str, message: str):
        super().__init__(f"{source}:{line}: {field}: {message}")
        self.line = line
        self.field = field


_DIM = re.compile(r"^([vw])=(\d+)$")


def _monomial(text: str, table: VariableTable, err) -> Exps:
    try:
        p = parse_polynomial(text, table)
    except AlgebraError as exc:
        raise err(str(exc)) from None
    if not p.is_monomial() or p.single_term()[1] != 1:
        raise err(f"{text!r} is not a monomial with coefficient 1")
    return p.single_term()[0]


def _monomial_list(text: str, table: VariableTable, err) -> Tuple[Exps, ...]:
    items = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in items):
        raise err("expected a comma-separated list of monomials")
    return tuple(_monomial(t, table, err) for t in items)


def parse_quiver(text: str, source: str = "<quiver>") -> VertexInstance:
    table = None
    vertices: List[str] = []
    v: Dict[str, int] = {}
    w: Dict[str, int] = {}
    arrows: List[Arrow] = []
    framing: Dict[str, Tuple[Exps, ...]] = {}
    point: Dict[str, Tuple[Exps, ...]] = {}
    point_line: Dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()

        def err(message, field=word, _n=lineno):
            return QuiverFileError(source, _n, field, message)

        if word == "variables":
            if table is not None:
                raise err("declared twice")
            try:
                table = VariableTable(rest.split())
            except AlgebraError as exc:
                raise err(str(exc)) from None
            for need in ("q", "h"):
                if need not in table:
                    raise err(f"must include {need!r}")
            continue
        if table is None:
            raise err("the first directive must be 'variables'")
        fields = rest.split()
        if word == "vertex":
            if not fields:
                raise err("missing vertex label")
            label = fields[0]
            if label in v:
                raise err(f"vertex {label!r} declared twice")
            dims = {"v": 0, "w": 0}
            for f in fields[1:]:
                m = _DIM.match(f)
                if not m:
                    raise err(f"expected v=N or w=N, got {f!r}", "vertex." + f.split("=")[0])
                dims[m.group(1)] = int(m.group(2))
            vertices.append(label)
            v[label], w[label] = dims["v"], dims["w"]
        elif word == "arrow":
            if len(fields) not in (2, 3):
                raise err("expected 'arrow SOURCE TARGET [TWIST]'")
            for f, name in zip(fields[:2], ("source", "target")):
                if f not in v:
                    raise err(f"unknown vertex {f!r}", f"arrow.{name}")
            twist = _monomial(fields[2], table, lambda m: err(m, "arrow.twist")) if len(fields) == 3 else None
            arrows.append(Arrow(fields[0], fields[1], twist))
        elif word in ("framing", "point"):
            label, _, body = rest.partition(" ")
            if label not in v:
                raise err(f"unknown vertex {label!r}", f"{word}.vertex")
            monos = _monomial_list(body, table, lambda m: err(m, f"{word}.monomials"))
            want = w[label] if word == "framing" else v[label]
            if len(monos) != want:
                kind = "w" if word == "framing" else "v"
                raise err(f"{len(monos)} monomials given but {kind} = {want} at vertex {label}", f"{word}.monomials")
            (framing if word == "framing" else point)[label] = monos
            if word == "point":
                point_line[label] = lineno
        else:
            raise QuiverFileError(source, lineno, "directive", f"unknown directive {word!r}")

    if table is None:
        raise QuiverFileError(source, 0, "variables", "file declares no variables")
    for label in vertices:
        if v[label] and label not in point:
            raise QuiverFileError(source, 0, "point", f"no restrictions given for vertex {label} (v = {v[label]})")
    try:
        quiver = QuiverData(table, tuple(vertices), tuple(arrows), v, w, framing)
        return VertexInstance(quiver, FixedPointData(table, point))
    except (AlgebraError, ValueError) as exc:
        raise QuiverFileError(source, 0, "quiver", str(exc)) from None


def load_generic_quiver(path: Union[str, Path]) -> VertexInstance:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise QuiverFileError(str(path), 0, "file", exc.strerror or str(exc)) from None
    return parse_quiver(text, str(path))
