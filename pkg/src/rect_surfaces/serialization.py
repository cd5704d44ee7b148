"""Text and JSON formats for diagrams, movies, and move sequences.

Diagram text format, one document per file::

    axes <theta_size> <phi_size>
    rect <t1> <t2> <p1> <p2>
    mark <t> <p> <up|down>

The JSON equivalent is {"axes": [n, m], "rectangles": [[t1,t2,p1,p2], ...],
"marks": [[t, p, "up"], ...]} and is accepted interchangeably (detected by a
leading '{').  Output is canonical: rectangles sorted, LF line endings.
"""

from __future__ import annotations

import json

from .grid import Rect, SurfaceDiagram, GridError, UP, DOWN


class ParseError(ValueError):
    pass


def serialize(d: SurfaceDiagram) -> str:
    lines = [f"axes {d.theta_size} {d.phi_size}"]
    for r in d.rects:
        lines.append(f"rect {r.t1} {r.t2} {r.p1} {r.p2}")
    for (t, p, ty) in d.marks:
        lines.append(f"mark {t} {p} {ty}")
    return "\n".join(lines) + "\n"


def to_json(d: SurfaceDiagram) -> dict:
    return {
        "axes": [d.theta_size, d.phi_size],
        "rectangles": [list(r) for r in d.rects],
        "marks": [list(m) for m in d.marks],
    }


def from_json(obj: dict) -> SurfaceDiagram:
    try:
        nt, np_ = obj["axes"]
        rects = tuple(Rect(*map(int, r)) for r in obj.get("rectangles", []))
        marks = tuple((int(t), int(p), str(ty)) for t, p, ty in obj.get("marks", []))
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad diagram JSON: {e}") from e
    for (_, _, ty) in marks:
        if ty not in (UP, DOWN):
            raise ParseError(f"bad mark type {ty!r}")
    try:
        return SurfaceDiagram(int(nt), int(np_), rects, marks)
    except GridError as e:
        raise ParseError(str(e)) from e


def parse(text: str) -> SurfaceDiagram:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            return from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from e
    nt = np_ = None
    rects: list[Rect] = []
    marks: list[tuple[int, int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "axes":
            if len(args) != 2:
                raise ParseError(f"line {lineno}: axes needs 2 fields, got {len(args)}")
            nt, np_ = _ints(args, lineno)
        elif kind == "rect":
            if len(args) != 4:
                raise ParseError(f"line {lineno}: rect needs 4 fields, got {len(args)}")
            rects.append(Rect(*_ints(args, lineno)))
        elif kind == "mark":
            if len(args) != 3:
                raise ParseError(f"line {lineno}: mark needs 3 fields, got {len(args)}")
            t, p = _ints(args[:2], lineno)
            if args[2] not in (UP, DOWN):
                raise ParseError(f"line {lineno}: bad mark type {args[2]!r}")
            marks.append((t, p, args[2]))
        else:
            raise ParseError(f"line {lineno}: unknown directive {kind!r}")
    if nt is None:
        raise ParseError("missing axes line")
    try:
        return SurfaceDiagram(nt, np_, tuple(rects), tuple(marks))
    except GridError as e:
        raise ParseError(str(e)) from e


def _ints(args, lineno) -> list[int]:
    out = []
    for i, a in enumerate(args):
        try:
            out.append(int(a))
        except ValueError:
            raise ParseError(f"line {lineno}: field {i + 1} is not an integer: {a!r}")
    return out
