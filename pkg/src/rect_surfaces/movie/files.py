"""Movie file format.

    movie <phi_size>
    gap <index>: {p,q} {r,s} ...
    event <index>: - {p,q} ... + {r,s} ...

A gap line gives the chord diagram after meridian <index>; an event line the
chords removed and added there.  Meridians without an event omit the event
line.  'o' stands for an empty chord list.
"""

from __future__ import annotations

import re

from ..serialization import ParseError
from .chords import ChordDiagram, cdiag, strict_event, MovieError
from .movie import MovieDiagram

_CHORD = re.compile(r"\{(\d+),(\d+)\}")


def movie_to_text(m: MovieDiagram) -> str:
    m = m.normalized()
    lines = [f"movie {m.size}"]
    for i, (ev, gap) in enumerate(zip(m.events, m.gaps)):
        if ev is not None:
            rem = " ".join("{%d,%d}" % c for c in sorted(ev.removed)) or "o"
            add = " ".join("{%d,%d}" % c for c in sorted(ev.added)) or "o"
            lines.append(f"event {i}: - {rem} + {add}")
        chords = " ".join("{%d,%d}" % c for c in sorted(gap.chords)) or "o"
        lines.append(f"gap {i}: {chords}")
    return "\n".join(lines) + "\n"


def _parse_chords(text: str, lineno: int):
    text = text.strip()
    if text == "o" or not text:
        return []
    out = []
    rest = text
    for m in _CHORD.finditer(text):
        out.append((int(m.group(1)), int(m.group(2))))
    cleaned = _CHORD.sub("", text).replace(" ", "")
    if cleaned:
        raise ParseError(f"line {lineno}: bad chord list {text!r}")
    return out


def movie_from_text(text: str) -> MovieDiagram:
    size = None
    gaps: dict[int, list] = {}
    events: dict[int, tuple] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("movie"):
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: movie needs the circle size")
            size = int(parts[1])
        elif line.startswith("gap"):
            m = re.match(r"gap\s+(\d+)\s*:\s*(.*)$", line)
            if not m:
                raise ParseError(f"line {lineno}: bad gap line")
            gaps[int(m.group(1))] = _parse_chords(m.group(2), lineno)
        elif line.startswith("event"):
            m = re.match(r"event\s+(\d+)\s*:\s*-\s*(.*?)\s*\+\s*(.*)$", line)
            if not m:
                raise ParseError(f"line {lineno}: bad event line")
            events[int(m.group(1))] = (_parse_chords(m.group(2), lineno),
                                       _parse_chords(m.group(3), lineno))
        else:
            raise ParseError(f"line {lineno}: unknown directive")
    if size is None:
        raise ParseError("missing movie header line")
    if not gaps:
        return MovieDiagram(size, (cdiag(size),), (None,))
    idxs = sorted(gaps)
    if idxs != list(range(len(idxs))):
        raise ParseError("gap indices must be 0..m-1")
    gap_diags = [cdiag(size, gaps[i]) for i in idxs]
    ev_list = []
    for i in idxs:
        prev = gap_diags[i - 1]
        if i in events:
            rem, add = events[i]
            try:
                target = prev.with_chords(add=add, remove=rem)
            except MovieError as e:
                raise ParseError(f"event {i}: {e}") from e
            if target.chords != gap_diags[i].chords:
                raise ParseError(f"event {i} does not produce gap {i}")
            ev_list.append(strict_event(prev, gap_diags[i]))
        else:
            if prev.chords != gap_diags[i].chords and len(idxs) > 1:
                raise ParseError(f"gap {i} changes chords without an event")
            ev_list.append(None)
    for i, g in enumerate(gap_diags):
        if not g.non_crossing():
            raise ParseError(f"gap {i} is not non-crossing")
    try:
        return MovieDiagram(size, tuple(gap_diags), tuple(ev_list))
    except MovieError as e:
        raise ParseError(str(e)) from e
