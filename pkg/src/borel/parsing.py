"""Plain-text ideal files.

::

    # comment
    name: my example
    ring: x y z            (or "ring: 3" for x1 x2 x3)
    I: x^2, x*y,
       y^2 - 1/2*x*z
    expect: ssp=true, t=3

A line ``label: ...`` whose label is not ``name``, ``ring`` or ``expect``
starts a generator block; indented or non-labelled lines continue it.  A
file may hold several blocks, kept in order.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import ParseError, UnknownVariable
from .polynomials import Polynomial, default_names, format_polynomial

_LABEL = re.compile(r"^([A-Za-z_][\w']*)\s*:")
_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\S))")


@dataclass
class IdealFile:
    names: list[str]
    ideals: dict[str, list[Polynomial]]
    name: str = ""
    expect: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def generators(self) -> list[Polynomial]:
        """The first generator block."""
        return next(iter(self.ideals.values()))


class _Tokens:
    def __init__(self, text: str, line: int, col0: int):
        self.items = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            kind = "num" if m.group(1) else "name" if m.group(2) else "op"
            self.items.append((kind, m.group(m.lastindex), line, col0 + m.start(m.lastindex) + 1))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.items[self.i] if self.i < len(self.items) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok


def _fail(msg, tok, fallback):
    line, col = (tok[2], tok[3]) if tok else fallback
    raise ParseError(msg, line, col)


def parse_polynomial(text: str, names: list[str], line: int = 1, col0: int = 0) -> Polynomial:
    """Sums of terms ``c*x^a*y^b`` with integer or ``p/q`` coefficients."""
    index = {v: i for i, v in enumerate(names)}
    n = len(names)
    toks = _Tokens(text, line, col0)
    end = (line, col0 + len(text) + 1)
    terms: dict = {}
    first = True
    while toks.peek() is not None or first:
        sign = 1
        tok = toks.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            toks.take()
            sign = -1 if tok[1] == "-" else 1
        elif not first:
            _fail(f"expected '+' or '-', got {tok[1]!r}", tok, end)
        first = False
        coeff = mpq(sign)
        exps = [0] * n
        while True:
            tok = toks.take()
            if tok is None:
                _fail("unexpected end of polynomial", None, end)
            kind, val = tok[0], tok[1]
            if kind == "num":
                coeff *= mpq(val)
            elif kind == "name":
                if val not in index:
                    raise UnknownVariable(f"unknown variable {val!r}", tok[2], tok[3])
                power = 1
                nxt = toks.peek()
                if nxt and nxt[1] == "^":
                    toks.take()
                    p = toks.take()
                    if p is None or p[0] != "num" or "/" in p[1]:
                        _fail("exponent must be a non-negative integer", p, end)
                    power = int(p[1])
                exps[index[val]] += power
            else:
                _fail(f"unexpected {val!r}", tok, end)
            nxt = toks.peek()
            if nxt and nxt[1] == "*":
                toks.take()
                continue
            break
        m = tuple(exps)
        terms[m] = terms.get(m, 0) + coeff
    return Polynomial(n, terms)


def _split_commas(chunks):
    """``chunks`` is a list of (text, line, col0); yields one piece per generator."""
    piece = []
    for text, line, col0 in chunks:
        start = 0
        for k, ch in enumerate(text + ","):
            if ch == ",":
                part = text[start:k]
                if part.strip():
                    piece.append((part, line, col0 + start))
                if k < len(text):
                    yield piece
                    piece = []
                start = k + 1
    if piece:
        yield piece


def _parse_value(raw: str):
    try:
        return json.loads(raw)
    except ValueError:
        return raw


def _top_level_split(text: str):
    depth, start = 0, 0
    for k, ch in enumerate(text):
        if ch in "[{":
            depth += 1
        elif ch in "]}":
            depth -= 1
        elif ch == "," and depth == 0:
            yield text[start:k]
            start = k + 1
    yield text[start:]


def parse_expect(text: str) -> dict:
    """``key=value`` pairs; values are JSON where they parse, plain strings otherwise."""
    out = {}
    for part in _top_level_split(text):
        if not part.strip():
            continue
        key, _, val = part.partition("=")
        out[key.strip()] = _parse_value(val.strip())
    return out


def parse_ideal(text: str) -> IdealFile:
    names: list[str] | None = None
    name = ""
    expect: dict = {}
    blocks: dict[str, list] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        m = _LABEL.match(body)
        if m and not body[0].isspace():
            label = m.group(1)
            rest = body[m.end():]
            col0 = m.end()
            if label == "ring":
                words = rest.split()
                if len(words) == 1 and words[0].isdigit():
                    names = default_names(int(words[0]))
                else:
                    names = words
                if not names or len(set(names)) != len(names):
                    raise ParseError("ring needs distinct variable names", lineno, col0 + 1)
                current = None
            elif label == "name":
                name = rest.strip()
                current = None
            elif label == "expect":
                expect.update(parse_expect(rest))
                current = None
            else:
                if label in blocks:
                    raise ParseError(f"duplicate block {label!r}", lineno, 1)
                blocks[label] = [(rest, lineno, col0)]
                current = label
        elif current is not None:
            blocks[current].append((body, lineno, 0))
        else:
            raise ParseError("line is not part of any block", lineno, 1)
    if names is None:
        raise ParseError("missing 'ring:' line", 1, 1)
    if not blocks:
        raise ParseError("no generators given", 1, 1)
    ideals = {}
    for label, chunks in blocks.items():
        gens = []
        for piece in _split_commas(chunks):
            # a generator split over lines reports columns relative to its first line
            _, line, col0 = piece[0]
            gens.append(parse_polynomial(" ".join(p[0] for p in piece), names, line, col0))
        if not gens:
            raise ParseError(f"block {label!r} has no generators", chunks[0][1], 1)
        ideals[label] = gens
    return IdealFile(names, ideals, name, expect)


def format_ideal(f: IdealFile) -> str:
    lines = []
    if f.name:
        lines.append(f"name: {f.name}")
    lines.append("ring: " + " ".join(f.names))
    for label, gens in f.ideals.items():
        lines.append(f"{label}: " + ", ".join(format_polynomial(g, f.names) for g in gens))
    if f.expect:
        lines.append("expect: " + ", ".join(f"{k}={json.dumps(v)}" for k, v in f.expect.items()))
    return "\n".join(lines) + "\n"


def load_ideal(path) -> IdealFile:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())
