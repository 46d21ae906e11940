"""
Instance file reader and writer.

Explicit form:

    vars: 3
    names: a b c          (optional)
    a*b
    1 0 1                 (exponent-vector form)

Constructor form:

    family: graphic
    vertices: 3
    edges: 1-2 1-3 2-3

`#` starts a comment. Errors carry 1-based line and column.
"""

import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError

from app.api.schemas.instance_schemas import MatroidSpec
from app.core.exceptions import InputError, ParseError
from app.domain.ideals import MonomialIdeal
from app.domain.monomials import DEFAULT_EXPONENT_LIMIT, Monomial

FAMILIES = ("explicit", "uniform", "veronese", "graphic", "transversal")
STANZA_KEYS = ("family", "n", "d", "caps", "vertices", "edges", "edge_count", "sets", "blocks", "seed")
HEADER_KEYS = ("vars", "names") + STANZA_KEYS

_KEY = re.compile(r"^\s*([A-Za-z_]+)\s*:(.*)$")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(\d+))?$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_INT = re.compile(r"^[+-]?\d+$")


@dataclass(frozen=True)
class ParsedInstance:
    source: str
    ideal: Optional[MonomialIdeal] = None
    spec: Optional[MatroidSpec] = None
    names: Optional[Tuple[str, ...]] = None


def _tokens(text: str, offset: int) -> List[Tuple[str, int]]:
    """Whitespace/comma separated tokens with their 1-based columns."""
    return [(m.group(0), offset + m.start() + 1) for m in re.finditer(r"[^\s,]+", text)]


def _int_token(tok: str, line: int, col: int, minimum: int = 0) -> int:
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got '{tok}'", line, col)
    value = int(tok)
    if value < minimum:
        raise ParseError(f"value {value} must be >= {minimum}", line, col)
    if value > DEFAULT_EXPONENT_LIMIT:
        raise ParseError(f"value {value} overflows the exponent limit", line, col)
    return value


def _parse_vector(body: str, n: int, line: int) -> Monomial:
    toks = _tokens(body, 0)
    exps = [_int_token(t, line, c) for t, c in toks]
    if len(exps) != n:
        raise ParseError(f"exponent vector has {len(exps)} entries, expected {n}", line, 1)
    return Monomial(tuple(exps))


def _parse_symbolic(body: str, index: Dict[str, int], n: int, line: int) -> Monomial:
    bad = re.search(r"^\s*\*|\*\s*\*|\*\s*$", body)
    if bad:
        raise ParseError("empty factor in product", line, bad.end())
    stripped = body.strip()
    if stripped == "1":
        return Monomial.one(n)
    exps = [0] * n
    for m in re.finditer(r"[^*]+", body):
        piece = m.group(0)
        col = m.start() + (len(piece) - len(piece.lstrip())) + 1
        factor = piece.strip()
        fm = _FACTOR.match(factor)
        if not fm:
            raise ParseError(f"malformed factor '{factor}'", line, col)
        name, exp = fm.group(1), fm.group(2)
        if name not in index:
            raise ParseError(f"unknown variable '{name}'", line, col)
        e = int(exp) if exp is not None else 1
        exps[index[name]] += e
        if exps[index[name]] > DEFAULT_EXPONENT_LIMIT:
            raise ParseError(f"exponent of '{name}' overflows", line, col)
    return Monomial._make(tuple(exps))


def _stanza_value(key: str, value: str, line: int, offset: int):
    toks = _tokens(value, offset)
    if key == "family":
        if len(toks) != 1:
            raise ParseError("family takes one tag", line, offset + 1)
        tag, col = toks[0]
        if tag not in FAMILIES:
            raise ParseError(f"unknown family tag '{tag}'", line, col)
        return tag
    if key in ("n", "d", "vertices", "edge_count", "seed"):
        if len(toks) != 1:
            raise ParseError(f"{key} takes one integer", line, offset + 1)
        return _int_token(toks[0][0], line, toks[0][1], minimum=0)
    if key in ("caps", "blocks"):
        return [_int_token(t, line, c, minimum=1) for t, c in toks]
    if key == "edges":
        edges = []
        for m in re.finditer(r"\S+", value):
            tok, col = m.group(0), offset + m.start() + 1
            parts = tok.split("-")
            if len(parts) != 2:
                raise ParseError(f"edge '{tok}' is not of the form a-b", line, col)
            edges.append((_int_token(parts[0], line, col, 1), _int_token(parts[1], line, col, 1)))
        return edges
    if key == "sets":
        sets = []
        for m in re.finditer(r"\{([^}]*)\}|(\S+)", value):
            col = offset + m.start() + 1
            if m.group(1) is None:
                raise ParseError(f"expected a braced set like {{1,2}}, got '{m.group(2)}'", line, col)
            sets.append([_int_token(t, line, col, 1) for t, _ in _tokens(m.group(1), 0)])
        return sets
    raise ParseError(f"unknown key '{key}'", line, 1)


def parse_instance(text: str, source: str = "<string>") -> ParsedInstance:
    header: Dict[str, Tuple[object, int]] = {}
    names: Optional[Tuple[str, ...]] = None
    index: Dict[str, int] = {}
    n: Optional[int] = None
    gens: List[Monomial] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue

        km = _KEY.match(line)
        if km and not gens:
            key, value = km.group(1), km.group(2)
            offset = km.start(2)
            if key not in HEADER_KEYS:
                raise ParseError(f"unknown key '{key}'", lineno, km.start(1) + 1)
            if key in header:
                raise ParseError(f"duplicate key '{key}'", lineno, km.start(1) + 1)
            if key == "vars":
                toks = _tokens(value, offset)
                if len(toks) != 1:
                    raise ParseError("vars takes one integer", lineno, offset + 1)
                n = _int_token(toks[0][0], lineno, toks[0][1], minimum=1)
                header[key] = (n, lineno)
            elif key == "names":
                toks = _tokens(value, offset)
                for tok, col in toks:
                    if not _NAME.match(tok):
                        raise ParseError(f"invalid variable name '{tok}'", lineno, col)
                names = tuple(t for t, _ in toks)
                if len(set(names)) != len(names):
                    raise ParseError("variable names must be distinct", lineno, offset + 1)
                header[key] = (names, lineno)
            else:
                header[key] = (_stanza_value(key, value, lineno, offset), lineno)
            continue

        if "family" in header:
            raise ParseError("monomial lines are not allowed in a constructor stanza", lineno, 1)
        if n is None:
            raise ParseError("a 'vars: n' header must precede the monomials", lineno, 1)
        if not index:
            if names is not None and len(names) != n:
                raise ParseError(
                    f"{len(names)} names declared for {n} variables", header["names"][1], 1
                )
            index = {name: i for i, name in enumerate(names or [f"x{i + 1}" for i in range(n)])}
        body = line.rstrip()
        if body.strip() == "1" and n > 1:
            gens.append(Monomial.one(n))
        elif all(_INT.match(t) for t, _ in _tokens(body, 0)):
            gens.append(_parse_vector(body, n, lineno))
        else:
            gens.append(_parse_symbolic(body, index, n, lineno))

    if "family" in header:
        if "vars" in header or "names" in header:
            raise ParseError("vars/names belong to explicit instances, not stanzas", header.get("vars", header.get("names"))[1], 1)
        params = {k: v for k, (v, _) in header.items()}
        try:
            spec = MatroidSpec(**params)
        except ValidationError as exc:
            first = exc.errors()[0]
            raise ParseError(f"invalid {params['family']} stanza: {first['msg']}", header["family"][1], 1)
        return ParsedInstance(source, spec=spec)

    stray = [k for k in header if k not in ("vars", "names")]
    if stray:
        key = stray[0]
        raise ParseError(f"key '{key}' needs a 'family:' line", header[key][1], 1)
    if n is None:
        raise ParseError("empty instance: no 'vars:' header", 1, 1)
    if names is not None and len(names) != n:
        raise ParseError(f"{len(names)} names declared for {n} variables", header["names"][1], 1)
    return ParsedInstance(source, ideal=MonomialIdeal.from_generators(gens, n), names=names)


def load_instance(path: str) -> ParsedInstance:
    """Read an instance from a file path, or from stdin for '-'."""
    if path == "-":
        return parse_instance(sys.stdin.read(), "<stdin>")
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read instance file '{path}': {exc.strerror or exc}")
    return parse_instance(text, str(p))


def format_instance(I: MonomialIdeal, names: Optional[Tuple[str, ...]] = None) -> str:
    lines = [f"vars: {I.n}"]
    if names:
        lines.append("names: " + " ".join(names))
    for g in I.gens:
        # the unit monomial in vector form, since "1" reads as x1 when n = 1
        lines.append(" ".join("0" * I.n) if g.is_one else g.to_string(names))
    return "\n".join(lines) + "\n"
