"""Text and JSON forms of classes, local types and words."""
from __future__ import annotations

import json
import re
from typing import Any

from .cremona import GeneratorAction, Permute, Reflect, WeylWord
from .errors import ParseError
from .lattice import DivisorClass
from .resolution import LocalType

_INT = re.compile(r"\s*([+-]?\d+)\s*")


def _parse_int(text: str, start: int, end: int, what: str) -> int:
    match = _INT.fullmatch(text, start, end)
    if match is None:
        raise ParseError(f"expected integer {what}, got {text[start:end]!r}", start)
    return int(match.group(1))


def parse_class(text: str) -> DivisorClass:
    """Parse ``d;m1,...,mn`` or ``{"n": .., "d": .., "m": [..]}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON class: {exc.msg}", exc.pos) from None
        return class_from_json(obj)
    semi = text.find(";")
    if semi < 0:
        raise ParseError("missing ';' between degree and multiplicities", len(text))
    d = _parse_int(text, 0, semi, "degree")
    m = []
    pos = semi + 1
    if not text[pos:].strip():
        raise ParseError("no multiplicities given", pos)
    for piece in text[pos:].split(","):
        m.append(_parse_int(text, pos, pos + len(piece), "multiplicity"))
        pos += len(piece) + 1
    return DivisorClass(d, tuple(m))


def class_from_json(obj: Any) -> DivisorClass:
    if not isinstance(obj, dict) or set(obj) != {"n", "d", "m"}:
        raise ParseError('JSON class must be an object with keys "n", "d", "m"')
    n, d, m = obj["n"], obj["d"], obj["m"]
    if not _is_int(n) or not _is_int(d) or not isinstance(m, list) or not all(_is_int(v) for v in m):
        raise ParseError("JSON class fields must be integers")
    if len(m) != n:
        raise ParseError(f'"n" is {n} but "m" has {len(m)} entries')
    if n < 1:
        raise ParseError("a class needs at least one multiplicity")
    return DivisorClass(d, tuple(m))


def _is_int(v: Any) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def emit_class(x: DivisorClass) -> str:
    return str(x)


def class_to_json(x: DivisorClass) -> dict:
    return {"n": x.n, "d": x.d, "m": list(x.m)}


def emit_class_json(x: DivisorClass) -> str:
    return dumps(class_to_json(x))


def dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def parse_type(text: str) -> LocalType:
    if "/" not in text:
        raise ParseError(f"local type must look like a/b, got {text!r}", len(text))
    slash = text.index("/")
    a = _parse_int(text, 0, slash, "exponent")
    b = _parse_int(text, slash + 1, len(text), "exponent")
    if a < 1 or b < 1:
        raise ParseError(f"exponents must be positive, got {text!r}", 0)
    return LocalType(a, b)


def parse_generator(token: str) -> GeneratorAction:
    kind, sep, body = token.strip().partition(":")
    if not sep or kind not in ("r", "p"):
        raise ParseError(f"generator must start with 'r:' or 'p:', got {token!r}", 0)
    values = []
    pos = 0
    for piece in body.split(","):
        values.append(_parse_int(body, pos, pos + len(piece), "index"))
        pos += len(piece) + 1
    if kind == "r":
        if len(values) != 3:
            raise ParseError(f"reflection needs three indices, got {token!r}", 0)
        return Reflect(*values)
    return Permute(tuple(values))


def parse_word(text: str | list) -> WeylWord:
    """Accept a JSON array of tokens (``["r:1,2,3", "p:2,1,3"]``) or the decoded list."""
    if isinstance(text, str):
        try:
            tokens = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON word: {exc.msg}", exc.pos) from None
    else:
        tokens = text
    if not isinstance(tokens, list) or not all(isinstance(t, str) for t in tokens):
        raise ParseError("a word is a JSON array of generator strings")
    return WeylWord(tuple(parse_generator(t) for t in tokens))


def emit_word(w: WeylWord) -> str:
    return dumps(w.tokens())
