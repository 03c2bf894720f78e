"""Text formats for algebras and codes.

Algebra files::

    mv 1
    elements: 0 a b e
    zero: 0
    neg: e b a 0
    oplus:
    0 a b e
    ...

Wajsberg files use ``wj 1``, ``one:``, ``comp:`` and ``star:``.  Lines
starting with ``#`` and blank lines are ignored everywhere.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterator

from mvkit.algebra import AlgebraError, FiniteMVAlgebra, WajsbergAlgebra, from_wajsberg

_LAYOUTS = {
    "mv": ("zero", "neg", "oplus"),
    "wj": ("one", "comp", "star"),
}


class ParseError(AlgebraError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _keyed(lines, key: str, last_lineno: int) -> tuple[int, list[str]]:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(last_lineno, f"missing '{key}:' line") from None
    head, sep, rest = line.partition(":")
    if not sep or head.strip() != key:
        raise ParseError(lineno, f"expected '{key}:', got {line!r}")
    return lineno, rest.split()


def _parse(text: str):
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty input") from None
    magic = header.split()
    if len(magic) != 2 or magic[0] not in _LAYOUTS or magic[1] != "1":
        raise ParseError(lineno, f"bad header {header!r}; expected 'mv 1' or 'wj 1'")
    kind = magic[0]
    const_key, unary_key, table_key = _LAYOUTS[kind]

    lineno, names = _keyed(lines, "elements", lineno)
    if not names:
        raise ParseError(lineno, "no elements listed")
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise ParseError(lineno, f"duplicate element name {name!r}")
        seen.add(name)
    index = {name: i for i, name in enumerate(names)}
    n = len(names)

    def resolve(token: str, at: int) -> int:
        try:
            return index[token]
        except KeyError:
            raise ParseError(at, f"unknown element {token!r}") from None

    lineno, const = _keyed(lines, const_key, lineno)
    if len(const) != 1:
        raise ParseError(lineno, f"'{const_key}:' takes exactly one element")
    constant = resolve(const[0], lineno)

    lineno, unary_tokens = _keyed(lines, unary_key, lineno)
    if len(unary_tokens) != n:
        raise ParseError(lineno, f"'{unary_key}:' has {len(unary_tokens)} entries, expected {n}")
    unary = [resolve(tok, lineno) for tok in unary_tokens]

    lineno, trailing = _keyed(lines, table_key, lineno)
    if trailing:
        raise ParseError(lineno, f"'{table_key}:' must be followed by the table on the next lines")
    table = []
    for _ in range(n):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(lineno, f"table has {len(table)} rows, expected {n}") from None
        row = line.split()
        if len(row) != n:
            raise ParseError(lineno, f"row has {len(row)} entries, expected {n}")
        table.append([resolve(tok, lineno) for tok in row])
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(extra[0], "unexpected content after the table")
    if kind == "mv":
        return FiniteMVAlgebra(names, constant, table, unary)
    return WajsbergAlgebra(names, constant, table, unary)


def parse_algebra(text: str) -> FiniteMVAlgebra:
    result = _parse(text)
    if not isinstance(result, FiniteMVAlgebra):
        raise ParseError(1, "expected an 'mv 1' file")
    return result


def parse_wajsberg(text: str) -> WajsbergAlgebra:
    result = _parse(text)
    if not isinstance(result, WajsbergAlgebra):
        raise ParseError(1, "expected a 'wj 1' file")
    return result


def parse_any(text: str) -> FiniteMVAlgebra | WajsbergAlgebra:
    return _parse(text)


def _table_lines(names, table) -> list[str]:
    return [" ".join(names[int(v)] for v in row) for row in table]


def format_algebra(a: FiniteMVAlgebra) -> str:
    names = a.elements
    lines = [
        "mv 1",
        "elements: " + " ".join(names),
        f"zero: {names[a.zero]}",
        "neg: " + " ".join(names[int(v)] for v in a.neg),
        "oplus:",
        *_table_lines(names, a.oplus),
    ]
    return "\n".join(lines) + "\n"


def format_wajsberg(w: WajsbergAlgebra) -> str:
    names = w.elements
    lines = [
        "wj 1",
        "elements: " + " ".join(names),
        f"one: {names[w.one]}",
        "comp: " + " ".join(names[int(v)] for v in w.comp),
        "star:",
        *_table_lines(names, w.star),
    ]
    return "\n".join(lines) + "\n"


def load_algebra(path: str | Path) -> FiniteMVAlgebra:
    """Read an MV file, or a Wajsberg file converted to its MV form."""
    result = parse_any(Path(path).read_text(encoding="utf-8"))
    if isinstance(result, WajsbergAlgebra):
        return from_wajsberg(result)
    return result


def parse_code(text: str) -> list[str]:
    words: list[str] = []
    for lineno, line in _content_lines(text):
        if set(line) - {"0", "1"}:
            raise ParseError(lineno, f"codeword {line!r} contains characters other than 0/1")
        if words and len(line) != len(words[0]):
            raise ParseError(lineno, f"codeword length {len(line)} differs from {len(words[0])}")
        words.append(line)
    if not words:
        raise ParseError(1, "no codewords")
    return words


def format_code(codewords, comment: str | None = None) -> str:
    head = [f"# {comment}"] if comment else []
    return "\n".join([*head, *codewords]) + "\n"
