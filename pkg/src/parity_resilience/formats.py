"""Text formats: game documents, strategy files and resilience reports.

Game documents follow the usual parity-game exchange layout with an extra
``~``-separated list of disturbance successors::

    # comment
    parity 2;
    0 1 0 1,2 ~ 0 "start";
    1 0 1 1;
    2 2 0 2;

Documents without disturbances stay readable by tools that know only the
plain layout.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .game import Arena, FiniteStateStrategy, ParityGame, PositionalStrategy, Resilience


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None) -> None:
        where = f"line {line}, col {col}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.col = col


_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_]+)|(?P<punct>[,;~])|"(?P<name>[^"\n]*)")')


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokens(text: str) -> Iterator[_Token]:
    for lineno, line in enumerate(text.split("\n"), 1):
        if line.lstrip().startswith("#"):
            continue
        pos = 0
        while True:
            while pos < len(line) and line[pos] in " \t\r":
                pos += 1
            if pos >= len(line):
                break
            m = _TOKEN.match(line, pos)
            if m is None or m.end() == pos:
                raise FormatError(f"syntax error: unexpected {line[pos]!r}", lineno, pos + 1)
            kind = m.lastgroup
            yield _Token(kind, m.group(kind), lineno, m.start(kind) + 1 - (kind == "name"))
            pos = m.end()


class _Reader:
    def __init__(self, text: str) -> None:
        self._it = _tokens(text)
        self._peek: _Token | None = None
        self.last: _Token | None = None

    def peek(self) -> _Token | None:
        if self._peek is None:
            self._peek = next(self._it, None)
        return self._peek

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            line, col = (self.last.line, self.last.col) if self.last else (1, 1)
            raise FormatError("syntax error: unexpected end of input", line, col)
        self._peek = None
        self.last = tok
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Token:
        tok = self.take()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text is not None else kind
            raise FormatError(f"syntax error: expected {want}, got {tok.text!r}", tok.line, tok.col)
        return tok

    def accept(self, kind: str, text: str) -> bool:
        tok = self.peek()
        if tok is not None and tok.kind == kind and tok.text == text:
            self.take()
            return True
        return False

    def id_list(self) -> list[_Token]:
        out = [self.expect("int")]
        while self.accept("punct", ","):
            out.append(self.expect("int"))
        return out


def parse_game(text: str) -> ParityGame:
    """Parse a game document; errors carry the line and column."""
    rd = _Reader(text)
    rd.expect("word", "parity")
    max_id = int(rd.expect("int").text)
    rd.expect("punct", ";")
    n = max_id + 1
    records: dict[int, tuple] = {}
    while rd.peek() is not None:
        id_tok = rd.expect("int")
        v = int(id_tok.text)
        if v in records:
            raise FormatError(f"duplicate vertex id {v}", id_tok.line, id_tok.col)
        if v > max_id:
            raise FormatError(f"vertex id {v} exceeds declared maximum {max_id}", id_tok.line, id_tok.col)
        color = int(rd.expect("int").text)
        owner_tok = rd.expect("int")
        if owner_tok.text not in ("0", "1"):
            raise FormatError(f"syntax error: owner must be 0 or 1, got {owner_tok.text}", owner_tok.line, owner_tok.col)
        succ = rd.id_list()
        dsucc: list[_Token] = []
        tilde = rd.peek()
        if rd.accept("punct", "~"):
            if owner_tok.text == "1":
                raise FormatError(f"disturbance from Player-1 vertex {v}", tilde.line, tilde.col)
            dsucc = rd.id_list()
        name = None
        if rd.peek() is not None and rd.peek().kind == "name":
            name = rd.take().text
        rd.expect("punct", ";")
        records[v] = (color, int(owner_tok.text), succ, dsucc, name)

    missing = [v for v in range(n) if v not in records]
    if missing:
        line = rd.last.line if rd.last else 1
        raise FormatError(f"missing vertex id {missing[0]} (header declares 0..{max_id})", line, 1)
    for v, (_, _, succ, dsucc, _) in records.items():
        for tok in succ + dsucc:
            if int(tok.text) >= n:
                raise FormatError(f"dangling successor id {tok.text}", tok.line, tok.col)

    names = [records[v][4] for v in range(n)]
    return ParityGame(
        Arena(
            owner=tuple(records[v][1] for v in range(n)),
            succ=tuple(tuple(sorted({int(t.text) for t in records[v][2]})) for v in range(n)),
            dsucc=tuple(tuple(sorted({int(t.text) for t in records[v][3]})) for v in range(n)),
            names=tuple(names) if any(nm is not None for nm in names) else None,
        ),
        tuple(records[v][0] for v in range(n)),
    )


def serialize_game(game: ParityGame) -> str:
    arena = game.arena
    lines = [f"parity {game.n - 1};"]
    for v in game.vertices:
        rec = f"{v} {game.color[v]} {arena.owner[v]} " + ",".join(map(str, arena.succ[v]))
        if arena.dsucc[v]:
            rec += " ~ " + ",".join(map(str, arena.dsucc[v]))
        if arena.names is not None and arena.names[v] is not None:
            rec += f' "{arena.names[v]}"'
        lines.append(rec + ";")
    return "\n".join(lines) + "\n"


def _pairs(text: str, what: str) -> Iterator[tuple[int, str, str]]:
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"syntax error: expected '<id> <{what}>'", lineno, 1)
        yield lineno, parts[0], parts[1]


def parse_strategy(text: str) -> PositionalStrategy:
    choice = {}
    for lineno, a, b in _pairs(text, "succ-id"):
        if not (a.isdigit() and b.isdigit()):
            raise FormatError("syntax error: vertex ids must be integers", lineno, 1)
        if int(a) in choice:
            raise FormatError(f"duplicate vertex id {a}", lineno, 1)
        choice[int(a)] = int(b)
    return PositionalStrategy(choice)


def serialize_strategy(strategy: PositionalStrategy) -> str:
    return "".join(f"{v} {w}\n" for v, w in sorted(strategy.choice.items()))


def parse_report(text: str) -> list[Resilience]:
    values: dict[int, Resilience] = {}
    for lineno, a, b in _pairs(text, "value"):
        try:
            values[int(a)] = Resilience.parse(b)
        except ValueError:
            raise FormatError(f"syntax error: bad resilience entry {a} {b}", lineno, 1) from None
    if sorted(values) != list(range(len(values))):
        raise FormatError("report does not cover vertices 0..n-1 exactly once")
    return [values[v] for v in range(len(values))]


def serialize_report(rmap: Sequence[Resilience]) -> str:
    return "".join(f"{v} {r}\n" for v, r in enumerate(rmap))


def lift_table(strategy: FiniteStateStrategy) -> str:
    """Finite-state strategy as ``<id> <mem-state> <succ-id>`` lines."""
    return "".join(f"{v} {m} {w}\n" for (v, m), w in sorted(strategy.next_move.items(), key=lambda kv: (kv[0][0], str(kv[0][1]))))
