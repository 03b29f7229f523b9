"""Words in the partial conjugations, their evaluation, and factoring into them.

An ``SWord`` is a tuple of ``(index, sign)`` pairs indexing ``enumerate_S(G)``.
It is read as a product of automorphisms, so ``evaluate`` composes the factors
right to left: ``evaluate([s1, s2]) = s1 ∘ s2``.
"""

from __future__ import annotations

import logging
import re
from typing import Sequence

from .autos import (
    Endo,
    compose,
    equal,
    first_non_conjugate_vertex,
    identity,
    is_identity,
    is_vertex_conjugating,
)
from .errors import BudgetExceeded, NotVertexConjugating, ParseError
from .graph import Graph
from .whitehead import PartialConjugation, enumerate_S, pc_endo
from .words import parse_letter

log = logging.getLogger(__name__)

SWord = tuple[tuple[int, int], ...]

DEFAULT_MAX_STATES = 10**6
DEFAULT_MAX_LENGTH = 12


class GeneratorTable:
    """``enumerate_S(G)`` with name lookup, formal inverses and cached endos."""

    def __init__(self, G: Graph):
        self.G = G
        self.pcs: list[PartialConjugation] = enumerate_S(G)
        self.index = {pc: i for i, pc in enumerate(self.pcs)}
        self.inverse = [self.index[pc.inverse()] for pc in self.pcs]
        self.endos = [pc_endo(G, pc) for pc in self.pcs]
        self.names = [pc.name(G) for pc in self.pcs]
        self.by_name = {name: i for i, name in enumerate(self.names)}

    def __len__(self) -> int:
        return len(self.pcs)

    def endo(self, i: int, sign: int = 1) -> Endo:
        return self.endos[i if sign > 0 else self.inverse[i]]

    def format(self, w: Sequence[tuple[int, int]], sep: str = " * ") -> str:
        if not w:
            return "1"
        return sep.join(self.names[i] + ("^-1" if s < 0 else "") for i, s in w)


_GEN_RE = re.compile(r"c\[([^|\]]+)\|\{([^}]*)\}\](\^-1)?\Z")


def parse_sword(table: GeneratorTable, text: str) -> SWord:
    """Inverse of ``GeneratorTable.format``; ``"1"`` is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split("*"):
        tok = tok.strip()
        m = _GEN_RE.match(tok)
        if not m:
            raise ParseError(f"malformed generator {tok!r}")
        x = parse_letter(table.G, m.group(1))
        ys = [y.strip() for y in m.group(2).split(",") if y.strip()]
        pc = PartialConjugation(x, frozenset(table.G.vertex_index(y) for y in ys))
        if pc not in table.index:
            raise ParseError(f"{tok!r} is not a partial conjugation of this graph")
        out.append((table.index[pc], -1 if m.group(3) else 1))
    return tuple(out)


def evaluate(G: Graph, w: Sequence[tuple[int, int]], table: GeneratorTable | None = None) -> Endo:
    table = table or GeneratorTable(G)
    return compose(G, *(table.endo(i, s) for i, s in w)) if w else identity(G)


def potential(f: Endo) -> int:
    return sum(len(img) for img in f.images)


def _bfs_descent(G, table, f, max_states, max_length) -> tuple[list[int], Endo]:
    """Shortest run of left multiplications taking ``f`` to strictly lower potential."""
    target = potential(f)
    seen = {f.images}
    frontier = [(f, [])]
    for _ in range(max_length):
        nxt = []
        for g, path in frontier:
            for i, s_endo in enumerate(table.endos):
                h = compose(G, s_endo, g)
                if h.images in seen:
                    continue
                seen.add(h.images)
                if len(seen) > max_states:
                    raise BudgetExceeded(f"factor search exceeded {max_states} states")
                if potential(h) < target:
                    return path + [i], h
                nxt.append((h, path + [i]))
        frontier = nxt
        if not frontier:
            break
    raise BudgetExceeded(f"no descent found within S-word length {max_length}")


def factor(
    G: Graph,
    f: Endo,
    max_states: int = DEFAULT_MAX_STATES,
    max_length: int = DEFAULT_MAX_LENGTH,
    table: GeneratorTable | None = None,
    check: bool = True,
) -> SWord:
    """Write ``f`` as a product of partial conjugations.

    Greedy descent on the total image length: repeatedly left-multiply by the
    generator that lowers it most (earliest generator on ties).  When none does, a bounded
    breadth-first search looks for a short run of generators that does.  The
    factors are recorded inverted, so the word evaluates back to ``f``.
    """
    table = table or GeneratorTable(G)
    if check and is_vertex_conjugating(G, f) is None:
        raise NotVertexConjugating(first_non_conjugate_vertex(G, f) or "?")
    moves: list[int] = []
    greedy = bfs = 0
    cur = f
    while not is_identity(G, cur):
        p = potential(cur)
        step = None
        best = p
        for i, s_endo in enumerate(table.endos):
            h = compose(G, s_endo, cur)
            q = potential(h)
            if q < best:
                best, step = q, ([i], h)
        if step is not None:
            greedy += 1
        else:
            log.debug("greedy step stalled at potential %d; searching", p)
            step = _bfs_descent(G, table, cur, max_states, max_length)
            bfs += 1
        path, cur = step
        moves.extend(path)
        if len(moves) > max_states:
            raise BudgetExceeded("factorization did not terminate within budget")
    # cur = s_k ∘ ... ∘ s_1 ∘ f = id, so f = s_1^-1 ∘ ... ∘ s_k^-1
    word = tuple((table.inverse[i], 1) for i in moves)
    if not equal(G, evaluate(G, word, table), f):
        raise AssertionError("factorization failed its round-trip check")
    log.debug("factored in %d greedy and %d search steps", greedy, bfs)
    return word


def oracle_bfs(G: Graph, f: Endo, depth: int, table: GeneratorTable | None = None) -> SWord | None:
    """Exhaustive search over S-words of length at most ``depth`` for one equal to ``f``."""
    table = table or GeneratorTable(G)
    start = identity(G)
    if equal(G, start, f):
        return ()
    seen = {start.images}
    frontier: list[tuple[Endo, SWord]] = [(start, ())]
    for _ in range(depth):
        nxt = []
        for g, w in frontier:
            for i in range(len(table)):
                h = compose(G, g, table.endos[i])
                if h.images in seen:
                    continue
                seen.add(h.images)
                nw = w + ((i, 1),)
                if equal(G, h, f):
                    return nw
                nxt.append((h, nw))
        frontier = nxt
    return None
