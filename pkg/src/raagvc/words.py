"""Word arithmetic in the right-angled Artin group of a graph.

A letter is an int: vertex index ``i`` gives ``2*i`` for ``v`` and ``2*i + 1``
for ``v^-1``.  Integer order is therefore the canonical letter order (vertex
order first, positive before negative), inversion is ``x ^ 1`` and the vertex
of a letter is ``x >> 1``.  A word is a tuple of letters.

Normal forms are the shortlex-least representatives: a word is first fully
reduced (cancelling ``x ... x^-1`` across letters that commute with ``x``),
then the lexicographically least rearrangement under commutations is taken.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BudgetExceeded, ParseError, UnknownVertexError
from .graph import Graph

Word = tuple[int, ...]
ClassTuple = tuple[Word, ...]

EMPTY: Word = ()
DEFAULT_CYCLIC_BUDGET = 10**6


def letter(i: int, sign: int = 1) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return 2 * i + (sign < 0)


def vertex_of(x: int) -> int:
    return x >> 1


def sign_of(x: int) -> int:
    return -1 if x & 1 else 1


def inverse_letter(x: int) -> int:
    return x ^ 1


def letters_of(G: Graph) -> range:
    """All of L = V ∪ V^-1 in canonical order."""
    return range(2 * G.n)


def commute(G: Graph, x: int, y: int) -> bool:
    """True when letters on distinct, adjacent vertices."""
    return bool(G.adj[x >> 1] >> (y >> 1) & 1)


# -- text --------------------------------------------------------------------

def parse_letter(G: Graph, token: str) -> int:
    name, caret, exp = token.partition("^")
    if caret and exp not in ("-1", "1", "+1"):
        raise ParseError(f"malformed exponent in {token!r} (only ^-1 is allowed)")
    try:
        i = G.index[name]
    except KeyError:
        raise UnknownVertexError(name) from None
    return letter(i, -1 if exp == "-1" else 1)


def parse_word(G: Graph, text: str) -> Word:
    """``"a b^-1 c"`` -> letters; ``"1"`` (or blank) is the empty word."""
    tokens = text.split()
    if tokens == ["1"]:
        return EMPTY
    return tuple(parse_letter(G, t) for t in tokens)


def format_letter(G: Graph, x: int) -> str:
    name = G.vertices[x >> 1]
    return name + "^-1" if x & 1 else name


def format_word(G: Graph, w: Sequence[int]) -> str:
    if not w:
        return "1"
    return " ".join(format_letter(G, x) for x in w)


# -- reduction and normal form ---------------------------------------------

def reduce_word(G: Graph, w: Iterable[int]) -> list[int]:
    """Cancel every pair ``x ... x^-1`` whose middle letters all commute with ``x``.

    The output is kept reduced as letters are appended, so a new letter can
    only cancel against the last occurrence of its inverse that is reachable
    through commuting letters.
    """
    adj = G.adj
    out: list[int] = []
    for x in w:
        vx = x >> 1
        lk = adj[vx]
        j = len(out) - 1
        cancelled = False
        while j >= 0:
            y = out[j]
            vy = y >> 1
            if vy == vx:
                if y == x ^ 1:
                    del out[j]
                    cancelled = True
                break
            if not lk >> vy & 1:
                break
            j -= 1
        if not cancelled:
            out.append(x)
    return out


def lex_least(G: Graph, w: Sequence[int]) -> Word:
    """Lexicographically least word in the commutation class of ``w``.

    Greedy: every rearrangement starts with a letter that can be commuted to
    the front, so the least one is taken and the rest is handled recursively.
    """
    adj = G.adj
    rem = list(w)
    out = []
    while rem:
        seen = 0
        best = -1
        best_pos = -1
        for pos, y in enumerate(rem):
            vy = y >> 1
            if seen & ~adj[vy] == 0 and (best < 0 or y < best):
                best, best_pos = y, pos
            seen |= 1 << vy
        out.append(best)
        del rem[best_pos]
    return tuple(out)


def normal_form(G: Graph, w: Iterable[int]) -> Word:
    return lex_least(G, reduce_word(G, w))


def invert(G: Graph, w: Sequence[int]) -> Word:
    return normal_form(G, [x ^ 1 for x in reversed(w)])


def multiply(G: Graph, *words: Sequence[int]) -> Word:
    return normal_form(G, [x for w in words for x in w])


def support(G: Graph, w: Iterable[int]) -> frozenset[str]:
    return frozenset(G.vertices[x >> 1] for x in w)


def element_length(G: Graph, w: Iterable[int]) -> int:
    return len(reduce_word(G, w))


def front_letters(G: Graph, w: Sequence[int]) -> list[int]:
    """Positions of letters that can be commuted to the front."""
    adj = G.adj
    seen = 0
    out = []
    for pos, y in enumerate(w):
        if seen & ~adj[y >> 1] == 0:
            out.append(pos)
        seen |= 1 << (y >> 1)
    return out


def back_letters(G: Graph, w: Sequence[int]) -> list[int]:
    """Positions of letters that can be commuted to the back."""
    adj = G.adj
    seen = 0
    out = []
    for pos in range(len(w) - 1, -1, -1):
        y = w[pos]
        if seen & ~adj[y >> 1] == 0:
            out.append(pos)
        seen |= 1 << (y >> 1)
    return out


# -- conjugacy ---------------------------------------------------------------

def cyclic_reduce(G: Graph, w: Iterable[int]) -> tuple[Word, Word]:
    """Return ``(core, c)`` with ``core`` cyclically reduced and ``w = c^-1 core c``."""
    cur = reduce_word(G, w)
    stripped: list[int] = []
    while True:
        backs = {cur[p]: p for p in back_letters(G, cur)}
        hit = None
        for p in front_letters(G, cur):
            q = backs.get(cur[p] ^ 1)
            if q is not None:
                hit = (p, q)
                break
        if hit is None:
            break
        p, q = hit
        stripped.append(cur[p])
        cur = [y for k, y in enumerate(cur) if k != p and k != q]
    conjugator = invert(G, stripped)
    return lex_least(G, cur), conjugator


def cyclic_normal_form(G: Graph, w: Iterable[int], max_states: int = DEFAULT_CYCLIC_BUDGET) -> Word:
    """Canonical representative of the conjugacy class of ``w``.

    The cyclically reduced core is closed under moving a front letter to the
    back (rotation of traces); the least normal form in that orbit is returned.
    """
    core, _ = cyclic_reduce(G, w)
    seen = {core}
    frontier = [core]
    while frontier:
        nxt = []
        for t in frontier:
            for p in front_letters(G, t):
                rotated = lex_least(G, t[:p] + t[p + 1:] + (t[p],))
                if rotated not in seen:
                    seen.add(rotated)
                    if len(seen) > max_states:
                        raise BudgetExceeded(
                            f"cyclic canonicalization visited more than {max_states} states"
                        )
                    nxt.append(rotated)
        frontier = nxt
    return min(seen)


def are_conjugate(G: Graph, u: Iterable[int], v: Iterable[int]) -> bool:
    return cyclic_normal_form(G, u) == cyclic_normal_form(G, v)


def class_length(G: Graph, w: Iterable[int]) -> int:
    return len(cyclic_reduce(G, w)[0])


def class_tuple(G: Graph, words: Iterable[Iterable[int]]) -> ClassTuple:
    return tuple(cyclic_normal_form(G, w) for w in words)


def tuple_length(W: ClassTuple) -> int:
    return sum(len(c) for c in W)


def generator_tuple(G: Graph) -> ClassTuple:
    """The tuple (v_1, ..., v_n) of vertex classes."""
    return tuple((letter(i),) for i in range(G.n))


def enumerate_length2_classes(G: Graph) -> ClassTuple:
    classes = set()
    for x in letters_of(G):
        for y in letters_of(G):
            c = cyclic_normal_form(G, (x, y))
            if len(c) == 2:
                classes.add(c)
    return tuple(sorted(classes))
