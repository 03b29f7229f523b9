"""Endomorphisms of G_Γ given by vertex images, and the vertex-conjugating test.

Composition is functional: ``compose(G, f, g)(v) == f(g(v))``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BudgetExceeded, NotAnAutomorphism, ParseError, UnknownVertexError
from .graph import Graph
from .words import (
    Word,
    cyclic_normal_form,
    cyclic_reduce,
    format_word,
    letter,
    letters_of,
    normal_form,
    parse_word,
)


@dataclass(frozen=True)
class Endo:
    """Images of the vertices, indexed by vertex, each in normal form."""

    images: tuple[Word, ...]

    @classmethod
    def from_images(cls, G: Graph, images: Sequence[Sequence[int]] | Mapping) -> "Endo":
        if isinstance(images, Mapping):
            full = [(letter(i),) for i in range(G.n)]
            for v, w in images.items():
                full[G.vertex_index(v)] = w
            images = full
        if len(images) != G.n:
            raise ValueError(f"expected {G.n} images, got {len(images)}")
        return cls(tuple(normal_form(G, w) for w in images))

    def __call__(self, G: Graph, w: Sequence[int]) -> Word:
        return apply(G, self, w)


def identity(G: Graph) -> Endo:
    return Endo(tuple((letter(i),) for i in range(G.n)))


def is_identity(G: Graph, f: Endo) -> bool:
    return all(img == (2 * i,) for i, img in enumerate(f.images))


def _letter_images(f: Endo) -> list[Word]:
    imgs = []
    for w in f.images:
        imgs.append(w)
        imgs.append(tuple(x ^ 1 for x in reversed(w)))
    return imgs


def apply(G: Graph, f: Endo, w: Sequence[int]) -> Word:
    imgs = _letter_images(f)
    return normal_form(G, [y for x in w for y in imgs[x]])


def compose(G: Graph, *fs: Endo) -> Endo:
    """``compose(G, f, g, h)`` is ``f ∘ g ∘ h``."""
    if not fs:
        return identity(G)
    result = fs[-1]
    for f in reversed(fs[:-1]):
        imgs = _letter_images(f)
        result = Endo(tuple(normal_form(G, [y for x in w for y in imgs[x]]) for w in result.images))
    return result


def equal(G: Graph, f: Endo, g: Endo) -> bool:
    return f.images == g.images


def check_homomorphism(G: Graph, f: Endo) -> bool:
    """Every defining commutation ``uv = vu`` survives under ``f``."""
    for u, v in G.sorted_edges():
        a, b = letter(G.index[u]), letter(G.index[v])
        if apply(G, f, (a, b)) != apply(G, f, (b, a)):
            return False
    return True


def verify_inverse(G: Graph, f: Endo, g: Endo) -> bool:
    ident = identity(G)
    return equal(G, compose(G, f, g), ident) and equal(G, compose(G, g, f), ident)


# -- Laurence–Servatius generators ------------------------------------------

def inversion(G: Graph, v: str | int) -> Endo:
    i = G.vertex_index(v)
    imgs = [(letter(k),) for k in range(G.n)]
    imgs[i] = (letter(i, -1),)
    return Endo(tuple(imgs))


def transvection(G: Graph, v: str | int, w: str | int) -> Endo:
    """``w -> v w``; requires ``v ≥ w`` and ``v != w``."""
    i, j = G.vertex_index(v), G.vertex_index(w)
    if i == j:
        raise NotAnAutomorphism("transvection needs two distinct vertices")
    if not G.dominates(i, j):
        raise NotAnAutomorphism(f"{G.vertices[i]} does not dominate {G.vertices[j]}")
    imgs = [(letter(k),) for k in range(G.n)]
    imgs[j] = normal_form(G, (letter(i), letter(j)))
    return Endo(tuple(imgs))


def symmetry(G: Graph, perm: Sequence[int]) -> Endo:
    perm = tuple(perm)
    if perm not in G.graph_automorphisms():
        raise NotAnAutomorphism(f"{perm!r} is not a graph automorphism")
    return Endo(tuple((letter(perm[i]),) for i in range(G.n)))


# -- vertex-conjugating decision ---------------------------------------------

@dataclass(frozen=True)
class ConjugatorWitness:
    """``conjugators[i]`` is a word ``w_i`` with ``f(v_i) = w_i^-1 v_i w_i``."""

    conjugators: tuple[Word, ...]

    def check(self, G: Graph, f: Endo) -> bool:
        for i, w in enumerate(self.conjugators):
            inv = tuple(x ^ 1 for x in reversed(w))
            if normal_form(G, inv + (letter(i),) + w) != f.images[i]:
                return False
        return True


def default_witness_length(image: Word) -> int:
    return 2 * len(image) + 2


def _search_conjugator(G: Graph, v: int, target: Word, max_length: int, max_states: int) -> Word:
    """Breadth-first search over conjugators up to ``max_length``."""
    start = ()
    q = deque([start])
    seen = {start}
    while q:
        w = q.popleft()
        inv = tuple(x ^ 1 for x in reversed(w))
        if normal_form(G, inv + (v,) + w) == target:
            return w
        if len(w) >= max_length:
            continue
        for x in letters_of(G):
            nw = normal_form(G, w + (x,))
            if len(nw) == len(w) + 1 and nw not in seen:
                seen.add(nw)
                if len(seen) > max_states:
                    raise BudgetExceeded(f"conjugator search exceeded {max_states} states")
                q.append(nw)
    raise BudgetExceeded(f"no conjugator of length <= {max_length} found")


def is_vertex_conjugating(
    G: Graph, f: Endo, max_states: int = 10**6, max_length: int | None = None
) -> ConjugatorWitness | None:
    """Witness that every ``f(v)`` is conjugate to ``v``, or ``None`` if some is not.

    Raises ``BudgetExceeded`` when conjugacy holds but no witness was found in budget.
    """
    if not check_homomorphism(G, f):
        raise NotAnAutomorphism("endomorphism does not preserve the defining relations")
    conjugators = []
    for i, img in enumerate(f.images):
        v = letter(i)
        if cyclic_normal_form(G, img) != (v,):
            return None
        core, c = cyclic_reduce(G, img)
        if core != (v,):
            limit = default_witness_length(img) if max_length is None else max_length
            c = _search_conjugator(G, v, img, limit, max_states)
        conjugators.append(c)
    witness = ConjugatorWitness(tuple(conjugators))
    if not witness.check(G, f):
        raise AssertionError("conjugator witness failed verification")
    return witness


def first_non_conjugate_vertex(G: Graph, f: Endo) -> str | None:
    for i, img in enumerate(f.images):
        if cyclic_normal_form(G, img) != (letter(i),):
            return G.vertices[i]
    return None


# -- text format -----------------------------------------------------------

def parse_endo(G: Graph, text: str) -> Endo:
    """Lines ``v -> word``; unlisted vertices are fixed."""
    images: dict[int, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lhs, arrow, rhs = line.partition("->")
        if not arrow:
            raise ParseError(f"expected 'v -> word', got {raw!r}", lineno)
        name = lhs.strip()
        if name not in G.index:
            raise ParseError(f"unknown vertex {name!r}", lineno)
        i = G.index[name]
        if i in images:
            raise ParseError(f"vertex {name!r} listed twice", lineno)
        try:
            images[i] = parse_word(G, rhs)
        except (ParseError, UnknownVertexError) as exc:
            raise ParseError(str(exc), lineno) from None
    return Endo.from_images(G, [images.get(i, (letter(i),)) for i in range(G.n)])


def format_endo(G: Graph, f: Endo) -> str:
    return "".join(f"{G.vertices[i]} -> {format_word(G, w)}\n" for i, w in enumerate(f.images))
