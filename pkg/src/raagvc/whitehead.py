"""Whitehead automorphisms, partial conjugations and peak diagnostics.

A type 2 Whitehead automorphism ``(A, a)`` fixes its multiplier ``a`` and sends
each other vertex ``x`` to one of ``x``, ``x a``, ``a^-1 x``, ``a^-1 x a``
according to which of ``x``, ``x^-1`` lie in ``A``.  Partial conjugations are
stored canonically as ``(x, Y)`` with ``Y`` a union of components of
Γ ∖ st(v(x)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .autos import Endo, apply, check_homomorphism, compose, verify_inverse
from .errors import InvalidGeneratorError, NotAnAutomorphism
from .graph import Graph, iter_bits
from .words import (
    ClassTuple,
    class_tuple,
    format_letter,
    letters_of,
    normal_form,
    tuple_length,
)


@dataclass(frozen=True)
class Type2Spec:
    A: frozenset[int]
    a: int

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        if self.a not in self.A:
            raise InvalidGeneratorError("multiplier must belong to A")
        if self.a ^ 1 in self.A:
            raise InvalidGeneratorError("inverse of the multiplier must not belong to A")

    def inverse(self) -> "Type2Spec":
        """``(A - a + a^-1, a^-1)``."""
        return Type2Spec((self.A - {self.a}) | {self.a ^ 1}, self.a ^ 1)


@dataclass(frozen=True)
class Type1Spec:
    """``v -> perm(v)^(-1 if v in inverted else +1)``."""

    perm: tuple[int, ...]
    inverted: frozenset[int] = frozenset()

    def letter_map(self, x: int) -> int:
        i = x >> 1
        return 2 * self.perm[i] + ((x & 1) ^ (i in self.inverted))

    def inverse(self) -> "Type1Spec":
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return Type1Spec(tuple(inv), frozenset(self.perm[i] for i in self.inverted))


@dataclass(frozen=True)
class PartialConjugation:
    """``c_{x,Y}``: conjugates each vertex of ``Y`` by ``x`` (``y -> x^-1 y x``)."""

    x: int
    Y: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "Y", frozenset(self.Y))

    @property
    def mask(self) -> int:
        m = 0
        for y in self.Y:
            m |= 1 << y
        return m

    def sort_key(self) -> tuple:
        return (self.x, len(self.Y), tuple(sorted(self.Y)))

    def inverse(self) -> "PartialConjugation":
        return PartialConjugation(self.x ^ 1, self.Y)

    def name(self, G: Graph) -> str:
        ys = ",".join(G.vertices[y] for y in sorted(self.Y))
        return f"c[{format_letter(G, self.x)}|{{{ys}}}]"

    def endo(self, G: Graph) -> Endo:
        return pc_endo(G, self)


# -- type 2 ----------------------------------------------------------------

def _type2_images(G: Graph, spec: Type2Spec) -> Endo:
    a = spec.a
    ainv = a ^ 1
    va = a >> 1
    imgs = []
    for i in range(G.n):
        x = 2 * i
        if i == va:
            imgs.append((x,))
            continue
        left = x ^ 1 in spec.A
        right = x in spec.A
        w = ((ainv,) if left else ()) + (x,) + ((a,) if right else ())
        imgs.append(normal_form(G, w))
    return Endo(tuple(imgs))


def type2_endo(G: Graph, spec: Type2Spec) -> Endo:
    """The automorphism ``(A, a)``, checked to exist (homomorphism + explicit inverse)."""
    f = _type2_images(G, spec)
    if not check_homomorphism(G, f):
        raise NotAnAutomorphism("(A, a) does not preserve the defining relations")
    g = _type2_images(G, spec.inverse())
    if not check_homomorphism(G, g) or not verify_inverse(G, f, g):
        raise NotAnAutomorphism("(A, a) has no inverse of the form (A - a + a^-1, a^-1)")
    return f


def is_long_range(G: Graph, spec: Type2Spec) -> bool:
    """Every vertex of lk(v(a)) is fixed: either both or neither of ``w``, ``w^-1`` lie in ``A``."""
    for w in iter_bits(G.link_mask(spec.a >> 1)):
        if (2 * w in spec.A) != (2 * w + 1 in spec.A):
            return False
    return True


# -- partial conjugations ------------------------------------------------------

def is_component_union(G: Graph, i: int, mask: int) -> bool:
    comps = G.component_masks(i)
    covered = 0
    for c in comps:
        if c & mask:
            if c & mask != c:
                return False
            covered |= c
    return covered == mask


def partial_conjugation(G: Graph, x: int, Y: Iterable[str | int]) -> PartialConjugation:
    if not 0 <= x < 2 * G.n:
        raise InvalidGeneratorError(f"letter {x!r} out of range")
    mask = G.mask_of(Y)
    if not mask:
        raise InvalidGeneratorError("Y must be non-empty")
    if not is_component_union(G, x >> 1, mask):
        raise InvalidGeneratorError(
            f"{set(G.names(mask))} is not a union of components of Γ ∖ st({G.vertices[x >> 1]})"
        )
    return PartialConjugation(x, frozenset(iter_bits(mask)))


def pc_endo(G: Graph, pc: PartialConjugation) -> Endo:
    x = pc.x
    imgs = []
    for i in range(G.n):
        if i in pc.Y:
            imgs.append((x ^ 1, 2 * i, x))
        else:
            imgs.append((2 * i,))
    return Endo(tuple(imgs))


def pc_to_type2(pc: PartialConjugation) -> Type2Spec:
    """``A = Y ∪ Y^-1 ∪ {x}``."""
    A = {pc.x}
    for y in pc.Y:
        A.add(2 * y)
        A.add(2 * y + 1)
    return Type2Spec(frozenset(A), pc.x)


def type2_to_pc(G: Graph, spec: Type2Spec) -> PartialConjugation | None:
    """Partial conjugation represented by ``(A, a)``, or ``None`` if it is not one.

    Letters on lk(v(a)) are stripped first since they do not change the element.
    """
    rest = spec.A - {spec.a}
    if frozenset(y ^ 1 for y in rest) != rest:
        return None
    i = spec.a >> 1
    mask = 0
    for y in rest:
        mask |= 1 << (y >> 1)
    mask &= ~G.link_mask(i)
    if not mask or mask >> i & 1:
        return None
    if not is_component_union(G, i, mask):
        return None
    return PartialConjugation(spec.a, frozenset(iter_bits(mask)))


def inner(G: Graph, g: Sequence[int]) -> Endo:
    """Conjugation ``v -> g^-1 v g``."""
    ginv = tuple(x ^ 1 for x in reversed(g))
    return Endo(tuple(normal_form(G, ginv + (2 * i,) + tuple(g)) for i in range(G.n)))


def inner_as_pc(G: Graph, y: int) -> PartialConjugation | None:
    """``ω_y`` written as ``c_{y, all components}``; ``None`` when v(y) is central."""
    full = 0
    for c in G.component_masks(y >> 1):
        full |= c
    if not full:
        return None
    return PartialConjugation(y, frozenset(iter_bits(full)))


def enumerate_S(G: Graph) -> list[PartialConjugation]:
    """Every partial conjugation, by letter then by (size, index tuple) of the chosen components."""
    out = []
    for x in letters_of(G):
        comps = G.component_masks(x >> 1)
        unions = []
        for r in range(1, len(comps) + 1):
            for combo in itertools.combinations(comps, r):
                m = 0
                for c in combo:
                    m |= c
                unions.append(m)
        unions.sort(key=lambda m: (bin(m).count("1"), tuple(iter_bits(m))))
        for m in unions:
            out.append(PartialConjugation(x, frozenset(iter_bits(m))))
    return out


def one_term_generators(G: Graph) -> list[PartialConjugation]:
    return [pc for pc in enumerate_S(G) if len(pc.Y) == 1]


# -- type 1 ------------------------------------------------------------------

def type1_endo(G: Graph, spec: Type1Spec) -> Endo:
    if spec.perm not in G.graph_automorphisms():
        raise NotAnAutomorphism(f"{spec.perm!r} is not a graph automorphism")
    return Endo(tuple((spec.letter_map(2 * i),) for i in range(G.n)))


def type1_group(G: Graph) -> list[Type1Spec]:
    """All type 1 Whitehead automorphisms: graph symmetries combined with inversions."""
    out = []
    for perm in G.graph_automorphisms():
        for r in range(G.n + 1):
            for inv in itertools.combinations(range(G.n), r):
                out.append(Type1Spec(perm, frozenset(inv)))
    return out


def conjugate_pc_by_type1(G: Graph, sigma: Type1Spec, pc: PartialConjugation) -> PartialConjugation:
    """The generator equal to ``σ ∘ c_{x,Y} ∘ σ^-1``, namely ``c_{σ(x), σ(Y)}``."""
    return PartialConjugation(sigma.letter_map(pc.x), frozenset(sigma.perm[y] for y in pc.Y))


# -- peaks -------------------------------------------------------------------

def act(G: Graph, f: Endo, W: ClassTuple) -> ClassTuple:
    return class_tuple(G, (apply(G, f, w) for w in W))


def is_peak(G: Graph, beta: Endo, alpha: Endo, W: ClassTuple) -> bool:
    """Whether ``βα`` is a peak with respect to ``W``."""
    base = tuple_length(W)
    mid = tuple_length(act(G, alpha, W))
    top = tuple_length(act(G, compose(G, beta, alpha), W))
    return mid >= base and mid >= top and (mid > base or mid > top)


def peak_indices(G: Graph, seq: Sequence[Endo], W: ClassTuple) -> list[int]:
    """1-based positions ``i`` of peaks of the factorization ``α_k ⋯ α_1`` (``seq[0]`` is ``α_1``)."""
    lengths = [tuple_length(W)]
    cur = W
    for f in seq:
        cur = act(G, f, cur)
        lengths.append(tuple_length(cur))
    peaks = []
    for i in range(1, len(seq)):
        before, mid, after = lengths[i - 1], lengths[i], lengths[i + 1]
        if mid >= before and mid >= after and (mid > before or mid > after):
            peaks.append(i)
    return peaks


def is_peak_reduced(G: Graph, seq: Sequence[Endo], W: ClassTuple) -> bool:
    return not peak_indices(G, seq, W)
