"""Quivers, path words, and monomial bound quiver algebras.

Vertices are 1-based everywhere.  A path word lists its arrows in
traversal order: the path ``(a1, a2)`` starts at the source of ``a1``
and ends at the target of ``a2``.  Multiplication ``p * q`` is "follow
p, then q" and is defined when ``p`` ends where ``q`` starts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .linalg import GF

DEFAULT_FIELD_P = 101


@dataclass(frozen=True)
class PathWord:
    """A directed path: start vertex plus an arrow index sequence (empty = e_i)."""

    start: int
    arrows: tuple[int, ...]
    end: int

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sort_key(self) -> tuple:
        return (len(self.arrows), self.start, self.arrows)

    def __repr__(self) -> str:
        if not self.arrows:
            return f"e_{self.start}"
        return f"path({self.start}->{self.end}, arrows={list(self.arrows)})"


class Quiver:
    """A finite directed graph with an indexed, order-stable arrow list."""

    def __init__(self, vertex_count: int, arrows: list[tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError(f"vertex count must be >= 1, got {vertex_count}")
        self.vertex_count = vertex_count
        self.arrows = tuple((int(s), int(t)) for s, t in arrows)
        for idx, (s, t) in enumerate(self.arrows):
            if not (1 <= s <= vertex_count and 1 <= t <= vertex_count):
                raise ValueError(f"arrow {idx} endpoints ({s},{t}) outside [1,{vertex_count}]")
        self.arrows_from = {v: [] for v in range(1, vertex_count + 1)}
        self.arrows_into = {v: [] for v in range(1, vertex_count + 1)}
        for idx, (s, t) in enumerate(self.arrows):
            self.arrows_from[s].append(idx)
            self.arrows_into[t].append(idx)

    def source(self, a: int) -> int:
        return self.arrows[a][0]

    def target(self, a: int) -> int:
        return self.arrows[a][1]

    def trivial_path(self, v: int) -> PathWord:
        if not (1 <= v <= self.vertex_count):
            raise ValueError(f"vertex {v} outside [1,{self.vertex_count}]")
        return PathWord(v, (), v)

    def extend(self, p: PathWord, a: int) -> PathWord:
        if self.source(a) != p.end:
            raise ValueError(f"arrow {a} does not compose with path ending at {p.end}")
        return PathWord(p.start, p.arrows + (a,), self.target(a))

    def make_path(self, start: int, arrow_seq) -> PathWord:
        p = self.trivial_path(start)
        for a in arrow_seq:
            p = self.extend(p, a)
        return p


def circular_quiver(t: int) -> Quiver:
    """The cyclic quiver on t vertices with arrows i -> i+1 (mod t)."""
    if t < 2:
        raise ValueError(f"circular quiver needs t >= 2, got {t}")
    return Quiver(t, [(i, i % t + 1) for i in range(1, t + 1)])


class ZeroProduct(enum.Enum):
    """The two zero outcomes of multiplying basis paths."""

    TRUNCATED = "truncated"  # composable, but the composite hits the nilpotency bound
    NON_COMPOSABLE = "non-composable"  # endpoints do not match


class BoundQuiverAlgebra:
    """A path algebra modulo a monomial ideal, with an explicit path basis.

    The basis consists of all paths of length < nilpotency that avoid
    every forbidden path as a contiguous subword.  Only the circular
    Nakayama constructor below is exercised by the full test surface;
    other monomial truncations are accepted on a best-effort basis.
    """

    def __init__(
        self,
        quiver: Quiver,
        nilpotency: int,
        field: GF | None = None,
        forbidden: tuple[PathWord, ...] = (),
    ):
        if nilpotency < 1:
            raise ValueError(f"nilpotency degree must be >= 1, got {nilpotency}")
        self.quiver = quiver
        self.nilpotency = nilpotency
        self.field = field if field is not None else GF(DEFAULT_FIELD_P)
        self._forbidden_words = frozenset(p.arrows for p in forbidden)
        self.path_basis = tuple(sorted(self._enumerate_basis(), key=PathWord.sort_key))
        self._basis_index = {p: i for i, p in enumerate(self.path_basis)}
        # Circular Nakayama metadata; set by nakayama_algebra().
        self.is_selfinjective_nakayama = False
        self.is_symmetric = False
        self.t: int | None = None
        self.n: int | None = None
        self.r: int | None = None
        self._path_by_start_length: dict[tuple[int, int], PathWord] = {}

    def _enumerate_basis(self):
        frontier = [self.quiver.trivial_path(v) for v in range(1, self.quiver.vertex_count + 1)]
        basis = list(frontier)
        for _ in range(1, self.nilpotency):
            nxt = []
            for p in frontier:
                for a in self.quiver.arrows_from[p.end]:
                    q = self.quiver.extend(p, a)
                    if self._allowed(q):
                        nxt.append(q)
            basis.extend(nxt)
            frontier = nxt
        return basis

    def _allowed(self, p: PathWord) -> bool:
        if not self._forbidden_words:
            return True
        w = p.arrows
        for f in self._forbidden_words:
            k = len(f)
            if any(w[i : i + k] == f for i in range(len(w) - k + 1)):
                return False
        return True

    @property
    def dimension(self) -> int:
        return len(self.path_basis)

    def is_basis_path(self, p: PathWord) -> bool:
        return p in self._basis_index

    def paths_from(self, v: int) -> list[PathWord]:
        return [p for p in self.path_basis if p.start == v]

    def relation_generators(self) -> list[PathWord]:
        """Forbidden paths plus every composable word of length = nilpotency."""
        gens = []
        frontier = [self.quiver.trivial_path(v) for v in range(1, self.quiver.vertex_count + 1)]
        for _ in range(self.nilpotency):
            frontier = [
                self.quiver.extend(p, a)
                for p in frontier
                for a in self.quiver.arrows_from[p.end]
                if self._allowed(p)
            ]
        gens.extend(frontier)
        return gens

    def multiply(self, p: PathWord, q: PathWord) -> PathWord | ZeroProduct:
        """Product of two basis paths: a basis path, or a zero indicator."""
        if not self.is_basis_path(p):
            raise ValueError(f"{p} is not a basis path of this algebra")
        if not self.is_basis_path(q):
            raise ValueError(f"{q} is not a basis path of this algebra")
        if p.end != q.start:
            return ZeroProduct.NON_COMPOSABLE
        word = PathWord(p.start, p.arrows + q.arrows, q.end)
        if word.length >= self.nilpotency or not self._allowed(word):
            return ZeroProduct.TRUNCATED
        return word

    def unique_path(self, v: int, length: int) -> PathWord:
        """The single basis path of the given length starting at v (Nakayama only)."""
        if not self.is_selfinjective_nakayama:
            raise ValueError("unique_path is only defined for circular Nakayama algebras")
        key = (v, length)
        hit = self._path_by_start_length.get(key)
        if hit is None:
            matches = [p for p in self.path_basis if p.start == v and p.length == length]
            if len(matches) != 1:
                raise ValueError(f"expected one path of length {length} from {v}, found {len(matches)}")
            hit = self._path_by_start_length[key] = matches[0]
        return hit

    def wrap(self, v: int) -> int:
        """Reduce a vertex label modulo t into [1, t]."""
        return (v - 1) % self.quiver.vertex_count + 1

    def __repr__(self) -> str:
        if self.is_selfinjective_nakayama:
            return f"NakayamaAlgebra(t={self.t}, n={self.n}, p={self.field.p})"
        return (
            f"BoundQuiverAlgebra(vertices={self.quiver.vertex_count}, "
            f"nilpotency={self.nilpotency}, dim={self.dimension})"
        )


def nakayama_algebra(t: int, n: int, field: GF | None = None) -> BoundQuiverAlgebra:
    """The circular Nakayama algebra on t vertices with radical length n+1.

    The path basis is every path of length 0..n, so the dimension is
    t*(n+1).  The algebra is selfinjective; it is symmetric exactly when
    n is divisible by t.
    """
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    alg = BoundQuiverAlgebra(circular_quiver(t), nilpotency=n + 1, field=field)
    alg.is_selfinjective_nakayama = True
    alg.t = t
    alg.n = n
    alg.r = n % t
    alg.is_symmetric = alg.r == 0
    return alg
