"""Heaps of pieces: the canonical layered form of traces.

A heap over a commutation graph is a sequence of non-empty stable layers
C_1..C_n where every cell of C_i (i>1) has a neighbour in C_{i-1}.  Words
map onto heaps by dropping each letter to height
1 + max{height of occupied neighbouring fibres}, and two words yield the
same heap exactly when they differ by exchanges of adjacent commuting
letters.  Heaps therefore *are* the elements of the partially commutative
monoid, and everything downstream (series, animals, sampling) works on
this canonical form.

Conventions: layers are tuples of ascending vertex indices; the canonical
word of a heap enumerates the layers bottom-up, each in ascending index
order.  Heap values are immutable and hashable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import Coloring, CommutationGraph, GraphError, parse_graph_literal, format_graph_literal

Cell = tuple[int, int]  # (vertex index, 1-based height)


class HeapError(ValueError):
    """Operation on incompatible or malformed heaps."""


@dataclass(frozen=True)
class Heap:
    """Canonical layered heap; empty tuple of layers = unit of the monoid."""

    graph: CommutationGraph
    layers: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    @property
    def height(self) -> int:
        return len(self.layers)

    def cells(self) -> list[Cell]:
        return [(v, i + 1) for i, layer in enumerate(self.layers) for v in layer]

    def fibre_heights(self) -> dict[int, int]:
        """Topmost occupied height per fibre (vertices absent if empty)."""
        tops: dict[int, int] = {}
        for i, layer in enumerate(self.layers):
            for v in layer:
                tops[v] = i + 1
        return tops

    def canonical_word(self) -> tuple[int, ...]:
        return tuple(v for layer in self.layers for v in layer)

    def is_pyramid(self) -> bool:
        """Non-empty with a singleton base layer."""
        return bool(self.layers) and len(self.layers[0]) == 1

    def validate(self) -> None:
        g = self.graph
        for i, layer in enumerate(self.layers):
            if not layer:
                raise HeapError(f"empty layer {i + 1}")
            if tuple(sorted(layer)) != layer:
                raise HeapError(f"layer {i + 1} not in ascending order")
            if not g.is_configuration(layer):
                raise HeapError(f"layer {i + 1} is not a stable set")
            if i > 0:
                below = g.neighborhood_of_set(self.layers[i - 1])
                if any(v not in below for v in layer):
                    raise HeapError(f"unsupported cell in layer {i + 1}")
        if heap_of_word(g, self.canonical_word()) != self:
            raise HeapError("layers are not the canonical form of their word")


def empty_heap(g: CommutationGraph) -> Heap:
    return Heap(g, ())


def push(h: Heap, v: int) -> Heap:
    """Drop one cell on fibre v: height = 1 + max over neighbouring fibres."""
    h.graph.check_vertex(v)
    tops = h.fibre_heights()
    height = 1 + max(
        (tops.get(u, 0) for u in h.graph.neighborhood(v)), default=0
    )
    layers = list(h.layers)
    if height > len(layers):
        layers.append((v,))
    else:
        layers[height - 1] = tuple(sorted(layers[height - 1] + (v,)))
    return Heap(h.graph, tuple(layers))


def heap_of_word(g: CommutationGraph, word: Iterable[int]) -> Heap:
    """Fold of push; the canonical heap of the trace of `word`.

    Single-pass implementation: only fibre tops are tracked while the
    layers are accumulated, so building a heap of n cells costs
    O(n * maxdeg) instead of n pushes at O(n) each.
    """
    tops: dict[int, int] = {}
    layers: list[list[int]] = []
    neigh = g.neighborhood
    for v in word:
        g.check_vertex(v)
        height = 1 + max((tops.get(u, 0) for u in neigh(v)), default=0)
        tops[v] = height
        if height > len(layers):
            layers.append([v])
        else:
            layers[height - 1].append(v)
    return Heap(g, tuple(tuple(sorted(layer)) for layer in layers))


def canonical_word(h: Heap) -> tuple[int, ...]:
    return h.canonical_word()


def product(h1: Heap, h2: Heap) -> Heap:
    """Monoid product: drop h2 on top of h1."""
    if h1.graph != h2.graph:
        raise HeapError("product of heaps over different graphs")
    return heap_of_word(h1.graph, h1.canonical_word() + h2.canonical_word())


def equivalent(g: CommutationGraph, u: Iterable[int], v: Iterable[int]) -> bool:
    """Trace equality: same heap iff equal modulo allowed commutations."""
    return heap_of_word(g, u) == heap_of_word(g, v)


def dual(h: Heap) -> Heap:
    """Heap of the reversed word (gravity flipped); an involution."""
    return heap_of_word(h.graph, tuple(reversed(h.canonical_word())))


def is_strict(h: Heap) -> bool:
    """No vertex occupies two layers with only commuting letters between.

    Runs the word criterion on the canonical word: for consecutive
    occurrences of a letter, some intervening letter must be a true
    neighbour (adjacent, not equal) of it.
    """
    word = h.canonical_word()
    g = h.graph
    last_seen: dict[int, int] = {}
    for i, v in enumerate(word):
        j = last_seen.get(v)
        if j is not None:
            between = word[j + 1 : i]
            if not any(u != v and g.are_neighbors(u, v) for u in between):
                return False
        last_seen[v] = i
    return True


def is_strict_by_layers(h: Heap) -> bool:
    """Layer form of strictness: consecutive layers share no vertex."""
    return all(
        not (set(a) & set(b)) for a, b in zip(h.layers, h.layers[1:])
    )


def strict_skeleton(h: Heap) -> tuple[Heap, dict[Cell, int]]:
    """Unique strict heap S and cell multiplicities expanding back to h.

    Greedy run-merging: each letter of the canonical word slides left past
    commuting runs and merges with an equal run when it reaches one.  Runs
    never reorder, so a mergeable pair can never survive: the result has
    the minimal number of runs and its support word is strict.
    """
    g = h.graph
    runs: list[list[int]] = []  # [vertex, multiplicity]
    for v in h.canonical_word():
        merged = False
        for run in reversed(runs):
            u = run[0]
            if u == v:
                run[1] += 1
                merged = True
                break
            if g.are_neighbors(u, v):
                break
        if not merged:
            runs.append([v, 1])
    skeleton = heap_of_word(g, tuple(v for v, _ in runs))
    # replay the skeleton word to attach each run to its landing cell
    mult: dict[Cell, int] = {}
    tops: dict[int, int] = {}
    for v, m in runs:
        height = 1 + max(
            (tops.get(u, 0) for u in g.neighborhood(v)), default=0
        )
        tops[v] = height
        mult[(v, height)] = m
    return skeleton, mult


def expand_skeleton(skeleton: Heap, mult: Mapping[Cell, int]) -> Heap:
    """Inverse of strict_skeleton: repeat each cell's letter mult times."""
    word: list[int] = []
    tops: dict[int, int] = {}
    g = skeleton.graph
    for v in skeleton.canonical_word():
        height = 1 + max(
            (tops.get(u, 0) for u in g.neighborhood(v)), default=0
        )
        tops[v] = height
        word.extend([v] * mult[(v, height)])
    return heap_of_word(g, word)


def _up_closure(h: Heap, c: Cell) -> set[Cell]:
    """Cells >= c for the order generated by: neighbours at lower height precede."""
    cells = h.cells()
    if c not in cells:
        raise HeapError(f"cell {c} not in heap")
    g = h.graph
    closure = {c}
    frontier = [c]
    while frontier:
        v, i = frontier.pop()
        for cell in cells:
            if cell in closure:
                continue
            u, j = cell
            if j > i and g.are_neighbors(u, v):
                closure.add(cell)
                frontier.append(cell)
    return closure


def _restack(h: Heap, cells: Iterable[Cell]) -> Heap:
    """Heap of the chosen cells read in canonical (height, vertex) order."""
    word = [v for v, _ in sorted(cells, key=lambda c: (c[1], c[0]))]
    return heap_of_word(h.graph, word)


def pyramid_split(h: Heap, c: Cell) -> tuple[Heap, Heap]:
    """Unique factorization h = X * P with P the pyramid generated by cell c."""
    closure = _up_closure(h, c)
    rest = [cell for cell in h.cells() if cell not in closure]
    pyramid = _restack(h, closure)
    return _restack(h, rest), pyramid


def is_pyramid(h: Heap) -> bool:
    return h.is_pyramid()


def enumerate_heaps(
    g: CommutationGraph,
    n: int,
    strict_only: bool = False,
    pyramids_only: bool = False,
    pyramid_base: int | None = None,
) -> list[Heap]:
    """All canonical heaps of size <= n, optionally strict and/or pyramids.

    Breadth-first closure under push over every vertex, deduplicated by
    canonical form.  `pyramids_only` keeps heaps with a singleton base
    (no empty pyramid, so the empty heap drops out); `pyramid_base`
    additionally pins the base vertex.  Deterministic output order:
    (size, canonical word).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if pyramid_base is not None:
        g.check_vertex(pyramid_base)
        pyramids_only = True
    levels: list[list[Heap]] = [[empty_heap(g)]]
    seen: set[tuple[tuple[int, ...], ...]] = {()}
    for _ in range(n):
        nxt: list[Heap] = []
        for h in levels[-1]:
            for v in range(g.vertex_count):
                h2 = push(h, v)
                if h2.layers not in seen:
                    seen.add(h2.layers)
                    nxt.append(h2)
        levels.append(sorted(nxt, key=lambda x: x.canonical_word()))
    out: list[Heap] = []
    for level in levels:
        for h in level:
            if strict_only and not is_strict(h):
                continue
            if pyramids_only:
                if not h.is_pyramid():
                    continue
                if pyramid_base is not None and h.layers[0][0] != pyramid_base:
                    continue
            out.append(h)
    return out


@dataclass(frozen=True)
class ColoredHeap:
    """Heap variant whose layer i may only hold vertices of color i (mod r).

    Layers may be empty; the flattened bottom-up reading is a representative
    word of the same trace as the standard heap of that word.
    """

    graph: CommutationGraph
    coloring: Coloring
    layers: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def reading(self) -> tuple[int, ...]:
        return tuple(v for layer in self.layers for v in layer)


def colored_layers(
    g: CommutationGraph, coloring: Coloring, word: Iterable[int]
) -> ColoredHeap:
    """Colored layering of a word.

    Each letter lands in the lowest layer of its own color strictly above
    every occupied cell on neighbouring fibres (own fibre included).
    Layer i (1-based) carries color ((i-1) mod r) + 1.
    """
    coloring.validate(g)
    r = coloring.r
    tops: dict[int, int] = {}
    layers: list[list[int]] = []
    for v in word:
        g.check_vertex(v)
        floor = max((tops.get(u, 0) for u in g.neighborhood(v)), default=0)
        color = coloring.colors[v]
        # smallest height > floor with matching color
        height = floor + 1 + (color - 1 - floor) % r
        tops[v] = height
        while len(layers) < height:
            layers.append([])
        layers[height - 1].append(v)
    return ColoredHeap(g, coloring, tuple(tuple(sorted(l)) for l in layers))


def heap_to_json(h: Heap) -> str:
    """Portable JSON form: graph literal plus label layers."""
    payload = {
        "graph": format_graph_literal(h.graph),
        "layers": [[h.graph.labels[v] for v in layer] for layer in h.layers],
    }
    return json.dumps(payload, separators=(",", ":"))


def heap_from_json(text: str) -> Heap:
    payload = json.loads(text)
    g = parse_graph_literal(payload["graph"])
    try:
        layers = tuple(
            tuple(sorted(g.index(lab) for lab in layer))
            for layer in payload["layers"]
        )
    except GraphError as exc:
        raise HeapError(str(exc)) from exc
    h = Heap(g, layers)
    h.validate()
    return h

