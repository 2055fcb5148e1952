"""Directed site animals on the square and triangular lattices, as heaps.

An animal is stored in heap coordinates: cells (fiber, height) over the
integer chain, the source cell at (0, 0).  Supports are the directed
steps read downwards: a non-ground cell rests on (fiber+-1, height-1), or
on (fiber, height-2) on the triangular lattice only.  The familiar
lattice picture is a rotation of this one (East/North steps on the square
lattice, East/North/North-East on the triangular) and is applied only
when rendering.

Words map to animals by stacking equerres: reading the celibate-marked
word left to right, `a` opens a sub-equerre one fiber left and queues a
sibling on the current fiber, `c` moves one fiber left, `d` stays (same
fiber, two levels up), `b` closes back to the queued sibling, and marked
`A`/`B` jump to a fresh base one/two fibers right of the previous base.
Height bookkeeping is the usual heap drop with the same-fiber double
bump.  The loop below is the iterative form of that recursion, so word
length is bounded by memory, not the call stack.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .paths import (
    CODE_A,
    CODE_B,
    CODE_C,
    CODE_MA,
    CODE_MB,
    StepWord,
    is_motzkin_prefix,
    mark_celibate_codes,
)

LATTICES = ("square", "triangular")
SOURCES = ("point", "compact")

# oracle growth bounds keeping brute-force enumeration under a minute
ORACLE_BOUNDS = {"square": 12, "triangular": 10}


class AnimalError(ValueError):
    """Malformed animal or incompatible word/lattice combination."""


def lattice_colors(lattice: str) -> int:
    """Horizontal colors of the word alphabet: 1 on square, 2 on triangular."""
    if lattice not in LATTICES:
        raise AnimalError(f"unknown lattice {lattice!r}")
    return 1 if lattice == "square" else 2


@dataclass(frozen=True, eq=False)
class Animal:
    """Directed animal; `cells` kept in construction order, equality by set."""

    lattice: str
    source: str
    cells: tuple[tuple[int, int], ...]
    # cell set built lazily: constructing a million-cell animal should not
    # pay for hashing it
    _cell_set: frozenset[tuple[int, int]] | None = field(
        default=None, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if self.lattice not in LATTICES:
            raise AnimalError(f"unknown lattice {self.lattice!r}")
        if self.source not in SOURCES:
            raise AnimalError(f"unknown source {self.source!r}")

    @property
    def size(self) -> int:
        return len(self.cells)

    def cell_set(self) -> frozenset[tuple[int, int]]:
        if self._cell_set is None:
            object.__setattr__(self, "_cell_set", frozenset(self.cells))
        return self._cell_set  # type: ignore[return-value]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Animal):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.source == other.source
            and self.cell_set() == other.cell_set()
        )

    def __hash__(self) -> int:
        return hash((self.lattice, self.source, self.cell_set()))

    def ground_fibers(self) -> list[int]:
        return sorted(x for x, y in self.cells if y == 0)

    def lattice_cells(self) -> list[tuple[int, int]]:
        """Rotated view: ((x+y)/2, (y-x)/2); directed steps become E/N(/NE)."""
        return [((x + y) // 2, (y - x) // 2) for x, y in self.cells]

    def validate(self) -> None:
        cells = self.cell_set()
        if len(cells) != len(self.cells):
            raise AnimalError("duplicate cell")
        if not cells:
            raise AnimalError("empty animal")
        triangular = self.lattice == "triangular"
        ground = sorted((x, y) for x, y in cells if y == 0)
        if self.source == "point":
            if ground != [(0, 0)]:
                raise AnimalError("point source requires exactly cell (0,0) on the ground")
        else:
            want = [(2 * i, 0) for i in range(len(ground))]
            if ground != want or not ground:
                raise AnimalError("compact source requires ground cells at fibers 0,2,...")
        for x, y in cells:
            if (x + y) % 2 != 0:
                raise AnimalError(f"cell ({x},{y}) off the even sublattice")
            if y == 0:
                continue
            supported = (x - 1, y - 1) in cells or (x + 1, y - 1) in cells
            if not supported and triangular:
                supported = (x, y - 2) in cells
            if not supported:
                raise AnimalError(f"unsupported cell ({x},{y})")


def _stack_codes(
    codes: list[int], n_cells: int, triangular: bool, max_right: int
) -> list[tuple[int, int]]:
    """Drop one cell per letter (plus the final one) per the equerre recursion.

    `codes` is the celibate-marked word (length n_cells - 1).  `max_right`
    bounds the rightmost base fiber so the height table can be a flat list.
    """
    off = n_cells + 1
    fibre = [-1] * (n_cells + max_right + 3 + off)
    cells: list[tuple[int, int]] = []
    append = cells.append
    pending: list[int] = []
    f = 0
    base = 0
    for code in codes + [-1]:  # -1 = end-of-word terminator
        j = f + off
        left = fibre[j - 1]
        mid = fibre[j]
        right = fibre[j + 1]
        m = left if left >= mid else mid
        if right > m:
            m = right
        h = m + 2 if (triangular and mid == m and left < mid) else m + 1
        fibre[j] = h
        append((f, h))
        if code == CODE_A:
            pending.append(f)
            f -= 1
        elif code == CODE_C:
            f -= 1
        elif code == CODE_B:
            f = pending.pop()
        elif code == CODE_MA:
            base += 1
            f = base
        elif code == CODE_MB:
            base += 2
            f = base
        # CODE_D and the terminator leave f unchanged
    return cells


def _check_word_lattice(w: StepWord, lattice: str) -> int:
    r = lattice_colors(lattice)
    if w.r != r:
        raise AnimalError(
            f"word has r={w.r} but lattice {lattice!r} needs r={r}"
        )
    return r


def beta(w: StepWord, lattice: str) -> Animal:
    """Bijection Motzkin prefix of length n-1 -> point-source animal of size n."""
    _check_word_lattice(w, lattice)
    word = w.unmarked()
    if not is_motzkin_prefix(word):
        raise AnimalError("beta needs a Motzkin prefix")
    codes = mark_celibate_codes(word.codes(), descents=False)
    cells = _stack_codes(
        codes, len(codes) + 1, lattice == "triangular", max_right=len(codes) + 1
    )
    return Animal(lattice, "point", tuple(cells))


def compact_animal(w: StepWord, lattice: str) -> Animal:
    """Any word of length n-1 -> compact-source animal of size n (a bijection)."""
    _check_word_lattice(w, lattice)
    codes = mark_celibate_codes(w.unmarked().codes(), descents=True)
    cells = _stack_codes(
        codes,
        len(codes) + 1,
        lattice == "triangular",
        max_right=2 * len(codes) + 2,
    )
    return Animal(lattice, "compact", tuple(cells))


def half_width(an: Animal) -> int:
    """Largest occupied fiber index of a point-source animal."""
    if an.source != "point":
        raise AnimalError("half-width is defined for point sources only")
    return max(x for x, _ in an.cells)


def empirical_width(an: Animal) -> int:
    """max fiber - min fiber; equals twice the half-width only on average."""
    xs = [x for x, _ in an.cells]
    return max(xs) - min(xs)


def _fiber_columns(cells: frozenset[tuple[int, int]]) -> dict[int, list[int]]:
    cols: dict[int, list[int]] = {}
    for x, y in cells:
        cols.setdefault(x, []).append(y)
    for ys in cols.values():
        ys.sort()
    return cols


def _up_closure_cells(
    cells: frozenset[tuple[int, int]], seed: tuple[int, int]
) -> frozenset[tuple[int, int]]:
    """Cells reachable from seed by repeatedly moving to a higher cell at
    fiber distance <= 1 (the dependence order of the trace)."""
    cols = _fiber_columns(cells)
    closure = {seed}
    frontier = [seed]
    while frontier:
        x, y = frontier.pop()
        for fx in (x - 1, x, x + 1):
            for fy in cols.get(fx, ()):
                if fy > y and (fx, fy) not in closure:
                    closure.add((fx, fy))
                    frontier.append((fx, fy))
    return frozenset(closure)


def _lowest_on_fiber(
    cells: frozenset[tuple[int, int]], fiber: int, above: int | None = None
) -> tuple[int, int] | None:
    best = None
    for x, y in cells:
        if x == fiber and (above is None or y > above):
            if best is None or y < best[1]:
                best = (x, y)
    return best


def beta_inverse(an: Animal) -> StepWord:
    """The unique Motzkin prefix with beta(beta_inverse(an)) == an.

    Peels the pyramid into equerres (split at the lowest cell one fiber
    right of the base, iterated) and decodes each equerre by the reverse
    of the stacking grammar, using dependence-order closures to carve out
    sub-pyramids.  Everything runs on explicit work stacks.
    """
    if an.source != "point":
        raise AnimalError("beta_inverse is defined for point sources only")
    an.validate()
    r = lattice_colors(an.lattice)
    letters: list[str] = []

    # pyramid -> equerre chain: P = L (1 + P'), the split cell being the
    # lowest on the fiber right of the base
    pyramid = an.cell_set()
    base = (0, 0)
    equerres: list[tuple[frozenset[tuple[int, int]], tuple[int, int]]] = []
    while True:
        split = _lowest_on_fiber(pyramid, base[0] + 1)
        if split is None:
            equerres.append((pyramid, base))
            break
        q = _up_closure_cells(pyramid, split)
        equerres.append((pyramid - q, base))
        pyramid = q
        base = split

    for k, (cells, base) in enumerate(equerres):
        if k:
            letters.append("a")
        _decode_equerre(cells, base, r, letters)
    word = StepWord(r, "".join(letters))
    if not is_motzkin_prefix(word):
        raise AnimalError("decoded word is not a Motzkin prefix")
    return word


def _decode_equerre(
    cells: frozenset[tuple[int, int]],
    base: tuple[int, int],
    r: int,
    letters: list[str],
) -> None:
    """Append the Motzkin word of one equerre to `letters` (iteratively)."""
    stack: list[tuple[str, object, object]] = [("equerre", cells, base)]
    while stack:
        kind, payload, extra = stack.pop()
        if kind == "lit":
            letters.append(payload)  # type: ignore[arg-type]
            continue
        cells = payload  # type: ignore[assignment]
        base = extra  # type: ignore[assignment]
        if len(cells) == 1:
            continue
        rest = cells - {base}
        over = _lowest_on_fiber(rest, base[0])
        if over is not None:
            closure = _up_closure_cells(cells, over)
            m_cells = rest - closure
            if not m_cells:
                # everything hangs above the same fiber: same-fiber stack
                if r < 2:
                    raise AnimalError("same-fiber stacking on a square-lattice animal")
                stack.append(("equerre", closure, over))
                stack.append(("lit", "d", None))
                continue
            m_base = _lowest_on_fiber(m_cells, base[0] - 1)
            if m_base is None:
                raise AnimalError("disconnected equerre")
            # L = x M N: emit a M b N (reverse order onto the stack)
            stack.append(("equerre", closure, over))
            stack.append(("lit", "b", None))
            stack.append(("equerre", m_cells, m_base))
            stack.append(("lit", "a", None))
        else:
            m_base = _lowest_on_fiber(rest, base[0] - 1)
            if m_base is None:
                raise AnimalError("disconnected equerre")
            stack.append(("equerre", rest, m_base))
            stack.append(("lit", "c", None))


def enumerate_animals(n: int, lattice: str, source: str = "point") -> list[Animal]:
    """Brute-force oracle: grow animals cell by cell from the source.

    Independent of the word bijection: candidate cells are the directed
    out-steps of occupied cells, deduplicated per size.  Bounded by
    ORACLE_BOUNDS to stay desk-scale.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    bound = ORACLE_BOUNDS[lattice]
    if n > bound:
        raise AnimalError(f"oracle bound is {bound} for {lattice}")
    if source not in SOURCES:
        raise AnimalError(f"unknown source {source!r}")
    triangular = lattice == "triangular"

    seeds: list[frozenset[tuple[int, int]]] = []
    if source == "point":
        seeds.append(frozenset({(0, 0)}))
    else:
        for k in range(n):
            seeds.append(frozenset((2 * i, 0) for i in range(k + 1)))

    current: set[frozenset[tuple[int, int]]] = {
        s for s in seeds if len(s) <= n
    }
    final: set[frozenset[tuple[int, int]]] = {s for s in current if len(s) == n}
    while current:
        nxt: set[frozenset[tuple[int, int]]] = set()
        for cells in current:
            if len(cells) == n:
                continue
            grown = set()
            for x, y in cells:
                grown.add((x - 1, y + 1))
                grown.add((x + 1, y + 1))
                if triangular:
                    grown.add((x, y + 2))
            for cand in grown - set(cells):
                bigger = cells | {cand}
                if len(bigger) == n:
                    final.add(bigger)
                else:
                    nxt.add(bigger)
        current = nxt
    out = [
        Animal(lattice, source, tuple(sorted(cells, key=lambda c: (c[1], c[0]))))
        for cells in final
    ]
    out.sort(key=lambda a: tuple(sorted(a.cell_set())))
    return out


def _trinomial_endpoint(length: int, height: int, r: int) -> int:
    """Unconstrained walks of given length over {+1, -1, 0 x r} ending at height."""
    if height < 0:
        height = -height
    total = 0
    for down in range((length - height) // 2 + 1):
        up = down + height
        flat = length - up - down
        if flat < 0:
            continue
        ways = (
            math.factorial(length)
            // (math.factorial(up) * math.factorial(down) * math.factorial(flat))
        )
        total += ways * r**flat if r else ways * (1 if flat == 0 else 0)
    return total


def prefix_count_closed(length: int, r: int) -> int:
    """Non-negative walks of given length, by reflection: N(l,0) + N(l,1)."""
    return _trinomial_endpoint(length, 0, r) + _trinomial_endpoint(length, 1, r)


def motzkin_number(n: int) -> int:
    """Closed form via Catalans: M_n = sum C(n, 2k) Cat(k)."""
    return sum(
        math.comb(n, 2 * k) * math.comb(2 * k, k) // (k + 1)
        for k in range(n // 2 + 1)
    )


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def animal_count(n: int, lattice: str, source: str = "point") -> int:
    """Closed-form animal counts (the cross-check against the path DP).

    point: square = Motzkin-prefix count (trinomial reflection formula),
    triangular = C(2n,n)/2; equerre: Motzkin / Catalan numbers;
    compact: 3^(n-1) / 4^(n-1).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r = lattice_colors(lattice)
    if source == "point":
        if lattice == "triangular":
            return math.comb(2 * n, n) // 2
        return prefix_count_closed(n - 1, r)
    if source == "compact":
        return (r + 2) ** (n - 1)
    if source == "equerre":
        # size-n equerres are words of length n-1: Motzkin number M_{n-1}
        # on the square lattice, Catalan number C_n on the triangular one
        return motzkin_number(n - 1) if lattice == "square" else catalan_number(n)
    raise AnimalError(f"unknown source {source!r}")


def average_width(n: int, lattice: str) -> Fraction:
    """Exact mean width 2 (r+2)^{n-1} / a_n - 2 of point-source animals."""
    r = lattice_colors(lattice)
    a_n = animal_count(n, lattice, "point")
    return Fraction(2 * (r + 2) ** (n - 1), a_n) - 2


def animal_to_json(an: Animal) -> str:
    payload = {
        "lattice": an.lattice,
        "source": an.source,
        "cells": [[x, y] for x, y in an.cells],
    }
    return json.dumps(payload, separators=(",", ":"))


def animal_from_json(text: str) -> Animal:
    payload = json.loads(text)
    try:
        cells = tuple((int(x), int(y)) for x, y in payload["cells"])
        an = Animal(payload["lattice"], payload["source"], cells)
    except (KeyError, TypeError, ValueError) as exc:
        raise AnimalError(f"bad animal JSON: {exc}") from exc
    an.validate()
    return an


def all_words(length: int, r: int) -> list[StepWord]:
    """Every unmarked word of the given length (oracle helper)."""
    alphabet = "ab" + "cd"[:r]
    words = [""]
    for _ in range(length):
        words = [w + ch for w in words for ch in alphabet]
    return [StepWord(r, w) for w in words]


def all_prefixes(length: int, r: int) -> list[StepWord]:
    """Every Motzkin prefix of the given length."""
    return [w for w in all_words(length, r) if is_motzkin_prefix(w)]
