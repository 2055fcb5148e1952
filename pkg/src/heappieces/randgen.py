"""Seeded uniform random generation of words, Motzkin prefixes, and animals.

The prefix sampler is rejection with full restart: letters are drawn one
at a time and the whole attempt is discarded the moment the running
height dips below zero.  Restarting preserves uniformity over prefixes of
the target length, and the expected number of letter draws is about 2n;
`nb_tirages` counts every draw, discarded ones included.

Randomness comes from one named, versioned generator (numpy PCG64).  A
RandomSource derives an independent PCG64 stream per sampling call from
(seed, call-index), so results are reproducible across platforms and
independent of internal draw batching (numpy's bounded-integer rejection
consumes its bit stream per element, so block draws equal repeated scalar
draws).  Parallel batches split deterministically via (seed, task-index).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .animals import Animal, _stack_codes, lattice_colors
from .paths import CODE_A, CODE_B, CODE_MA, CODE_MB, StepWord, word_from_codes

# step height contribution per letter code (a, b, c, d)
_DELTA = np.array([1, -1, 0, 0], dtype=np.int64)


@dataclass(frozen=True)
class GenerationReport:
    """Sampled word plus the number of letters drawn to obtain it."""

    word: StepWord
    nb_tirages: int


class RandomSource:
    """Deterministic, splittable source of letter draws.

    Every sampling operation consumes one child stream derived from
    (seed, operation-index); two sources with equal seeds replay the same
    sequence of operations identically.
    """

    def __init__(self, seed: int):
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self._op_index = 0

    def _operation_rng(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(0, self._op_index))
        self._op_index += 1
        return np.random.Generator(np.random.PCG64(ss))

    def split(self, task_index: int) -> "RandomSource":
        """Independent child source for parallel batch task `task_index`."""
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(1, int(task_index)))
        child_seed = int(ss.generate_state(1, dtype=np.uint64)[0])
        return RandomSource(child_seed)


class _LetterStream:
    """Chunk-buffered stream of uniform letter codes in [0, alphabet)."""

    def __init__(self, rng: np.random.Generator, alphabet: int, chunk: int):
        self._rng = rng
        self._alphabet = alphabet
        self._chunk = max(64, chunk)
        self._buf = np.empty(0, dtype=np.int64)
        self._pos = 0

    def peek(self, want: int) -> np.ndarray:
        """Up to `want` buffered letters (at least one), without consuming."""
        avail = len(self._buf) - self._pos
        if avail == 0:
            self._buf = self._rng.integers(
                0, self._alphabet, size=max(self._chunk, 1), dtype=np.int64
            )
            self._pos = 0
            avail = len(self._buf)
        return self._buf[self._pos : self._pos + min(want, avail)]

    def consume(self, count: int) -> None:
        self._pos += count


def random_word(n: int, r: int, source: RandomSource) -> StepWord:
    """Uniform word of length n over the (r+2)-letter alphabet; n draws."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if r not in (1, 2):
        raise ValueError("r must be 1 or 2")
    rng = source._operation_rng()
    codes = rng.integers(0, r + 2, size=n, dtype=np.int64)
    return word_from_codes(r, codes.tolist())


def _sample_prefix_codes(
    n: int, r: int, rng: np.random.Generator
) -> tuple[np.ndarray, int]:
    """Restart sampler returning (codes of a uniform prefix, total draws)."""
    stream = _LetterStream(rng, r + 2, chunk=min(max(256, 2 * n), 1 << 16))
    nb = 0
    blocks: list[np.ndarray] = []
    got = 0
    h = 0
    while got < n:
        sub = stream.peek(n - got)
        cum = np.cumsum(_DELTA[sub]) + h
        neg = np.nonzero(cum < 0)[0]
        if neg.size:
            k = int(neg[0])
            nb += k + 1
            stream.consume(k + 1)
            blocks.clear()
            got = 0
            h = 0
        else:
            m = len(sub)
            nb += m
            stream.consume(m)
            blocks.append(sub.copy())
            got += m
            h = int(cum[-1])
    codes = np.concatenate(blocks) if blocks else np.empty(0, dtype=np.int64)
    return codes, nb


def random_motzkin_prefix(n: int, r: int, source: RandomSource) -> GenerationReport:
    """Uniform Motzkin prefix of length n by rejection with full restart."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if r not in (1, 2):
        raise ValueError("r must be 1 or 2")
    codes, nb = _sample_prefix_codes(n, r, source._operation_rng())
    return GenerationReport(word_from_codes(r, codes.tolist()), nb)


def _mark_codes_np(codes: np.ndarray, descents: bool) -> np.ndarray:
    """Vectorized celibate marking, matching paths.mark_celibate_codes."""
    out = codes.copy()
    if len(out) == 0:
        return out
    if descents:
        h = np.cumsum(_DELTA[out])
        prior = np.minimum(np.concatenate(([0], np.minimum.accumulate(h)[:-1])), 0)
        out[(out == CODE_B) & (h < prior)] = CODE_MB
    rev = out[::-1]
    delta = np.where(rev == CODE_B, 1, 0) - np.where(rev == CODE_A, 1, 0)
    h = np.cumsum(delta)
    prior = np.minimum(np.concatenate(([0], np.minimum.accumulate(h)[:-1])), 0)
    rev_marks = np.nonzero((rev == CODE_A) & (h < prior))[0]
    out[len(out) - 1 - rev_marks] = CODE_MA
    return out


def random_animal(
    n: int, lattice: str, source_kind: str, source: RandomSource
) -> tuple[Animal, GenerationReport]:
    """Uniform animal of size n: sample a word, mark celibates, stack equerres.

    Point sources draw a Motzkin prefix (linear expected time); compact
    sources keep an arbitrary word (exactly n-1 draws).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    r = lattice_colors(lattice)
    rng = source._operation_rng()
    if source_kind == "compact":
        codes = rng.integers(0, r + 2, size=n - 1, dtype=np.int64)
        nb = n - 1
        marked = _mark_codes_np(codes, descents=True)
    elif source_kind == "point":
        codes, nb = _sample_prefix_codes(n - 1, r, rng)
        marked = _mark_codes_np(codes, descents=False)
    else:
        raise ValueError(f"unknown source {source_kind!r}")
    max_right = (2 * (n - 1) + 2) if source_kind == "compact" else n
    cells = _stack_codes(
        marked.tolist(), n, lattice == "triangular", max_right=max_right
    )
    animal = Animal(lattice, source_kind, tuple(cells))
    report = GenerationReport(word_from_codes(r, codes.tolist()), nb)
    return animal, report
