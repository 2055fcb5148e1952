"""Step words: Dyck and Motzkin paths, prefixes, and celibate marking.

Words are strings over `a` (ascend), `b` (descend) and up to two horizontal
colors `c`, `d`; uppercase `A`/`B` mark celibate steps.  An ascending step
is celibate when the path never comes back down to its start level; a
descending step is celibate when it is the first to reach its level.
Splitting a word at its marked steps is the Catalan factorization: every
factor between separators is a complete Motzkin word, and for a Motzkin
prefix the number of marked ascents equals its final height.

The two marking scans (right-to-left for ascents tracking a running
minimum, left-to-right for descents) follow the classic linear-time
routines; descents are marked first, and the ascent scan skips letters
already marked `B`, which is harmless because a descending celibate can
never close an ascent.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

# integer step codes used by the samplers and the animal stacker
CODE_A, CODE_B, CODE_C, CODE_D, CODE_MA, CODE_MB = 0, 1, 2, 3, 4, 5
_CODE_TO_CHAR = "abcdAB"
_CHAR_TO_CODE = {ch: i for i, ch in enumerate(_CODE_TO_CHAR)}


class WordError(ValueError):
    """Letters illegal for the declared number of horizontal colors."""


class PathKind(Enum):
    MOTZKIN_WORD = "motzkin_word"
    MOTZKIN_PREFIX = "motzkin_prefix"
    GENERAL = "general"


@dataclass(frozen=True)
class StepWord:
    """Word over {a, b, c, d, A, B}; r = number of horizontal colors (0..2)."""

    r: int
    letters: str

    def __post_init__(self) -> None:
        if self.r not in (0, 1, 2):
            raise WordError(f"r must be 0, 1 or 2, got {self.r}")
        allowed = "abAB" + "cd"[: self.r]
        for ch in self.letters:
            if ch not in allowed:
                raise WordError(f"letter {ch!r} illegal for r={self.r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.letters

    def unmarked(self) -> "StepWord":
        return StepWord(self.r, self.letters.lower())

    def is_marked(self) -> bool:
        return any(ch.isupper() for ch in self.letters)

    def codes(self) -> list[int]:
        return [_CHAR_TO_CODE[ch] for ch in self.letters]


def word_from_codes(r: int, codes: list[int] | tuple[int, ...]) -> StepWord:
    return StepWord(r, "".join(_CODE_TO_CHAR[c] for c in codes))


def heights(w: StepWord) -> list[int]:
    """Running height after each step (marks count as their letters)."""
    h = 0
    out = []
    for ch in w.letters:
        ch = ch.lower()
        if ch == "a":
            h += 1
        elif ch == "b":
            h -= 1
        out.append(h)
    return out


def classify(w: StepWord) -> tuple[PathKind, int]:
    """Kind of the word plus its final height (#ascends - #descends)."""
    hs = heights(w)
    height = hs[-1] if hs else 0
    if any(h < 0 for h in hs):
        return PathKind.GENERAL, height
    if height == 0:
        return PathKind.MOTZKIN_WORD, height
    return PathKind.MOTZKIN_PREFIX, height


def is_motzkin_word(w: StepWord) -> bool:
    return classify(w)[0] is PathKind.MOTZKIN_WORD


def is_motzkin_prefix(w: StepWord) -> bool:
    return classify(w)[0] in (PathKind.MOTZKIN_WORD, PathKind.MOTZKIN_PREFIX)


def mark_celibate_codes(codes: list[int], descents: bool = True) -> list[int]:
    """Mark celibate steps in a code list (0=a,1=b,...); returns a new list.

    Descending scan first (left to right, running minimum), then ascending
    (right to left); the ascending scan ignores codes already marked B.
    """
    out = list(codes)
    n = len(out)
    if descents:
        h = 0
        hmin = 0
        for i in range(n):
            c = out[i]
            if c == CODE_A:
                h += 1
            elif c == CODE_B:
                h -= 1
                if h < hmin:
                    hmin = h
                    out[i] = CODE_MB
    h = 0
    hmin = 0
    for i in range(n - 1, -1, -1):
        c = out[i]
        if c == CODE_B:
            h += 1
        elif c == CODE_A:
            h -= 1
            if h < hmin:
                hmin = h
                out[i] = CODE_MA
    return out


def mark_celibates(w: StepWord) -> StepWord:
    """Celibate-marked copy of w; existing marks are recomputed."""
    return word_from_codes(w.r, mark_celibate_codes(w.unmarked().codes()))


def catalan_factorize(
    w: StepWord,
) -> tuple[tuple[StepWord, ...], tuple[StepWord, ...]]:
    """Split at celibate steps: (U_0..U_k around descents, U_{k+1}.. after ascents).

    Every factor is a complete Motzkin word and interleaving the factors
    with the marked separators reconcatenates to the input.
    """
    marked = mark_celibates(w)
    pre: list[StepWord] = []
    post: list[StepWord] = []
    bucket: list[str] = []
    seen_ascent = False
    for ch in marked.letters:
        if ch == "B":
            pre.append(StepWord(w.r, "".join(bucket)))
            bucket = []
        elif ch == "A":
            (post if seen_ascent else pre).append(StepWord(w.r, "".join(bucket)))
            bucket = []
            seen_ascent = True
        else:
            bucket.append(ch)
    (post if seen_ascent else pre).append(StepWord(w.r, "".join(bucket)))
    return tuple(pre), tuple(post)


def count_paths(n: int, r: int, kind: str) -> int:
    """Number of r-colored Motzkin words or prefixes of length n.

    Dynamic program over (position, height); `kind` is "word" or "prefix".
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if r not in (0, 1, 2):
        raise WordError(f"r must be 0, 1 or 2, got {r}")
    if kind not in ("word", "prefix"):
        raise ValueError(f"kind must be 'word' or 'prefix', got {kind!r}")
    ways = [1] + [0] * n  # ways[h] = paths of current length ending at h
    for _ in range(n):
        nxt = [0] * (n + 1)
        for h, c in enumerate(ways):
            if c == 0:
                continue
            if h + 1 <= n:
                nxt[h + 1] += c
            if h - 1 >= 0:
                nxt[h - 1] += c
            if r:
                nxt[h] += r * c
        ways = nxt
    return ways[0] if kind == "word" else sum(ways)


def _split_motzkin(letters: str) -> tuple[str, str, str]:
    """Non-empty Motzkin word -> (head, U, V) with W = head U [b V]."""
    head = letters[0]
    if head in ("c", "d"):
        return head, letters[1:], ""
    # head == 'a': V starts at the first return to level zero
    h = 0
    for i, ch in enumerate(letters):
        if ch == "a":
            h += 1
        elif ch == "b":
            h -= 1
            if h == 0:
                return "a", letters[1:i], letters[i + 1 :]
    raise WordError("unbalanced word passed to _split_motzkin")


def bicolored_to_dyck(w: StepWord) -> StepWord:
    """Bijection: bicolored Motzkin words of length n-1 -> Dyck words of length 2n.

    Rules: eps -> ab, cU -> ab U', dU -> a U' b, aUbV -> a U' b V'.
    """
    if w.r != 2 or not is_motzkin_word(w):
        raise WordError("input must be a bicolored Motzkin word")

    def rec(letters: str) -> str:
        if not letters:
            return "ab"
        head, u, v = _split_motzkin(letters)
        if head == "c":
            return "ab" + rec(u)
        if head == "d":
            return "a" + rec(u) + "b"
        return "a" + rec(u) + "b" + rec(v)

    return StepWord(0, rec(w.unmarked().letters))


def bicolored_prefix_to_dyck_prefix(w: StepWord) -> StepWord:
    """Bicolored Motzkin prefixes of length n-1 -> Dyck prefixes of length 2n-1.

    Split the prefix at its celibate ascents, map each Motzkin factor to a
    Dyck word, drop that word's final descent, rejoin with the ascents.
    """
    if w.r != 2 or not is_motzkin_prefix(w):
        raise WordError("input must be a bicolored Motzkin prefix")
    _, factors = _factor_prefix(w)
    pieces = [bicolored_to_dyck(u).letters[:-1] for u in factors]
    return StepWord(0, "a".join(pieces))


def _factor_prefix(w: StepWord) -> tuple[int, tuple[StepWord, ...]]:
    """(height l, factors U_0..U_l) of a Motzkin prefix W = U_0 a U_1 a .. U_l."""
    pre, post = catalan_factorize(w)
    if len(pre) != 1:
        raise WordError("word has celibate descents; not a Motzkin prefix")
    factors = pre + post
    return len(factors) - 1, factors
