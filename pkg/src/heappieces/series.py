"""Degree-truncated formal series over the trace monoid, exact coefficients.

A TraceSeries maps canonical heaps of size <= N to rationals; the product
is the truncated convolution over monoid factorizations, realized here by
multiplying key pairs (sizes adding to <= N) in the heap monoid.  The
classic identities live at this level: the alternating configuration
series inverts the heap series, and the pyramid series is the right
logarithmic derivative of the heap series.

All arithmetic is exact (fractions.Fraction); mixing truncation degrees
or graphs raises instead of silently re-truncating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .graphs import CommutationGraph
from .heaps import Heap, empty_heap, enumerate_heaps, product

Q = Fraction


class SeriesError(ValueError):
    """Incompatible operands or non-invertible series."""


@dataclass(frozen=True)
class TraceSeries:
    graph: CommutationGraph
    degree: int
    terms: Mapping[Heap, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "terms",
            {h: Q(c) for h, c in self.terms.items() if c != 0},
        )
        for h in self.terms:
            if h.graph != self.graph:
                raise SeriesError("term over a different graph")
            if h.size > self.degree:
                raise SeriesError("term beyond truncation degree")

    def coefficient(self, h: Heap) -> Fraction:
        return self.terms.get(h, Q(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TraceSeries):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.degree == other.degree
            and dict(self.terms) == dict(other.terms)
        )

    def __add__(self, other: "TraceSeries") -> "TraceSeries":
        _check_compat(self, other)
        acc = dict(self.terms)
        for h, c in other.terms.items():
            acc[h] = acc.get(h, Q(0)) + c
        return TraceSeries(self.graph, self.degree, acc)

    def __sub__(self, other: "TraceSeries") -> "TraceSeries":
        return self + other.scale(Q(-1))

    def scale(self, c: Fraction | int) -> "TraceSeries":
        c = Q(c)
        return TraceSeries(
            self.graph, self.degree, {h: c * x for h, x in self.terms.items()}
        )

    def __mul__(self, other: "TraceSeries") -> "TraceSeries":
        return series_mul(self, other)


def _check_compat(s1: TraceSeries, s2: TraceSeries) -> None:
    if s1.graph != s2.graph:
        raise SeriesError("series over different graphs")
    if s1.degree != s2.degree:
        raise SeriesError(
            f"mixed truncation degrees ({s1.degree} vs {s2.degree})"
        )


def unit_series(g: CommutationGraph, degree: int) -> TraceSeries:
    return TraceSeries(g, degree, {empty_heap(g): Q(1)})


def zero_series(g: CommutationGraph, degree: int) -> TraceSeries:
    return TraceSeries(g, degree, {})


def series_mul(s1: TraceSeries, s2: TraceSeries) -> TraceSeries:
    """Truncated product; enumerates key pairs instead of factorizing keys."""
    _check_compat(s1, s2)
    n = s1.degree
    acc: dict[Heap, Fraction] = {}
    by_size: dict[int, list[tuple[Heap, Fraction]]] = {}
    for h, c in s2.terms.items():
        by_size.setdefault(h.size, []).append((h, c))
    for h1, c1 in s1.terms.items():
        room = n - h1.size
        for size2, items in by_size.items():
            if size2 > room:
                continue
            for h2, c2 in items:
                key = product(h1, h2)
                acc[key] = acc.get(key, Q(0)) + c1 * c2
    return TraceSeries(s1.graph, n, acc)


def configurations_series(
    g: CommutationGraph, degree: int, signed: bool
) -> TraceSeries:
    """Stable sets as one-layer heaps; signed gives coefficient (-1)^{|C|}."""
    terms: dict[Heap, Fraction] = {}
    for conf in g.configurations(degree):
        heap = Heap(g, (tuple(conf),) if conf else ())
        terms[heap] = Q(-1) ** len(conf) if signed else Q(1)
    return TraceSeries(g, degree, terms)


def heaps_series(g: CommutationGraph, degree: int, signed: bool) -> TraceSeries:
    terms = {
        h: (Q(-1) ** h.size if signed else Q(1))
        for h in enumerate_heaps(g, degree)
    }
    return TraceSeries(g, degree, terms)


def strict_heaps_series(
    g: CommutationGraph, degree: int, signed: bool
) -> TraceSeries:
    terms = {
        h: (Q(-1) ** h.size if signed else Q(1))
        for h in enumerate_heaps(g, degree, strict_only=True)
    }
    return TraceSeries(g, degree, terms)


def pyramids_series(
    g: CommutationGraph,
    degree: int,
    signed: bool = False,
    base: int | None = None,
) -> TraceSeries:
    """Pyramid series (no constant term); `base` pins the base vertex."""
    terms = {
        h: (Q(-1) ** h.size if signed else Q(1))
        for h in enumerate_heaps(g, degree, pyramids_only=True, pyramid_base=base)
    }
    return TraceSeries(g, degree, terms)


def derive(s: TraceSeries) -> TraceSeries:
    """Size derivative: coefficient of each heap multiplied by its size."""
    return TraceSeries(
        s.graph, s.degree, {h: c * h.size for h, c in s.terms.items()}
    )


def invert(s: TraceSeries) -> TraceSeries:
    """Truncated two-sided inverse; requires constant coefficient +-1."""
    c0 = s.coefficient(empty_heap(s.graph))
    if c0 not in (Q(1), Q(-1)):
        raise SeriesError(f"constant term {c0} is not invertible")
    # s = c0 (1 + U) with U of positive degree: inverse = c0 * sum (-U)^k
    u = (s - unit_series(s.graph, s.degree).scale(c0)).scale(c0)
    acc = unit_series(s.graph, s.degree)
    power = unit_series(s.graph, s.degree)
    for _ in range(s.degree):
        power = series_mul(power, u).scale(Q(-1))
        if not power.terms:
            break
        acc = acc + power
    return acc.scale(c0)


@dataclass(frozen=True)
class UnivariateSeries:
    """Truncated power series in one variable with exact coefficients."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Q(c) for c in self.coefficients)
        if len(coeffs) != self.degree + 1:
            raise SeriesError("coefficient count must be degree + 1")
        object.__setattr__(self, "coefficients", coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def __add__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        self._check(other)
        return UnivariateSeries(
            self.degree,
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __sub__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        self._check(other)
        return UnivariateSeries(
            self.degree,
            tuple(a - b for a, b in zip(self.coefficients, other.coefficients)),
        )

    def __mul__(self, other: "UnivariateSeries") -> "UnivariateSeries":
        self._check(other)
        n = self.degree
        out = [Q(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coefficients[j]
                if b != 0:
                    out[i + j] += a * b
        return UnivariateSeries(n, tuple(out))

    def scale(self, c: Fraction | int) -> "UnivariateSeries":
        c = Q(c)
        return UnivariateSeries(
            self.degree, tuple(c * a for a in self.coefficients)
        )

    def t_derivative(self) -> "UnivariateSeries":
        """t d/dt: coefficient n multiplied by n."""
        return UnivariateSeries(
            self.degree,
            tuple(n * c for n, c in enumerate(self.coefficients)),
        )

    def invert(self) -> "UnivariateSeries":
        if self.coefficients[0] == 0:
            raise SeriesError("constant term zero is not invertible")
        n = self.degree
        c0 = self.coefficients[0]
        out = [Q(0)] * (n + 1)
        out[0] = 1 / c0
        for k in range(1, n + 1):
            s = Q(0)
            for j in range(1, k + 1):
                s += self.coefficients[j] * out[k - j]
            out[k] = -s / c0
        return UnivariateSeries(n, tuple(out))

    def compose(self, inner: "UnivariateSeries") -> "UnivariateSeries":
        """self(inner(t)); inner must have zero constant term."""
        self._check(inner)
        if inner.coefficients[0] != 0:
            raise SeriesError("composition needs zero constant term")
        n = self.degree
        acc = constant(n, self.coefficients[0])
        power = one(n)
        for k in range(1, n + 1):
            power = power * inner
            if self.coefficients[k] != 0:
                acc = acc + power.scale(self.coefficients[k])
        return acc

    def negate_variable(self) -> "UnivariateSeries":
        """t -> -t."""
        return UnivariateSeries(
            self.degree,
            tuple(c if n % 2 == 0 else -c for n, c in enumerate(self.coefficients)),
        )

    def _check(self, other: "UnivariateSeries") -> None:
        if self.degree != other.degree:
            raise SeriesError(
                f"mixed truncation degrees ({self.degree} vs {other.degree})"
            )

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coefficients)


def constant(degree: int, c: Fraction | int = 0) -> UnivariateSeries:
    return UnivariateSeries(degree, (Q(c),) + (Q(0),) * degree)


def one(degree: int) -> UnivariateSeries:
    return constant(degree, 1)


def from_coefficient_fn(
    degree: int, fn: Callable[[int], Fraction | int]
) -> UnivariateSeries:
    return UnivariateSeries(degree, tuple(Q(fn(n)) for n in range(degree + 1)))


def from_counts(degree: int, counts: Iterable[int]) -> UnivariateSeries:
    coeffs = [Q(c) for c in counts][: degree + 1]
    coeffs += [Q(0)] * (degree + 1 - len(coeffs))
    return UnivariateSeries(degree, tuple(coeffs))


def project(s: TraceSeries) -> UnivariateSeries:
    """Replace every letter by t: coefficient of t^n sums size-n terms."""
    out = [Q(0)] * (s.degree + 1)
    for h, c in s.terms.items():
        out[h.size] += c
    return UnivariateSeries(s.degree, tuple(out))


def geometric_substitution(degree: int, alternating: bool) -> UnivariateSeries:
    """t/(1-t) = t + t^2 + ... or t/(1+t) = t - t^2 + t^3 - ..."""
    coeffs = [Q(0)] + [
        Q(-1) ** (n - 1) if alternating else Q(1) for n in range(1, degree + 1)
    ]
    return UnivariateSeries(degree, tuple(coeffs))


def univariate_substitute(s: UnivariateSeries, mode: str) -> UnivariateSeries:
    """Compose with t/(1-t) (mode 't/(1-t)') or t/(1+t) (mode 't/(1+t)').

    The first turns a strict-object counting series into the general one;
    the second inverts it.
    """
    if mode == "t/(1-t)":
        inner = geometric_substitution(s.degree, alternating=False)
    elif mode == "t/(1+t)":
        inner = geometric_substitution(s.degree, alternating=True)
    else:
        raise SeriesError(f"unknown substitution mode {mode!r}")
    return s.compose(inner)


def dump_trace_series(s: TraceSeries) -> str:
    """One `coefficient<TAB>word` line per term, sorted by (size, word).

    Single-character labels concatenate; longer labels are space-separated
    so words stay unambiguous.
    """
    sep = "" if all(len(lab) == 1 for lab in s.graph.labels) else " "
    rows = []
    for h, c in s.terms.items():
        word = sep.join(s.graph.labels[v] for v in h.canonical_word())
        rows.append((h.size, word, c))
    rows.sort(key=lambda r: (r[0], r[1]))
    return "\n".join(f"{c}\t{word if word else '1'}" for _, word, c in rows)
