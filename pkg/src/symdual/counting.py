"""Counting functions of the ambient width n, with exact polynomial fitting.

All arithmetic is exact: counts are Python integers, polynomial coefficients
are Fractions.  Counts are produced by enumeration; the eventually-polynomial
behavior in n is recovered by Newton forward-difference interpolation on a
stable suffix of consecutive samples, validated by exact prediction of every
remaining sample.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from . import boolean_poset as bp
from . import dual_core
from .errors import FitError, InputError, WidthError
from .orbit_monomials import GeneratorSystem, TypeVector


@dataclass(frozen=True)
class RationalPolynomial:
    """Exact polynomial, coefficients ascending by degree."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Fraction]) -> "RationalPolynomial":
        cs = [Fraction(x) for x in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def __call__(self, n: int) -> Fraction:
        total = Fraction(0)
        power = Fraction(1)
        for coef in self.coeffs:
            total += coef * power
            power *= n
        return total

    def to_json(self, stable_from: int | None = None) -> dict:
        doc = {"coeffs": [str(coef) for coef in self.coeffs]}
        if stable_from is not None:
            doc["stable_from"] = stable_from
        return doc

    @classmethod
    def from_json(cls, doc) -> "RationalPolynomial":
        if not isinstance(doc, dict) or "coeffs" not in doc:
            raise InputError("polynomial document needs 'coeffs'")
        return cls.from_coeffs(Fraction(s) for s in doc["coeffs"])


@dataclass
class CountSeries:
    """Exact counts at consecutive widths; stable_from marks the polynomial onset."""

    samples: dict[int, int] = field(default_factory=dict)
    stable_from: int | None = None

    def add(self, n: int, value: int) -> None:
        self.samples[n] = value

    def ns(self) -> list[int]:
        return sorted(self.samples)

    def check_consecutive(self) -> None:
        ns = self.ns()
        if any(b - a != 1 for a, b in zip(ns, ns[1:])):
            raise InputError("series samples must sit at consecutive n")


def dual_orbit_count(system: GeneratorSystem, n: int, max_c=None) -> int:
    """Orbits minimally generating the dual at width n.

    Equivalently the number of orbit classes of primary components of the
    original ideal at that width.
    """
    return len(dual_core.min_gens(system, n, max_c=max_c))


def count_series(system: GeneratorSystem, ns: Sequence[int], max_c=None) -> CountSeries:
    series = CountSeries()
    for n in ns:
        series.add(n, dual_orbit_count(system, n, max_c=max_c))
    return series


def _newton_poly(points: Sequence[tuple[int, int]]) -> RationalPolynomial:
    """Interpolating polynomial through consecutive-integer points."""
    xs = [x for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    # Forward differences at the left end.
    diffs = [ys]
    while len(diffs[-1]) > 1:
        prev = diffs[-1]
        diffs.append([b - a for a, b in zip(prev, prev[1:])])
    deltas = [row[0] for row in diffs]
    x0 = xs[0]
    coeffs = [Fraction(0)] * len(points)
    # Accumulate delta_k / k! * (x - x0)(x - x0 - 1)...(x - x0 - k + 1).
    basis = [Fraction(1)]
    for k, delta in enumerate(deltas):
        scale = delta / math.factorial(k)
        for i, b in enumerate(basis):
            coeffs[i] += scale * b
        root = x0 + k
        new = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            new[i] -= b * root
            new[i + 1] += b
        basis = new
    return RationalPolynomial.from_coeffs(coeffs)


def fit_polynomial(series: CountSeries, max_degree: int) -> RationalPolynomial:
    """Exact fit through the last max_degree + 1 samples, validated backwards.

    Earlier samples must be predicted exactly; the first n from which every
    prediction holds becomes series.stable_from.  Fails when fewer than
    max_degree + 2 samples remain in the stable window.
    """
    if max_degree < 0:
        raise InputError("max_degree must be nonnegative")
    series.check_consecutive()
    ns = series.ns()
    if len(ns) < max_degree + 2:
        raise FitError(
            f"need at least {max_degree + 2} consecutive samples, have {len(ns)}"
        )
    tail = ns[-(max_degree + 1):]
    poly = _newton_poly([(n, series.samples[n]) for n in tail])
    stable = tail[0]
    for n in reversed(ns[: -(max_degree + 1)]):
        if poly(n) == series.samples[n]:
            stable = n
        else:
            break
    if ns[-1] - stable + 1 < max_degree + 2:
        raise FitError(
            "no stable window: the tail polynomial fails on every long enough suffix"
        )
    series.stable_from = stable
    return poly


def default_degree_bound(c: int) -> int:
    """Largest antichain size in 2^[c], minus one."""
    return math.comb(c, c // 2) - 1


def min_degree_series(
    system: GeneratorSystem, ns: Sequence[int], max_c=None
) -> tuple[int, int, tuple[int, int]]:
    """Fit d(n) = a*n + b for the least generator degree on a stable suffix.

    Returns (a, b, (n_first, n_last)) for the longest suffix of the sampled
    range with constant first differences; the slope must land in [0, c].
    """
    ns = sorted(ns)
    if any(b - a != 1 for a, b in zip(ns, ns[1:])):
        raise InputError("min-degree series needs consecutive n")
    degrees = {
        n: dual_core.min_degree_gens(system, n, max_c=max_c)[0] for n in ns
    }
    if len(ns) < 3:
        raise FitError("need at least 3 samples to detect a stable slope")
    slope = degrees[ns[-1]] - degrees[ns[-2]]
    start = ns[-2]
    for i in range(len(ns) - 3, -1, -1):
        if degrees[ns[i + 1]] - degrees[ns[i]] == slope:
            start = ns[i]
        else:
            break
    if ns[-1] - start < 2:
        raise FitError("no stable window of constant first differences")
    assert 0 <= slope <= system.c, f"min-degree slope {slope} outside [0, c]"
    intercept = degrees[start] - slope * start
    return slope, intercept, (start, ns[-1])


def facet_orbits_by_dimension(
    system: GeneratorSystem, n: int, max_c=None
) -> dict[int, int]:
    """Histogram of dual generator orbits by facet dimension c*n - 1 - degree."""
    if n < system.m:
        raise WidthError(f"width n={n} below the system's stability width {system.m}")
    hist: dict[int, int] = {}
    for tv in dual_core.min_gens(system, n, max_c=max_c):
        dim = system.c * n - 1 - tv.degree
        hist[dim] = hist.get(dim, 0) + 1
    return hist


def type_vectors_of_degree(
    c: int, degree: int, max_weight: int | None = None
) -> Iterator[TypeVector]:
    """All type vectors over [c] of the given total degree (weight capped)."""
    bp.check_ambient(c)
    supports = bp.sort_standard(range(1, 1 << c))
    sizes = [m.bit_count() for m in supports]
    counts: dict[int, int] = {}

    def rec(idx: int, remaining: int, weight: int) -> Iterator[TypeVector]:
        if remaining == 0:
            yield TypeVector.from_counts(c, dict(counts))
            return
        if idx == len(supports):
            return
        size = sizes[idx]
        top = remaining // size
        if max_weight is not None:
            top = min(top, max_weight - weight)
        for k in range(top, -1, -1):
            if k:
                counts[supports[idx]] = k
            elif supports[idx] in counts:
                del counts[supports[idx]]
            yield from rec(idx + 1, remaining - k * size, weight + k)
        counts.pop(supports[idx], None)

    yield from rec(0, degree, 0)


def face_orbit_count(system: GeneratorSystem, j: int, n: int) -> int:
    """Orbits of j-dimensional faces of the complex at width n.

    A squarefree orbit of degree j + 1 is a face iff no generator divides it
    up to symmetry.
    """
    if j < 0:
        raise InputError("face dimension j must be nonnegative")
    if n < system.m:
        raise WidthError(f"width n={n} below the system's stability width {system.m}")
    count = 0
    for tv in type_vectors_of_degree(system.c, j + 1, max_weight=n):
        if not any(
            dual_core.divides_up_to_sym(a, tv, n) for a in system.generators
        ):
            count += 1
    return count


def skeleton_system(system: GeneratorSystem, j: int) -> GeneratorSystem:
    """Generators of the j-skeleton's ideal: add every orbit of degree j + 2."""
    if j < 0:
        raise InputError("skeleton dimension j must be nonnegative")
    extra = list(type_vectors_of_degree(system.c, j + 2))
    seen = set(system.generators)
    merged = list(system.generators)
    for tv in sorted(extra, key=TypeVector.sort_key):
        if tv not in seen:
            merged.append(tv)
            seen.add(tv)
    return GeneratorSystem.make(system.c, merged)
