"""Sum-constrained polyhedra, orthant decompositions and slice counts.

A SumPolyhedron in R^k is cut out by lower bounds sum_{i in T} x_i >= a_T
over nonempty T subseteq [k] and optional upper bounds sum_{i in T} x_i <= b_T
over T in U.  Its integer points decompose into finitely many disjoint
"orthants": integral apices with some coordinates fixed and the rest only
bounded below.  Counting the points of a fixed coordinate sum n is then a
stars-and-bars sum per orthant.

Missing lower keys mean "no constraint", except that every coordinate must
carry its singleton bound: without one the polyhedron is unbounded below in
that coordinate and has no finite orthant decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from . import boolean_poset as bp
from .errors import CapError, InputError

MAX_DIMENSION = 8


@dataclass(frozen=True)
class SumPolyhedron:
    """Coordinate-sum constraints over R^k; keys are coordinate-set masks."""

    k: int
    lower: tuple[tuple[int, int], ...]
    upper: tuple[tuple[int, int], ...]

    @classmethod
    def from_maps(
        cls,
        k: int,
        lower: Mapping[frozenset | tuple | int, int],
        upper: Mapping[frozenset | tuple | int, int] | None = None,
    ) -> "SumPolyhedron":
        bp.check_ambient(k)
        low = {}
        for key, bound in lower.items():
            mask = _as_mask(key, k)
            low[mask] = max(low.get(mask, bound), bound)
        up = {}
        for key, bound in (upper or {}).items():
            mask = _as_mask(key, k)
            if mask == 0:
                raise InputError("upper bounds need a nonempty coordinate set")
            up[mask] = min(up.get(mask, bound), bound)
        return cls(k, tuple(sorted(low.items())), tuple(sorted(up.items())))

    @property
    def lower_map(self) -> dict[int, int]:
        return dict(self.lower)

    @property
    def upper_map(self) -> dict[int, int]:
        return dict(self.upper)

    def contains(self, point: Sequence[int]) -> bool:
        if len(point) != self.k:
            raise InputError(f"point has {len(point)} coordinates, expected {self.k}")
        for mask, bound in self.lower:
            if _coord_sum(point, mask) < bound:
                return False
        for mask, bound in self.upper:
            if _coord_sum(point, mask) > bound:
                return False
        return True


def _as_mask(key, k: int) -> int:
    if isinstance(key, int):
        mask = key
        if mask & ~bp.full_mask(k):
            raise InputError(f"coordinate mask {mask:#x} outside [{k}]")
        return mask
    return bp.mask_of(key, k)


def _coord_sum(point: Sequence[int], mask: int) -> int:
    total = 0
    i = 0
    while mask:
        if mask & 1:
            total += point[i]
        mask >>= 1
        i += 1
    return total


@dataclass(frozen=True)
class Orthant:
    """Pointed integral cone: fixed coordinates plus lower-bounded free ones."""

    k: int
    fixed: tuple[tuple[int, int], ...]
    bounded: tuple[tuple[int, int], ...]

    def __post_init__(self):
        coords = [c for c, _ in self.fixed] + [c for c, _ in self.bounded]
        if sorted(coords) != list(range(1, self.k + 1)):
            raise InputError("fixed and bounded coordinates must partition [k]")

    @property
    def apex(self) -> tuple[int, ...]:
        values = dict(self.fixed)
        values.update(dict(self.bounded))
        return tuple(values[i] for i in range(1, self.k + 1))

    def contains(self, point: Sequence[int]) -> bool:
        return all(point[c - 1] == v for c, v in self.fixed) and all(
            point[c - 1] >= v for c, v in self.bounded
        )


def _require_singleton_bounds(lower: Mapping[int, int], coords: Iterable[int]) -> None:
    for j in coords:
        if (1 << (j - 1)) not in lower:
            raise InputError(
                f"coordinate {j} has no singleton lower bound; "
                "the polyhedron is unbounded below and has no orthant decomposition"
            )


def _split_free(coords: tuple[int, ...], lower: dict[frozenset, int]):
    """Decompose {sum_{i in T} x_i >= a_T over coords} into disjoint orthants.

    Splits on the last coordinate: above the threshold where every coupled
    constraint is implied by the singleton bounds, the coordinate detaches
    as a plain x_j >= theta factor; each integer level below the threshold
    restricts to a lower-dimensional polyhedron of the same class.
    Constraints are keyed by frozensets of original coordinate ids.
    """
    if not coords:
        return [({}, {})]
    j = coords[-1]
    rest = coords[:-1]
    a_j = lower[frozenset({j})]
    theta = a_j
    for key, bound in lower.items():
        if j in key and len(key) >= 2:
            slack = bound - sum(lower[frozenset({i})] for i in key - {j})
            theta = max(theta, slack)
    tail = {key: bound for key, bound in lower.items() if j not in key}
    out = []
    for fixed, bounded in _split_free(rest, tail):
        out.append((fixed, {**bounded, j: theta}))
    for level in range(a_j, theta):
        sliced = dict(tail)
        for key, bound in lower.items():
            if j in key and len(key) >= 2:
                reduced = key - {j}
                cut = bound - level
                if reduced in sliced:
                    sliced[reduced] = max(sliced[reduced], cut)
                else:
                    sliced[reduced] = cut
        for fixed, bounded in _split_free(rest, sliced):
            out.append(({**fixed, j: level}, bounded))
    return out


def cone_decompose(p: SumPolyhedron, max_k: int = MAX_DIMENSION) -> list[Orthant]:
    """Disjoint orthants whose integer points are exactly those of p.

    Returns the empty list iff p has no integer points.
    """
    if p.k > max_k:
        raise CapError(f"dimension capped at k<={max_k}, got k={p.k}")
    lower = p.lower_map
    if lower.get(0, 0) > 0:
        return []
    lower.pop(0, None)
    upper = p.upper_map
    _require_singleton_bounds(lower, range(1, p.k + 1))
    lower_sets = {frozenset(bp.elements(mask)): bound for mask, bound in lower.items()}

    if not upper:
        return _finish(p.k, _split_free(tuple(range(1, p.k + 1)), lower_sets))

    fixed_coords = sorted(set().union(*[bp.elements(mask) for mask in upper]))
    free_coords = tuple(j for j in range(1, p.k + 1) if j not in fixed_coords)
    lows = {j: lower[1 << (j - 1)] for j in fixed_coords}
    highs = {}
    for j in fixed_coords:
        tops = []
        for mask, bound in upper.items():
            if mask >> (j - 1) & 1:
                others = sum(lows[i] for i in bp.elements(mask) if i != j)
                tops.append(bound - others)
        highs[j] = min(tops)
    if any(highs[j] < lows[j] for j in fixed_coords):
        return []
    fixed_set = set(fixed_coords)
    out = []
    for values in product(*(range(lows[j], highs[j] + 1) for j in fixed_coords)):
        w = dict(zip(fixed_coords, values))
        if not _witness_ok(w, lower_sets, upper, fixed_set):
            continue
        reduced: dict[frozenset, int] = {}
        for key, bound in lower_sets.items():
            inside = key & fixed_set
            outside = key - fixed_set
            if not outside:
                continue
            cut = bound - sum(w[i] for i in inside)
            if outside in reduced:
                reduced[outside] = max(reduced[outside], cut)
            else:
                reduced[outside] = cut
        for fixed, bounded in _split_free(free_coords, reduced):
            out.append(
                Orthant(
                    p.k,
                    tuple(sorted({**fixed, **w}.items())),
                    tuple(sorted(bounded.items())),
                )
            )
    return out


def _witness_ok(w, lower_sets, upper, fixed_set) -> bool:
    for key, bound in lower_sets.items():
        if key <= fixed_set and sum(w[i] for i in key) < bound:
            return False
    for mask, bound in upper.items():
        if sum(w[i] for i in bp.elements(mask)) > bound:
            return False
    return True


def _finish(k, pieces) -> list[Orthant]:
    return [
        Orthant(k, tuple(sorted(fixed.items())), tuple(sorted(bounded.items())))
        for fixed, bounded in pieces
    ]


def count_on_slice(orthants: Iterable[Orthant], n: int) -> int:
    """Integer points with coordinate sum n across the orthants, exactly.

    An orthant with m free coordinates bounded by c_i and fixed part summing
    to a contributes C(n - a - sum c_i + m - 1, m - 1) when that top entry is
    nonnegative; a fully fixed orthant contributes 1 iff its sum is n.
    """
    total = 0
    for orth in orthants:
        fixed_sum = sum(v for _, v in orth.fixed)
        m = len(orth.bounded)
        if m == 0:
            total += 1 if fixed_sum == n else 0
            continue
        t = n - fixed_sum - sum(v for _, v in orth.bounded)
        if t >= 0:
            total += math.comb(t + m - 1, m - 1)
    return total


def enumerate_slice(
    p: SumPolyhedron, n: int, box_limit: int = 10**6
) -> list[tuple[int, ...]]:
    """All integer points of p with coordinate sum n, by direct filtering."""
    lower = p.lower_map
    if lower.get(0, 0) > 0:
        return []
    lower.pop(0, None)
    _require_singleton_bounds(lower, range(1, p.k + 1))
    lows = [lower[1 << j] for j in range(p.k)]
    span = n - sum(lows)
    if span < 0:
        return []
    if span + 1 > box_limit:
        raise CapError(f"slice box exceeds {box_limit} per coordinate")
    out = []
    point = [0] * p.k

    def rec(idx: int, remaining: int):
        if idx == p.k - 1:
            point[idx] = remaining
            if remaining >= lows[idx] and p.contains(point):
                out.append(tuple(point))
            return
        tail_low = sum(lows[idx + 1 :])
        for v in range(lows[idx], remaining - tail_low + 1):
            point[idx] = v
            rec(idx + 1, remaining - v)

    rec(0, n)
    out.sort()
    return out


def slice_polynomial_threshold(orthants: Iterable[Orthant]) -> int:
    """Smallest n from which count_on_slice agrees with a single polynomial."""
    worst = 0
    for orth in orthants:
        base = sum(v for _, v in orth.fixed) + sum(v for _, v in orth.bounded)
        m = len(orth.bounded)
        worst = max(worst, base - m + 1)
    return worst


# -- JSON ------------------------------------------------------------------

def polyhedron_to_json(p: SumPolyhedron) -> dict:
    return {
        "k": p.k,
        "lower": [
            {"support": bp.subset_to_json(mask), "bound": bound}
            for mask, bound in p.lower
        ],
        "upper": [
            {"support": bp.subset_to_json(mask), "bound": bound}
            for mask, bound in p.upper
        ],
    }


def polyhedron_from_json(doc) -> SumPolyhedron:
    if not isinstance(doc, dict) or "k" not in doc:
        raise InputError("polyhedron document needs 'k'")
    k = doc["k"]
    bp.check_ambient(k)

    def read(entries):
        out = {}
        for entry in entries or []:
            if not isinstance(entry, dict) or "support" not in entry or "bound" not in entry:
                raise InputError(f"bad constraint entry {entry!r}")
            out[tuple(entry["support"])] = entry["bound"]
        return out

    return SumPolyhedron.from_maps(k, read(doc.get("lower")), read(doc.get("upper")))
