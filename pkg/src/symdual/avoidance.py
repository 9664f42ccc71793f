"""Avoidance up to symmetry.

Given two maps f, g from a finite index set N into subsets of [c], decide
whether some permutation sigma of N makes f(i) and g(sigma(i)) disjoint for
every i, and construct such a sigma when one exists.  Feasibility is a
Hall-type condition: for every order ideal J of 2^[c],

    sum_{T in J} |f^-1(T)|  <=  sum_{T in J} |g^-1(T^C)|.

The ideal J = 2^[c] holds with equality whenever the totals agree, and
J = {} is trivial, so only proper nonempty ideals are checked; those are
generated by nonempty antichains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Mapping, Optional, Sequence

from . import boolean_poset as bp
from .errors import CapError, InputError, TotalMismatchError

BRUTE_MAX_N = 8


@dataclass(frozen=True)
class FiberCounts:
    """Fiber sizes of a map N -> 2^[c], keyed by subset mask (empty set allowed)."""

    c: int
    fibers: tuple[tuple[int, int], ...]

    @classmethod
    def from_map(cls, c: int, fibers: Mapping[int, int]) -> "FiberCounts":
        bp.check_ambient(c)
        full = bp.full_mask(c)
        cleaned = {}
        for mask, k in fibers.items():
            if mask & ~full:
                raise InputError(f"mask {mask:#x} outside 2^[{c}]")
            if not isinstance(k, int) or k < 0:
                raise InputError("fiber counts must be nonnegative integers")
            if k:
                cleaned[mask] = cleaned.get(mask, 0) + k
        return cls(c, tuple(sorted(cleaned.items())))

    @classmethod
    def from_values(cls, c: int, values: Sequence[int]) -> "FiberCounts":
        counts: dict[int, int] = {}
        for v in values:
            counts[v] = counts.get(v, 0) + 1
        return cls.from_map(c, counts)

    @property
    def total(self) -> int:
        return sum(k for _, k in self.fibers)

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.fibers)


def _violating_ideal(c: int, k: Mapping[int, int], l: Mapping[int, int]):
    """First proper nonempty ideal J with sum_J k_T > sum_J l_{T^C}, or None."""
    for ideal in bp.proper_nonempty_ideals(c):
        lhs = sum(k.get(t, 0) for t in ideal)
        if lhs == 0:
            continue
        rhs = sum(l.get(bp.complement(t, c), 0) for t in ideal)
        if lhs > rhs:
            return ideal
    return None


def avoidance_feasible(k: FiberCounts, l: FiberCounts) -> bool:
    """True iff the Hall-type inequalities hold for every order ideal."""
    if k.c != l.c:
        raise InputError("fiber counts live over different ambient sizes")
    if k.total != l.total:
        raise TotalMismatchError(f"totals differ: {k.total} != {l.total}")
    return _violating_ideal(k.c, k.counts, l.counts) is None


def violating_order_ideal(k: FiberCounts, l: FiberCounts) -> Optional[frozenset]:
    """Certificate of infeasibility: an order ideal violating the inequality."""
    if k.total != l.total:
        raise TotalMismatchError(f"totals differ: {k.total} != {l.total}")
    return _violating_ideal(k.c, k.counts, l.counts)


def _check_witness(f, g, sigma):
    assert all(f[i] & g[sigma[i]] == 0 for i in range(len(f))), (
        "constructed permutation fails disjointness"
    )


def find_avoiding_permutation(
    f: Sequence[int], g: Sequence[int], c: int
) -> Optional[list[int]]:
    """Permutation sigma (as a list, i -> sigma[i]) with f[i] & g[sigma[i]] == 0, or None.

    Constructive: repeatedly pair a nonempty f-fiber with a compatible
    g-fiber; when removing the pair breaks feasibility, the tight ideal
    splits the instance into two independent halves.  Ties are broken by
    the standard subset order, then by first index.  Implemented with an
    explicit worklist so the recursion depth never exceeds |N|.
    """
    if len(f) != len(g):
        raise InputError("f and g must have the same length")
    bp.check_ambient(c)
    n = len(f)
    if _violating_ideal(c, _fiber_map(f), _fiber_map(g)) is not None:
        return None
    sigma: list[Optional[int]] = [None] * n
    stack: list[tuple[tuple[int, ...], tuple[int, ...]]] = [
        (tuple(range(n)), tuple(range(n)))
    ]
    while stack:
        fi, gi = stack.pop()
        if not fi:
            continue
        nonempty = [i for i in fi if f[i]]
        if not nonempty:
            for i, j in zip(fi, gi):
                sigma[i] = j
            continue
        # Largest nonempty f-value in the standard order, then first index.
        t0 = min((f[i] for i in nonempty), key=bp.subset_sort_key)
        i0 = next(i for i in fi if f[i] == t0)
        # g-values disjoint from t0 are exactly those whose complement contains t0.
        candidates = [j for j in gi if g[j] & t0 == 0]
        assert candidates, "feasible instance must admit a compatible g-fiber"
        s0c = min((g[j] for j in candidates), key=lambda m: bp.subset_sort_key(bp.complement(m, c)))
        j0 = next(j for j in candidates if g[j] == s0c)
        rest_f = tuple(i for i in fi if i != i0)
        rest_g = tuple(j for j in gi if j != j0)
        ideal = _violating_ideal(
            c, _fiber_map(f, rest_f), _fiber_map(g, rest_g)
        )
        if ideal is None:
            sigma[i0] = j0
            stack.append((rest_f, rest_g))
            continue
        # Tight split: f-indices inside the ideal pair with g-indices whose
        # complements land inside it; the two halves are independent.
        n1 = tuple(i for i in fi if f[i] in ideal)
        n2 = tuple(i for i in fi if f[i] not in ideal)
        m1 = tuple(j for j in gi if bp.complement(g[j], c) in ideal)
        m2 = tuple(j for j in gi if bp.complement(g[j], c) not in ideal)
        assert len(n1) == len(m1) and n1 and n2, "tight ideal must split properly"
        stack.append((n1, m1))
        stack.append((n2, m2))
    out = [j for j in sigma if j is not None]
    assert len(out) == n
    _check_witness(f, g, out)
    return out


def _fiber_map(values: Sequence[int], indices=None) -> dict[int, int]:
    counts: dict[int, int] = {}
    for i in indices if indices is not None else range(len(values)):
        v = values[i]
        counts[v] = counts.get(v, 0) + 1
    return counts


def brute_force_avoidance(
    f: Sequence[int], g: Sequence[int]
) -> Optional[list[int]]:
    """Exhaustive search over all |N|! permutations; test oracle."""
    if len(f) != len(g):
        raise InputError("f and g must have the same length")
    n = len(f)
    if n > BRUTE_MAX_N:
        raise CapError(f"brute-force avoidance capped at N<={BRUTE_MAX_N}")
    for perm in permutations(range(n)):
        if all(f[i] & g[perm[i]] == 0 for i in range(n)):
            return list(perm)
    return None
