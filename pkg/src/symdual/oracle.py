"""Brute-force ground truth at desk scale.

Monomials in the c x n variable grid are single machine-word bitmasks,
column j (0-based) occupying bits [j*c, (j+1)*c).  Duals, minimal
generators, f-vectors and divisibility are computed from first principles
by full-space scans and permutation search; every symmetric computation in
the fast pipeline is cross-checked against these.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

from . import boolean_poset as bp
from .errors import CapError, WidthError
from .orbit_monomials import GeneratorSystem, TypeVector

MAX_BITS_EXPAND = 22
MAX_BITS_SCAN = 20
MAX_BITS_INVOLUTION = 18
MAX_N_PERMUTATIONS = 7


def _check_bits(c: int, n: int, cap: int) -> None:
    if c * n > cap:
        raise CapError(f"instance c*n={c * n} exceeds the brute-force cap {cap}")


def columns_of_mask(mask: int, c: int, n: int) -> list[int]:
    full = bp.full_mask(c)
    return [(mask >> (j * c)) & full for j in range(n)]


def mask_of_columns(cols: Sequence[int], c: int) -> int:
    mask = 0
    for j, col in enumerate(cols):
        mask |= col << (j * c)
    return mask


def type_vector_of_mask(mask: int, c: int, n: int) -> TypeVector:
    counts: dict[int, int] = {}
    for col in columns_of_mask(mask, c, n):
        if col:
            counts[col] = counts.get(col, 0) + 1
    return TypeVector.from_counts(c, counts)


def expand_orbit(tv: TypeVector, n: int) -> frozenset:
    """All distinct column arrangements of the orbit, as monomial masks."""
    if n < tv.weight:
        raise WidthError(f"width n={n} below weight {tv.weight}")
    _check_bits(tv.c, n, MAX_BITS_EXPAND)
    multiset: dict[int, int] = dict(tv.items)
    if n > tv.weight:
        multiset[0] = n - tv.weight
    c = tv.c
    arrangement: list[int] = []
    out: set[int] = set()

    def rec():
        if len(arrangement) == n:
            out.add(mask_of_columns(arrangement, c))
            return
        for col in sorted(multiset):
            if multiset[col]:
                multiset[col] -= 1
                arrangement.append(col)
                rec()
                arrangement.pop()
                multiset[col] += 1

    rec()
    return frozenset(out)


def brute_in_dual(gens_expanded: Iterable[int], b: int) -> bool:
    """Dual membership from first principles: b meets every expanded generator."""
    return all(g & b for g in gens_expanded)


def _expanded_generators(system: GeneratorSystem, n: int) -> list[int]:
    gens: set[int] = set()
    for a in system.generators:
        gens.update(expand_orbit(a, n))
    return sorted(gens)


def _coverage_table(gens: Sequence[int], size: int) -> tuple[list[int], int]:
    """covered[B] = set of generator indices B meets, as a bitset."""
    cover = [0] * size
    for gi, g in enumerate(gens):
        m = g
        while m:
            low = m & -m
            cover[low.bit_length() - 1] |= 1 << gi
            m ^= low
    covered = [0] * (1 << size)
    for mask in range(1, 1 << size):
        low = mask & -mask
        covered[mask] = covered[mask ^ low] | cover[low.bit_length() - 1]
    return covered, (1 << len(gens)) - 1


def _minimal_hitting_sets(gens: Sequence[int], size: int) -> list[int]:
    """Masks meeting every generator whose single-bit reductions all fail to."""
    covered, fullset = _coverage_table(gens, size)
    out = []
    for mask in range(1 << size):
        if covered[mask] != fullset:
            continue
        m = mask
        minimal = True
        while m:
            low = m & -m
            if covered[mask ^ low] == fullset:
                minimal = False
                break
            m ^= low
        if minimal:
            out.append(mask)
    return out


def brute_min_gens_dual(system: GeneratorSystem, n: int) -> frozenset:
    """Orbit classes of the dual's minimal generators, by full 2^(c*n) scan."""
    _check_bits(system.c, n, MAX_BITS_SCAN)
    if n < system.m:
        raise WidthError(f"width n={n} below the system's stability width {system.m}")
    gens = _expanded_generators(system, n)
    minimal = _minimal_hitting_sets(gens, system.c * n)
    return frozenset(
        type_vector_of_mask(mask, system.c, n) for mask in minimal
    )


def brute_divides(bp_tv: TypeVector, b: TypeVector, n: int) -> bool:
    """Exhaustive column matching over all n! permutations."""
    if n > MAX_N_PERMUTATIONS:
        raise CapError(f"permutation search capped at n<={MAX_N_PERMUTATIONS}")
    if n < max(bp_tv.weight, b.weight):
        raise WidthError("width below weight")
    small = standard_columns(bp_tv, n)
    large = standard_columns(b, n)
    for perm in permutations(range(n)):
        if all(small[i] & ~large[perm[i]] == 0 for i in range(n)):
            return True
    return False


def standard_columns(tv: TypeVector, n: int) -> list[int]:
    cols: list[int] = []
    for mask, k in tv.items:
        cols.extend([mask] * k)
    cols.extend([0] * (n - len(cols)))
    return cols


def _ideal_membership_table(gens: Sequence[int], size: int) -> bytearray:
    """in_ideal[B] = 1 iff some generator's mask is a submask of B."""
    genset = set(gens)
    table = bytearray(1 << size)
    for mask in range(1 << size):
        if mask in genset:
            table[mask] = 1
            continue
        m = mask
        while m:
            low = m & -m
            if table[mask ^ low]:
                table[mask] = 1
                break
            m ^= low
    return table


def brute_f_vector(system: GeneratorSystem, n: int) -> dict[int, int]:
    """Orbit counts of faces by dimension (degree - 1), from the full scan."""
    _check_bits(system.c, n, MAX_BITS_SCAN)
    gens = _expanded_generators(system, n)
    size = system.c * n
    in_ideal = _ideal_membership_table(gens, size)
    orbits: dict[int, set] = {}
    for mask in range(1 << size):
        if in_ideal[mask]:
            continue
        j = mask.bit_count() - 1
        orbits.setdefault(j, set()).add(type_vector_of_mask(mask, system.c, n))
    return {j: len(classes) for j, classes in sorted(orbits.items())}


def min_monomial_generators(masks: Iterable[int]) -> set[int]:
    """Members not properly divisible by another member."""
    items = set(masks)
    return {
        m
        for m in items
        if not any(other != m and other & ~m == 0 for other in items)
    }


def brute_dual_involution_check(system: GeneratorSystem, n: int) -> bool:
    """Dual of the dual returns the original minimal generators.

    Also checks that the brute dual's generator set is closed under column
    permutations, i.e. remains symmetric.
    """
    _check_bits(system.c, n, MAX_BITS_INVOLUTION)
    size = system.c * n
    gens = _expanded_generators(system, n)
    original_min = min_monomial_generators(gens)
    dual_min = _minimal_hitting_sets(gens, size)
    dual_set = set(dual_min)
    for mask in dual_min:
        tv = type_vector_of_mask(mask, system.c, n)
        if not expand_orbit(tv, n) <= dual_set:
            return False
    double = set(_minimal_hitting_sets(sorted(dual_set), size))
    return double == original_min
