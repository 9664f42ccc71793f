"""Subsets of [c], order ideals and antichains in the Boolean lattice 2^[c].

Subsets of [c] = {1, ..., c} are encoded as bitmasks, row i <-> bit i-1, so
all set algebra is word operations.  Throughout the package an "order ideal"
is an *upper* set: a family of subsets closed under taking supersets.
Families are plain frozensets of masks.

Subsets are serialized in JSON as sorted arrays of 1-based integers, e.g.
[1, 3]; families as arrays of such arrays.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

from .config import SUBSET_MAX_C, ideal_enum_cap
from .errors import CapError, InputError

# Type aliases: families of subset masks.
OrderIdeal = frozenset
Antichain = frozenset


def check_ambient(c: int) -> None:
    if not isinstance(c, int) or not 1 <= c <= SUBSET_MAX_C:
        raise CapError(f"ambient size c={c!r} outside 1..{SUBSET_MAX_C}")


def full_mask(c: int) -> int:
    return (1 << c) - 1


def mask_of(indices: Iterable[int], c: int) -> int:
    """Bitmask of a set of 1-based row indices."""
    m = 0
    for i in indices:
        if not 1 <= i <= c:
            raise InputError(f"row index {i} outside 1..{c}")
        m |= 1 << (i - 1)
    return m


def elements(mask: int) -> tuple[int, ...]:
    """1-based indices of a mask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def is_subset(s: int, t: int) -> bool:
    return s | t == t


def complement(t: int, c: int) -> int:
    """[c] - T.  Involution: complement(complement(T)) == T."""
    check_ambient(c)
    if t & ~full_mask(c):
        raise InputError(f"mask {t:#x} has bits outside [c] for c={c}")
    return full_mask(c) ^ t


def complement_family(family: Iterable[int], c: int) -> frozenset:
    """Elementwise complements {T^C : T in family}; cardinality preserved."""
    return frozenset(complement(t, c) for t in family)


def supersets(mask: int, c: int) -> Iterator[int]:
    """All supersets of mask inside 2^[c], mask itself included."""
    free = full_mask(c) ^ mask
    sub = free
    while True:
        yield mask | sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def subsets_of(mask: int) -> Iterator[int]:
    """All subsets of mask, the empty set included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def upper_closure(generators: Iterable[int], c: int) -> frozenset:
    """Smallest upward-closed family of 2^[c] containing the generators."""
    out = set()
    for g in generators:
        out.update(supersets(g, c))
    return frozenset(out)


def lower_closure(generators: Iterable[int], c: int) -> frozenset:
    """Smallest downward-closed family containing the generators (with the empty set)."""
    check_ambient(c)
    out = set()
    for g in generators:
        out.update(subsets_of(g))
    return frozenset(out)


def minimal_elements(family: Iterable[int]) -> frozenset:
    """Members not properly containing another member; always an antichain."""
    fam = set(family)
    return frozenset(
        t for t in fam if not any(s != t and is_subset(s, t) for s in fam)
    )


def is_order_ideal(family: Iterable[int], c: int) -> bool:
    """Full-scan test for upward closure inside 2^[c]."""
    fam = set(family)
    return all(s in fam for t in fam for s in supersets(t, c))


def is_antichain(family: Iterable[int]) -> bool:
    fam = list(family)
    return not any(
        s != t and is_subset(s, t) for s in fam for t in fam
    )


def subset_sort_key(mask: int):
    """Sort key putting subsets in decreasing standard order.

    Larger cardinality first; at equal cardinality the subset whose first
    differing element is smaller comes first (the order induced by
    1 > 2 > ... > c).
    """
    return (-mask.bit_count(), elements(mask))


def sort_standard(masks: Iterable[int]) -> list[int]:
    """Masks in decreasing standard order."""
    return sorted(masks, key=subset_sort_key)


def subset_lex_compare(s: int, t: int) -> int:
    """+1 if S > T in the standard order, -1 if S < T, 0 if equal."""
    if s == t:
        return 0
    return 1 if subset_sort_key(s) < subset_sort_key(t) else -1


def enumerate_order_ideals(c: int, max_c: int | None = None) -> Iterator[frozenset]:
    """Yield every upper order ideal of 2^[c] exactly once, incl. {} and 2^[c].

    Depth-first extension over the standard order: a subset may enter the
    ideal only once all its covers are in, so each up-set appears once.
    """
    check_ambient(c)
    cap = ideal_enum_cap(max_c)
    if c > cap:
        raise CapError(f"order-ideal enumeration capped at c<={cap}, got c={c}")
    order = sort_standard(range(1 << c))
    parents = {
        s: [s | (1 << b) for b in range(c) if not s >> b & 1] for s in order
    }
    chosen: set[int] = set()

    def rec(idx: int) -> Iterator[frozenset]:
        if idx == len(order):
            yield frozenset(chosen)
            return
        s = order[idx]
        yield from rec(idx + 1)
        if all(p in chosen for p in parents[s]):
            chosen.add(s)
            yield from rec(idx + 1)
            chosen.discard(s)

    yield from rec(0)


def enumerate_antichains(c: int, max_c: int | None = None) -> Iterator[frozenset]:
    """Yield every antichain of 2^[c]; bijective with enumerate_order_ideals."""
    for ideal in enumerate_order_ideals(c, max_c):
        yield minimal_elements(ideal)


@lru_cache(maxsize=None)
def proper_nonempty_ideals(c: int) -> tuple[frozenset, ...]:
    """All order ideals J with {} != J != 2^[c], in a deterministic order.

    Such ideals never contain the empty subset, so their members are
    nonempty masks.
    """
    ideals = [
        j for j in enumerate_order_ideals(c) if 0 < len(j) < (1 << c)
    ]
    ideals.sort(key=lambda j: (len(j), sorted(j)))
    return tuple(ideals)


@lru_cache(maxsize=None)
def nonempty_antichains(c: int) -> tuple[frozenset, ...]:
    """Nonempty antichains of nonempty subsets, in bijection with proper_nonempty_ideals."""
    return tuple(minimal_elements(j) for j in proper_nonempty_ideals(c))


# -- JSON ------------------------------------------------------------------

def subset_to_json(mask: int) -> list[int]:
    return list(elements(mask))


def subset_from_json(doc, c: int) -> int:
    if not isinstance(doc, list) or not all(isinstance(i, int) for i in doc):
        raise InputError(f"subset must be a list of integers, got {doc!r}")
    return mask_of(doc, c)


def family_to_json(family: Iterable[int]) -> list[list[int]]:
    return sorted(subset_to_json(m) for m in family)


def family_from_json(doc, c: int) -> frozenset:
    if not isinstance(doc, list):
        raise InputError(f"family must be a list of subsets, got {doc!r}")
    return frozenset(subset_from_json(s, c) for s in doc)
