"""Bit-vector subsets of a finite ground set {0..n-1}.

A subset is a plain int bitmask and the ground-set size n travels
separately; this keeps the exhaustive scans cheap.  All helpers assume
masks stay below 1 << n with n <= MAX_GROUND.

The canonical order on subsets is (popcount, numeric value): it makes
enumeration streams, family listings and reported witnesses
reproducible byte for byte.
"""

from functools import lru_cache

MAX_GROUND = 16


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bit(x: int) -> int:
    return 1 << x


def points(mask: int):
    """Iterate the member indices of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for x in indices:
        m |= 1 << x
    return m


def canon_key(mask: int):
    return (mask.bit_count(), mask)


@lru_cache(maxsize=None)
def subsets_canonical(n: int) -> tuple:
    """All 2**n masks in canonical (popcount, value) order."""
    return tuple(sorted(range(1 << n), key=canon_key))


@lru_cache(maxsize=None)
def _positions(pts: tuple) -> dict:
    return {p: i for i, p in enumerate(pts)}


def compress(mask: int, pts: tuple) -> int:
    """Re-index a parent mask into subspace coordinates over pts."""
    pos = _positions(pts)
    out = 0
    for x in points(mask):
        out |= 1 << pos[x]
    return out


def expand(mask: int, pts: tuple) -> int:
    """Map a subspace mask back to parent coordinates."""
    out = 0
    for i in points(mask):
        out |= 1 << pts[i]
    return out


def format_set(mask: int, labels=None) -> str:
    names = [str(x) if labels is None else labels[x] for x in points(mask)]
    return "{" + ",".join(names) + "}"
