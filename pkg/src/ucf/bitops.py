"""Low-level mask algorithms shared by the family operations.

Families are lists of integer bitmasks (bit k = element k+1).  Everything in
here is scale-tiered: tiny inputs go through plain Python, families whose
support fits in a small table go through subset-sum transforms, and wide
structured families are split along their comparability chain first.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

# Largest table the transform tier will allocate: 2**22 int64 entries (32 MB).
_TABLE_BITS = 22
# Below this many members the quadratic scan is cheaper than any setup.
_SMALL_PAIRWISE = 48


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << (x - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def popcounts(masks: Sequence[int], width: int) -> list[int]:
    if width <= 64 and len(masks) >= 1024:
        arr = np.fromiter(masks, dtype=np.uint64, count=len(masks))
        return np.bitwise_count(arr).tolist()
    return [m.bit_count() for m in masks]


def bit_columns(masks: Sequence[int], n: int) -> np.ndarray:
    """Return an (n, ceil(m/8)) uint8 array; row x packs the membership
    vector of element x+1 across all members."""
    m = len(masks)
    nbytes = (n + 63) // 64 * 8
    buf = b"".join(msk.to_bytes(nbytes, "little") for msk in masks)
    rows = np.frombuffer(buf, dtype=np.uint8).reshape(m, nbytes)
    bits = np.unpackbits(rows, axis=1, bitorder="little")[:, :n]
    return np.packbits(bits.T, axis=1, bitorder="little")


def _compress(masks: Sequence[int], support: int) -> list[int]:
    # Relabel the support bits to 0..s-1; unions are preserved.
    positions = {}
    s = support
    i = 0
    while s:
        low = s & -s
        positions[low] = 1 << i
        i += 1
        s ^= low
    out = []
    for msk in masks:
        new = 0
        while msk:
            low = msk & -msk
            new |= positions[low]
            msk ^= low
        out.append(new)
    return out


def _closed_pairwise_py(masks: Sequence[int]) -> bool:
    present = set(masks)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            u = a | b
            if u != a and u != b and u not in present:
                return False
    return True


def _closed_pairwise_np(masks: Sequence[int]) -> bool:
    arr = np.fromiter(masks, dtype=np.uint64, count=len(masks))
    table = np.sort(arr)
    m = len(masks)
    chunk = max(1, (1 << 22) // m)
    for lo in range(0, m, chunk):
        unions = arr[lo:lo + chunk, None] | arr[None, :]
        pos = np.searchsorted(table, unions)
        np.minimum(pos, m - 1, out=pos)
        if not (table[pos] == unions).all():
            return False
    return True


def _closed_by_table(masks: Sequence[int], width: int) -> bool:
    # Count pairs (A, B) whose union is exactly M for every M at once:
    # subset-sum the indicator, square pointwise, invert.  The family is
    # union-closed iff no absent mask has a positive pair count.
    size = 1 << width
    cnt = np.zeros(size, dtype=np.int64)
    idx = np.fromiter(masks, dtype=np.int64, count=len(masks))
    cnt[idx] = 1
    present = cnt.astype(bool)
    for i in range(width):
        v = cnt.reshape(-1, 2, 1 << i)
        v[:, 1, :] += v[:, 0, :]
    cnt *= cnt
    for i in range(width):
        v = cnt.reshape(-1, 2, 1 << i)
        v[:, 1, :] -= v[:, 0, :]
    return not bool((cnt.astype(bool) & ~present).any())


def _fallback_pairwise(masks: Sequence[int], width: int) -> bool:
    if width <= 64:
        return _closed_pairwise_np(masks)
    return _closed_pairwise_py(list(masks))


def masks_union_closed(masks: Sequence[int]) -> bool:
    """Exact union-closedness test with no scale limit.

    Tiers: quadratic scan for tiny inputs; a 2**s table when the support s is
    small; otherwise the family is cut along members comparable to everything
    (those form a chain) and each slab is checked independently.  The chain
    split is what keeps chain-plus-small-base families (the shape every
    builder here produces) cheap at six-figure sizes.
    """
    m = len(masks)
    if m <= 1:
        return True
    if m <= _SMALL_PAIRWISE:
        return _closed_pairwise_py(list(masks))
    support = 0
    for msk in masks:
        support |= msk
    width = support.bit_length()
    if width <= _TABLE_BITS:
        return _closed_by_table(masks, max(width, 1))
    s = support.bit_count()
    if s <= _TABLE_BITS:
        return _closed_by_table(_compress(masks, support), s)

    order = sorted(masks, key=int.bit_count)
    prefix = [0] * m
    run = 0
    for i, msk in enumerate(order):
        prefix[i] = run
        run |= msk
    suffix = [0] * m
    run = ~0
    for i in range(m - 1, -1, -1):
        suffix[i] = run
        run &= order[i]
    chain = [
        i for i in range(m)
        if prefix[i] & ~order[i] == 0 and order[i] & ~suffix[i] == 0
    ]
    if not chain:
        return _fallback_pairwise(order, width)

    # Each slab spans one gap of the chain: its interior members plus the
    # chain element above it.  Members above the top chain element close
    # among themselves.
    slabs: list[tuple[list[int], int]] = []
    lo = 0
    floor = 0
    for c in chain:
        if c > lo:
            slabs.append((order[lo:c] + [order[c]], floor))
        floor = order[c]
        lo = c + 1
    if lo < m:
        slabs.append((order[lo:], floor))
    for slab, floor in slabs:
        if len(slab) == m:
            return _fallback_pairwise(slab, width)
        stripped = [x & ~floor for x in slab]
        if not masks_union_closed(stripped):
            return False
    return True


def element_signatures(masks: Sequence[int], n: int) -> list[int]:
    """signature[x-1] packs, as an int, which members contain element x."""
    sigs = [0] * n
    for i, msk in enumerate(masks):
        bit = 1 << i
        while msk:
            low = msk & -msk
            sigs[low.bit_length() - 1] |= bit
            msk ^= low
    return sigs


def signature_groups(masks: Sequence[int], n: int) -> list[list[int]]:
    """Group elements 1..n by identical membership vectors, ordered by the
    smallest element of each group."""
    if n * len(masks) <= 4096:
        sigs = element_signatures(masks, n)
        buckets: dict[int, list[int]] = {}
        for x in range(1, n + 1):
            buckets.setdefault(sigs[x - 1], []).append(x)
        return sorted(buckets.values(), key=lambda g: g[0])
    cols = bit_columns(masks, n)
    _, inverse = np.unique(cols, axis=0, return_inverse=True)
    buckets = {}
    for x, label in enumerate(inverse.tolist(), start=1):
        buckets.setdefault(label, []).append(x)
    return sorted(buckets.values(), key=lambda g: g[0])
