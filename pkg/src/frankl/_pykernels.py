"""Pure-Python versions of the hot loops.

Every function here has a twin in ``_ckernels.pyx`` with the same
signature and the same results.  Member masks are plain ints, so this
module also serves universes wider than a machine word.

Two encodings appear:

* member masks -- a set of elements, bit ``i`` for element index ``i``;
* family masks -- a family over ``P([n])``, bit ``s`` for subset ``s``.
"""

BACKEND = "python"


def union_violation(masks):
    """First index pair ``(i, j)``, ``i < j``, whose union is not a member."""
    present = set(masks)
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(i + 1, m):
            if (a | masks[j]) not in present:
                return (i, j)
    return None


def cover_pairs(masks):
    """Transitive reduction of inclusion.

    ``masks`` must be distinct and sorted by (popcount, value), so every
    strict subset of ``masks[j]`` sits at a smaller index.
    """
    pairs = []
    for j, b in enumerate(masks):
        below = [i for i in range(j) if masks[i] & b == masks[i]]
        for pos, i in enumerate(below):
            a = masks[i]
            for k in below[pos + 1:]:
                if masks[k] & a == a:
                    break
            else:
                pairs.append((i, j))
    return pairs


def heights(masks):
    """Longest strict chain ending at each member (same ordering contract)."""
    h = [0] * len(masks)
    for j, b in enumerate(masks):
        best = 0
        for i in range(j):
            a = masks[i]
            if a & b == a and h[i] + 1 > best:
                best = h[i] + 1
        h[j] = best
    return h


def coheights(masks):
    m = len(masks)
    h = [0] * m
    for i in range(m - 1, -1, -1):
        a = masks[i]
        best = 0
        for j in range(i + 1, m):
            if a & masks[j] == a and h[j] + 1 > best:
                best = h[j] + 1
        h[i] = best
    return h


def family_is_union_closed(fam):
    sets = []
    s = 0
    f = fam
    while f:
        if f & 1:
            sets.append(s)
        f >>= 1
        s += 1
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if not (fam >> (a | b)) & 1:
                return False
    return True


def sweep_union_closed(n, lo, hi):
    """Union-closed family masks over ``P([n])`` with ``lo <= mask < hi``."""
    if n < 0 or n > 5:
        raise ValueError("sweep supports 0 <= n <= 5")
    out = []
    for fam in range(lo, hi):
        if family_is_union_closed(fam):
            out.append(fam)
    return out


def family_closure(fam):
    """Union closure of a family mask."""
    while True:
        sets = [s for s in range(fam.bit_length()) if (fam >> s) & 1]
        grown = fam
        for i, a in enumerate(sets):
            for b in sets[i + 1:]:
                grown |= 1 << (a | b)
        if grown == fam:
            return fam
        fam = grown
