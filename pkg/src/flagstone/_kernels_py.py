"""Pure-Python bitset kernels.

Reference implementation of the hot loops: clique counting, maximal-clique
enumeration (Bron-Kerbosch with pivoting), the d-clique link test behind the
leveled predicate, and canonical forms for isomorphism dedup.  A Cython twin
(`_kernels_cy`) implements the same contract; `flagstone.kernels` picks one at
import time.  Graphs enter as a sequence of adjacency bitmask rows
(row v = OR of 1<<u over neighbors u of v).
"""

from itertools import combinations


def clique_counts(masks, n, kmax=-1):
    """Count cliques by size: result[k] = number of k-vertex cliques.

    With kmax >= 0 the result has length kmax+1 (zero-padded); with kmax < 0
    it runs to the clique number.  result[0] is 1 (the empty clique).
    """
    if kmax < 0:
        kmax = n
        trim = True
    else:
        trim = False
    counts = [0] * (kmax + 1)
    counts[0] = 1
    if kmax >= 1:
        counts[1] = n

    def rec(cand, size):
        # cand: vertices above the last chosen one, adjacent to all chosen
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            counts[size] += 1
            if size < kmax:
                sub = cand & masks[v]
                if sub:
                    rec(sub, size + 1)

    if kmax >= 2:
        for v in range(n):
            sub = masks[v] >> (v + 1) << (v + 1)
            if sub:
                rec(sub, 2)
    if trim:
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
    return counts


def maximal_cliques(masks, n):
    """All inclusion-maximal cliques, sorted lexicographically as vertex tuples."""
    out = []
    if n == 0:
        return out

    def bk(r, p, x):
        if p == 0 and x == 0:
            out.append(_bits(r))
            return
        # Tomita pivot: highest |P & N(u)| over u in P|X
        px = p | x
        best_u, best = -1, -1
        m = px
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            c = (p & masks[u]).bit_count()
            if c > best:
                best, best_u = c, u
        cand = p & ~masks[best_u]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            bk(r | low, p & masks[v], x & masks[v])
            p ^= low
            x |= low

    bk(0, (1 << n) - 1, 0)
    out.sort()
    return out


def k_cliques(masks, n, k):
    """All k-vertex cliques as sorted tuples, in lexicographic order."""
    if k == 0:
        return [()]
    if k == 1:
        return [(v,) for v in range(n)]
    out = []

    def rec(prefix, cand, need):
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            if need == 1:
                out.append(prefix + (v,))
            else:
                sub = cand & masks[v]
                if sub.bit_count() >= need - 1:
                    rec(prefix + (v,), sub, need - 1)

    rec((), (1 << n) - 1, k)
    return out


def clique_number(masks, n, stop_at=-1):
    """Size of a largest clique; stops early once stop_at is reached (if >= 0)."""
    best = 0

    def rec(cand, size):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            if stop_at >= 0 and best >= stop_at:
                return
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            rec(cand & masks[v], size + 1)

    rec((1 << n) - 1, 0)
    return best


def leveled_violation(masks, n, d):
    """First d-clique whose common neighborhood is not two isolated vertices.

    Returns (sigma, link_vertices) for the first (lexicographic) violating
    d-clique, or None when every d-clique passes.  The maximal-clique size
    condition of the leveled predicate is checked separately by the caller.
    """
    full = (1 << n) - 1
    found = None

    def bad(common):
        if common.bit_count() != 2:
            return True
        u = (common & -common).bit_length() - 1
        w = (common & (common - 1)).bit_length() - 1
        return (masks[u] >> w) & 1 == 1

    def rec(prefix, cand, common, need):
        nonlocal found
        if need == 0:
            if bad(common):
                found = (prefix, _bits(common))
            return
        while cand and found is None:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            rec(prefix + (v,), cand & masks[v], common & masks[v], need - 1)

    rec((), full, full, d)
    return found


def leveled_violations_all(masks, n, d):
    """Every violating d-clique, with its link vertex list (exhaustive mode)."""
    out = []
    for sigma in k_cliques(masks, n, d):
        common = (1 << n) - 1
        for v in sigma:
            common &= masks[v]
        vs = _bits(common)
        if len(vs) != 2 or (masks[vs[0]] >> vs[1]) & 1:
            out.append((sigma, vs))
    return out


def canonical_key(masks, n):
    """Lexicographically least adjacency bitstring over all vertex relabelings.

    The string reads the upper triangle column by column (the graph6 bit
    order): for j = 1..n-1, bits (0,j),(1,j),...,(j-1,j), first bit most
    significant.  Branch-and-bound over slot assignments; interchangeable
    ("twin") candidates are expanded only once.
    """
    if n <= 1:
        return 0
    total = n * (n - 1) // 2
    best = None
    placed = [0] * n

    def rec(depth, prefix, length, unplaced):
        nonlocal best
        items = []
        m = unplaced
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            pat = 0
            for a in range(depth):
                pat = (pat << 1) | ((masks[placed[a]] >> v) & 1)
            items.append((pat, v))
        items.sort()
        seen = []
        for pat, v in items:
            bit_v = 1 << v
            rest = unplaced ^ bit_v
            # skip v if a same-pattern predecessor is interchangeable with it
            twin = False
            for pat2, u in seen:
                if pat2 != pat:
                    continue
                r2 = rest & ~(1 << u)
                if masks[u] & r2 == masks[v] & r2:
                    twin = True
                    break
            seen.append((pat, v))
            if twin:
                continue
            new_prefix = (prefix << depth) | pat
            new_len = length + depth
            if best is not None:
                ref = best >> (total - new_len)
                if new_prefix > ref:
                    break  # items sorted by pattern: the rest only get bigger
            if depth + 1 == n:
                if best is None or new_prefix < best:
                    best = new_prefix
            else:
                placed[depth] = v
                rec(depth + 1, new_prefix, new_len, rest)
        return

    rec(0, 0, 0, (1 << n) - 1)
    return best


def key_to_masks(key, n):
    """Inverse of canonical_key's encoding: bitstring -> adjacency rows."""
    masks = [0] * n
    total = n * (n - 1) // 2
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if (key >> (total - 1 - pos)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            pos += 1
    return masks


def masks_key(masks, n):
    """The adjacency bitstring of the labeling as given (no minimization)."""
    key = 0
    for j in range(1, n):
        for i in range(j):
            key = (key << 1) | ((masks[i] >> j) & 1)
    return key


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        mask ^= low
        out.append(low.bit_length() - 1)
    return tuple(out)


def bits_of(mask):
    """Vertex tuple of a bitmask, ascending."""
    return _bits(mask)
