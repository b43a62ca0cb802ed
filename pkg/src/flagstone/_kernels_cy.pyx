# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels (64-bit words, so n <= 64).

Same contract as _kernels_py; see that module for the reference semantics.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef uint64_t MASKS[64]
cdef int64_t COUNTS[65]


cdef void _count_rec(uint64_t cand, int size, int kmax) nogil:
    cdef uint64_t low
    cdef int v
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        v = lowbit(low)
        COUNTS[size] += 1
        if size < kmax:
            if cand & MASKS[v]:
                _count_rec(cand & MASKS[v], size + 1, kmax)


def clique_counts(masks, int n, int kmax=-1):
    cdef int i, v
    cdef int trim = 0
    cdef uint64_t sub
    if kmax < 0:
        kmax = n
        trim = 1
    for i in range(n):
        MASKS[i] = masks[i]
    for i in range(kmax + 1):
        COUNTS[i] = 0
    COUNTS[0] = 1
    if kmax >= 1:
        COUNTS[1] = n
    if kmax >= 2:
        for v in range(n):
            if v + 1 >= 64:
                continue
            sub = MASKS[v] >> (v + 1) << (v + 1)
            if sub:
                _count_rec(sub, 2, kmax)
    out = [COUNTS[i] for i in range(kmax + 1)]
    if trim:
        while len(out) > 1 and out[len(out) - 1] == 0:
            out.pop()
    return out


cdef list _bits(uint64_t mask):
    cdef list out = []
    cdef uint64_t low
    while mask:
        low = mask & (~mask + 1)
        mask ^= low
        out.append(lowbit(low))
    return out


cdef void _bk(uint64_t r, uint64_t p, uint64_t x, list out):
    cdef uint64_t px, m, low, cand
    cdef int u, v, c, best, best_u
    if p == 0 and x == 0:
        out.append(tuple(_bits(r)))
        return
    px = p | x
    best = -1
    best_u = 0
    m = px
    while m:
        low = m & (~m + 1)
        m ^= low
        u = lowbit(low)
        c = popcount(p & MASKS[u])
        if c > best:
            best = c
            best_u = u
    cand = p & ~MASKS[best_u]
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        v = lowbit(low)
        _bk(r | low, p & MASKS[v], x & MASKS[v], out)
        p ^= low
        x |= low


def maximal_cliques(masks, int n):
    cdef int i
    cdef list out = []
    if n == 0:
        return out
    for i in range(n):
        MASKS[i] = masks[i]
    _bk(0, (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF, 0, out)
    out.sort()
    return out


cdef void _kc_rec(tuple prefix, uint64_t cand, int need, list out):
    cdef uint64_t low, sub
    cdef int v
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        v = lowbit(low)
        if need == 1:
            out.append(prefix + (v,))
        else:
            sub = cand & MASKS[v]
            if popcount(sub) >= need - 1:
                _kc_rec(prefix + (v,), sub, need - 1, out)


def k_cliques(masks, int n, int k):
    cdef int i
    cdef uint64_t full
    if k == 0:
        return [()]
    if k == 1:
        return [(v,) for v in range(n)]
    for i in range(n):
        MASKS[i] = masks[i]
    cdef list out = []
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    _kc_rec((), full, k, out)
    return out


cdef int BEST
cdef int STOP


cdef void _cn_rec(uint64_t cand, int size) nogil:
    global BEST
    cdef uint64_t low
    cdef int v
    if size > BEST:
        BEST = size
    while cand:
        if size + popcount(cand) <= BEST:
            return
        if STOP >= 0 and BEST >= STOP:
            return
        low = cand & (~cand + 1)
        cand ^= low
        v = lowbit(low)
        _cn_rec(cand & MASKS[v], size + 1)


def clique_number(masks, int n, int stop_at=-1):
    global BEST, STOP
    cdef int i
    cdef uint64_t full
    if n == 0:
        return 0
    for i in range(n):
        MASKS[i] = masks[i]
    BEST = 0
    STOP = stop_at
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    _cn_rec(full, 0)
    return BEST


cdef uint64_t VIOL_COMMON
cdef int VIOL_FOUND
cdef int VIOL_SIGMA[64]


cdef int _bad(uint64_t common) nogil:
    cdef int u, w
    if popcount(common) != 2:
        return 1
    u = lowbit(common)
    w = lowbit(common & (common - 1))
    if (MASKS[u] >> w) & 1:
        return 1
    return 0


cdef void _lv_rec(int depth, uint64_t cand, uint64_t common, int need) nogil:
    global VIOL_FOUND, VIOL_COMMON
    cdef uint64_t low
    cdef int v
    if need == 0:
        if _bad(common):
            VIOL_FOUND = depth
            VIOL_COMMON = common
        return
    while cand and VIOL_FOUND < 0:
        low = cand & (~cand + 1)
        cand ^= low
        v = lowbit(low)
        VIOL_SIGMA[depth] = v
        _lv_rec(depth + 1, cand & MASKS[v], common & MASKS[v], need - 1)


def leveled_violation(masks, int n, int d):
    global VIOL_FOUND
    cdef int i
    cdef uint64_t full
    for i in range(n):
        MASKS[i] = masks[i]
    full = (<uint64_t>1 << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    VIOL_FOUND = -1
    _lv_rec(0, full, full, d)
    if VIOL_FOUND < 0:
        return None
    sigma = tuple(VIOL_SIGMA[i] for i in range(VIOL_FOUND))
    return sigma, tuple(_bits(VIOL_COMMON))


cdef uint64_t CANON_BEST
cdef int CANON_HAVE
cdef int CANON_TOTAL
cdef int CANON_N
cdef int PLACED[12]


cdef void _canon_rec(int depth, uint64_t prefix, int length, uint64_t unplaced):
    global CANON_BEST, CANON_HAVE
    cdef uint64_t m, low, rest, r2, new_prefix, ref, pat
    cdef int v, a, u, k, cnt, new_len, twin
    cdef uint64_t pats[12]
    cdef int verts[12]
    cdef int idx[12]
    cdef int tmp

    cnt = 0
    m = unplaced
    while m:
        low = m & (~m + 1)
        m ^= low
        v = lowbit(low)
        pat = 0
        for a in range(depth):
            pat = (pat << 1) | ((MASKS[PLACED[a]] >> v) & 1)
        pats[cnt] = pat
        verts[cnt] = v
        idx[cnt] = cnt
        cnt += 1
    # insertion sort of idx by (pat, v); cnt <= 12 so this is fine
    for k in range(1, cnt):
        a = k
        while a > 0 and (pats[idx[a - 1]] > pats[idx[a]] or
                         (pats[idx[a - 1]] == pats[idx[a]] and
                          verts[idx[a - 1]] > verts[idx[a]])):
            tmp = idx[a - 1]
            idx[a - 1] = idx[a]
            idx[a] = tmp
            a -= 1

    for k in range(cnt):
        pat = pats[idx[k]]
        v = verts[idx[k]]
        rest = unplaced ^ (<uint64_t>1 << v)
        twin = 0
        for a in range(k):
            u = verts[idx[a]]
            if pats[idx[a]] != pat:
                continue
            r2 = rest & ~(<uint64_t>1 << u)
            if (MASKS[u] & r2) == (MASKS[v] & r2):
                twin = 1
                break
        if twin:
            continue
        new_prefix = (prefix << depth) | pat
        new_len = length + depth
        if CANON_HAVE:
            ref = CANON_BEST >> (CANON_TOTAL - new_len)
            if new_prefix > ref:
                break
        if depth + 1 == CANON_N:
            if not CANON_HAVE or new_prefix < CANON_BEST:
                CANON_BEST = new_prefix
                CANON_HAVE = 1
        else:
            PLACED[depth] = v
            _canon_rec(depth + 1, new_prefix, new_len, rest)


def canonical_key(masks, int n):
    global CANON_BEST, CANON_HAVE, CANON_TOTAL, CANON_N
    cdef int i
    if n <= 1:
        return 0
    if n > 11:
        raise ValueError("compiled canonical_key holds the key in one word; need n <= 11")
    for i in range(n):
        MASKS[i] = masks[i]
    CANON_TOTAL = n * (n - 1) // 2
    CANON_N = n
    CANON_HAVE = 0
    CANON_BEST = 0
    _canon_rec(0, 0, 0, (<uint64_t>1 << n) - 1)
    return int(CANON_BEST)
