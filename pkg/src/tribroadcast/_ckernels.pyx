# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops; see ``_pykernels`` for the contract."""

from libc.stdlib cimport malloc, free

cdef enum:
    FOUND = 1
    EXHAUSTED = 0
    ABORTED = -1


def accumulate(long m0, long n0, long width, long height, towers_m, towers_n,
               offsets_m, offsets_n, offsets_d, long t, long near_radius):
    cdef long size = width * height
    cdef long ntow = len(towers_m)
    cdef long noff = len(offsets_m)
    cdef long *rec = <long *> malloc(size * sizeof(long))
    cdef long *near = <long *> malloc(size * sizeof(long))
    cdef long *near_d = <long *> malloc(size * sizeof(long))
    cdef long *om = <long *> malloc((noff + 1) * sizeof(long))
    cdef long *on = <long *> malloc((noff + 1) * sizeof(long))
    cdef long *od = <long *> malloc((noff + 1) * sizeof(long))
    cdef long i, j, x, y, bm, bn, d, idx
    try:
        for i in range(size):
            rec[i] = 0
            near[i] = 0
            near_d[i] = -1
        for j in range(noff):
            om[j] = offsets_m[j]
            on[j] = offsets_n[j]
            od[j] = offsets_d[j]
        for i in range(ntow):
            bm = <long> towers_m[i] - m0
            bn = <long> towers_n[i] - n0
            for j in range(noff):
                x = bm + om[j]
                y = bn + on[j]
                if 0 <= x < width and 0 <= y < height:
                    idx = y * width + x
                    d = od[j]
                    rec[idx] += t - d
                    if d < near_radius:
                        near[idx] += 1
                        if near_d[idx] < 0 or d < near_d[idx]:
                            near_d[idx] = d
        return ([rec[i] for i in range(size)],
                [near[i] for i in range(size)],
                [near_d[i] for i in range(size)])
    finally:
        free(rec)
        free(near)
        free(near_d)
        free(om)
        free(on)
        free(od)


cdef struct Ctx:
    int nv
    int nt
    int *cov_ptr
    int *cov_idx
    int *cov_val
    int *cand_ptr
    int *cand_idx
    int *cand_val
    int *forbidden
    int *deficit
    int *ncand
    int *gains
    int ngains
    int *chosen
    int nchosen
    int *kids          # per-depth scratch: (score, tower) pairs
    int kid_stride
    int *perms
    int nperm
    int *seen
    long total
    long cap
    long nodes
    long budget


cdef inline void place(Ctx *c, int s):
    cdef int i, v, g
    for i in range(c.cov_ptr[s], c.cov_ptr[s + 1]):
        v = c.cov_idx[i]
        g = c.cov_val[i]
        if c.deficit[v] < g:
            g = c.deficit[v]
        c.gains[c.ngains] = g
        c.ngains += 1
        c.deficit[v] -= g
        c.total -= g


cdef inline void undo(Ctx *c, int s):
    cdef int i, v, g
    i = c.cov_ptr[s + 1] - 1
    while i >= c.cov_ptr[s]:
        v = c.cov_idx[i]
        c.ngains -= 1
        g = c.gains[c.ngains]
        c.deficit[v] += g
        c.total += g
        i -= 1


cdef int rec(Ctx *c, int k_rem, int depth):
    cdef int v, d, best, bd, bc, j, s, i, cv, score, nk, a, b, g, skip, nkept
    cdef long avail
    cdef int *kids
    c.nodes += 1
    if c.budget > 0 and c.nodes > c.budget:
        return ABORTED
    if c.total == 0:
        return FOUND
    if k_rem == 0 or c.total > k_rem * c.cap:
        return EXHAUSTED

    best = -1
    bd = 0
    bc = 0
    for v in range(c.nv):
        d = c.deficit[v]
        if d > bd or (d == bd and d > 0 and c.ncand[v] < bc):
            best = v
            bd = d
            bc = c.ncand[v]

    kids = c.kids + depth * c.kid_stride
    nk = 0
    avail = 0
    for j in range(c.cand_ptr[best], c.cand_ptr[best + 1]):
        s = c.cand_idx[j]
        if c.forbidden[s]:
            continue
        avail += c.cand_val[j]
        score = 0
        for i in range(c.cov_ptr[s], c.cov_ptr[s + 1]):
            cv = c.cov_val[i]
            d = c.deficit[c.cov_idx[i]]
            score += cv if cv < d else d
        # insertion sort on (-score, s), matching the Python tuple sort
        a = nk
        while a > 0 and (kids[2 * (a - 1)] < score or
                         (kids[2 * (a - 1)] == score and kids[2 * (a - 1) + 1] > s)):
            kids[2 * a] = kids[2 * (a - 1)]
            kids[2 * a + 1] = kids[2 * (a - 1) + 1]
            a -= 1
        kids[2 * a] = score
        kids[2 * a + 1] = s
        nk += 1
    if avail < bd:
        return EXHAUSTED

    if depth == 0 and c.nperm > 0:
        nkept = 0
        for a in range(nk):
            s = kids[2 * a + 1]
            skip = 0
            for g in range(c.nperm):
                if c.seen[c.perms[g * c.nt + s]]:
                    skip = 1
                    break
            if skip:
                continue
            c.seen[s] = 1
            kids[2 * nkept] = kids[2 * a]
            kids[2 * nkept + 1] = s
            nkept += 1
        for a in range(nkept):
            c.seen[kids[2 * a + 1]] = 0
        nk = nkept

    for a in range(nk):
        s = kids[2 * a + 1]
        place(c, s)
        c.forbidden[s] = 1
        c.chosen[c.nchosen] = s
        c.nchosen += 1
        b = rec(c, k_rem - 1, depth + 1)
        if b != EXHAUSTED:
            return b
        c.nchosen -= 1
        undo(c, s)
    for a in range(nk):
        c.forbidden[kids[2 * a + 1]] = 0
    return EXHAUSTED


cdef int *_ints(seq, int extra=0) except NULL:
    cdef int n = len(seq)
    cdef int *buf = <int *> malloc((n + extra + 1) * sizeof(int))
    cdef int i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    for i in range(n, n + extra + 1):
        buf[i] = 0
    return buf


def search(int nv, int nt, cov_ptr, cov_idx, cov_val, cand_ptr, cand_idx, cand_val,
           allowed, deficit, int k, long cap, long budget, perms):
    cdef Ctx c
    cdef int v, maxc = 0, maxrow = 0, status
    c.nv = nv
    c.nt = nt
    c.cov_ptr = _ints(cov_ptr)
    c.cov_idx = _ints(cov_idx)
    c.cov_val = _ints(cov_val)
    c.cand_ptr = _ints(cand_ptr)
    c.cand_idx = _ints(cand_idx)
    c.cand_val = _ints(cand_val)
    c.forbidden = _ints([0 if a else 1 for a in allowed])
    c.deficit = _ints(deficit)
    c.ncand = _ints([cand_ptr[v + 1] - cand_ptr[v] for v in range(nv)])
    for v in range(nv):
        if c.ncand[v] > maxc:
            maxc = c.ncand[v]
    for v in range(nt):
        if cov_ptr[v + 1] - cov_ptr[v] > maxrow:
            maxrow = cov_ptr[v + 1] - cov_ptr[v]
    c.gains = _ints((), maxrow * (k + 1))
    c.ngains = 0
    c.chosen = _ints((), k + 1)
    c.nchosen = 0
    c.kid_stride = 2 * (maxc + 1)
    c.kids = _ints((), c.kid_stride * (k + 2))
    c.perms = _ints(perms)
    c.nperm = len(perms) // nt if nt else 0
    c.seen = _ints((), nt)
    c.total = sum(deficit)
    c.cap = cap
    c.nodes = 0
    c.budget = budget
    try:
        status = rec(&c, k, 0)
        if status == FOUND:
            towers = [c.chosen[v] for v in range(c.nchosen)]
        else:
            towers = []
        return status, towers, c.nodes
    finally:
        free(c.cov_ptr)
        free(c.cov_idx)
        free(c.cov_val)
        free(c.cand_ptr)
        free(c.cand_idx)
        free(c.cand_val)
        free(c.forbidden)
        free(c.deficit)
        free(c.ncand)
        free(c.gains)
        free(c.chosen)
        free(c.kids)
        free(c.perms)
        free(c.seen)
