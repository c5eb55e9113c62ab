"""Pure-Python versions of the hot loops.

``_ckernels`` (Cython) implements the same functions with the same
signatures and visiting order, so node counts agree between backends.
"""

FOUND = 1
EXHAUSTED = 0
ABORTED = -1


def accumulate(m0, n0, width, height, towers_m, towers_n, offsets_m, offsets_n, offsets_d, t, near_radius):
    """Reception, near-tower count and nearest near-tower distance on a box.

    Cell ``(m, n)`` lives at index ``(n - n0) * width + (m - m0)``.  A tower
    is "near" a cell when their distance is below ``near_radius``; for
    cells with no near tower the distance slot holds -1.
    """
    size = width * height
    rec = [0] * size
    near = [0] * size
    near_d = [-1] * size
    offs = list(zip(offsets_m, offsets_n, offsets_d))
    for tm, tn in zip(towers_m, towers_n):
        bm = tm - m0
        bn = tn - n0
        for dm, dn, d in offs:
            x = bm + dm
            y = bn + dn
            if 0 <= x < width and 0 <= y < height:
                i = y * width + x
                rec[i] += t - d
                if d < near_radius:
                    near[i] += 1
                    if near_d[i] < 0 or d < near_d[i]:
                        near_d[i] = d
    return rec, near, near_d


def search(nv, nt, cov_ptr, cov_idx, cov_val, cand_ptr, cand_idx, cand_val,
           allowed, deficit, k, cap, budget, perms):
    """Depth-first multicover search for at most ``k`` of ``nt`` towers.

    ``cov_*`` is the CSR map tower -> (vertex, contribution) over ``nv``
    vertices and ``cand_*`` the transpose.  ``perms`` is a flat list of
    tower permutations used to drop symmetric first-level branches (only
    valid when every deficit is equal and ``allowed`` is invariant).
    ``budget`` <= 0 means unlimited.

    Returns ``(status, towers, nodes)``.
    """
    deficit = list(deficit)
    forbidden = [0 if a else 1 for a in allowed]
    ncand = [cand_ptr[v + 1] - cand_ptr[v] for v in range(nv)]
    nperm = len(perms) // nt if nt else 0
    chosen = []
    state = {"total": sum(deficit), "nodes": 0}
    gains = []

    class _Abort(Exception):
        pass

    def place(s):
        total = state["total"]
        for i in range(cov_ptr[s], cov_ptr[s + 1]):
            v = cov_idx[i]
            # deficits are clipped at zero; remember the actual reduction
            g = cov_val[i] if cov_val[i] < deficit[v] else deficit[v]
            gains.append(g)
            deficit[v] -= g
            total -= g
        state["total"] = total

    def undo(s):
        total = state["total"]
        for i in range(cov_ptr[s + 1] - 1, cov_ptr[s] - 1, -1):
            v = cov_idx[i]
            g = gains.pop()
            deficit[v] += g
            total += g
        state["total"] = total

    def rec(k_rem, depth):
        state["nodes"] += 1
        if 0 < budget < state["nodes"]:
            raise _Abort
        total = state["total"]
        if total == 0:
            return True
        if k_rem == 0 or total > k_rem * cap:
            return False

        best = -1
        bd = 0
        bc = 0
        for v in range(nv):
            d = deficit[v]
            if d > bd or (d == bd and d > 0 and ncand[v] < bc):
                best = v
                bd = d
                bc = ncand[v]

        kids = []
        avail = 0
        for j in range(cand_ptr[best], cand_ptr[best + 1]):
            s = cand_idx[j]
            if forbidden[s]:
                continue
            avail += cand_val[j]
            score = 0
            for i in range(cov_ptr[s], cov_ptr[s + 1]):
                c = cov_val[i]
                d = deficit[cov_idx[i]]
                score += c if c < d else d
            kids.append((-score, s))
        if avail < bd:
            return False
        kids.sort()

        if depth == 0 and nperm:
            kept = []
            seen = set()
            for item in kids:
                s = item[1]
                if any(perms[g * nt + s] in seen for g in range(nperm)):
                    continue
                seen.add(s)
                kept.append(item)
            kids = kept

        tried = []
        for _, s in kids:
            place(s)
            forbidden[s] = 1
            chosen.append(s)
            if rec(k_rem - 1, depth + 1):
                return True
            chosen.pop()
            undo(s)
            tried.append(s)
        for s in tried:
            forbidden[s] = 0
        return False

    try:
        found = rec(k, 0)
    except _Abort:
        return ABORTED, [], state["nodes"]
    if found:
        return FOUND, list(chosen), state["nodes"]
    return EXHAUSTED, [], state["nodes"]
