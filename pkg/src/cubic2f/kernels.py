"""Hot numeric kernels, JIT-compiled unless the fallback backend is selected.

All kernels operate on CSR adjacency (indptr, heads) with int32 indices.
Shared conventions:
  * ``revarc[a]`` is the CSR position of the reverse of arc ``a``.
  * scratch arrays are caller-allocated where the kernel sits in a loop.
Determinism: the only randomness is an explicit xorshift64 state passed in
and returned, so results are identical across backends and runs.
"""

from __future__ import annotations

import numpy as np

from .backend import jit

MAX_TYPES = 64

# classify_matchings status codes
ST_COMPLETED = 0
ST_REFUTED = 1
ST_BUDGET = 2
ST_STOPPED = 3
ST_TYPE_OVERFLOW = 4


@jit(nogil=True)
def _xorshift64(state):
    # 63-bit xorshift; int64-safe in both backends
    state ^= (state << 13) & 0x7FFFFFFFFFFFFFFF
    state ^= state >> 7
    state ^= (state << 17) & 0x7FFFFFFFFFFFFFFF
    return state & 0x7FFFFFFFFFFFFFFF


@jit(nogil=True)
def seed_state(seed):
    """Mix a user seed into a nonzero xorshift state."""
    s = (seed * 2654435761 + 101) & 0x7FFFFFFFFFFFFFFF
    if s == 0:
        s = 0x1234567
    return _xorshift64(_xorshift64(_xorshift64(s)))


# -- unit-capacity max flow -------------------------------------------------


@jit(nogil=True)
def unit_maxflow(n, indptr, heads, revarc, side, limit, cap, parent_arc, queue):
    """Max flow from the vertex set {side==0} to {side==1}, unit capacities.

    Stops early once ``limit`` is reached (returns ``limit``).  ``cap``,
    ``parent_arc`` and ``queue`` are scratch arrays of sizes 2m, n, n.
    """
    for a in range(len(heads)):
        cap[a] = 1
    flow = 0
    while flow < limit:
        for v in range(n):
            parent_arc[v] = -2
        qh = 0
        qt = 0
        for v in range(n):
            if side[v] == 0:
                parent_arc[v] = -1
                queue[qt] = v
                qt += 1
        found = -1
        while qh < qt and found < 0:
            u = queue[qh]
            qh += 1
            for a in range(indptr[u], indptr[u + 1]):
                if cap[a] == 0:
                    continue
                w = heads[a]
                if parent_arc[w] != -2:
                    continue
                parent_arc[w] = a
                if side[w] == 1:
                    found = w
                    break
                queue[qt] = w
                qt += 1
        if found < 0:
            return flow
        v = found
        while parent_arc[v] >= 0:
            a = parent_arc[v]
            cap[a] -= 1
            cap[revarc[a]] += 1
            v = heads[revarc[a]]
        flow += 1
    return flow


@jit(nogil=True)
def edge_connectivity_kernel(n, indptr, heads, revarc):
    """Min edge cut via max flow from vertex 0 to every other vertex."""
    side = np.full(n, 2, np.int8)
    cap = np.empty(len(heads), np.int8)
    parent_arc = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    best = indptr[1] - indptr[0]  # degree of vertex 0 is an upper bound
    for t in range(1, n):
        for v in range(n):
            side[v] = 2
        side[0] = 0
        side[t] = 1
        f = unit_maxflow(n, indptr, heads, revarc, side, best, cap, parent_arc, queue)
        if f < best:
            best = f
            if best == 0:
                return 0
    return best


@jit(nogil=True)
def min_cut_over_cycle_pairs(n, indptr, heads, revarc, cyc_flat, cyc_ptr, best0):
    """Minimum cut separating any two vertex-disjoint candidate cycles.

    Cycles are given as concatenated vertex lists (cyc_flat sliced by
    cyc_ptr).  Returns best0 if no disjoint pair beats it; returns -1 if
    no vertex-disjoint pair exists at all.
    """
    ncyc = len(cyc_ptr) - 1
    side = np.full(n, 2, np.int8)
    mark = np.zeros(n, np.uint8)
    cap = np.empty(len(heads), np.int8)
    parent_arc = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    best = best0
    any_pair = False
    for i in range(ncyc):
        for idx in range(cyc_ptr[i], cyc_ptr[i + 1]):
            mark[cyc_flat[idx]] = 1
        for j in range(i + 1, ncyc):
            disjoint = True
            for idx in range(cyc_ptr[j], cyc_ptr[j + 1]):
                if mark[cyc_flat[idx]] == 1:
                    disjoint = False
                    break
            if not disjoint:
                continue
            any_pair = True
            for v in range(n):
                side[v] = 2
            for idx in range(cyc_ptr[i], cyc_ptr[i + 1]):
                side[cyc_flat[idx]] = 0
            for idx in range(cyc_ptr[j], cyc_ptr[j + 1]):
                side[cyc_flat[idx]] = 1
            f = unit_maxflow(n, indptr, heads, revarc, side, best, cap, parent_arc, queue)
            if f < best:
                best = f
        for idx in range(cyc_ptr[i], cyc_ptr[i + 1]):
            mark[cyc_flat[idx]] = 0
    if not any_pair:
        return -1
    return best


# -- 3-edge-cut enumeration -------------------------------------------------


@jit(nogil=True)
def find_3cut_triples(n, indptr, heads, arc_eid, m, out):
    """All edge triples whose removal leaves exactly two components with
    every removed edge crossing between them.  Triples of edge ids are
    written to ``out`` (3 ints each); the count is returned even if ``out``
    overflows (caller must check 3*count <= len(out))."""
    comp = np.empty(n, np.int32)
    queue = np.empty(n, np.int32)
    eu = np.empty(m, np.int32)
    ev = np.empty(m, np.int32)
    for u in range(n):
        for a in range(indptr[u], indptr[u + 1]):
            e = arc_eid[a]
            if u < heads[a]:
                eu[e] = u
                ev[e] = heads[a]
    cnt = 0
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                for v in range(n):
                    comp[v] = -1
                ncomp = 0
                for s in range(n):
                    if comp[s] != -1:
                        continue
                    if ncomp == 2:
                        ncomp = 3
                        break
                    comp[s] = ncomp
                    qh = 0
                    qt = 1
                    queue[0] = s
                    while qh < qt:
                        u = queue[qh]
                        qh += 1
                        for a in range(indptr[u], indptr[u + 1]):
                            e = arc_eid[a]
                            if e == i or e == j or e == k:
                                continue
                            w = heads[a]
                            if comp[w] == -1:
                                comp[w] = ncomp
                                queue[qt] = w
                                qt += 1
                    ncomp += 1
                if ncomp != 2:
                    continue
                if comp[eu[i]] == comp[ev[i]]:
                    continue
                if comp[eu[j]] == comp[ev[j]]:
                    continue
                if comp[eu[k]] == comp[ev[k]]:
                    continue
                if 3 * cnt + 3 <= len(out):
                    out[3 * cnt] = i
                    out[3 * cnt + 1] = j
                    out[3 * cnt + 2] = k
                cnt += 1
    return cnt


# -- perfect matching enumeration / 2-factor classification -----------------


@jit(nogil=True)
def _complement_cycle_lengths(n, indptr, heads, match, visited, lengths):
    """Cycle lengths (ascending) of the 2-factor E minus matching.

    Assumes the host is cubic and the matching perfect.  Returns the number
    of cycles; ``visited`` and ``lengths`` are scratch.
    """
    for v in range(n):
        visited[v] = 0
    ncyc = 0
    for v0 in range(n):
        if visited[v0] == 1:
            continue
        length = 0
        prev = -1
        cur = v0
        while True:
            visited[cur] = 1
            length += 1
            nxt = -1
            for a in range(indptr[cur], indptr[cur + 1]):
                w = heads[a]
                if w != match[cur] and w != prev:
                    nxt = w
                    break
            prev = cur
            cur = nxt
            if cur == v0:
                break
        # insertion sort into lengths[0..ncyc]
        pos = ncyc
        while pos > 0 and lengths[pos - 1] > length:
            lengths[pos] = lengths[pos - 1]
            pos -= 1
        lengths[pos] = length
        ncyc += 1
    return ncyc


@jit(nogil=True)
def classify_matchings(
    n,
    indptr,
    heads,
    full_multiset,
    respect_stop,
    max_visits,
    stop_flag,
    type_store,
    type_counts,
    type_lens,
    wit_even,
    wit_odd,
):
    """Exhaustive perfect-matching enumeration with 2-factor bookkeeping.

    Branches on the lowest-indexed unmatched vertex, neighbors in index
    order, with forced-edge (degree-1) propagation.  Tracks the multiset of
    2-factor cycle types, the parity of the cycle counts, and one witness
    matching per parity.  When ``full_multiset`` is false the search stops
    as soon as two parities have been seen (the host cannot be pseudo
    2-factor isomorphic).  Returns (status, count, n_types, parity_mask).
    """
    match = np.full(n, -1, np.int32)
    avail = np.empty(n, np.int32)
    for v in range(n):
        avail[v] = indptr[v + 1] - indptr[v]
    trail = np.empty(n + 2, np.int32)  # endpoints of matched pairs, in order
    trail_len = 0
    maxdepth = n // 2 + 2
    stack_u = np.empty(maxdepth, np.int32)
    stack_ei = np.empty(maxdepth, np.int32)
    stack_mark = np.empty(maxdepth, np.int32)
    forced = np.empty(4 * n + 8, np.int32)  # queue of candidate forced vertices
    visited = np.empty(n, np.uint8)
    lengths = np.empty(n // 3 + 2, np.int32)
    n_types = 0
    parity_mask = 0
    count = 0
    status = ST_COMPLETED
    steps = 0

    if n == 0 or n % 2 == 1:
        return ST_COMPLETED, 0, 0, 0

    sp = 0
    descend = True
    done = False
    while not done:
        if descend:
            if trail_len == n:
                # completed perfect matching
                ncyc = _complement_cycle_lengths(n, indptr, heads, match, visited, lengths)
                par = ncyc & 1
                # record type
                t = -1
                for ti in range(n_types):
                    if type_lens[ti] == ncyc:
                        same = True
                        for q in range(ncyc):
                            if type_store[ti, q] != lengths[q]:
                                same = False
                                break
                        if same:
                            t = ti
                            break
                if t == -1:
                    if n_types == MAX_TYPES:
                        status = ST_TYPE_OVERFLOW
                        break
                    t = n_types
                    type_lens[t] = ncyc
                    for q in range(ncyc):
                        type_store[t, q] = lengths[q]
                    type_counts[t] = 0
                    n_types += 1
                type_counts[t] += 1
                count += 1
                if par == 0 and (parity_mask & 1) == 0:
                    for v in range(n):
                        wit_even[v] = match[v]
                if par == 1 and (parity_mask & 2) == 0:
                    for v in range(n):
                        wit_odd[v] = match[v]
                parity_mask |= 1 << par
                if parity_mask == 3:
                    stop_flag[0] = 1
                    if full_multiset == 0:
                        status = ST_REFUTED
                        break
                if count >= max_visits:
                    status = ST_BUDGET
                    break
                if respect_stop == 1 and (count & 255) == 0 and stop_flag[0] != 0:
                    status = ST_STOPPED
                    break
                descend = False
                continue
            # choose branch vertex: lowest unmatched
            u = -1
            for v in range(n):
                if match[v] == -1:
                    u = v
                    break
            stack_u[sp] = u
            stack_ei[sp] = 0
            stack_mark[sp] = trail_len
            sp += 1
            descend = False
            continue

        # try the next edge of the top frame (or pop)
        if sp == 0:
            done = True
            break
        u = stack_u[sp - 1]
        mark = stack_mark[sp - 1]
        # undo to mark
        while trail_len > mark:
            b = trail[trail_len - 1]
            a = trail[trail_len - 2]
            trail_len -= 2
            for x in range(2):
                y = a if x == 0 else b
                for arc in range(indptr[y], indptr[y + 1]):
                    w = heads[arc]
                    if match[w] == -1:
                        avail[w] += 1
            match[a] = -1
            match[b] = -1
        # avail bookkeeping is symmetric: matching sets match[] first and then
        # decrements unmatched neighbors; the undo increments the identical
        # neighbor set before clearing match[].

        steps += 1
        if respect_stop == 1 and (steps & 4095) == 0 and stop_flag[0] != 0:
            status = ST_STOPPED
            break

        ei = stack_ei[sp - 1]
        w = -1
        deg_u = indptr[u + 1] - indptr[u]
        while ei < deg_u:
            cand = heads[indptr[u] + ei]
            ei += 1
            if match[cand] == -1:
                w = cand
                break
        stack_ei[sp - 1] = ei
        if w == -1:
            sp -= 1
            continue

        # match (u, w) and propagate forced edges
        ok = True
        fq_h = 0
        fq_t = 0
        # inline: match pair
        match[u] = w
        match[w] = u
        trail[trail_len] = u
        trail[trail_len + 1] = w
        trail_len += 2
        for x in range(2):
            y = u if x == 0 else w
            for arc in range(indptr[y], indptr[y + 1]):
                z = heads[arc]
                if match[z] == -1:
                    avail[z] -= 1
                    if avail[z] == 0:
                        ok = False
                    elif avail[z] == 1:
                        forced[fq_t] = z
                        fq_t += 1
        while ok and fq_h < fq_t:
            v = forced[fq_h]
            fq_h += 1
            if match[v] != -1:
                continue
            if avail[v] == 0:
                ok = False
                break
            if avail[v] != 1:
                continue
            # unique unmatched neighbor
            p = -1
            for arc in range(indptr[v], indptr[v + 1]):
                z = heads[arc]
                if match[z] == -1:
                    p = z
                    break
            match[v] = p
            match[p] = v
            trail[trail_len] = v
            trail[trail_len + 1] = p
            trail_len += 2
            for x in range(2):
                y = v if x == 0 else p
                for arc in range(indptr[y], indptr[y + 1]):
                    z = heads[arc]
                    if match[z] == -1:
                        avail[z] -= 1
                        if avail[z] == 0:
                            ok = False
                        elif avail[z] == 1:
                            forced[fq_t] = z
                            fq_t += 1
        if ok:
            descend = True
        # on failure, loop continues: next iteration undoes to mark and
        # tries the next edge
    return status, count, n_types, parity_mask


# -- Karp-Sipser + DFS augmentation (bipartite) -----------------------------


@jit(nogil=True)
def ks_matching_bipartite(n, indptr, heads, eu, ev, color, state, match):
    """Randomized Karp-Sipser phase then Kuhn DFS augmentation.

    ``color`` is a 0/1 bipartition side per vertex, ``state`` an xorshift64
    state.  Writes the matching into ``match`` (or -1s) and returns
    (success, new_state).
    """
    m = len(eu)
    for v in range(n):
        match[v] = -1
    # side size check
    nleft = 0
    for v in range(n):
        if color[v] == 0:
            nleft += 1
    if 2 * nleft != n:
        return 0, state

    avail = np.empty(n, np.int32)
    forced = np.empty(2 * m + n + 8, np.int32)
    alive = np.empty(m, np.int32)
    for v in range(n):
        avail[v] = indptr[v + 1] - indptr[v]
    for e in range(m):
        alive[e] = e
    nalive = m
    fq_h = 0
    fq_t = 0
    for v in range(n):
        if avail[v] == 1:
            forced[fq_t] = v
            fq_t += 1

    while True:
        # forced degree-1 rule first
        progressed = False
        while fq_h < fq_t:
            v = forced[fq_h]
            fq_h += 1
            if match[v] != -1 or avail[v] != 1:
                continue
            p = -1
            for arc in range(indptr[v], indptr[v + 1]):
                z = heads[arc]
                if match[z] == -1:
                    p = z
                    break
            if p == -1:
                continue
            match[v] = p
            match[p] = v
            for x in range(2):
                y = v if x == 0 else p
                for arc in range(indptr[y], indptr[y + 1]):
                    z = heads[arc]
                    if match[z] == -1:
                        avail[z] -= 1
                        if avail[z] == 1:
                            forced[fq_t] = z
                            fq_t += 1
            progressed = True
        if progressed:
            continue
        # otherwise match a uniformly random remaining edge
        picked = -1
        while nalive > 0:
            state = _xorshift64(state)
            r = state % nalive
            e = alive[r]
            if match[eu[e]] == -1 and match[ev[e]] == -1:
                picked = e
                break
            alive[r] = alive[nalive - 1]
            alive[nalive - 1] = e
            nalive -= 1
        if picked == -1:
            break
        a = eu[picked]
        b = ev[picked]
        match[a] = b
        match[b] = a
        for x in range(2):
            y = a if x == 0 else b
            for arc in range(indptr[y], indptr[y + 1]):
                z = heads[arc]
                if match[z] == -1:
                    avail[z] -= 1
                    if avail[z] == 1:
                        forced[fq_t] = z
                        fq_t += 1
        if fq_h > 0 and fq_h == fq_t:
            fq_h = 0
            fq_t = 0

    # Kuhn augmentation for remaining free left vertices
    seen = np.full(n, -1, np.int32)
    stack_v = np.empty(n, np.int32)
    stack_i = np.empty(n, np.int32)
    used_w = np.empty(n, np.int32)
    stamp = 0
    for u0 in range(n):
        if color[u0] != 0 or match[u0] != -1:
            continue
        stamp += 1
        stack_v[0] = u0
        stack_i[0] = 0
        sp = 1
        success = False
        while sp > 0 and not success:
            v = stack_v[sp - 1]
            i = stack_i[sp - 1]
            advanced = False
            while i < indptr[v + 1] - indptr[v]:
                w = heads[indptr[v] + i]
                i += 1
                if seen[w] == stamp:
                    continue
                seen[w] = stamp
                used_w[sp - 1] = w
                if match[w] == -1:
                    # augment along the stack
                    for k2 in range(sp - 1, -1, -1):
                        wk = used_w[k2]
                        vk = stack_v[k2]
                        match[wk] = vk
                        match[vk] = wk
                    success = True
                    advanced = True
                    break
                stack_i[sp - 1] = i
                stack_v[sp] = match[w]
                stack_i[sp] = 0
                sp += 1
                advanced = True
                break
            if not advanced:
                sp -= 1
        if not success:
            for v in range(n):
                match[v] = -1
            return 0, state
    return 1, state


@jit(nogil=True)
def ks_refute_parity(
    n,
    indptr,
    heads,
    eu,
    ev,
    color,
    state,
    max_attempts,
    stop_flag,
    wit_even,
    wit_odd,
    parity_mask0,
):
    """Run Karp-Sipser attempts collecting 2-factor cycle-count parities.

    Stops when both parities have been seen (sets stop_flag), the attempt
    budget is exhausted, or stop_flag is set externally.  Returns
    (parity_mask, attempts_done, new_state).
    """
    match = np.empty(n, np.int32)
    visited = np.empty(n, np.uint8)
    lengths = np.empty(n // 3 + 2, np.int32)
    parity_mask = parity_mask0
    attempts = 0
    while attempts < max_attempts:
        if (attempts & 15) == 0 and stop_flag[0] != 0:
            break
        ok, state = ks_matching_bipartite(n, indptr, heads, eu, ev, color, state, match)
        attempts += 1
        if ok == 0:
            continue
        ncyc = _complement_cycle_lengths(n, indptr, heads, match, visited, lengths)
        par = ncyc & 1
        if par == 0 and (parity_mask & 1) == 0:
            for v in range(n):
                wit_even[v] = match[v]
        if par == 1 and (parity_mask & 2) == 0:
            for v in range(n):
                wit_odd[v] = match[v]
        parity_mask |= 1 << par
        if parity_mask == 3:
            stop_flag[0] = 1
            break
    return parity_mask, attempts, state


@jit(nogil=True)
def incidence_leaves(k, out, max_leaves):
    """Enumerate k x k 0/1 matrices with all row/column sums 3 and pairwise
    row inner products <= 1, rows lexicographically increasing, columns
    labeled in order of first use.  Each matrix is emitted as its k sorted
    row triples (3k ints per leaf) into ``out``; the total count is
    returned even when it exceeds ``max_leaves`` (callers then retry with a
    bigger buffer).  These are exactly the Levi-graph candidates; isomorph
    rejection happens on the caller side.
    """
    rowcols = np.zeros((k, 3), np.int32)
    choice = np.full(3 * k, -1, np.int32)
    opened = np.zeros(3 * k, np.uint8)
    colcap = np.full(k, 3, np.int32)
    pair = np.zeros((k, k), np.uint8)
    used = 0
    count = 0
    s = 0
    while s >= 0:
        r = s // 3
        p = s - 3 * r
        c = choice[s]
        if c >= 0:
            # undo the previous choice at this slot
            colcap[c] += 1
            if p == 2:
                a = rowcols[r, 0]
                b = rowcols[r, 1]
                pair[a, b] = 0
                pair[b, a] = 0
                pair[a, c] = 0
                pair[c, a] = 0
                pair[b, c] = 0
                pair[c, b] = 0
            if opened[s] == 1:
                used -= 1
                opened[s] = 0
            start = c + 1
        elif p > 0:
            start = rowcols[r, p - 1] + 1
        elif r > 0:
            start = rowcols[r - 1, 0]  # lex ordering: c1 >= previous row's c1
        else:
            start = 0
        # find the next valid column for this slot
        nxt = -1
        limit = used if used < k - 1 else k - 1
        cc = start
        while cc <= limit:
            if colcap[cc] > 0:
                ok = True
                if p >= 1 and pair[rowcols[r, 0], cc] == 1:
                    ok = False
                if ok and p == 2 and pair[rowcols[r, 1], cc] == 1:
                    ok = False
                if ok and p == 2 and r > 0:
                    # full lex comparison with the previous row
                    a0 = rowcols[r - 1, 0]
                    a1 = rowcols[r - 1, 1]
                    a2 = rowcols[r - 1, 2]
                    b0 = rowcols[r, 0]
                    b1 = rowcols[r, 1]
                    if b0 < a0 or (b0 == a0 and (b1 < a1 or (b1 == a1 and cc <= a2))):
                        ok = False
                if ok:
                    nxt = cc
                    break
            cc += 1
        if nxt == -1:
            choice[s] = -1
            s -= 1
            continue
        choice[s] = nxt
        rowcols[r, p] = nxt
        colcap[nxt] -= 1
        if nxt == used:
            used += 1
            opened[s] = 1
        if p == 2:
            a = rowcols[r, 0]
            b = rowcols[r, 1]
            pair[a, b] = 1
            pair[b, a] = 1
            pair[a, nxt] = 1
            pair[nxt, a] = 1
            pair[b, nxt] = 1
            pair[nxt, b] = 1
        if s == 3 * k - 1:
            if count < max_leaves:
                for rr in range(k):
                    out[count, 3 * rr] = rowcols[rr, 0]
                    out[count, 3 * rr + 1] = rowcols[rr, 1]
                    out[count, 3 * rr + 2] = rowcols[rr, 2]
            count += 1
            # stay at this slot; the undo branch advances the last choice
        else:
            s += 1
    return count


BIG = 1 << 30


@jit(nogil=True, cache=False)  # self-recursion breaks the on-disk cache
def _canon_rec(rows, k, p, nlab, smaller, collabel, rowused, seq, best):
    """Lexicographic branch-and-bound over row orders and first-use column
    labelings; ``best`` holds the smallest row-triple sequence found and is
    updated in place.  ``smaller`` is 1 when the current prefix is already
    strictly below ``best``.  Returns 1 when the subtree improved best.
    """
    if p == k:
        if smaller == 1:
            for i in range(k):
                for j in range(3):
                    best[i, j] = seq[i, j]
            return 1
        return 0
    # minimal key over unused rows: labeled columns sorted ascending, then
    # fresh columns as nlab, nlab+1, ... (fresh labels exceed old ones)
    mk0 = BIG
    mk1 = BIG
    mk2 = BIG
    for r in range(k):
        if rowused[r] == 1:
            continue
        l0 = BIG
        l1 = BIG
        l2 = BIG
        f = 0
        for j in range(3):
            lab = collabel[rows[r, j]]
            if lab < 0:
                f += 1
            else:
                if lab < l0:
                    l2 = l1
                    l1 = l0
                    l0 = lab
                elif lab < l1:
                    l2 = l1
                    l1 = lab
                else:
                    l2 = lab
        if f >= 1:
            l2 = nlab + f - 1
        if f >= 2:
            l1 = nlab + f - 2
        if f == 3:
            l0 = nlab
        if l0 < mk0 or (l0 == mk0 and (l1 < mk1 or (l1 == mk1 and l2 < mk2))):
            mk0 = l0
            mk1 = l1
            mk2 = l2
    child_smaller = smaller
    if smaller == 0:
        b0 = best[p, 0]
        b1 = best[p, 1]
        b2 = best[p, 2]
        if mk0 > b0 or (mk0 == b0 and (mk1 > b1 or (mk1 == b1 and mk2 > b2))):
            return 0
        if mk0 < b0 or mk1 < b1 or mk2 < b2:
            child_smaller = 1
    updated_any = 0
    seq[p, 0] = mk0
    seq[p, 1] = mk1
    seq[p, 2] = mk2
    fr = np.empty(3, np.int32)
    for r in range(k):
        if rowused[r] == 1:
            continue
        # recompute this row's key and fresh columns
        l0 = BIG
        l1 = BIG
        l2 = BIG
        f = 0
        for j in range(3):
            c = rows[r, j]
            lab = collabel[c]
            if lab < 0:
                fr[f] = c
                f += 1
            else:
                if lab < l0:
                    l2 = l1
                    l1 = l0
                    l0 = lab
                elif lab < l1:
                    l2 = l1
                    l1 = lab
                else:
                    l2 = lab
        if f >= 1:
            l2 = nlab + f - 1
        if f >= 2:
            l1 = nlab + f - 2
        if f == 3:
            l0 = nlab
        if l0 != mk0 or l1 != mk1 or l2 != mk2:
            continue
        rowused[r] = 1
        if f == 0:
            upd = _canon_rec(rows, k, p + 1, nlab, child_smaller, collabel, rowused, seq, best)
            if upd == 1:
                updated_any = 1
                child_smaller = 0
        elif f == 1:
            collabel[fr[0]] = nlab
            upd = _canon_rec(rows, k, p + 1, nlab + 1, child_smaller, collabel, rowused, seq, best)
            if upd == 1:
                updated_any = 1
                child_smaller = 0
            collabel[fr[0]] = -1
        elif f == 2:
            for a in range(2):
                collabel[fr[a]] = nlab
                collabel[fr[1 - a]] = nlab + 1
                upd = _canon_rec(rows, k, p + 1, nlab + 2, child_smaller, collabel, rowused, seq, best)
                if upd == 1:
                    updated_any = 1
                    child_smaller = 0
                collabel[fr[0]] = -1
                collabel[fr[1]] = -1
        else:
            for a in range(3):
                for b in range(3):
                    if b == a:
                        continue
                    c = 3 - a - b
                    collabel[fr[a]] = nlab
                    collabel[fr[b]] = nlab + 1
                    collabel[fr[c]] = nlab + 2
                    upd = _canon_rec(
                        rows, k, p + 1, nlab + 3, child_smaller, collabel, rowused, seq, best
                    )
                    if upd == 1:
                        updated_any = 1
                        child_smaller = 0
                    collabel[fr[0]] = -1
                    collabel[fr[1]] = -1
                    collabel[fr[2]] = -1
        rowused[r] = 0
    return updated_any


@jit(nogil=True, cache=False)  # self-recursion breaks the on-disk cache
def _canonical_incidence(rows, trows, k, best, seq, collabel, rowused):
    """Canonical row-triple sequence of an incidence matrix up to row/column
    permutations and transposition; ``best`` must be preloaded with a valid
    sequence (the matrix's own normalized rows)."""
    for v in range(k):
        collabel[v] = -1
        rowused[v] = 0
    _canon_rec(rows, k, 0, 0, 0, collabel, rowused, seq, best)
    for v in range(k):
        collabel[v] = -1
        rowused[v] = 0
    _canon_rec(trows, k, 0, 0, 0, collabel, rowused, seq, best)


@jit(nogil=True, cache=False)  # self-recursion breaks the on-disk cache
def generate_classes(k, out_rows, hk0, hk1, hk2, hstate):
    """Connected-Levi-graph isomorphism classes of k x k incidence matrices
    with row/column sums 3 and pairwise row products <= 1.

    Runs the same matrix search as :func:`incidence_leaves`, filters for
    connectivity, canonicalizes each survivor (row/column permutations plus
    transposition, which together realize every isomorphism of a connected
    bipartite Levi graph) and dedups through an open-addressing hash table
    (hk0..hk2 packed keys, hstate occupancy).  Canonical row triples of the
    classes go to ``out_rows`` in first-seen order.  Returns
    (n_classes, n_leaves); n_classes is -1 on table or buffer overflow.
    Requires k <= 16 (labels are packed 4 bits each).
    """
    cap = len(hk0)
    maxclasses = len(out_rows)
    rowcols = np.zeros((k, 3), np.int32)
    choice = np.full(3 * k, -1, np.int32)
    opened = np.zeros(3 * k, np.uint8)
    colcap = np.full(k, 3, np.int32)
    pair = np.zeros((k, k), np.uint8)
    trows = np.zeros((k, 3), np.int32)
    tfill = np.zeros(k, np.int32)
    best = np.zeros((k, 3), np.int32)
    seq = np.zeros((k, 3), np.int32)
    collabel = np.zeros(k, np.int32)
    rowused = np.zeros(k, np.uint8)
    seen_r = np.zeros(k, np.uint8)
    seen_c = np.zeros(k, np.uint8)
    stack = np.zeros(2 * k, np.int32)
    used = 0
    nleaves = 0
    nclasses = 0
    s = 0
    while s >= 0:
        r = s // 3
        p = s - 3 * r
        c = choice[s]
        if c >= 0:
            colcap[c] += 1
            if p == 2:
                a = rowcols[r, 0]
                b = rowcols[r, 1]
                pair[a, b] = 0
                pair[b, a] = 0
                pair[a, c] = 0
                pair[c, a] = 0
                pair[b, c] = 0
                pair[c, b] = 0
            if opened[s] == 1:
                used -= 1
                opened[s] = 0
            start = c + 1
        elif p > 0:
            start = rowcols[r, p - 1] + 1
        elif r > 0:
            start = rowcols[r - 1, 0]
        else:
            start = 0
        nxt = -1
        limit = used if used < k - 1 else k - 1
        cc = start
        while cc <= limit:
            if colcap[cc] > 0:
                ok = True
                if p >= 1 and pair[rowcols[r, 0], cc] == 1:
                    ok = False
                if ok and p == 2 and pair[rowcols[r, 1], cc] == 1:
                    ok = False
                if ok and p == 2 and r > 0:
                    a0 = rowcols[r - 1, 0]
                    a1 = rowcols[r - 1, 1]
                    a2 = rowcols[r - 1, 2]
                    b0 = rowcols[r, 0]
                    b1 = rowcols[r, 1]
                    if b0 < a0 or (b0 == a0 and (b1 < a1 or (b1 == a1 and cc <= a2))):
                        ok = False
                if ok:
                    nxt = cc
                    break
            cc += 1
        if nxt == -1:
            choice[s] = -1
            s -= 1
            continue
        choice[s] = nxt
        rowcols[r, p] = nxt
        colcap[nxt] -= 1
        if nxt == used:
            used += 1
            opened[s] = 1
        if p == 2:
            a = rowcols[r, 0]
            b = rowcols[r, 1]
            pair[a, b] = 1
            pair[b, a] = 1
            pair[a, nxt] = 1
            pair[nxt, a] = 1
            pair[b, nxt] = 1
            pair[nxt, b] = 1
        if s == 3 * k - 1:
            nleaves += 1
            # connectivity over the Levi graph (rows 0..k-1, cols k..2k-1)
            for v in range(k):
                tfill[v] = 0
            for rr in range(k):
                for j in range(3):
                    ccol = rowcols[rr, j]
                    trows[ccol, tfill[ccol]] = rr
                    tfill[ccol] += 1
            for v in range(k):
                seen_r[v] = 0
                seen_c[v] = 0
            seen_r[0] = 1
            stack[0] = 0  # rows as v, cols as k+v
            top = 1
            nvis = 1
            while top > 0:
                top -= 1
                v = stack[top]
                if v < k:
                    for j in range(3):
                        w = rowcols[v, j]
                        if seen_c[w] == 0:
                            seen_c[w] = 1
                            nvis += 1
                            stack[top] = k + w
                            top += 1
                else:
                    for j in range(3):
                        w = trows[v - k, j]
                        if seen_r[w] == 0:
                            seen_r[w] = 1
                            nvis += 1
                            stack[top] = w
                            top += 1
            if nvis == 2 * k:
                for rr in range(k):
                    for j in range(3):
                        best[rr, j] = rowcols[rr, j]
                _canonical_incidence(rowcols, trows, k, best, seq, collabel, rowused)
                # pack 4-bit labels into three 64-bit words
                w0 = 0
                w1 = 0
                w2 = 0
                idx = 0
                for rr in range(k):
                    for j in range(3):
                        lab = np.int64(best[rr, j])
                        word = idx >> 4
                        sh = (idx & 15) * 4
                        if word == 0:
                            w0 |= lab << sh
                        elif word == 1:
                            w1 |= lab << sh
                        else:
                            w2 |= lab << sh
                        idx += 1
                h = (
                    w0 * 0x1E3779B97F4A7C15 + w1 * 0x42B2AE3D27D4EB4F + w2 * 0x165667B19E3779F9
                ) & 0x7FFFFFFFFFFFFFFF
                slot = h & (cap - 1)
                while True:
                    if hstate[slot] == 0:
                        if nclasses >= maxclasses or nclasses >= cap - cap // 4:
                            return -1, nleaves
                        hstate[slot] = 1
                        hk0[slot] = w0
                        hk1[slot] = w1
                        hk2[slot] = w2
                        for rr in range(k):
                            for j in range(3):
                                out_rows[nclasses, 3 * rr + j] = best[rr, j]
                        nclasses += 1
                        break
                    if hk0[slot] == w0 and hk1[slot] == w1 and hk2[slot] == w2:
                        break
                    slot = (slot + 1) & (cap - 1)
        else:
            s += 1
    return nclasses, nleaves
