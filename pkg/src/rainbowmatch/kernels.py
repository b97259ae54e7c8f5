"""Hot loops over dense edge arrays.

Each kernel exists twice: ``*_py`` is plain Python over numpy arrays, and
``*_jit`` is the same source compiled by numba (None when numba is missing).
The un-suffixed names dispatch according to ``RAINBOWMATCH_NO_NUMBA``.

Edge arrays are ``int64``, sorted by (u, v); colors are dense ``0..C-1``
assigned in increasing original-color order, so index order is tie-break order.
"""

import numpy as np

from rainbowmatch._accel import USE_NUMBA, jit_or_none


def greedy_py(eu, ev, ec, n, n_colors):
    """Greedy rainbow matching: smallest class, then minimum degree sum.

    Returns ``(k, chosen_edge, chosen_color, class_size, degree_sum,
    removed_total, same_color_removed, removed_at)``. The per-step arrays have
    length ``k``; ``removed_at[e]`` is the 0-based step that deleted edge e.
    """
    m = eu.shape[0]
    deg = np.zeros(n, np.int64)
    class_size = np.zeros(n_colors, np.int64)
    for e in range(m):
        deg[eu[e]] += 1
        deg[ev[e]] += 1
        class_size[ec[e]] += 1

    # CSR incidence by vertex and by color; edge ids ascend within each row.
    vptr = np.zeros(n + 1, np.int64)
    for v in range(n):
        vptr[v + 1] = vptr[v] + deg[v]
    vfill = vptr[:-1].copy()
    vedges = np.empty(2 * m, np.int64)
    cptr = np.zeros(n_colors + 1, np.int64)
    for c in range(n_colors):
        cptr[c + 1] = cptr[c] + class_size[c]
    cfill = cptr[:-1].copy()
    cedges = np.empty(m, np.int64)
    for e in range(m):
        vedges[vfill[eu[e]]] = e
        vfill[eu[e]] += 1
        vedges[vfill[ev[e]]] = e
        vfill[ev[e]] += 1
        cedges[cfill[ec[e]]] = e
        cfill[ec[e]] += 1

    alive = np.ones(m, np.bool_)
    removed_at = np.full(m, -1, np.int64)
    cap = min(n_colors, n // 2) + 1
    chosen_edge = np.empty(cap, np.int64)
    chosen_color = np.empty(cap, np.int64)
    c_sizes = np.empty(cap, np.int64)
    deg_sums = np.empty(cap, np.int64)
    removed_total = np.empty(cap, np.int64)
    same_color = np.empty(cap, np.int64)

    remaining = m
    k = 0
    while remaining > 0:
        best_c = -1
        best_size = m + 1
        for c in range(n_colors):
            s = class_size[c]
            if s > 0 and s < best_size:
                best_c = c
                best_size = s
        best_e = -1
        best_sum = 2 * n + 1
        for i in range(cptr[best_c], cptr[best_c + 1]):
            e = cedges[i]
            if alive[e]:
                s = deg[eu[e]] + deg[ev[e]]
                if s < best_sum:
                    best_e = e
                    best_sum = s

        removed = 0
        for x in (eu[best_e], ev[best_e]):
            for i in range(vptr[x], vptr[x + 1]):
                f = vedges[i]
                if alive[f]:
                    alive[f] = False
                    deg[eu[f]] -= 1
                    deg[ev[f]] -= 1
                    class_size[ec[f]] -= 1
                    removed_at[f] = k
                    removed += 1
        same = 0
        for i in range(cptr[best_c], cptr[best_c + 1]):
            f = cedges[i]
            if alive[f]:
                alive[f] = False
                deg[eu[f]] -= 1
                deg[ev[f]] -= 1
                class_size[ec[f]] -= 1
                removed_at[f] = k
                same += 1
        remaining -= removed + same

        chosen_edge[k] = best_e
        chosen_color[k] = best_c
        c_sizes[k] = best_size
        deg_sums[k] = best_sum
        removed_total[k] = removed + same
        same_color[k] = same
        k += 1

    return (
        k,
        chosen_edge[:k].copy(),
        chosen_color[:k].copy(),
        c_sizes[:k].copy(),
        deg_sums[:k].copy(),
        removed_total[:k].copy(),
        same_color[:k].copy(),
        removed_at,
    )


def max_rainbow_py(eu, ev, ec, n, n_colors, need):
    """Exact maximum rainbow matching by depth-first branch and bound.

    Matchings are enumerated as increasing edge-index sequences. After each
    inclusion the remaining edges compatible with the partial matching give an
    upper bound: the least of their count, their distinct colors, and half
    their distinct endpoints. A node is dropped when that bound cannot beat the
    incumbent or cannot reach ``need``. With ``need > 0`` the search stops at
    the first matching of that size; pass 0 to maximize.

    Returns ``(best_size, best_edges, nodes_explored)``.
    """
    m = eu.shape[0]
    vused = np.zeros(n, np.bool_)
    cused = np.zeros(n_colors, np.bool_)
    vmark = np.zeros(n, np.int64)
    cmark = np.zeros(n_colors, np.int64)
    stamp = 0
    chosen = np.empty(m + 1, np.int64)
    nxt = np.zeros(m + 2, np.int64)
    best = 0
    best_edges = np.empty(m + 1, np.int64)
    nodes = 1

    depth = 0
    while True:
        i = nxt[depth]
        while i < m and (vused[eu[i]] or vused[ev[i]] or cused[ec[i]]):
            i += 1
        if i >= m:
            if depth == 0:
                break
            depth -= 1
            e = chosen[depth]
            vused[eu[e]] = False
            vused[ev[e]] = False
            cused[ec[e]] = False
            continue
        nxt[depth] = i + 1

        vused[eu[i]] = True
        vused[ev[i]] = True
        cused[ec[i]] = True
        chosen[depth] = i
        depth += 1
        nodes += 1
        if depth > best:
            best = depth
            best_edges[:depth] = chosen[:depth]
            if need > 0 and best >= need:
                break

        stamp += 1
        n_edges = 0
        n_cols = 0
        n_verts = 0
        for j in range(i + 1, m):
            a = eu[j]
            b = ev[j]
            c = ec[j]
            if vused[a] or vused[b] or cused[c]:
                continue
            n_edges += 1
            if cmark[c] != stamp:
                cmark[c] = stamp
                n_cols += 1
            if vmark[a] != stamp:
                vmark[a] = stamp
                n_verts += 1
            if vmark[b] != stamp:
                vmark[b] = stamp
                n_verts += 1
        bound = min(n_edges, n_cols, n_verts // 2)
        goal = max(best + 1, need)
        if depth + bound < goal:
            depth -= 1
            vused[eu[i]] = False
            vused[ev[i]] = False
            cused[ec[i]] = False
            continue
        nxt[depth] = i + 1

    return best, best_edges[:best].copy(), nodes


greedy_jit = jit_or_none(greedy_py)
max_rainbow_jit = jit_or_none(max_rainbow_py)

greedy = greedy_jit if USE_NUMBA else greedy_py
max_rainbow = max_rainbow_jit if USE_NUMBA else max_rainbow_py
