"""Jitted deep-search kernel: the orbit-assignment DFS below the canonical
pruning levels, as one iterative loop over numpy state arrays.

The engine keeps the shallow levels (smallest-representative checks,
checkpoint cadence, emission verification) in Python and hands each deep
subtree to this kernel.  The kernel counts node entries exactly like the
Python recursion, so traces agree across backends.

Pauses: the kernel returns every `node_budget` nodes with its explicit
stack intact (table/used/ddt live in the caller's arrays), letting the
driver run time/abort/checkpoint housekeeping and then resume.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is optional
    njit = None

# kernel exit statuses
DONE = 0            # subtree fully explored
PAUSED = 1          # node budget hit at a node entry; resume with phase 0
BUFFER_FULL = 2     # solution buffer filled; drain and resume with phase 1

PHASE_DESCEND = 0
PHASE_ADVANCE = 1


def _subtree_dfs(table, used, ddt, a_lut, b_lut, a_inv_lut, ord_a,
                 cand_flat, cand_off, cand_cnt, even_alphas, n,
                 floor_depth, base_lo, stack_x, stack_yi, stack_cnt,
                 depth, phase, node_budget, sol_buf, sol_cap):
    size = table.shape[0]
    undef = size
    nalpha = even_alphas.shape[0]
    nodes = 0
    maxd = depth
    nsol = 0
    while True:
        if phase == PHASE_DESCEND:
            if nodes >= node_budget:
                return PAUSED, depth, nodes, nsol, maxd
            nodes += 1
            if depth > maxd:
                maxd = depth
            lo = base_lo if depth == floor_depth else stack_x[depth - 1] + 1
            x = lo
            while x < size and table[x] != undef:
                x += 1
            if x == size:
                for i in range(size):
                    sol_buf[nsol * size + i] = table[i]
                nsol += 1
                phase = PHASE_ADVANCE
                if nsol >= sol_cap:
                    return BUFFER_FULL, depth, nodes, nsol, maxd
                continue
            stack_x[depth] = x
            stack_yi[depth] = -1
            # fall through into the candidate loop at this level
        else:
            if depth == floor_depth:
                return DONE, depth, nodes, nsol, maxd
            depth -= 1
            # undo the orbit committed at this level
            x = stack_x[depth]
            count = stack_cnt[depth]
            xs = x
            for _ in range(count - 1):
                xs = a_lut[xs]
            for _ in range(count):
                vc = table[xs]
                for ai in range(nalpha):
                    alpha = even_alphas[ai]
                    partner = table[xs ^ alpha]
                    if partner != undef:
                        idx = (alpha << n) | (vc ^ partner)
                        v = ddt[idx] - 2
                        ddt[idx] = v
                        if v == 2:
                            break
                used[vc] = 0
                table[xs] = undef
                xs = a_inv_lut[xs]
        # try candidates at the current level, starting after stack_yi[depth]
        x = stack_x[depth]
        o = ord_a[x]
        off = cand_off[x]
        cnt = cand_cnt[x]
        yi = stack_yi[depth] + 1
        advanced = False
        while yi < cnt:
            y = cand_flat[off + yi]
            if used[y] == 0:
                xs = x
                ys = y
                count = 0
                ok = True
                for _ in range(o):
                    table[xs] = ys
                    used[ys] = 1
                    count += 1
                    vc = ys
                    feasible = True
                    for ai in range(nalpha):
                        alpha = even_alphas[ai]
                        partner = table[xs ^ alpha]
                        if partner != undef:
                            idx = (alpha << n) | (vc ^ partner)
                            v = ddt[idx] + 2
                            ddt[idx] = v
                            if v > 2:
                                feasible = False
                                break
                    if not feasible:
                        ok = False
                        break
                    xs = a_lut[xs]
                    ys = b_lut[ys]
                if ok:
                    stack_yi[depth] = yi
                    stack_cnt[depth] = count
                    depth += 1
                    phase = PHASE_DESCEND
                    advanced = True
                    break
                # failed assignment: revert the partial orbit
                xs = x
                for _ in range(count - 1):
                    xs = a_lut[xs]
                for _ in range(count):
                    vc = table[xs]
                    for ai in range(nalpha):
                        alpha = even_alphas[ai]
                        partner = table[xs ^ alpha]
                        if partner != undef:
                            idx = (alpha << n) | (vc ^ partner)
                            v = ddt[idx] - 2
                            ddt[idx] = v
                            if v == 2:
                                break
                    used[vc] = 0
                    table[xs] = undef
                    xs = a_inv_lut[xs]
            yi += 1
        if not advanced:
            phase = PHASE_ADVANCE


if njit is not None:
    _subtree_dfs = njit(cache=True)(_subtree_dfs)


def kernel_available() -> bool:
    return njit is not None
