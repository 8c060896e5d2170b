"""Recursive orbit-assignment search for APN permutations with a fixed
linear self-equivalence F o A = B o F.

The table is filled one A-orbit at a time: choosing F(x) = y forces
F(A^i x) = B^i y for the whole orbit, and candidates must match point
orders on both sides.  Feasibility is maintained incrementally in a partial
DDT restricted to even-Hamming-weight input differences (sufficient for the
APN property); every assignment updates it in O(2^(n-1)) and every
backtrack reverts it exactly, including half-applied updates from failed
assignments.

The engine instance is single-threaded by contract: parallelism comes from
split_work() producing independent prefix jobs that partition the tree.
"""

from __future__ import annotations

import hashlib
import os
import random
import struct
import sys
import time
from dataclasses import dataclass, field as dc_field

from . import vbf
from .classify import AutoTuple
from .gf2 import Mat, commutant, fixed_space, inverse, is_extendable, mat_to_lut, span


@dataclass
class SearchConfig:
    threshold_t: int = 2          # depth cutoff for the smallest-representative check
    mode: str = "exhaustive"      # "exhaustive" | "randomized"
    time_budget: float | None = None
    restart_budget: float | None = None  # per-restart slice (randomized)
    rng_seed: int = 0
    commutant_budget: int = 4096
    smallest_subset_cap: int = 64
    seed_fixed_points: bool = False
    split_depth: int = 0
    max_solutions: int | None = None
    max_restarts: int | None = None
    max_nodes: int | None = None
    checkpoint_path: str | None = None
    checkpoint_every: int = 10_000_000
    backend: str = "auto"         # "auto" | "python" | "numba"

    def __post_init__(self):
        if self.mode not in ("exhaustive", "randomized"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "randomized" and self.time_budget is None:
            raise ValueError("randomized mode requires a finite time budget")


@dataclass
class SearchReport:
    solutions: list = dc_field(default_factory=list)
    nodes_visited: int = 0
    max_depth_reached: int = 0
    elapsed: float = 0.0
    exhausted: bool = False
    aborted: str | None = None    # "budget" | "signal" | "solution-limit"
    restarts: int = 0
    checkpoint_path: str | None = None

    def to_json_dict(self) -> dict:
        from . import reference
        return {
            "schema": reference.SCHEMA_REPORT,
            "solutions": [vbf.lut_to_hex(s) for s in self.solutions],
            "nodes_visited": self.nodes_visited,
            "max_depth_reached": self.max_depth_reached,
            "elapsed": self.elapsed,
            "exhausted": self.exhausted,
            "aborted": self.aborted,
            "restarts": self.restarts,
            "checkpoint_path": self.checkpoint_path,
        }


class EngineInvariantError(AssertionError):
    """A solution failed its pre-emission re-verification."""


def seed_fixed_points(t: AutoTuple, g3: list[int]) -> list[tuple[int, int]]:
    """Pin F on the fixed space of A: F(pi_A(v)) = pi_B(g3(v)).

    Requires extendable A and B (so fixing g3 up to affine equivalence loses
    no class) and an APN permutation g3 on k = dim Fix(A) bits.  g3 is
    normalized to fix 0, keeping the seed compatible with F(0) = 0.
    Returns the seeded assignments as (position, value) pairs.
    """
    ka, basis_a = fixed_space(t.a, 1)
    kb, basis_b = fixed_space(t.b, 1)
    if ka != kb:
        raise ValueError("fixed-space dimensions differ; no permutation exists")
    if ka == 0:
        return [(0, 0)]
    if ka in (1, 2, 4):
        raise ValueError(f"no usable APN permutation seed on {ka} bits")
    if not is_extendable(t.a) or not is_extendable(t.b):
        raise ValueError("seeding requires extendable matrices on both sides")
    if len(g3) != 1 << ka:
        raise ValueError("seed permutation has the wrong dimension")
    if not vbf.is_permutation(g3) or not vbf.is_apn(g3):
        raise ValueError("seed must be an APN permutation")
    g3 = [v ^ g3[0] for v in g3]
    out = []
    for v in range(1 << ka):
        x = 0
        w = 0
        for i in range(ka):
            if (v >> i) & 1:
                x ^= basis_a[i]
            if (g3[v] >> i) & 1:
                w ^= basis_b[i]
        out.append((x, w))
    return out


class SearchEngine:
    """One (B, A) tuple plus mutable search state.  Not thread-safe."""

    def __init__(self, t: AutoTuple, cfg: SearchConfig,
                 seed_lut: list[int] | None = None,
                 c_a: list[Mat] | None = None, c_b: list[Mat] | None = None):
        self.t = t
        self.cfg = cfg
        n = t.n
        self.n = n
        self.size = 1 << n
        self.undef = self.size
        self.a_lut = mat_to_lut(t.a)
        self.b_lut = mat_to_lut(t.b)
        self.a_inv_lut = mat_to_lut(inverse(t.a))
        self.ord_a = [_point_order_lut(self.a_lut, x) for x in range(self.size)]
        self.ord_b = [_point_order_lut(self.b_lut, y) for y in range(self.size)]
        self.orbit_len = self.ord_a
        self.even_alphas = [a for a in range(1, self.size)
                            if a.bit_count() % 2 == 0]
        self.ys_by_ord: dict[int, list[int]] = {}
        for y in range(self.size):
            self.ys_by_ord.setdefault(self.ord_b[y], []).append(y)

        from . import dfs_kernel
        self._kernel = dfs_kernel
        if cfg.backend == "numba":
            if not dfs_kernel.kernel_available():
                raise ValueError("numba backend requested but numba is missing")
            self.backend = "numba"
        elif cfg.backend == "python":
            self.backend = "python"
        elif cfg.backend == "auto":
            self.backend = ("numba" if dfs_kernel.kernel_available() and n <= 8
                            else "python")
        else:
            raise ValueError(f"unknown backend {cfg.backend!r}")

        if self.backend == "numba":
            import numpy as np
            self.table = np.full(self.size, self.undef, dtype=np.int64)
            self.used = np.zeros(self.size, dtype=np.int64)
            self.ddt = np.zeros(self.size * self.size, dtype=np.int64)
            self._np = np
            self._a_lut_arr = np.array(self.a_lut, dtype=np.int64)
            self._b_lut_arr = np.array(self.b_lut, dtype=np.int64)
            self._a_inv_arr = np.array(self.a_inv_lut, dtype=np.int64)
            self._ord_a_arr = np.array(self.ord_a, dtype=np.int64)
            self._alphas_arr = np.array(self.even_alphas, dtype=np.int64)
            self._stack_x = np.zeros(self.size + 2, dtype=np.int64)
            self._stack_yi = np.zeros(self.size + 2, dtype=np.int64)
            self._stack_cnt = np.zeros(self.size + 2, dtype=np.int64)
            self._sol_cap = 256
            self._sol_buf = np.zeros(self._sol_cap * self.size, dtype=np.int64)
            self._chunk_nodes = 1 << 20
        else:
            self.table = [self.undef] * self.size
            self.used = bytearray(self.size)
            self.ddt = [0] * (self.size * self.size)
        self._cand_arrays = None
        self.rng = random.Random(cfg.rng_seed)
        self.y_orders: dict[int, list[int]] = {}

        self.seeds = [(0, 0)]
        if cfg.seed_fixed_points:
            if seed_lut is None:
                k = fixed_space(t.a, 1)[0]
                seed_lut = vbf.monomial_lut(vbf.field(k), 3) if k else None
            self.seeds = seed_fixed_points(t, seed_lut) if seed_lut else [(0, 0)]
        elif seed_lut is not None:
            raise ValueError("seed_lut given but seeding is disabled")

        if c_a is None:
            c_a = commutant(t.a, cfg.commutant_budget)[:cfg.smallest_subset_cap]
        if c_b is None:
            c_b = commutant(t.b, cfg.commutant_budget)[:cfg.smallest_subset_cap]
        if len(self.seeds) > 1:
            # transforms must fix the seeded region pointwise, or the
            # smallest-representative pruning could discard seeded branches
            fix_a = span(fixed_space(t.a, 1)[1])
            fix_b = span(fixed_space(t.b, 1)[1])
            c_a = [c for c in c_a
                   if all(_apply_cached(c, v) == v for v in fix_a)]
            c_b = [c for c in c_b
                   if all(_apply_cached(c, v) == v for v in fix_b)]
        ident = tuple(range(self.size))
        self.ca_luts = [tuple(mat_to_lut(c)) for c in c_a] or [ident]
        self.cb_luts = [tuple(mat_to_lut(c)) for c in c_b] or [ident]
        self.ident_lut = ident
        self._ca_ident = [lut == ident for lut in self.ca_luts]
        self._cb_ident = [lut == ident for lut in self.cb_luts]

        self.report = SearchReport()
        self.abort_reason: str | None = None
        self._deadline: float | None = None
        self._t0 = 0.0
        self._node_check = 0
        self._next_checkpoint = cfg.checkpoint_every
        self.current_path: list[tuple[int, int]] = []
        self._abort_path: list[tuple[int, int]] | None = None
        self.resume_path: list[tuple[int, int]] = []
        self.pin_prefix: list[tuple[int, int]] = []
        self._collect_depth: int | None = None
        self._collected: list[list[tuple[int, int]]] = []
        self._seen_solutions: set[tuple] = set()
        self._on_solution = None
        if sys.getrecursionlimit() < self.size + 100:
            sys.setrecursionlimit(self.size + 1000)

    # -- incremental DDT -----------------------------------------------------

    def add_ddt_information(self, c: int) -> bool:
        """Account for a just-assigned position; False the moment a counter
        for a nonzero difference exceeds 2 (update left half-applied, exactly
        as the paired remove expects)."""
        table = self.table
        ddt = self.ddt
        undef = self.undef
        n = self.n
        vc = table[c]
        for alpha in self.even_alphas:
            partner = table[c ^ alpha]
            if partner != undef:
                idx = (alpha << n) | (vc ^ partner)
                v = ddt[idx] + 2
                ddt[idx] = v
                if v > 2:
                    return False
        return True

    def remove_ddt_information(self, c: int) -> None:
        """Exact inverse of the matching add call: same traversal order, and
        the early exit mirrors a failed add (stop at the counter that had
        exceeded 2, i.e. the one that decrements back to exactly 2)."""
        table = self.table
        ddt = self.ddt
        undef = self.undef
        n = self.n
        vc = table[c]
        for alpha in self.even_alphas:
            partner = table[c ^ alpha]
            if partner != undef:
                idx = (alpha << n) | (vc ^ partner)
                v = ddt[idx] - 2
                ddt[idx] = v
                if v == 2:
                    return

    # -- canonical-representative pruning -------------------------------------

    def is_smallest(self) -> bool:
        """Conservative partial-table minimality: a transformed table counts
        as smaller only if it is strictly smaller on a prefix where both it
        and the current table are defined.  Never rejects the branch leading
        to the class-minimal completion."""
        table = self.table
        undef = self.undef
        size = self.size
        for ia, ca in enumerate(self.ca_luts):
            for ib, cb in enumerate(self.cb_luts):
                if self._ca_ident[ia] and self._cb_ident[ib]:
                    continue
                for x in range(size):
                    pv = table[x]
                    if pv == undef:
                        break
                    tv = table[ca[x]]
                    if tv == undef:
                        break
                    tv = cb[tv]
                    if tv != pv:
                        if tv < pv:
                            return False
                        break
        return True

    # -- orbit assignment ------------------------------------------------------

    def _assign_orbit(self, x: int, y: int) -> tuple[int, bool]:
        table = self.table
        used = self.used
        a_lut = self.a_lut
        b_lut = self.b_lut
        add = self.add_ddt_information
        xs, ys = x, y
        count = 0
        for _ in range(self.orbit_len[x]):
            table[xs] = ys
            used[ys] = 1
            count += 1
            if not add(xs):
                return count, False
            xs = a_lut[xs]
            ys = b_lut[ys]
        return count, True

    def _undo_orbit(self, x: int, count: int) -> None:
        table = self.table
        used = self.used
        a_inv = self.a_inv_lut
        remove = self.remove_ddt_information
        xs = x
        for _ in range(count - 1):
            xs = self.a_lut[xs]
        for _ in range(count):
            remove(xs)
            used[table[xs]] = 0
            table[xs] = self.undef
            xs = a_inv[xs]

    # -- search ----------------------------------------------------------------

    def _housekeeping(self) -> bool:
        """Cheap periodic checks; True means keep going."""
        self._node_check += 1
        if self._node_check & 0xFFF and self.abort_reason is None:
            return True
        if self.abort_reason is None:
            if self._deadline is not None and time.monotonic() > self._deadline:
                self.abort_reason = "budget"
            elif (self.cfg.max_nodes is not None
                    and self.report.nodes_visited >= self.cfg.max_nodes):
                self.abort_reason = "budget"
        if (self.abort_reason is None and self.cfg.checkpoint_path
                and self.cfg.mode == "exhaustive"
                and self.report.nodes_visited >= self._next_checkpoint):
            self._next_checkpoint += self.cfg.checkpoint_every
            self.write_checkpoint()
        if self.abort_reason is not None:
            if self._abort_path is None:
                self._abort_path = list(self.current_path)
            return False
        return True

    def request_abort(self, reason: str = "signal") -> None:
        self.abort_reason = reason

    def _emit(self) -> None:
        self._emit_table([int(v) for v in self.table])

    def _emit_table(self, f: list[int]) -> None:
        if not vbf.is_permutation(f):
            raise EngineInvariantError("completed table is not a permutation")
        if not vbf.is_apn(f):
            raise EngineInvariantError("completed table is not APN")
        if not vbf.verify_le_automorphism(f, self.t.a, self.t.b):
            raise EngineInvariantError("completed table breaks the self-equivalence")
        key = tuple(f)
        if key not in self._seen_solutions:  # restarts can re-find solutions
            self._seen_solutions.add(key)
            self.report.solutions.append(f)
            if self._on_solution is not None:
                self._on_solution(f)
        if (self.cfg.max_solutions is not None
                and len(self.report.solutions) >= self.cfg.max_solutions):
            self.abort_reason = "solution-limit"

    def _candidates(self, x: int) -> list[int]:
        if self.cfg.mode == "randomized":
            if x not in self.y_orders:
                ys = list(self.ys_by_ord.get(self.ord_a[x], ()))
                self.rng.shuffle(ys)
                self.y_orders[x] = ys
            return self.y_orders[x]
        return self.ys_by_ord.get(self.ord_a[x], [])

    def _candidate_arrays(self):
        if self._cand_arrays is None:
            np = self._np
            flat: list[int] = []
            off = np.zeros(self.size, dtype=np.int64)
            cnt = np.zeros(self.size, dtype=np.int64)
            for x in range(self.size):
                cands = self._candidates(x)
                off[x] = len(flat)
                cnt[x] = len(cands)
                flat.extend(cands)
            self._cand_arrays = (np.array(flat, dtype=np.int64), off, cnt)
        return self._cand_arrays

    def _descend(self, depth: int, lo: int, on_path: bool) -> None:
        """Route a subtree either to the Python recursion or to the jitted
        deep kernel (only past the pruning threshold, any pinned prefix,
        and any prefix-collection level)."""
        threshold = self.cfg.threshold_t if self.cfg.mode == "exhaustive" else -1
        if (self.backend == "numba"
                and depth > threshold
                and depth >= len(self.pin_prefix)
                and self._collect_depth is None):
            rest = None
            if on_path and depth < len(self.resume_path):
                rest = self.resume_path[depth:]
            self._kernel_subtree(depth, lo, rest)
        else:
            self._next_val(depth, lo, on_path)

    def _next_val(self, depth: int, lo: int, on_path: bool) -> None:
        rep = self.report
        rep.nodes_visited += 1
        if depth > rep.max_depth_reached:
            rep.max_depth_reached = depth
        if not self._housekeeping():
            return
        table = self.table
        undef = self.undef
        x = lo
        size = self.size
        while x < size and table[x] != undef:
            x += 1
        if x == size:
            self._emit()
            return
        if self._collect_depth is not None and depth == self._collect_depth:
            self._collected.append(list(self.current_path))
            return
        pinned = self.pin_prefix[depth] if depth < len(self.pin_prefix) else None
        resume_y = (self.resume_path[depth][1]
                    if on_path and depth < len(self.resume_path) else -1)
        used = self.used
        for y in self._candidates(x):
            if used[y]:
                continue
            if pinned is not None and (x, y) != pinned:
                continue
            if y < resume_y:
                continue
            count, ok = self._assign_orbit(x, y)
            if ok:
                self.current_path.append((x, y))
                if depth <= self.cfg.threshold_t and self.cfg.mode == "exhaustive":
                    if self.is_smallest():
                        self._descend(depth + 1, x + 1,
                                      on_path and y == resume_y)
                else:
                    self._descend(depth + 1, x + 1, on_path and y == resume_y)
                self.current_path.pop()
            self._undo_orbit(x, count)
            if self.abort_reason is not None:
                return

    def _kernel_path(self, floor: int, depth: int) -> list[tuple[int, int]]:
        out = []
        for d in range(floor, depth):
            x = int(self._stack_x[d])
            out.append((x, int(self.table[x])))
        return out

    def _kernel_subtree(self, floor: int, lo: int,
                        resume_rest: list[tuple[int, int]] | None) -> None:
        k = self._kernel
        cand_flat, cand_off, cand_cnt = self._candidate_arrays()
        depth = floor
        phase = k.PHASE_DESCEND
        if resume_rest:
            for x, y in resume_rest:
                off, cnt = int(cand_off[x]), int(cand_cnt[x])
                yi = None
                for i in range(cnt):
                    if int(cand_flat[off + i]) == y:
                        yi = i
                        break
                if yi is None:
                    raise ValueError("resume path value is not a candidate")
                count, ok = self._assign_orbit(x, y)
                if not ok:
                    raise ValueError("resume path is not APN-feasible")
                self._stack_x[depth] = x
                self._stack_yi[depth] = yi
                self._stack_cnt[depth] = count
                depth += 1
        rep = self.report
        while True:
            budget = self._chunk_nodes
            if self.cfg.max_nodes is not None:
                budget = min(budget,
                             max(self.cfg.max_nodes - rep.nodes_visited, 0))
                if budget == 0:
                    self.abort_reason = "budget"
            if self.abort_reason is not None:
                if self._abort_path is None:
                    self._abort_path = (list(self.current_path)
                                        + self._kernel_path(floor, depth))
                break
            status, depth, nodes, nsol, maxd = k._subtree_dfs(
                self.table, self.used, self.ddt, self._a_lut_arr,
                self._b_lut_arr, self._a_inv_arr, self._ord_a_arr,
                cand_flat, cand_off, cand_cnt, self._alphas_arr, self.n,
                floor, lo, self._stack_x, self._stack_yi, self._stack_cnt,
                depth, phase, budget, self._sol_buf, self._sol_cap)
            rep.nodes_visited += nodes
            if maxd > rep.max_depth_reached:
                rep.max_depth_reached = maxd
            for i in range(nsol):
                row = self._sol_buf[i * self.size:(i + 1) * self.size]
                self._emit_table([int(v) for v in row])
                if self.abort_reason is not None:
                    break
            if status == k.DONE:
                # unwind any state left by a resume_rest rebuild
                break
            phase = (k.PHASE_DESCEND if status == k.PAUSED
                     else k.PHASE_ADVANCE)
            # housekeeping between chunks
            if self.abort_reason is None:
                if (self._deadline is not None
                        and time.monotonic() > self._deadline):
                    self.abort_reason = "budget"
            if (self.abort_reason is None and self.cfg.checkpoint_path
                    and self.cfg.mode == "exhaustive"
                    and rep.nodes_visited >= self._next_checkpoint):
                self._next_checkpoint += self.cfg.checkpoint_every
                self._abort_path = None
                saved = self.current_path
                self.current_path = (list(saved)
                                     + self._kernel_path(floor, depth))
                self.write_checkpoint()
                self.current_path = saved
            if self.abort_reason is not None:
                if self._abort_path is None:
                    self._abort_path = (list(self.current_path)
                                        + self._kernel_path(floor, depth))
                break
        # roll back anything still assigned at or above the floor so the
        # caller's backtracking sees its own state unchanged
        for d in range(depth - 1, floor - 1, -1):
            self._undo_orbit(int(self._stack_x[d]), int(self._stack_cnt[d]))

    def _apply_seeds(self) -> None:
        for x, y in self.seeds:
            if self.table[x] != self.undef:
                if self.table[x] != y:
                    raise ValueError("conflicting seed assignment")
                continue
            self.table[x] = y
            self.used[y] = 1
            if not self.add_ddt_information(x):
                raise ValueError("seed assignment is not APN-feasible")

    def run(self, resume_path: list[tuple[int, int]] | None = None,
            pin_prefix: list[tuple[int, int]] | None = None,
            on_solution=None) -> SearchReport:
        self._t0 = time.monotonic()
        if self.cfg.time_budget is not None:
            self._deadline = self._t0 + self.cfg.time_budget
        self.resume_path = resume_path or []
        self.pin_prefix = pin_prefix or []
        self._on_solution = on_solution
        self._apply_seeds()
        if self.cfg.mode == "randomized":
            self._run_randomized()
        else:
            self._descend(0, 0, bool(self.resume_path))
        self.report.elapsed = time.monotonic() - self._t0
        self.report.exhausted = (self.cfg.mode == "exhaustive"
                                 and self.abort_reason is None)
        self.report.aborted = self.abort_reason
        if self.abort_reason in ("budget", "signal") \
                and self.cfg.mode == "exhaustive" and self.cfg.checkpoint_path:
            self.write_checkpoint()
            self.report.checkpoint_path = self.cfg.checkpoint_path
        return self.report

    def _run_randomized(self) -> None:
        total_deadline = self._deadline
        slice_len = self.cfg.restart_budget
        if slice_len is None and self.cfg.time_budget is not None:
            slice_len = max(self.cfg.time_budget / 16, 0.05)
        restarts = 0
        while True:
            if (self.cfg.max_restarts is not None
                    and restarts >= self.cfg.max_restarts):
                break
            now = time.monotonic()
            if total_deadline is not None and now >= total_deadline:
                self.abort_reason = "budget"
                break
            self.y_orders = {}  # fresh shuffles, RNG state carries over
            self._cand_arrays = None
            self.abort_reason = None
            if slice_len is not None:
                slice_end = now + slice_len
                self._deadline = (min(total_deadline, slice_end)
                                  if total_deadline is not None else slice_end)
            self._descend(0, 0, False)
            restarts += 1
            self.report.restarts = restarts
            if self.abort_reason in ("signal", "solution-limit"):
                break
            if self.abort_reason is None:
                break  # the restart closed the whole tree; repeats add nothing
        self._deadline = total_deadline

    # -- checkpoints -------------------------------------------------------------

    _CKPT_MAGIC = b"APNLECKP"
    _CKPT_VERSION = 1

    def tuple_digest(self) -> bytes:
        h = hashlib.sha256()
        h.update(bytes(str((self.t.n, self.t.p, self.t.b.rows, self.t.a.rows)),
                       "ascii"))
        return h.digest()[:16]

    def write_checkpoint(self) -> None:
        path = list(self._abort_path if self._abort_path is not None
                    else self.current_path)
        blob = bytearray()
        blob += self._CKPT_MAGIC
        blob += struct.pack("<HB", self._CKPT_VERSION, self.n)
        blob += self.tuple_digest()
        blob += struct.pack("<QI", self.report.nodes_visited, len(path))
        for x, y in path:
            blob += struct.pack("<HH", x, y)
        tmp = self.cfg.checkpoint_path + ".tmp"
        with open(tmp, "wb") as fh:
            fh.write(blob)
        os.replace(tmp, self.cfg.checkpoint_path)

    def read_checkpoint(self, path: str) -> list[tuple[int, int]]:
        with open(path, "rb") as fh:
            blob = fh.read()
        if blob[:8] != self._CKPT_MAGIC:
            raise ValueError("not a checkpoint file")
        version, n = struct.unpack_from("<HB", blob, 8)
        if version != self._CKPT_VERSION:
            raise ValueError(f"unsupported checkpoint version {version}")
        if n != self.n or blob[11:27] != self.tuple_digest():
            raise ValueError("checkpoint belongs to a different search")
        _, plen = struct.unpack_from("<QI", blob, 27)
        out = []
        off = 27 + 12
        for _ in range(plen):
            x, y = struct.unpack_from("<HH", blob, off)
            out.append((x, y))
            off += 4
        return out


def _point_order_lut(lut: list[int], x: int) -> int:
    y = lut[x]
    i = 1
    while y != x:
        y = lut[y]
        i += 1
    return i


_apply_cache: dict[tuple, tuple] = {}


def _apply_cached(m: Mat, v: int) -> int:
    key = m.rows
    lut = _apply_cache.get(key)
    if lut is None:
        lut = tuple(mat_to_lut(m))
        _apply_cache[key] = lut
    return lut[v]


def dfs_search(t: AutoTuple, cfg: SearchConfig | None = None,
               seed_lut: list[int] | None = None,
               resume_path=None, pin_prefix=None,
               on_solution=None) -> SearchReport:
    """Run the orbit-assignment DFS for one tuple and return its report."""
    cfg = cfg or SearchConfig()
    eng = SearchEngine(t, cfg, seed_lut=seed_lut)
    return eng.run(resume_path=resume_path, pin_prefix=pin_prefix,
                   on_solution=on_solution)


def random_search(t: AutoTuple, cfg: SearchConfig) -> SearchReport:
    """Time-budgeted randomized variant: candidate orders reshuffled per
    restart, no smallest-representative pruning; never claims exhaustion
    unless a restart closes the whole tree."""
    if cfg.mode != "randomized":
        raise ValueError("random_search requires randomized mode")
    return dfs_search(t, cfg)


def split_work(t: AutoTuple, cfg: SearchConfig | None = None,
               depth: int = 0, seed_lut=None) -> list[list[tuple[int, int]]]:
    """All APN-feasible assignments of the first `depth` orbits, each an
    independent subtree job; their union equals the unsplit search."""
    cfg = cfg or SearchConfig()
    if depth <= 0:
        return [[]]
    eng = SearchEngine(t, cfg, seed_lut=seed_lut)
    eng._collect_depth = depth
    eng._apply_seeds()
    eng._t0 = time.monotonic()
    if cfg.time_budget is not None:
        eng._deadline = eng._t0 + cfg.time_budget
    eng._descend(0, 0, False)
    # complete tables shallower than the requested depth surface as
    # full-length prefixes; their job replays the completed assignment
    jobs = eng._collected
    for sol in eng.report.solutions:
        jobs.append(_solution_as_prefix(eng, sol))
    return jobs


def _solution_as_prefix(eng: SearchEngine, sol: list[int]) -> list[tuple[int, int]]:
    seeded = {x for x, _ in eng.seeds}
    prefix = []
    done: set[int] = set(seeded)
    for x in range(eng.size):
        if x in done:
            continue
        prefix.append((x, sol[x]))
        xs = x
        for _ in range(eng.orbit_len[x]):
            done.add(xs)
            xs = eng.a_lut[xs]
    return prefix


def run_job(t: AutoTuple, cfg: SearchConfig, prefix: list[tuple[int, int]],
            seed_lut=None, on_solution=None) -> SearchReport:
    """Search exactly the subtree under a split_work prefix."""
    eng = SearchEngine(t, cfg, seed_lut=seed_lut)
    return eng.run(pin_prefix=prefix, on_solution=on_solution)
