"""Command-line pipeline: classify -> prune -> search -> report.

Exit codes are a stable scripting contract:
  0  completed
  2  budget expired (exhaustive run checkpointed, or randomized budget spent)
  3  verification failure
  4  input error

Checkpoints default to $APNLE_CHECKPOINT_DIR (falling back to the output
directory).  Run manifests are append-only JSONL; re-running a class that
already completed is a no-op without --force.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import classify, dedup, prune, reference, search, vbf
from .gf2 import mat_from_hex_rows

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_VERIFY = 3
EXIT_INPUT = 4


def _fail_input(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_INPUT


# ---------------------------------------------------------------------------
# manifest
# ---------------------------------------------------------------------------

class Manifest:
    """Append-only JSONL event log; the last event per (n, class, mode) wins."""

    def __init__(self, path: str):
        self.path = path

    def append(self, **event) -> None:
        event["ts"] = time.time()
        with open(self.path, "a") as fh:
            fh.write(json.dumps(event) + "\n")

    def state(self, n: int, class_id: int, mode: str):
        if not os.path.exists(self.path):
            return None
        last = None
        with open(self.path) as fh:
            for line in fh:
                ev = json.loads(line)
                if (ev.get("n"), ev.get("class_id"), ev.get("mode")) == (n, class_id, mode):
                    last = ev
        return last


# ---------------------------------------------------------------------------
# classify / prune
# ---------------------------------------------------------------------------

def cmd_classify(args) -> int:
    if not 1 <= args.n <= 12:
        return _fail_input("n must be in 1..12")
    tuples = classify.enumerate_classes(args.n)
    text = classify.classes_to_json(tuples)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(tuples)} classes to {args.out}")
    else:
        print(text)
    return EXIT_OK


def _load_classes(args):
    if getattr(args, "classes", None):
        with open(args.classes) as fh:
            tuples = classify.classes_from_json(fh.read())
        return [t for t in tuples if t.n == args.n]
    return classify.enumerate_classes(args.n)


def cmd_prune(args) -> int:
    if not 1 <= args.n <= 12:
        return _fail_input("n must be in 1..12")
    tuples = _load_classes(args)
    rows = prune.compare_with_reference(tuples)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(prune.verdicts_to_json(rows))
        print(f"wrote {len(rows)} verdicts to {args.out}")
    if args.table1:
        mismatches = 0
        print(f"{'class':>5} {'verdict':>10} {'expected':>10}  flag")
        for row in rows:
            expect = row["expected"]
            if expect is None:
                flag = "-"
            elif row["match"]:
                flag = "MATCH"
            else:
                flag = "MISMATCH"
                mismatches += 1
            print(f"{row['class_id']:>5} {row['verdict']:>10} "
                  f"{expect or '-':>10}  {flag}")
        print(f"mismatches: {mismatches}")
        if mismatches:
            return EXIT_VERIFY
    elif not args.out:
        print(prune.verdicts_to_json(rows))
    return EXIT_OK


# ---------------------------------------------------------------------------
# search
# ---------------------------------------------------------------------------

def _job_worker(payload):
    doc, cfg_kwargs, prefix = payload
    t = classify.classes_from_json(doc)[0]
    cfg = search.SearchConfig(**cfg_kwargs)
    rep = search.run_job(t, cfg, prefix)
    return rep.to_json_dict()


def _search_one(t, args, manifest: Manifest, out_dir: str) -> tuple[str, int]:
    mode = "randomized" if args.mode == "random" else "exhaustive"
    prev = manifest.state(t.n, t.class_id, mode)
    if prev and prev.get("state") in ("exhausted", "pruned") and not args.force:
        print(f"class {t.class_id}: already {prev['state']}, skipping (--force to rerun)")
        return prev["state"], EXIT_OK

    ckpt_dir = os.environ.get("APNLE_CHECKPOINT_DIR", out_dir)
    os.makedirs(ckpt_dir, exist_ok=True)
    ckpt = os.path.join(ckpt_dir, f"n{t.n}_class{t.class_id}.ckpt")
    cfg = search.SearchConfig(
        mode=mode,
        time_budget=args.budget,
        rng_seed=args.seed,
        seed_fixed_points=args.seed_fixed_points,
        max_solutions=args.max_solutions,
        checkpoint_path=ckpt if mode == "exhaustive" else None,
        threshold_t=-1 if mode == "randomized" else 2,
    )
    sols_path = os.path.join(out_dir, f"n{t.n}_class{t.class_id}.sols")
    report_path = os.path.join(out_dir, f"n{t.n}_class{t.class_id}.report.json")

    sols_fh = open(sols_path, "a")

    def stream(f):
        sols_fh.write(vbf.lut_to_hex(f) + "\n")
        sols_fh.flush()

    t0 = time.time()
    if args.jobs > 1 and mode == "exhaustive" and args.split_depth > 0:
        prefixes = search.split_work(t, cfg, args.split_depth)
        doc = classify.classes_to_json([t])
        cfg_kwargs = dict(cfg.__dict__)
        cfg_kwargs["checkpoint_path"] = None
        rep = search.SearchReport()
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for sub in pool.map(_job_worker,
                                [(doc, cfg_kwargs, p) for p in prefixes]):
                rep.nodes_visited += sub["nodes_visited"]
                rep.max_depth_reached = max(rep.max_depth_reached,
                                            sub["max_depth_reached"])
                for line in sub["solutions"]:
                    f = vbf.lut_from_hex(line)
                    if f not in rep.solutions:
                        rep.solutions.append(f)
                        stream(f)
                if sub["aborted"]:
                    rep.aborted = sub["aborted"]
        rep.exhausted = rep.aborted is None
        rep.elapsed = time.time() - t0
    else:
        eng = search.SearchEngine(t, cfg)
        stop = lambda *a: eng.request_abort("signal")
        old_term = signal.signal(signal.SIGTERM, stop)
        old_int = signal.signal(signal.SIGINT, stop)
        resume = None
        if os.path.exists(ckpt) and mode == "exhaustive" and not args.force:
            resume = eng.read_checkpoint(ckpt)
            print(f"class {t.class_id}: resuming from checkpoint "
                  f"({len(resume)} pinned levels)")
        try:
            rep = eng.run(resume_path=resume, on_solution=stream)
        finally:
            signal.signal(signal.SIGTERM, old_term)
            signal.signal(signal.SIGINT, old_int)
    sols_fh.close()

    with open(report_path, "w") as fh:
        json.dump(rep.to_json_dict(), fh, indent=1)

    if rep.exhausted:
        state = "exhausted"
        if os.path.exists(ckpt):
            os.unlink(ckpt)
    elif rep.aborted in ("budget", "signal") and mode == "exhaustive":
        state = "running-checkpointed"
    else:
        state = "budget-expired"
    manifest.append(n=t.n, class_id=t.class_id, mode=mode, state=state,
                    solutions=len(rep.solutions), nodes=rep.nodes_visited,
                    wall=rep.elapsed,
                    artifacts={"solutions": sols_path, "report": report_path})
    print(f"class {t.class_id}: {state}, {len(rep.solutions)} solutions, "
          f"{rep.nodes_visited} nodes, {rep.elapsed:.1f}s")
    rc = (EXIT_OK if rep.exhausted or rep.aborted == "solution-limit"
          else EXIT_BUDGET)
    return state, rc


def cmd_search(args) -> int:
    if not 1 <= args.n <= 12:
        return _fail_input("n must be in 1..12")
    tuples = _load_classes(args)
    if args.cls == "all":
        targets = []
        for t in tuples:
            v = prune.admissibility(t)
            if v.rejected and not args.force:
                continue
            targets.append(t)
    else:
        try:
            cid = int(args.cls)
        except ValueError:
            return _fail_input("--class must be an id or 'all'")
        try:
            t = classify.tuple_by_class(tuples, cid)
        except KeyError:
            return _fail_input(f"no class {cid} for n={args.n}")
        v = prune.admissibility(t)
        if v.rejected and not args.force:
            print(f"class {cid} is pruned ({v.kind}); --force to search anyway")
            Manifest(os.path.join(args.out, "manifest.jsonl")).append(
                n=t.n, class_id=t.class_id, mode="pruned", state="pruned",
                kind=v.kind, witness=list(v.witness or ()))
            return EXIT_OK
        targets = [t]
    os.makedirs(args.out, exist_ok=True)
    manifest = Manifest(os.path.join(args.out, "manifest.jsonl"))
    code = EXIT_OK
    for t in targets:
        state, rc = _search_one(t, args, manifest, args.out)
        if state == "running-checkpointed" or rc == EXIT_BUDGET:
            code = EXIT_BUDGET
    return code


# ---------------------------------------------------------------------------
# verify / fingerprint / report
# ---------------------------------------------------------------------------

def _read_lut_file(path: str, line_no: int):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    if not lines:
        raise ValueError(f"{path}: no LUT lines")
    if not 1 <= line_no <= len(lines):
        raise ValueError(f"{path}: line {line_no} out of range")
    try:
        return vbf.lut_from_hex(lines[line_no - 1])
    except ValueError as exc:
        raise ValueError(f"{path}: line {line_no}: {exc}") from exc


def cmd_verify(args) -> int:
    try:
        f = _read_lut_file(args.lut, args.line)
        with open(args.a) as fh:
            a = mat_from_hex_rows([ln.strip() for ln in fh if ln.strip()])
        with open(args.b) as fh:
            b = mat_from_hex_rows([ln.strip() for ln in fh if ln.strip()])
    except (OSError, ValueError) as exc:
        return _fail_input(str(exc))
    ok = True
    if vbf.is_permutation(f):
        print("permutation: yes")
    else:
        print("permutation: NO")
        ok = False
    wit = vbf.apn_witness(f)
    if wit is None:
        print("apn: yes")
    else:
        a_, b_, c_ = wit
        print(f"apn: NO (alpha={a_:#x} beta={b_:#x} count={c_})")
        ok = False
    try:
        if vbf.verify_le_automorphism(f, a, b):
            print("self-equivalence F(Ax) = B F(x): yes")
        else:
            print("self-equivalence F(Ax) = B F(x): NO")
            ok = False
    except ValueError as exc:
        return _fail_input(str(exc))
    print("fingerprint:", vbf.fingerprint(f).canonical_json())
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_fingerprint(args) -> int:
    try:
        f = _read_lut_file(args.lut, args.line)
    except (OSError, ValueError) as exc:
        return _fail_input(str(exc))
    print(vbf.fingerprint(f).canonical_json())
    return EXIT_OK


def cmd_report(args) -> int:
    sols = []
    try:
        with open(args.solutions) as fh:
            for i, line in enumerate(fh, 1):
                if line.strip():
                    try:
                        sols.append(vbf.lut_from_hex(line.strip()))
                    except ValueError as exc:
                        raise ValueError(f"{args.solutions}: line {i}: {exc}")
    except (OSError, ValueError) as exc:
        return _fail_input(str(exc))
    groups = dedup.group(sols, n=args.n)
    text = dedup.groups_to_json(groups)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {len(groups)} groups to {args.out}")
    else:
        print(text)
    for g in groups:
        label = g.known_match or "POTENTIALLY-NEW (inequivalent to all known fixtures)"
        print(f"group {g.fingerprint.digest()[:12]}: {len(g.members)} members  {label}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="apnle",
        description="search for APN permutations with a non-trivial linear self-equivalence")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="enumerate tuple classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("prune", help="apply the admissibility filters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", help="classes.json (default: regenerate)")
    p.add_argument("--out")
    p.add_argument("--table1", action="store_true",
                   help="render the comparison against the bundled reference verdicts")
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("search", help="run the orbit-assignment search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", default="all",
                   help="class id, or 'all' for every unpruned class")
    p.add_argument("--classes", help="classes.json (default: regenerate)")
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--budget", type=float, default=None, help="wall seconds")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--split-depth", type=int, default=0)
    p.add_argument("--seed", type=int, default=0, help="RNG seed (random mode)")
    p.add_argument("--seed-fixed-points", action="store_true")
    p.add_argument("--max-solutions", type=int, default=None)
    p.add_argument("--out", default="runs")
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="check a LUT against a tuple")
    p.add_argument("--lut", required=True, help="file of hex LUT lines")
    p.add_argument("--line", type=int, default=1)
    p.add_argument("--a", required=True, help="matrix file: n hex rows")
    p.add_argument("--b", required=True, help="matrix file: n hex rows")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fingerprint", help="print a LUT's CCZ fingerprint")
    p.add_argument("--lut", required=True)
    p.add_argument("--line", type=int, default=1)
    p.set_defaults(func=cmd_fingerprint)

    p = sub.add_parser("report", help="group solutions by fingerprint")
    p.add_argument("--solutions", required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
