"""Inadmissibility filters for candidate tuples.

Two necessary conditions for a tuple (B, A) to be realized by an APN
permutation:

  * every power of the pair fixes subspaces of equal dimension on both
    sides, and that common dimension can never be 2, 4, or n-1 (no APN
    permutation exists on an invariant subspace of those dimensions);

  * no quadrinomial X^a + X^b + X^c + 1 may annihilate both A and B modulo
    X^p + 1: applying such a relation to a full orbit produces four points
    whose images break the APN bound.

A tuple surviving both filters is Undecided and goes to the search engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import reference
from .classify import AutoTuple
from .gf2 import Mat, fixed_space, identity, mat_add, mat_mul, mat_zero


@dataclass(frozen=True)
class Verdict:
    kind: str  # "RejectedDim" | "RejectedQuadrinomial" | "Undecided"
    witness: tuple | None = None

    @property
    def rejected(self) -> bool:
        return self.kind != "Undecided"


def dim_filter(t: AutoTuple) -> Verdict:
    """Reject on fixed-space evidence, checking each divisor i of p.

    For i = p both sides fix everything; dimension n is the whole space and
    never rejects (only proper nontrivial invariant subspaces carry
    information).
    """
    n = t.n
    for i in (1, t.p):
        da = fixed_space(t.a, i)[0]
        db = fixed_space(t.b, i)[0]
        if da != db:
            return Verdict("RejectedDim", (i, da, db))
        if da in (2, 4, n - 1) and 0 < da < n:
            return Verdict("RejectedDim", (i, da))
    return Verdict("Undecided")


def quadrinomial_filter(t: AutoTuple) -> Verdict:
    """Search exponent triples 0 < c < b < a < p with
    A^a + A^b + A^c + I = 0 = B^a + B^b + B^c + I.

    Exponents are required distinct and nonzero mod p: degenerate collisions
    collapse the four-point argument (in particular A^p + I = 0 must never
    count as a witness).  Deterministic order: a descending, then (b, c)
    ascending; the first witness is reported.
    """
    p = t.p
    if p < 5:
        return Verdict("Undecided")  # no room for three distinct exponents
    n = t.n
    pow_a = [identity(n)]
    pow_b = [identity(n)]
    for _ in range(p - 1):
        pow_a.append(mat_mul(pow_a[-1], t.a))
        pow_b.append(mat_mul(pow_b[-1], t.b))
    exp_of_a = {pow_a[i].rows: i for i in range(p)}
    zero = mat_zero(n)
    for a in range(p - 1, 2, -1):
        for b in range(1, a):
            need = mat_add(mat_add(pow_a[a], pow_a[b]), identity(n))
            c = exp_of_a.get(need.rows)
            if c is None or not 0 < c < b:
                continue
            if mat_add(mat_add(mat_add(pow_b[a], pow_b[b]), pow_b[c]),
                       identity(n)) == zero:
                return Verdict("RejectedQuadrinomial", (a, b, c))
    return Verdict("Undecided")


def admissibility(t: AutoTuple) -> Verdict:
    """Dimension filter first, then the quadrinomial filter."""
    v = dim_filter(t)
    if v.rejected:
        return v
    return quadrinomial_filter(t)


def verify_quadrinomial_witness(t: AutoTuple, witness: tuple) -> bool:
    a, b, c = witness
    n = t.n
    zero = mat_zero(n)
    for m in (t.a, t.b):
        acc = mat_add(identity(n), mat_zero(n))
        powers = {0: identity(n)}
        cur = identity(n)
        for i in range(1, a + 1):
            cur = mat_mul(cur, m)
            powers[i] = cur
        s = mat_add(mat_add(powers[a], powers[b]),
                    mat_add(powers[c], identity(n)))
        if s != zero:
            return False
    return True


# ---------------------------------------------------------------------------
# reference comparison and serialization
# ---------------------------------------------------------------------------

_VERDICT_CODE = {"RejectedDim": "dim", "RejectedQuadrinomial": "quad",
                 "Undecided": "undecided"}


def verdict_code(v: Verdict) -> str:
    return _VERDICT_CODE[v.kind]


def expected_code(n: int, class_id: int):
    """The bundled reference verdict for a class, normalized to this
    module's vocabulary: filters must stay Undecided on rows the reference
    closes by search or leaves open."""
    table = reference.EXPECTED_VERDICTS.get(n)
    if table is None:
        return None
    code = table[class_id]
    return code if code in ("dim", "quad") else "undecided"


def compare_with_reference(tuples: list[AutoTuple]) -> list[dict]:
    rows = []
    for t in tuples:
        v = admissibility(t)
        expect = expected_code(t.n, t.class_id)
        rows.append({
            "n": t.n,
            "class_id": t.class_id,
            "verdict": verdict_code(v),
            "witness": list(v.witness) if v.witness else None,
            "expected": expect,
            "match": None if expect is None else verdict_code(v) == expect,
        })
    return rows


def verdicts_to_json(rows: list[dict]) -> str:
    return json.dumps({"schema": reference.SCHEMA_VERDICTS, "verdicts": rows},
                      indent=1)
