"""Enumerate candidate self-equivalence tuples (B, A) of prime order.

A permutation F with a non-trivial linear self-equivalence F o A = B o F can
be normalized so that A and B have the same prime order and are in rational
canonical form, and tuples related by extended power-similarity yield
linearly-equivalent F (or F^-1).  This module enumerates one canonical
representative per class, which for n in {6, 7, 8} reproduces the published
17/27/32-row tables in reference.py.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from . import reference
from .gf2 import (
    Mat, block_diag, companion, fixed_space, identity, mat_mul, order,
    parse_poly, poly_degree, poly_mul, rcf,
)


@dataclass(frozen=True)
class AutoTuple:
    """A candidate tuple (B, A): F o A = B o F with ord(A) = ord(B) = p."""
    n: int
    p: int
    b: Mat
    a: Mat
    class_id: int
    ref_class: int | None
    fixed_dims: tuple[int, int]  # (dim Fix(A), dim Fix(B))

    def key(self) -> tuple:
        return (self.p, self.b.rows, self.a.rows)


def build_block_matrix(spec: str) -> Mat:
    """Build a direct sum from a ';'-separated block spec: `I<k>` is an
    identity block, anything else a companion polynomial."""
    blocks = []
    for token in spec.split(";"):
        token = token.strip()
        if token.upper().startswith("I") and token[1:].isdigit():
            blocks.append(identity(int(token[1:])))
        else:
            blocks.append(companion(parse_poly(token)))
    return block_diag(*blocks)


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


def _ord_mod(base: int, p: int) -> int:
    v, o = base % p, 1
    while v != 1:
        v = (v * base) % p
        o += 1
    return o


def candidate_primes(n: int) -> list[int]:
    """Primes p for which GL(n, 2) contains an element of order p."""
    out = [2] if n >= 2 else []
    for p in range(3, 1 << n):
        if _is_prime(p) and _ord_mod(2, p) <= n:
            out.append(p)
    return out


@lru_cache(maxsize=None)
def cyclotomic_factors(p: int) -> tuple[int, ...]:
    """The irreducible factors of X^p + 1 over F2, for odd prime p:
    X+1 followed by the minimal polynomials of the order-p elements,
    one per cyclotomic coset of 2 mod p."""
    from .vbf import field

    d = _ord_mod(2, p)
    k = field(d)
    beta = k.element_of_order(p)
    seen = set()
    factors = [parse_poly("X+1")]
    for c in range(1, p):
        if c in seen:
            continue
        coset = []
        e = c
        while e not in coset:
            coset.append(e)
            e = (e * 2) % p
        seen.update(coset)
        # expand prod (X - beta^e) with coefficients in F_{2^d}
        coeffs = [1]
        for e in coset:
            root = k.pow(beta, e)
            coeffs = [0] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] ^= k.mul(root, coeffs[i + 1])
        assert all(v in (0, 1) for v in coeffs)
        poly = 0
        for i, v in enumerate(coeffs):
            poly |= v << i
        factors.append(poly)
    return tuple(factors)


def _rcf_from_multiplicities(eldivs: list[tuple[int, int]]) -> Mat:
    """Block matrix from elementary divisors given as (poly, count) pairs of
    pairwise-coprime polynomials: invariant factor i is the product of all
    divisors still present at multiplicity i."""
    maxc = max(c for _, c in eldivs)
    blocks = []
    for i in range(maxc, 0, -1):
        q = 1
        for f, c in eldivs:
            if c >= i:
                q = poly_mul(q, f)
        blocks.append(companion(q))
    return block_diag(*blocks)


def prime_order_rcfs(n: int, p: int) -> list[Mat]:
    """All rational canonical forms in GL(n, 2) of order exactly p."""
    if not _is_prime(p):
        raise ValueError("p must be prime")
    out = []
    if p == 2:
        # elementary divisors X+1 and (X+1)^2 = X^2+1, at least one of the
        # latter; both are powers of the same prime, so the invariant-factor
        # chain is the single-block form I_a (+) Comp(X^2+1)^b directly
        inv = companion(parse_poly("X^2+1"))
        for b in range(1, n // 2 + 1):
            blocks = [identity(n - 2 * b)] if n > 2 * b else []
            blocks += [inv] * b
            out.append(block_diag(*blocks))
    elif _ord_mod(2, p) <= n:
        factors = cyclotomic_factors(p)
        degs = [poly_degree(f) for f in factors]

        def rec(idx, remaining, counts):
            if idx == len(factors):
                if remaining == 0 and any(c for c in counts[1:]):
                    eld = [(f, c) for f, c in zip(factors, counts) if c]
                    out.append(_rcf_from_multiplicities(eld))
                return
            cmax = remaining // degs[idx]
            for c in range(cmax + 1):
                rec(idx + 1, remaining - c * degs[idx], counts + [c])

        rec(0, n, [])
    for m in out:
        assert order(m) == p
    out.sort(key=lambda m: m.rows)
    return out


@lru_cache(maxsize=None)
def _power_rcf_classes(rows: tuple[int, ...], p: int) -> tuple[tuple[int, ...], ...]:
    """index i-1 -> rcf(M^i).rows for i in 1..p-1."""
    m = Mat(len(rows), rows)
    out = []
    cur = m
    for _ in range(p - 1):
        out.append(rcf(cur).matrix.rows)
        cur = mat_mul(cur, m)
    return tuple(out)


def power_similar(t1: tuple[Mat, Mat], t2: tuple[Mat, Mat], p: int) -> bool:
    """True iff some power i in 1..p-1 has t1[0] ~ t2[0]^i and t1[1] ~ t2[1]^i."""
    for m in (*t1, *t2):
        if order(m) != p:
            raise ValueError("all four matrices must have order p")
    first1 = rcf(t1[0]).matrix.rows
    second1 = rcf(t1[1]).matrix.rows
    pc0 = _power_rcf_classes(t2[0].rows, p)
    pc1 = _power_rcf_classes(t2[1].rows, p)
    return any(pc0[i] == first1 and pc1[i] == second1 for i in range(p - 1))


def extended_power_similar(t1: tuple[Mat, Mat], t2: tuple[Mat, Mat], p: int) -> bool:
    """Power-similarity plus the inverse-swap branch for permutations."""
    if power_similar(t1, t2, p):
        return True
    return power_similar((t1[1], t1[0]), t2, p)


def _tuple_orbit(b: Mat, a: Mat, p: int) -> set[tuple]:
    """All RCF pairs extended-power-similar to (b, a)."""
    pb = _power_rcf_classes(b.rows, p)
    pa = _power_rcf_classes(a.rows, p)
    orbit = set()
    for i in range(p - 1):
        orbit.add((pb[i], pa[i]))
        orbit.add((pa[i], pb[i]))
    return orbit


def enumerate_classes(n: int) -> list[AutoTuple]:
    """Canonical representatives of the permutation-compatible tuples (B, A),
    one per extended-power-similarity class, deterministically ordered.

    Only pairs with matching fixed-space dimensions appear: a permutation F
    maps Fix(A) onto Fix(B), so mismatched dimensions admit no permutation
    at all.
    """
    if not 1 <= n <= 12:
        raise ValueError("n must be in 1..12")
    canon: dict[tuple, tuple] = {}
    for p in candidate_primes(n):
        rcfs = prime_order_rcfs(n, p)
        fix = {m.rows: fixed_space(m, 1)[0] for m in rcfs}
        seen: set[tuple] = set()
        for b in rcfs:
            for a in rcfs:
                if fix[b.rows] != fix[a.rows]:
                    continue
                if (b.rows, a.rows) in seen:
                    continue
                orbit = _tuple_orbit(b, a, p)
                seen.update(orbit)
                rep = min(orbit)
                canon[(p, *rep)] = (p, rep[0], rep[1])
    tuples = []
    for p, browz, arows in sorted(canon.values()):
        b = Mat(n, browz)
        a = Mat(n, arows)
        tuples.append(AutoTuple(
            n=n, p=p, b=b, a=a, class_id=0, ref_class=None,
            fixed_dims=(fixed_space(a, 1)[0], fixed_space(b, 1)[0])))
    refs = [match_reference_class(t) for t in tuples]
    if all(r is not None for r in refs) and len(set(refs)) == len(refs):
        paired = sorted(zip(refs, tuples))
        tuples = [t for _, t in paired]
        ids = [r for r, _ in paired]
    else:
        ids = list(range(1, len(tuples) + 1))
    return [AutoTuple(t.n, t.p, t.b, t.a, i, r if isinstance(r, int) else None,
                      t.fixed_dims)
            for t, i, r in zip(tuples, ids,
                               [match_reference_class(t) for t in tuples])]


def match_reference_class(t: AutoTuple) -> int | None:
    """Index of t in the bundled reference table, via extended
    power-similarity; None when n has no table or nothing matches."""
    table = reference.KNOWN_CLASSES.get(t.n)
    if table is None:
        return None
    for idx, (bs, as_) in enumerate(table, start=1):
        bref = build_block_matrix(bs)
        aref = build_block_matrix(as_)
        if order(bref) != t.p or order(aref) != t.p:
            continue
        if extended_power_similar((t.b, t.a), (bref, aref), t.p):
            return idx
    return None


def degenerate_pairs(n: int) -> list[tuple[str, Mat]]:
    """The one-sided cases (A = I, ord B = p) and (B = I, ord A = p), up to
    power-similarity of the non-identity component.  These admit no
    permutation F (a permutation forces equal orders), so the search
    pipeline excludes them; they are enumerated for completeness only."""
    out = []
    for p in candidate_primes(n):
        reps = []
        seen: set[tuple] = set()
        for m in prime_order_rcfs(n, p):
            if m.rows in seen:
                continue
            seen.update(_power_rcf_classes(m.rows, p))
            reps.append(m)
        for m in reps:
            out.append(("A=I", m))
            out.append(("B=I", m))
    return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def classes_to_json(tuples: list[AutoTuple]) -> str:
    items = [{
        "n": t.n,
        "p": t.p,
        "class_id": t.class_id,
        "paper_class": t.ref_class,
        "B_rows_hex": t.b.hex_rows(),
        "A_rows_hex": t.a.hex_rows(),
        "fixed_dims": list(t.fixed_dims),
    } for t in tuples]
    return json.dumps({"schema": reference.SCHEMA_CLASSES, "classes": items},
                      indent=1)


def classes_from_json(text: str) -> list[AutoTuple]:
    doc = json.loads(text)
    if doc.get("schema") != reference.SCHEMA_CLASSES:
        raise ValueError("unrecognized classes schema")
    out = []
    for item in doc["classes"]:
        b = Mat(item["n"], tuple(int(s, 16) for s in item["B_rows_hex"]))
        a = Mat(item["n"], tuple(int(s, 16) for s in item["A_rows_hex"]))
        out.append(AutoTuple(item["n"], item["p"], b, a, item["class_id"],
                             item["paper_class"], tuple(item["fixed_dims"])))
    return out


def tuple_by_class(tuples: list[AutoTuple], class_id: int) -> AutoTuple:
    for t in tuples:
        if t.class_id == class_id:
            return t
    raise KeyError(f"no class {class_id}")
