"""Exact linear algebra over GF(2): bit-packed vectors, matrices, polynomials.

Conventions used throughout the package:

  Vector: an element of F2^n is an integer 0..2^n-1, bit k = coordinate k.
  Matrix: n rows, each row an integer bit mask; rows[i] bit j = M[i][j].
          Vectors are columns, so apply(M, x)[i] = popcount(rows[i] & x) mod 2.
  Polynomial: an element of F2[X] is an integer bit mask, bit k = coefficient
          of X^k.  The zero polynomial is 0 and has no degree (poly_degree
          returns None rather than -1, so degree arithmetic never underflows).

Matrices serialize as n hex-encoded row words (one per line); polynomials as
hex coefficient masks.  Everything here is an immutable value: safe to share
between worker processes without synchronization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache


# ---------------------------------------------------------------------------
# polynomials over F2, packed into ints
# ---------------------------------------------------------------------------

def poly_degree(p: int):
    """Degree of p, or None for the zero polynomial."""
    return p.bit_length() - 1 if p else None


def poly_mul(a: int, b: int) -> int:
    """Carry-less product of two polynomials."""
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of a by b, deg(remainder) < deg(b)."""
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    m = a.bit_length()
    n = b.bit_length()
    if m < n:
        return 0, a
    q = 0
    b <<= m - n
    for shift in range(m - n, -1, -1):
        q <<= 1
        if (a >> (shift + n - 1)) & 1:
            a ^= b
            q |= 1
        b >>= 1
    return q, a


def poly_mod(a: int, b: int) -> int:
    return poly_divmod(a, b)[1]


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def poly_lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return poly_mul(poly_divmod(a, poly_gcd(a, b))[0], b)


def poly_pow_mod(a: int, e: int, m: int) -> int:
    """a^e mod m by binary exponentiation."""
    r = 1
    a = poly_mod(a, m)
    while e:
        if e & 1:
            r = poly_mod(poly_mul(r, a), m)
        a = poly_mod(poly_mul(a, a), m)
        e >>= 1
    return r


def poly_eval_mat(p: int, m: "Mat") -> "Mat":
    """Evaluate p at a matrix: p(M) over F2."""
    acc = mat_zero(m.n)
    power = identity(m.n)
    while p:
        if p & 1:
            acc = mat_add(acc, power)
        p >>= 1
        if p:
            power = mat_mul(power, m)
    return acc


@lru_cache(maxsize=None)
def irreducibles(max_degree: int) -> tuple[int, ...]:
    """All monic irreducible polynomials of degree 1..max_degree, ascending."""
    out = []
    for p in range(2, 1 << (max_degree + 1)):
        d = p.bit_length() - 1
        if all(poly_mod(p, q) != 0 for q in out if 2 * (q.bit_length() - 1) <= d):
            out.append(p)
    return tuple(out)


def poly_is_irreducible(p: int) -> bool:
    d = poly_degree(p)
    if d is None or d == 0:
        return False
    return all(poly_mod(p, q) != 0
               for q in irreducibles(d // 2) if q != p)


def poly_factor(p: int) -> dict[int, int]:
    """Factor p into irreducibles, returned as {factor: multiplicity}."""
    if p == 0:
        raise ValueError("cannot factor the zero polynomial")
    out: dict[int, int] = {}
    d = poly_degree(p)
    for q in irreducibles(d):
        while True:
            quo, rem = poly_divmod(p, q)
            if rem != 0:
                break
            p = quo
            out[q] = out.get(q, 0) + 1
        if p == 1:
            break
    if p != 1:
        out[p] = out.get(p, 0) + 1
    return out


def parse_poly(s: str) -> int:
    """Parse a polynomial written like 'X^6+X^3+X^2+1' (also accepts 'x')."""
    p = 0
    for term in s.replace(" ", "").lower().split("+"):
        if term == "1":
            p ^= 1
        elif term == "x":
            p ^= 2
        elif term.startswith("x^"):
            p ^= 1 << int(term[2:])
        else:
            raise ValueError(f"bad polynomial term: {term!r}")
    return p


def format_poly(p: int) -> str:
    if p == 0:
        return "0"
    terms = []
    for k in range(p.bit_length() - 1, -1, -1):
        if (p >> k) & 1:
            terms.append("1" if k == 0 else ("X" if k == 1 else f"X^{k}"))
    return "+".join(terms)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mat:
    """n x n matrix over F2; rows[i] bit j = entry (i, j)."""
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count does not match dimension")
        mask = (1 << self.n) - 1
        if any(r & ~mask for r in self.rows):
            raise ValueError("row word has bits beyond the dimension")

    def hex_rows(self) -> list[str]:
        return [f"{r:x}" for r in self.rows]


def mat_from_hex_rows(lines: list[str]) -> Mat:
    rows = tuple(int(s, 16) for s in lines)
    return Mat(len(rows), rows)


def mat_zero(n: int) -> Mat:
    return Mat(n, (0,) * n)


def identity(n: int) -> Mat:
    return Mat(n, tuple(1 << i for i in range(n)))


def mat_add(a: Mat, b: Mat) -> Mat:
    return Mat(a.n, tuple(x ^ y for x, y in zip(a.rows, b.rows)))


def apply(m: Mat, x: int) -> int:
    """M*x with x a column vector."""
    y = 0
    for i, row in enumerate(m.rows):
        y |= ((row & x).bit_count() & 1) << i
    return y


def mat_mul(a: Mat, b: Mat) -> Mat:
    """Matrix product A*B: row i of the result = sum of B-rows picked by Aly."""
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    brows = b.rows
    out = []
    for arow in a.rows:
        acc = 0
        k = 0
        while arow:
            if arow & 1:
                acc ^= brows[k]
            arow >>= 1
            k += 1
        out.append(acc)
    return Mat(a.n, tuple(out))


def mat_pow(m: Mat, e: int) -> Mat:
    if e < 0:
        return mat_pow(inverse(m), -e)
    r = identity(m.n)
    while e:
        if e & 1:
            r = mat_mul(r, m)
        m = mat_mul(m, m)
        e >>= 1
    return r


def transpose(m: Mat) -> Mat:
    out = [0] * m.n
    for i, row in enumerate(m.rows):
        j = 0
        while row:
            if row & 1:
                out[j] |= 1 << i
            row >>= 1
            j += 1
    return Mat(m.n, tuple(out))


def block_diag(*blocks: Mat) -> Mat:
    n = sum(b.n for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        rows.extend(r << off for r in b.rows)
        off += b.n
    return Mat(n, tuple(rows))


def rank(m: Mat) -> int:
    rows = list(m.rows)
    r = 0
    for col in range(m.n):
        bit = 1 << col
        piv = next((i for i in range(r, m.n) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(m.n):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        r += 1
    return r


def is_invertible(m: Mat) -> bool:
    return rank(m) == m.n


def inverse(m: Mat) -> Mat:
    """Gauss-Jordan inverse; raises on singular input."""
    n = m.n
    aug = [m.rows[i] | (1 << (n + i)) for i in range(n)]
    r = 0
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(r, n) if aug[i] & bit), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(n):
            if i != r and aug[i] & bit:
                aug[i] ^= aug[r]
        r += 1
    mask = (1 << n) - 1
    return Mat(n, tuple((row >> n) & mask for row in aug))


def kernel_basis(m: Mat) -> list[int]:
    """Basis vectors x with M*x = 0."""
    n = m.n
    rows = list(m.rows)
    pivot_of_col: dict[int, int] = {}
    r = 0
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(r, n) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivot_of_col[col] = r
        r += 1
    basis = []
    for col in range(n):
        if col in pivot_of_col:
            continue
        v = 1 << col
        for pc, pr in pivot_of_col.items():
            if (rows[pr] >> col) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis


def solve(m: Mat, b: int):
    """One solution x of M*x = b, or None if inconsistent."""
    n = m.n
    rows = [m.rows[i] | (((b >> i) & 1) << n) for i in range(n)]
    r = 0
    pivots = []
    for col in range(n):
        bit = 1 << col
        piv = next((i for i in range(r, n) if rows[i] & bit), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i] & bit:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    for i in range(r, n):
        if rows[i] >> n:
            return None
    x = 0
    for i, col in enumerate(pivots):
        if rows[i] >> n:
            x |= 1 << col
    return x


def random_invertible(n: int, rng: random.Random) -> Mat:
    while True:
        m = Mat(n, tuple(rng.randrange(1 << n) for _ in range(n)))
        if is_invertible(m):
            return m


def mat_to_lut(m: Mat) -> list[int]:
    """Tabulate x -> M*x over all 2^n inputs (hot-path form of a linear map)."""
    n = m.n
    lut = [0] * (1 << n)
    for j in range(n):
        col = apply(m, 1 << j)
        step = 1 << j
        for x in range(step, 1 << n, 2 * step):
            for t in range(x, x + step):
                lut[t] = lut[t - step] ^ col
    # lut[0] = 0 and lut[x ^ y] = lut[x] ^ lut[y] by construction
    return lut


# ---------------------------------------------------------------------------
# companion matrices and the rational canonical form
# ---------------------------------------------------------------------------

def companion(q: int) -> Mat:
    """Companion matrix of a monic q with q(0) = 1 (so the result is invertible):
    ones on the subdiagonal, last column = the low coefficients of q."""
    d = poly_degree(q)
    if d is None or d < 1:
        raise ValueError("polynomial must have degree >= 1")
    if not (q & 1):
        raise ValueError("constant term must be 1 (companion matrix would be singular)")
    rows = []
    for i in range(d):
        row = ((q >> i) & 1) << (d - 1)
        if i >= 1:
            row |= 1 << (i - 1)
        rows.append(row)
    return Mat(d, tuple(rows))


@dataclass(frozen=True)
class RcfDecomposition:
    """Block-companion normal form plus its invariant factors.

    invariant_factors is ordered exactly as the blocks appear (top-left
    first), so each factor divides the next and the last one is the
    minimal polynomial.
    """
    matrix: Mat
    invariant_factors: tuple[int, ...]


def _poly_mat_snf_invariants(pm: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form of a square polynomial matrix.

    Entries are polynomials over F2 packed as ints.  Returns d_1 | d_2 | ...
    including unit entries.
    """
    n = len(pm)
    pm = [row[:] for row in pm]
    for t in range(n):
        while True:
            # pivot: nonzero entry of minimal degree in the trailing block
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    e = pm[i][j]
                    if e and (best is None or e.bit_length() < pm[best[0]][best[1]].bit_length()):
                        best = (i, j)
            if best is None:
                return [pm[i][i] for i in range(n)]
            bi, bj = best
            pm[t], pm[bi] = pm[bi], pm[t]
            for row in pm:
                row[t], row[bj] = row[bj], row[t]
            piv = pm[t][t]
            dirty = False
            for i in range(t + 1, n):
                if pm[i][t]:
                    q = poly_divmod(pm[i][t], piv)[0]
                    pm[i] = [a ^ poly_mul(q, b) for a, b in zip(pm[i], pm[t])]
                    if pm[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if pm[t][j]:
                    q = poly_divmod(pm[t][j], piv)[0]
                    for row in pm:
                        row[j] ^= poly_mul(q, row[t])
                    if pm[t][j]:
                        dirty = True
            if dirty:
                continue
            if any(pm[i][t] for i in range(t + 1, n)) or any(pm[t][j] for j in range(t + 1, n)):
                continue
            # pivot must divide every remaining entry; if not, fold the
            # offending row into row t and redo this step
            offender = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if pm[i][j] and poly_mod(pm[i][j], piv):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            pm[t] = [a ^ b for a, b in zip(pm[t], pm[offender])]
    return [pm[i][i] for i in range(n)]


def invariant_factors(m: Mat) -> tuple[int, ...]:
    """Invariant factors of m (nontrivial diagonal of SNF of XI - M),
    in divisibility order: each divides the next."""
    n = m.n
    # entry (i, j) of XI + M as a polynomial: M[i][j] + X*[i==j]
    pm = [[((m.rows[i] >> j) & 1) | ((i == j) << 1) for j in range(n)]
          for i in range(n)]
    diag = _poly_mat_snf_invariants(pm)
    facs = [d for d in diag if poly_degree(d) and poly_degree(d) >= 1]
    facs.sort(key=lambda p: p.bit_length())
    total = sum(p.bit_length() - 1 for p in facs)
    if total != n:
        raise AssertionError("invariant factor degrees do not sum to n")
    return tuple(facs)


def rcf(m: Mat) -> RcfDecomposition:
    """Rational canonical form of an invertible matrix."""
    if not is_invertible(m):
        raise ValueError("rcf is only defined here for invertible matrices")
    facs = invariant_factors(m)
    blocks = [companion(q) for q in facs]
    return RcfDecomposition(block_diag(*blocks), facs)


def is_similar(a: Mat, b: Mat) -> bool:
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    return rcf(a).matrix == rcf(b).matrix


def minimal_polynomial(m: Mat) -> int:
    """Least-degree monic p with p(M) = 0, via Krylov chains.

    Independent of the SNF route used by rcf(), which makes the two
    cross-checkable: the minimal polynomial equals the last invariant factor.
    """
    n = m.n
    acc = 1  # running lcm of the per-vector annihilators
    for j in range(n):
        v = 1 << j
        if poly_degree(acc) == n:
            break
        # Krylov chain v, Mv, M^2 v, ... until linearly dependent;
        # each basis entry remembers which chain elements it combines
        basis: list[tuple[int, int]] = []  # (reduced vector, combo mask)
        cur = v
        step = 0
        while True:
            red = cur
            combo = 1 << step
            for bv, bc in basis:
                pivot = bv & -bv
                if red & pivot:
                    red ^= bv
                    combo ^= bc
            if red == 0:
                # combo encodes the monic annihilating polynomial of v
                acc = poly_lcm(acc, combo)
                break
            basis.append((red, combo))
            cur = apply(m, cur)
            step += 1
    return acc


# ---------------------------------------------------------------------------
# orders and fixed spaces
# ---------------------------------------------------------------------------

def _mult_order_mod(f: int) -> int:
    """Multiplicative order of X modulo an irreducible f (f != X)."""
    d = poly_degree(f)
    t = (1 << d) - 1
    for p in _prime_factors(t):
        while t % p == 0 and poly_pow_mod(2, t // p, f) == 1:
            t //= p
    return t


def _prime_factors(v: int) -> list[int]:
    out = []
    d = 2
    while d * d <= v:
        if v % d == 0:
            out.append(d)
            while v % d == 0:
                v //= d
        d += 1
    if v > 1:
        out.append(v)
    return out


def order(m: Mat) -> int:
    """Multiplicative order of an invertible matrix.

    Computed from the factored minimal polynomial; verified by one final
    power check, which also guards against singular inputs sneaking in.
    """
    mp = minimal_polynomial(m)
    if not (mp & 1):
        raise ValueError("matrix is singular")
    odd = 1
    max_mult = 0
    for f, e in poly_factor(mp).items():
        max_mult = max(max_mult, e)
        if f != 3:  # X+1 contributes only to the 2-power part
            o = _mult_order_mod(f)
            odd = odd * o // _gcd_int(odd, o)
    two = 1
    while two < max_mult:
        two <<= 1
    result = odd * two
    if mat_pow(m, result) != identity(m.n):
        raise ArithmeticError("order verification failed")
    return result


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def point_order(m: Mat, x: int) -> int:
    """Smallest i >= 1 with M^i x = x; divides order(M)."""
    y = apply(m, x)
    i = 1
    while y != x:
        y = apply(m, y)
        i += 1
    return i


def fixed_space(m: Mat, i: int = 1) -> tuple[int, list[int]]:
    """Dimension and basis of {x : M^i x = x} = ker(M^i + I)."""
    mi = mat_pow(m, i)
    basis = kernel_basis(mat_add(mi, identity(m.n)))
    return len(basis), basis


def span(basis: list[int]) -> list[int]:
    """All vectors in the span of the given basis (2^k elements)."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out


# ---------------------------------------------------------------------------
# commutants and extendability
# ---------------------------------------------------------------------------

def _commutant_kernel(m: Mat) -> list[Mat]:
    """Basis of the algebra {X : XM = MX}, as matrices."""
    n = m.n
    # unknowns X[i][j], index i*n + j; equation (r, c): (XM + MX)[r][c] = 0
    nn = n * n
    eq_rows = []
    for r in range(n):
        for c in range(n):
            mask = 0
            # (XM)[r][c] = sum_k X[r][k] M[k][c]
            for k in range(n):
                if (m.rows[k] >> c) & 1:
                    mask ^= 1 << (r * n + k)
            # (MX)[r][c] = sum_k M[r][k] X[k][c]
            for k in range(n):
                if (m.rows[r] >> k) & 1:
                    mask ^= 1 << (k * n + c)
            eq_rows.append(mask)
    sol = _kernel_of_system(eq_rows, nn)
    out = []
    for v in sol:
        rows = tuple((v >> (i * n)) & ((1 << n) - 1) for i in range(n))
        out.append(Mat(n, rows))
    return out


def _kernel_of_system(eq_rows: list[int], nvars: int) -> list[int]:
    """Kernel basis of a linear system given as equation bit masks."""
    rows = [r for r in eq_rows if r]
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    for r in rows:
        for pr, pc in zip(pivot_rows, pivot_cols):
            if (r >> pc) & 1:
                r ^= pr
        if r:
            c = (r & -r).bit_length() - 1
            for i, pr in enumerate(pivot_rows):
                if (pr >> c) & 1:
                    pivot_rows[i] ^= r
            pivot_rows.append(r)
            pivot_cols.append(c)
    piv_set = set(pivot_cols)
    basis = []
    for col in range(nvars):
        if col in piv_set:
            continue
        v = 1 << col
        for pr, pc in zip(pivot_rows, pivot_cols):
            if (pr >> col) & 1:
                v |= 1 << pc
        basis.append(v)
    return basis


DEFAULT_COMMUTANT_BUDGET = 1 << 16


def commutant(m: Mat, budget: int = DEFAULT_COMMUTANT_BUDGET) -> list[Mat]:
    """Invertible matrices commuting with m.

    Exhaustive (every invertible element of the centralizer algebra) when
    2^dim fits in the budget; otherwise a sampled subset that always
    contains I, m, and the cyclic group of a maximal-order sampled element.
    Either way every returned matrix commutes with m.
    """
    n = m.n
    basis = _commutant_kernel(m)
    k = len(basis)
    ident = identity(n)
    if budget and (1 << k) <= budget:
        out = []
        # Gray-code walk over the algebra
        cur = mat_zero(n)
        prev_gray = 0
        for g in range(1 << k):
            gray = g ^ (g >> 1)
            diff = gray ^ prev_gray
            if diff:
                cur = mat_add(cur, basis[diff.bit_length() - 1])
            prev_gray = gray
            if gray and is_invertible(cur):
                out.append(cur)
        out.sort(key=lambda x: x.rows)
        return out
    # sampled mode: deterministic RNG so runs are reproducible
    rng = random.Random(0xC0117)
    seen = {ident.rows: ident, m.rows: m}
    best = m
    best_ord = order(m)
    for _ in range(4 * budget):
        if len(seen) >= budget:
            break
        v = rng.getrandbits(k)
        cand = mat_zero(n)
        for i in range(k):
            if (v >> i) & 1:
                cand = mat_add(cand, basis[i])
        if cand.rows in seen or not is_invertible(cand):
            continue
        seen[cand.rows] = cand
        o = order(cand)
        if o > best_ord:
            best, best_ord = cand, o
    # close under the cyclic group of the best element found
    p = best
    for _ in range(best_ord - 1):
        seen.setdefault(p.rows, p)
        p = mat_mul(p, best)
    return sorted(seen.values(), key=lambda x: x.rows)


def _gl_generators(k: int) -> list[Mat]:
    """A generating set of GL(k, 2): a full cycle and one transvection."""
    if k <= 1:
        return [identity(max(k, 1))] if k == 1 else []
    cycle = Mat(k, tuple(1 << ((i + 1) % k) for i in range(k)))
    trans_rows = list(identity(k).rows)
    trans_rows[0] |= 1 << 1  # row 0 += row 1
    return [cycle, Mat(k, tuple(trans_rows))]


def _restricted_commutant_solution(m: Mat, fix_basis: list[int],
                                   targets: list[int]):
    """Solve {X : XM = MX, X b_i = t_i}; return (particular, kernel basis)
    as row-tuple ints, or None if infeasible."""
    n = m.n
    nn = n * n
    eqs = []
    rhs_bits = []
    # commuting equations (homogeneous)
    for r in range(n):
        for c in range(n):
            mask = 0
            for k in range(n):
                if (m.rows[k] >> c) & 1:
                    mask ^= 1 << (r * n + k)
                if (m.rows[r] >> k) & 1:
                    mask ^= 1 << (k * n + c)
            eqs.append(mask)
            rhs_bits.append(0)
    # restriction equations: row r of X dotted with b must equal bit r of t
    for b, t in zip(fix_basis, targets):
        for r in range(n):
            mask = 0
            for j in range(n):
                if (b >> j) & 1:
                    mask ^= 1 << (r * n + j)
            eqs.append(mask)
            rhs_bits.append((t >> r) & 1)
    # eliminate
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    aug = []
    for mask, rb in zip(eqs, rhs_bits):
        row = mask | (rb << nn)
        for pr, pc in zip(pivot_rows, pivot_cols):
            if (row >> pc) & 1:
                row ^= pr
        low = row & ((1 << nn) - 1)
        if low == 0:
            if row >> nn:
                return None
            continue
        c = (low & -low).bit_length() - 1
        for i, pr in enumerate(pivot_rows):
            if (pr >> c) & 1:
                pivot_rows[i] ^= row
        pivot_rows.append(row)
        pivot_cols.append(c)
        aug.append(row)
    particular = 0
    for pr, pc in zip(pivot_rows, pivot_cols):
        if pr >> nn:
            particular |= 1 << pc
    piv_set = set(pivot_cols)
    kernel = []
    for col in range(nn):
        if col in piv_set:
            continue
        v = 1 << col
        for pr, pc in zip(pivot_rows, pivot_cols):
            if (pr >> col) & 1:
                v |= 1 << pc
        kernel.append(v)
    return particular, kernel


def _vec_to_mat(v: int, n: int) -> Mat:
    mask = (1 << n) - 1
    return Mat(n, tuple((v >> (i * n)) & mask for i in range(n)))


def _invertible_in_coset(particular: int, kernel: list[int], n: int):
    """Find an invertible matrix in particular + span(kernel), or None.

    Tries the particular solution, then seeded random samples, then a full
    enumeration when the coset is small enough to walk.
    """
    cand = _vec_to_mat(particular, n)
    if is_invertible(cand):
        return cand
    k = len(kernel)
    rng = random.Random(0xE17E4D)
    for _ in range(4096):
        v = particular
        r = rng.getrandbits(k) if k else 0
        for i in range(k):
            if (r >> i) & 1:
                v ^= kernel[i]
        cand = _vec_to_mat(v, n)
        if is_invertible(cand):
            return cand
    if k <= 22:
        for r in range(1 << k):
            v = particular
            for i in range(k):
                if (r >> i) & 1:
                    v ^= kernel[i]
            cand = _vec_to_mat(v, n)
            if is_invertible(cand):
                return cand
        return None
    raise ArithmeticError("coset too large to certify absence of invertible lift")


def extend_fixed_space_map(m: Mat, l_small: Mat):
    """Lift a linear permutation of ker(M+I) to an invertible matrix
    commuting with M, or return None when no lift exists.

    l_small acts on coordinates of the fixed-space basis returned by
    fixed_space(m, 1).
    """
    dim, basis = fixed_space(m, 1)
    if l_small.n != dim:
        raise ValueError("map dimension does not match the fixed space")
    if dim == 0:
        return identity(m.n)
    targets = []
    for i, b in enumerate(basis):
        img = apply(l_small, 1 << i)
        t = 0
        for j in range(dim):
            if (img >> j) & 1:
                t ^= basis[j]
        targets.append(t)
    sol = _restricted_commutant_solution(m, basis, targets)
    if sol is None:
        return None
    return _invertible_in_coset(sol[0], sol[1], m.n)


def is_extendable(m: Mat) -> bool:
    """True iff every linear permutation of ker(M+I) lifts to an invertible
    matrix commuting with M.  Liftable permutations form a subgroup of
    GL(k, 2), so checking a generating set suffices."""
    dim, _ = fixed_space(m, 1)
    if dim <= 1:
        return True
    return all(extend_fixed_space_map(m, g) is not None
               for g in _gl_generators(dim))
