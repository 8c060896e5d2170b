"""Vectorial Boolean functions as lookup tables.

A function F: F2^n -> F2^n is a list of 2^n ints ("LUT").  This module holds
the DDT/APN machinery, finite-field constructions used as fixtures
(monomials, the 6-bit quadratic APN representative, open butterflies),
self-equivalence verification, and CCZ-invariant fingerprints.

LUTs serialize as 2^n space-separated hex words on a single line.
Fingerprints serialize as canonical JSON with sorted multisets.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2
from .gf2 import Mat, apply, block_diag, companion, identity, mat_to_lut


def lut_dim(f) -> int:
    n = len(f).bit_length() - 1
    if 1 << n != len(f):
        raise ValueError("LUT length must be a power of two")
    return n


def is_permutation(f) -> bool:
    return sorted(f) == list(range(len(f)))


def lut_to_hex(f) -> str:
    width = (lut_dim(f) + 3) // 4
    return " ".join(f"{v:0{width}x}" for v in f)


def lut_from_hex(line: str) -> list[int]:
    f = [int(tok, 16) for tok in line.split()]
    n = lut_dim(f)
    if any(not 0 <= v < (1 << n) for v in f):
        raise ValueError("LUT entry out of range")
    return f


# ---------------------------------------------------------------------------
# DDT and the APN property
# ---------------------------------------------------------------------------

def ddt(f) -> np.ndarray:
    """counts[a][b] = #{x : F(x) ^ F(x^a) = b}."""
    N = len(f)
    arr = np.asarray(f, dtype=np.intp)
    x = np.arange(N, dtype=np.intp)
    out = np.empty((N, N), dtype=np.int64)
    for a in range(N):
        out[a] = np.bincount(arr ^ arr[x ^ a], minlength=N)
    return out


def apn_witness(f):
    """None if F is APN, else the first (a, b, count) with count > 2, a != 0."""
    t = ddt(f)
    bad = np.argwhere(t[1:] > 2)
    if len(bad) == 0:
        return None
    a, b = bad[0]
    return int(a) + 1, int(b), int(t[a + 1][b])


def is_apn(f) -> bool:
    return apn_witness(f) is None


def differential_spectrum(f) -> list[tuple[int, int]]:
    """Multiset of DDT entries over nonzero input differences, as sorted
    (value, count) pairs."""
    t = ddt(f)[1:]
    vals, counts = np.unique(t, return_counts=True)
    return [(int(v), int(c)) for v, c in zip(vals, counts)]


def algebraic_degree(f) -> int:
    """Degree of the ANF, computed by the Moebius transform (n * 2^n)."""
    a = list(f)
    N = len(a)
    n = lut_dim(f)
    for i in range(n):
        step = 1 << i
        for x in range(N):
            if x & step:
                a[x] ^= a[x ^ step]
    return max((u.bit_count() for u in range(N) if a[u]), default=0)


# ---------------------------------------------------------------------------
# finite fields F_{2^n}
# ---------------------------------------------------------------------------

# Pinned moduli; n=6 matches the minimal polynomial of the element used in
# the 6-bit quadratic APN fixture.  Other dimensions fall back to the
# smallest irreducible coefficient mask, which keeps every table deterministic.
DEFAULT_MODULI = {
    3: 0b1011,        # X^3+X+1
    6: 0b1011011,     # X^6+X^4+X^3+X+1
    7: 0b10000011,    # X^7+X+1
    8: 0b100011011,   # X^8+X^4+X^3+X+1
}


@dataclass(frozen=True)
class FiniteField:
    """F_{2^n} in the polynomial basis of an irreducible modulus, with
    log/antilog tables for a fixed generator."""
    n: int
    modulus: int
    generator: int
    exp: tuple[int, ...]
    log: tuple[int, ...]

    @property
    def size(self) -> int:
        return 1 << self.n

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.size - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.size - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.size - 1)]

    def trace(self, a: int) -> int:
        t = 0
        x = a
        for _ in range(self.n):
            t ^= x
            x = self.mul(x, x)
        return t & 1

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        m = self.size - 1
        return m // _gcd(self.log[a], m)

    def element_of_order(self, d: int) -> int:
        m = self.size - 1
        if d <= 0 or m % d:
            raise ValueError(f"no element of order {d} in F_{{2^{self.n}}}")
        return self.exp[m // d]

    def mult_matrix(self, c: int) -> Mat:
        """The F2-linear map x -> c*x as a matrix."""
        cols = [self.mul(c, 1 << j) for j in range(self.n)]
        rows = []
        for i in range(self.n):
            row = 0
            for j, col in enumerate(cols):
                row |= ((col >> i) & 1) << j
            rows.append(row)
        return Mat(self.n, tuple(rows))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _raw_field_mul(a: int, b: int, modulus: int, n: int) -> int:
    r = 0
    top = 1 << n
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


@lru_cache(maxsize=None)
def field(n: int, modulus: int | None = None) -> FiniteField:
    if modulus is None:
        modulus = DEFAULT_MODULI.get(n) or next(
            p for p in range(1 << n, 1 << (n + 1)) if gf2.poly_is_irreducible(p))
    if gf2.poly_degree(modulus) != n or not gf2.poly_is_irreducible(modulus):
        raise ValueError("modulus must be irreducible of degree n")
    m = (1 << n) - 1
    prime_parts = [p for p in range(2, m + 1) if m % p == 0 and _is_prime(p)]
    g = 2
    while True:
        if all(_raw_pow(g, m // p, modulus, n) != 1 for p in prime_parts):
            break
        g += 1
    exp = [0] * m
    log = [0] * (1 << n)
    a = 1
    for k in range(m):
        exp[k] = a
        log[a] = k
        a = _raw_field_mul(a, g, modulus, n)
    return FiniteField(n, modulus, g, tuple(exp), tuple(log))


def _raw_pow(a: int, e: int, modulus: int, n: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _raw_field_mul(r, a, modulus, n)
        a = _raw_field_mul(a, a, modulus, n)
        e >>= 1
    return r


def _is_prime(v: int) -> bool:
    if v < 2:
        return False
    d = 2
    while d * d <= v:
        if v % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# fixture constructions
# ---------------------------------------------------------------------------

def monomial_lut(k: FiniteField, d: int) -> list[int]:
    """x -> x^d; a permutation iff gcd(d, 2^n - 1) = 1."""
    if not 0 <= d <= k.size - 1:
        raise ValueError("exponent out of range")
    return [k.pow(x, d) for x in range(k.size)]


def multinomial_lut(k: FiniteField, terms) -> list[int]:
    """x -> sum of c * x^a over (c, a) term pairs."""
    out = []
    for x in range(k.size):
        v = 0
        for c, a in terms:
            v ^= k.mul(c, k.pow(x, a))
        out.append(v)
    return out


def dillon_fixture() -> list[int]:
    """The quadratic non-bijective 6-bit APN representative
    x -> x^3 + a*x^24 + x^10, with a a root of the n=6 field modulus."""
    k = field(6)
    return multinomial_lut(k, [(1, 3), (2, 24), (1, 10)])


def butterfly(alpha: int, beta: int) -> list[int]:
    """Open 6-bit butterfly with exponent 3 over F_8:
    (x, y) -> (R(y, t), t) with t = R^{-1}(x, y) and R(x, y) = (x+a*y)^3 + b*y^3.

    Pairs pack as x | y<<3 (first coordinate in the low bits).  Always a
    permutation of F_2^6.
    """
    if beta == 0:
        raise ValueError("beta must be nonzero")
    k = field(3)

    def r(x, y):
        return k.pow(x ^ k.mul(alpha, y), 3) ^ k.mul(beta, k.pow(y, 3))

    rinv = [[0] * 8 for _ in range(8)]
    for y in range(8):
        for x in range(8):
            rinv[y][r(x, y)] = x
    out = []
    for v in range(64):
        x, y = v & 7, v >> 3
        t = rinv[y][x]
        out.append(r(y, t) | (t << 3))
    return out


def butterfly_automorphism(zeta: int) -> Mat:
    """diag(zeta^3, zeta) on F_8 x F_8 as a 6x6 matrix; commutes with every
    exponent-3 open butterfly."""
    k = field(3)
    return block_diag(k.mult_matrix(k.pow(zeta, 3)), k.mult_matrix(zeta))


def verify_le_automorphism(f, a: Mat, b: Mat) -> bool:
    """True iff F(A x) = B(F(x)) for all x."""
    n = lut_dim(f)
    if a.n != n or b.n != n:
        raise ValueError("matrix dimension does not match the LUT")
    la, lb = mat_to_lut(a), mat_to_lut(b)
    return all(f[la[x]] == lb[f[x]] for x in range(len(f)))


def normal_element(k: FiniteField) -> int:
    """An element whose Frobenius orbit is a basis of F_{2^n} over F2."""
    for theta in range(1, k.size):
        basis = []
        t = theta
        for _ in range(k.n):
            basis.append(t)
            t = k.mul(t, t)
        m = Mat(k.n, tuple(basis))
        if gf2.rank(m) == k.n:
            return theta
    raise AssertionError("normal bases always exist")


def shift_invariant_lut(k: FiniteField, exponents) -> list[int]:
    """A polynomial with all-one coefficients, tabulated in a normal basis.

    In that representation squaring is the cyclic coordinate shift, so the
    result commutes with Comp(X^n + 1) on both sides.
    """
    theta = normal_element(k)
    frob = []
    t = theta
    for _ in range(k.n):
        frob.append(t)
        t = k.mul(t, t)
    to_field = [0] * k.size
    for v in range(k.size):
        acc = 0
        for i in range(k.n):
            if (v >> i) & 1:
                acc ^= frob[i]
        to_field[v] = acc
    from_field = {fe: v for v, fe in enumerate(to_field)}
    out = []
    for v in range(k.size):
        x = to_field[v]
        acc = 0
        for a in exponents:
            acc ^= k.pow(x, a)
        out.append(from_field[acc])
    return out


def multinomial_automorphism(k: FiniteField, exponents):
    """For x -> sum_i w_i x^{a_i}: if g = gcd(a_1-a_0, ..., 2^n-1) > 1,
    multiplication by an element of order g on the input and by its a_0-th
    power on the output is a self-equivalence, for any coefficients w_i.
    Returns (A, B) or None when g = 1."""
    if not exponents:
        raise ValueError("need at least one exponent")
    a0 = exponents[0]
    g = 0
    for a in exponents[1:]:
        g = _gcd(g, abs(a - a0))
    g = _gcd(g, k.size - 1) if g else k.size - 1
    if g <= 1:
        return None
    alpha = k.element_of_order(g)
    return k.mult_matrix(alpha), k.mult_matrix(k.pow(alpha, a0))


# ---------------------------------------------------------------------------
# graph automorphisms of quadratic functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineMap:
    """x -> L x + c on F2^m."""
    linear: Mat
    const: int

    def __call__(self, x: int) -> int:
        return apply(self.linear, x) ^ self.const


def graph_points(f) -> list[int]:
    """The graph {(x, F(x))} packed as x | F(x)<<n."""
    n = lut_dim(f)
    return [x | (f[x] << n) for x in range(len(f))]


def quadratic_shift_automorphism(f, alpha: int) -> AffineMap:
    """The graph automorphism (x, y) -> (x+a, y + L_a(x) + F(a) + L_a(a) + F(0))
    of a quadratic F, where L_a(x) = F(x) + F(x+a) + F(a) + F(0).

    Rejects functions of algebraic degree > 2 (the derivative is not affine
    there, so L_a is not linear)."""
    n = lut_dim(f)
    if alpha == 0 or alpha >= (1 << n):
        raise ValueError("alpha must be a nonzero point")
    if algebraic_degree(f) > 2:
        raise ValueError("function is not quadratic")
    base = f[alpha] ^ f[0]

    def l(x):
        return f[x] ^ f[x ^ alpha] ^ base

    lrows = [0] * n
    for j in range(n):
        col = l(1 << j)
        for i in range(n):
            if (col >> i) & 1:
                lrows[i] |= 1 << j
    lmat = Mat(n, tuple(lrows))
    const_y = f[alpha] ^ apply(lmat, alpha) ^ f[0]
    rows = [1 << i for i in range(n)]
    rows += [lmat.rows[i] | (1 << (n + i)) for i in range(n)]
    return AffineMap(Mat(2 * n, tuple(rows)), alpha | (const_y << n))


# ---------------------------------------------------------------------------
# CCZ-invariant fingerprints
# ---------------------------------------------------------------------------

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is an optional accelerator
    _numba = None


def _fwht_last_axis(a: np.ndarray) -> np.ndarray:
    """In-place fast Walsh-Hadamard transform along the last axis."""
    m = a.shape[-1]
    flat = a.reshape(-1, m)
    h = 1
    while h < m:
        flat = flat.reshape(-1, m // (2 * h), 2, h)
        x = flat[:, :, 0, :].copy()
        y = flat[:, :, 1, :]
        flat[:, :, 0, :] = x + y
        flat[:, :, 1, :] = x - y
        flat = flat.reshape(-1, m)
        h <<= 1
    return flat.reshape(a.shape)


@lru_cache(maxsize=16)
def _parity_table(n: int) -> np.ndarray:
    t = np.arange(1 << n, dtype=np.int64)
    p = np.zeros(1 << n, dtype=np.int64)
    while t.any():
        p ^= t & 1
        t >>= 1
    return p


def walsh_matrix(f) -> np.ndarray:
    """W[b][a] = sum_x (-1)^(a.x + b.F(x)), for all masks a, b."""
    n = lut_dim(f)
    arr = np.asarray(f, dtype=np.intp)
    par = _parity_table(n)
    signs = 1 - 2 * par[np.arange(1 << n)[:, None] & arr[None, :]]
    return _fwht_last_axis(signs.astype(np.int64))


def _multiset(values) -> tuple[tuple[int, int], ...]:
    vals, counts = np.unique(np.asarray(values), return_counts=True)
    return tuple((int(v), int(c)) for v, c in zip(vals, counts))


# --- graph code invariants --------------------------------------------------
#
# The length-2^n binary code spanned by the all-ones word, the coordinate
# functions and the component functions of F determines F up to
# CCZ-equivalence: equivalent functions have permutation-equivalent codes.
# Dimensions derived from that code through coordinatewise (Schur) products
# and hulls are therefore CCZ-invariants, and they are cheap.

def _graph_code_basis(f) -> list[int]:
    n = lut_dim(f)
    N = len(f)
    rows = [(1 << N) - 1]
    for i in range(n):
        v = 0
        for x in range(N):
            if (x >> i) & 1:
                v |= 1 << x
        rows.append(v)
    for i in range(n):
        v = 0
        for x in range(N):
            if (f[x] >> i) & 1:
                v |= 1 << x
        rows.append(v)
    return _echelon_int_rows(rows)


def _echelon_int_rows(rows) -> list[int]:
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            p = row.bit_length()
            if p in basis:
                row ^= basis[p]
            else:
                basis[p] = row
                break
    return list(basis.values())


def graph_code_square_dims(f) -> tuple[int, int]:
    """(dim of the Schur square of the graph code, dim of its hull)."""
    c = _graph_code_basis(f)
    c2 = _echelon_int_rows([a & b for i, a in enumerate(c) for b in c[i:]])
    k = len(c2)
    gram = []
    for i in range(k):
        r = 0
        for j in range(k):
            if (c2[i] & c2[j]).bit_count() & 1:
                r |= 1 << j
        gram.append(r)
    return k, k - len(_echelon_int_rows(gram))


# --- Walsh zero-set geometry --------------------------------------------------
#
# The set Z of Walsh-transform zeroes over the full F2^{2n} index plane maps
# linearly onto its counterpart for any graph-equivalent function, so the
# number of 3-dimensional subspaces fully contained in Z is a CCZ-invariant.
# Unlike every second- and fourth-moment quantity, it is not determined by
# the spectra (it separates e.g. the two 7-bit Gold-type classes x^3 and
# x^9, which agree on every classical multiset invariant).

def _pattern_masks() -> list[tuple[int, int]]:
    out = []
    for j in range(6):
        blk = (1 << (1 << j)) - 1
        m = 0
        sh = 0
        while sh < 64:
            m |= blk << sh
            sh += 2 << j
        out.append((1 << j, m))
    return out


_PATTERNS = _pattern_masks()


def _count_zero_set_planes_py(zwords: list[int]) -> int:
    """Sorted-triple count of 3-spaces in the set given as 64-bit words."""
    nwords = len(zwords)

    def translate(words, t):
        hi, r = t >> 6, t & 63
        out = [words[w ^ hi] for w in range(nwords)]
        for s, m in _PATTERNS:
            if r & s:
                out = [((x & m) << s) | ((x >> s) & m) for x in out]
        return out

    def mask_above(words, t):
        hi, r = t >> 6, t & 63
        out = [0] * nwords
        for w in range(hi, nwords):
            out[w] = words[w]
        out[hi] &= -2 << r
        return out

    total = 0
    members = [(w << 6) | b for w in range(nwords) for b in range(64)
               if (zwords[w] >> b) & 1]
    for z1 in members:
        t1 = translate(zwords, z1)
        a1 = [zw & tw for zw, tw in zip(zwords, t1)]
        a1m = mask_above(a1, z1)
        for w2 in range(nwords):
            word = a1m[w2]
            while word:
                low = word & -word
                word ^= low
                z2 = (w2 << 6) | (low.bit_length() - 1)
                t2 = translate(a1, z2)
                a2 = mask_above([a & t for a, t in zip(a1, t2)], z2)
                total += sum(x.bit_count() for x in a2)
    assert total % 28 == 0
    return total // 28


if _numba is not None:
    @_numba.njit(cache=True)
    def _count_zero_set_planes_nb(zwords):  # pragma: no cover - jitted
        nwords = zwords.shape[0]
        width = nwords * 64
        members = []
        for i in range(width):
            if (zwords[i >> 6] >> np.uint64(i & 63)) & np.uint64(1):
                members.append(i)
        total = 0
        a1 = np.zeros(nwords, dtype=np.uint64)
        for idx1 in range(len(members)):
            z1 = members[idx1]
            hi1, r1 = z1 >> 6, z1 & 63
            for w in range(nwords):
                x = zwords[w ^ hi1]
                for j in range(6):
                    if (r1 >> j) & 1:
                        s = np.uint64(1 << j)
                        blk = np.uint64((1 << (1 << j)) - 1)
                        m = np.uint64(0)
                        sh = 0
                        while sh < 64:
                            m |= blk << np.uint64(sh)
                            sh += 2 << j
                        x = ((x & m) << s) | ((x >> s) & m)
                a1[w] = zwords[w] & x
            for w2 in range(hi1, nwords):
                word = a1[w2]
                if w2 == hi1:
                    if r1 == 63:
                        word = np.uint64(0)
                    else:
                        word &= ~np.uint64((1 << (r1 + 1)) - 1)
                while word:
                    low = word & (~word + np.uint64(1))
                    b = 0
                    lv = low >> np.uint64(1)
                    while lv:
                        lv >>= np.uint64(1)
                        b += 1
                    word ^= low
                    z2 = (w2 << 6) | b
                    hi2, r2 = z2 >> 6, z2 & 63
                    for w in range(hi2, nwords):
                        x = a1[w ^ hi2]
                        for j in range(6):
                            if (r2 >> j) & 1:
                                s = np.uint64(1 << j)
                                blk = np.uint64((1 << (1 << j)) - 1)
                                m = np.uint64(0)
                                sh = 0
                                while sh < 64:
                                    m |= blk << np.uint64(sh)
                                    sh += 2 << j
                                x = ((x & m) << s) | ((x >> s) & m)
                        v = a1[w] & x
                        if w == hi2:
                            if r2 == 63:
                                v = np.uint64(0)
                            else:
                                v &= ~np.uint64((1 << (r2 + 1)) - 1)
                        while v:
                            v &= v - np.uint64(1)
                            total += 1
        return total


ZERO_SET_PLANES_MAX_N = 7  # quadratic cost in |Z|; n=8 takes hours unaided


def walsh_zero_set_planes(f):
    """Number of 3-dimensional subspaces inside the Walsh zero set, or None
    for dimensions where the quadratic-in-|Z| count is not worth the cost."""
    n = lut_dim(f)
    if n > ZERO_SET_PLANES_MAX_N:
        return None
    w = walsh_matrix(f)
    flat = (w == 0).reshape(-1)
    width = max(flat.shape[0], 64)
    zwords = [0] * (width // 64)
    for i in np.nonzero(flat)[0]:
        zwords[int(i) >> 6] |= 1 << (int(i) & 63)
    if _numba is not None:
        arr = np.array([np.uint64(z) for z in zwords], dtype=np.uint64)
        total = int(_count_zero_set_planes_nb(arr))
        assert total % 28 == 0
        return total // 28
    return _count_zero_set_planes_py(zwords)


@dataclass(frozen=True)
class CczFingerprint:
    """Necessary-condition invariants: equal fingerprints are required for
    CCZ-equivalence, unequal fingerprints certify inequivalence.

    extended_walsh and differential_spectrum are the classical multisets.
    Those coincide across large families (every almost-bent function has the
    same extended Walsh spectrum, every APN function the same differential
    spectrum), so two combinatorial invariants are added: Schur-square
    dimensions of the associated graph code, and the 3-subspace count of the
    Walsh zero set.
    """
    n: int
    extended_walsh: tuple[tuple[int, int], ...]
    differential_spectrum: tuple[tuple[int, int], ...]
    code_square_dims: tuple[int, int]
    zero_set_planes: int | None

    def to_json_dict(self) -> dict:
        return {
            "schema": "apnle/fingerprint-v1",
            "n": self.n,
            "extended_walsh": [list(p) for p in self.extended_walsh],
            "differential_spectrum": [list(p) for p in self.differential_spectrum],
            "code_square_dims": list(self.code_square_dims),
            "zero_set_planes": self.zero_set_planes,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()


def fingerprint(f) -> CczFingerprint:
    return _fingerprint_cached(tuple(f))


@lru_cache(maxsize=4096)
def _fingerprint_cached(f: tuple) -> CczFingerprint:
    n = lut_dim(f)
    absw = np.abs(walsh_matrix(f))
    ext = _multiset(absw[1:])  # all (a, b) with b != 0
    return CczFingerprint(n, ext, tuple(differential_spectrum(f)),
                          graph_code_square_dims(f), walsh_zero_set_planes(f))
