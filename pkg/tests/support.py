"""Shared random generators and independent oracles for the test suite.

The oracles here deliberately take different algorithmic routes from the
package under test: the Smith-form oracle diagonalizes with first-found
pivots and fixes divisibility afterwards by gcd/lcm sweeps, the
determinant oracle is cofactor expansion, the signature oracle counts
characteristic-polynomial root signs with Sturm sequences, and group
isomorphism is checked by brute-force element-order counting.
"""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from itertools import product
from math import gcd, isqrt, lcm, prod

from ribbonmu import BraidWord, IntMatrix, SeifertMatrix, block_diag, validate_seifert

# -- random inputs ----------------------------------------------------


def rand_braid_knot(rng: random.Random, max_strands: int = 5,
                    max_len: int = 12) -> BraidWord:
    """Random braid word whose closure is a knot (rejection sampling)."""
    while True:
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_len)
        letters = []
        for _ in range(length):
            g = rng.randint(1, strands - 1)
            letters.append(g if rng.random() < 0.5 else -g)
        word = BraidWord(strands, tuple(letters))
        if word.is_knot_closure:
            return word


def rand_matrix(rng: random.Random, max_dim: int = 8, lo: int = -50, hi: int = 50,
                rows: int | None = None, cols: int | None = None) -> IntMatrix:
    r = rng.randint(0, max_dim) if rows is None else rows
    c = rng.randint(0, max_dim) if cols is None else cols
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)], cols=c)


def rand_symmetric(rng: random.Random, max_dim: int = 6, lo: int = -50,
                   hi: int = 50) -> IntMatrix:
    n = rng.randint(0, max_dim)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = rng.randint(lo, hi)
    return IntMatrix.from_rows(m, cols=n)


def rand_unimodular(rng: random.Random, n: int, steps: int | None = None) -> IntMatrix:
    """Product of elementary matrices: shears, swaps, and sign flips."""
    m = IntMatrix.identity(n).to_lists()
    for _ in range(n + 3 if steps is None else steps):
        kind = rng.random()
        if n < 2 or kind < 0.2:
            if n:
                i = rng.randrange(n)
                m[i] = [-x for x in m[i]]
        elif kind < 0.5:
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
        else:
            i, j = rng.sample(range(n), 2)
            c = rng.choice((-2, -1, 1, 2))
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return IntMatrix.from_rows(m, cols=n)


_SEIFERT_SEEDS = (
    IntMatrix.from_rows([[1, 1], [0, 1]]),
    IntMatrix.from_rows([[1, 1], [0, -1]]),
    IntMatrix.empty(),
)
_STABILIZERS = (
    IntMatrix.from_rows([[0, 1], [0, 0]]),
    IntMatrix.from_rows([[0, 0], [1, 0]]),
)


def rand_seifert(rng: random.Random, max_ops: int = 4) -> SeifertMatrix:
    """Random valid Seifert matrix: catalog seeds grown by unimodular
    congruence, hyperbolic stabilization, and block sums."""
    s = rng.choice(_SEIFERT_SEEDS)
    for _ in range(rng.randint(0, max_ops)):
        kind = rng.random()
        if kind < 0.4:
            p = rand_unimodular(rng, s.rows)
            s = p.transpose() @ s @ p
        elif kind < 0.75:
            s = block_diag(s, rng.choice(_STABILIZERS))
        else:
            s = block_diag(s, rng.choice(_SEIFERT_SEEDS))
    return validate_seifert(s)


def rand_group_factors(rng: random.Random, max_factor: int = 64,
                       max_len: int = 5) -> tuple[int, ...]:
    """Random invariant-factor chain with factors <= max_factor."""
    length = rng.randint(0, max_len)
    factors: list[int] = []
    d = 1
    for _ in range(length):
        d *= rng.choice((1, 1, 2, 2, 3, 4, 5))
        if d < 2:
            d = rng.choice((2, 3))
        if d > max_factor:
            break
        factors.append(d)
    return tuple(factors)


# -- Smith-form diagonal oracle --------------------------------------


def snf_diagonal_oracle(matrix: IntMatrix) -> list[int]:
    """Diagonalize with first-found pivots (no size optimization), then
    repair divisibility on the diagonal by gcd/lcm sweeps."""
    rows, cols = matrix.rows, matrix.cols
    m = matrix.to_lists()
    n = min(rows, cols)
    for k in range(n):
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if m[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        i, j = pivot
        m[k], m[i] = m[i], m[k]
        for row in m:
            row[k], row[j] = row[j], row[k]
        while True:
            for i in range(k + 1, rows):
                while m[i][k] != 0:
                    q = m[i][k] // m[k][k]
                    m[i] = [a - q * b for a, b in zip(m[i], m[k])]
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
            for j in range(k + 1, cols):
                while m[k][j] != 0:
                    q = m[k][j] // m[k][k]
                    for row in m:
                        row[j] -= q * row[k]
                    if m[k][j] != 0:
                        for row in m:
                            row[k], row[j] = row[j], row[k]
            if all(m[i][k] == 0 for i in range(k + 1, rows)):
                break
    diag = [abs(m[i][i]) for i in range(n)]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if a == 0 and b == 0:
                    continue
                g = gcd(a, b)
                l = 0 if a == 0 or b == 0 else a * b // g
                if g == 0:
                    g, l = l, g
                if (diag[i], diag[j]) != (g, l):
                    diag[i], diag[j] = g, l
                    changed = True
    return diag


# -- determinant oracle ----------------------------------------------


def det_cofactor(matrix: IntMatrix) -> int:
    """Cofactor expansion along the first row; exponential, small inputs only."""
    n = matrix.rows
    assert n == matrix.cols

    def rec(m: list[list[int]]) -> int:
        size = len(m)
        if size == 0:
            return 1
        if size == 1:
            return m[0][0]
        total = 0
        for j, a in enumerate(m[0]):
            if a == 0:
                continue
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * rec(minor)
        return total

    return rec(matrix.to_lists())


# -- Sturm-sequence signature oracle ---------------------------------
# Polynomials are coefficient lists, lowest degree first, Fractions.


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_deriv(p: list[Fraction]) -> list[Fraction]:
    return _poly_trim([c * i for i, c in enumerate(p)][1:])


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = a[:]
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = f
        for i, c in enumerate(b):
            a[shift + i] -= f * c
        _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _yun_squarefree(p: list[Fraction]) -> list[tuple[list[Fraction], int]]:
    """p = prod f_i ^ i with each f_i squarefree; returns (f_i, i) pairs."""
    if len(p) <= 1:
        return []
    dp = _poly_deriv(p)
    g = _poly_gcd(p, dp)
    if len(g) == 1:
        return [(p, 1)]
    c = _poly_divmod(p, g)[0]
    d = [x - y for x, y in zip_pad(_poly_divmod(dp, g)[0], _poly_deriv(c))]
    _poly_trim(d)
    out = []
    i = 1
    while len(c) > 1:
        a = _poly_gcd(c, d)
        if len(a) > 1:
            out.append((a, i))
        c_next = _poly_divmod(c, a)[0]
        d = [x - y for x, y in zip_pad(_poly_divmod(d, a)[0], _poly_deriv(c_next))]
        _poly_trim(d)
        c = c_next
        i += 1
    return out


def zip_pad(a: list[Fraction], b: list[Fraction]):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return zip(a, b)


def _sign_changes(signs: list[int]) -> int:
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _sturm_pos_neg(p: list[Fraction]) -> tuple[int, int]:
    """Root counts of squarefree p on (0, inf) and (-inf, 0); p(0) != 0."""
    chain = [p[:], _poly_deriv(p)]
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    chain = [c for c in chain if c]

    def sign_at_zero(q):
        return 0 if q[0] == 0 else (1 if q[0] > 0 else -1)

    def sign_at_pinf(q):
        return 1 if q[-1] > 0 else -1

    def sign_at_ninf(q):
        s = 1 if q[-1] > 0 else -1
        return s if (len(q) - 1) % 2 == 0 else -s

    v0 = _sign_changes([sign_at_zero(q) for q in chain])
    vp = _sign_changes([sign_at_pinf(q) for q in chain])
    vn = _sign_changes([sign_at_ninf(q) for q in chain])
    return v0 - vp, vn - v0


def charpoly(matrix: IntMatrix) -> list[int]:
    """Coefficients of det(x I - M), lowest degree first, exactly."""
    from ribbonmu import determinant

    n = matrix.rows
    points = []
    for x in range(n + 1):
        shifted = IntMatrix.from_rows(
            [[(x if i == j else 0) - matrix.entries[i][j] for j in range(n)]
             for i in range(n)], cols=n)
        points.append((x, determinant(shifted)))
    # Lagrange interpolation at 0..n
    coeffs = [Fraction(0)] * (n + 1)
    for xi, yi in points:
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += c * (-xj)
                new[k + 1] += c
            basis = new
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += yi * c / denom
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def sturm_signature(matrix: IntMatrix) -> int:
    """Signature = (positive eigenvalues) - (negative ones), counted with
    multiplicity via Yun squarefree split + Sturm chains.  Cross-checked
    internally against Descartes' rule, which is exact for real-rooted
    polynomials."""
    n = matrix.rows
    p_int = charpoly(matrix)
    zeros = 0
    while p_int and p_int[0] == 0:
        p_int = p_int[1:]
        zeros += 1
    p = [Fraction(c) for c in p_int]
    pos = neg = 0
    for factor, mult in _yun_squarefree(p):
        fp, fn = _sturm_pos_neg(factor)
        pos += mult * fp
        neg += mult * fn
    assert pos + neg + zeros == n, "symmetric matrix must have all-real spectrum"
    # Descartes cross-check: sign variations count positive roots exactly
    # when all roots are real.
    d_pos = _sign_changes([0 if c == 0 else (1 if c > 0 else -1) for c in p_int])
    d_neg = _sign_changes(
        [0 if c == 0 else (1 if c > 0 else -1) * (-1) ** i
         for i, c in enumerate(p_int)])
    assert (pos, neg) == (d_pos, d_neg)
    return pos - neg


# -- brute-force finite abelian group oracles ------------------------


def order_multiset(factors: tuple[int, ...]) -> Counter[int]:
    """Element-order counts of Z_f1 + ... + Z_fk; determines the group."""
    counts: Counter[int] = Counter()
    for element in product(*[range(f) for f in factors]):
        counts[lcm(*(f // gcd(x, f) for x, f in zip(element, factors)))] += 1
    return counts


def groups_isomorphic_bruteforce(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return order_multiset(a) == order_multiset(b)


def _trial_prime_powers(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(n: int) -> list[list[int]]:
    if n == 0:
        return [[]]
    out = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(acc[:])
            return
        for part in range(min(remaining, cap), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def abelian_groups_of_order(n: int) -> list[tuple[int, ...]]:
    """All abelian groups of order n as prime-power factor tuples."""
    if n == 1:
        return [()]
    per_prime = []
    for p, e in _trial_prime_powers(n).items():
        per_prime.append([[p ** part for part in partition]
                          for partition in _partitions(e)])
    out = []
    for combo in product(*per_prime):
        factors: list[int] = []
        for chunk in combo:
            factors.extend(chunk)
        out.append(tuple(sorted(factors)))
    return out


def double_half_bruteforce(factors: tuple[int, ...]) -> tuple[int, ...] | None:
    """Search every abelian group of order sqrt(|G|) for a half of G."""
    n = prod(factors)
    root = isqrt(n)
    if root * root != n:
        return None
    target = order_multiset(factors)
    for candidate in abelian_groups_of_order(root):
        if order_multiset(candidate + candidate) == target:
            return candidate
    return None
