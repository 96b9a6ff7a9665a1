"""Exact integer and rational linear algebra.

Matrices are plain lists of rows holding Python ``int`` (or ``Fraction``)
entries, so every computation is arbitrary precision.  Nothing here touches
floating point.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from math import gcd

IntMatrix = list[list[int]]


def _copy(m: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(v) for v in row] for row in m]


def _shape(m: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    return rows, cols


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    """Exact product of two integer (or rational) matrices."""
    bt = list(zip(*b)) if b else []
    if a and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def bezout(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y = g``."""
    if a == 0 and b == 0:
        raise ValueError("bezout undefined for (0, 0)")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Chinese remaindering for pairwise coprime moduli.

    Returns the unique ``r`` in ``[0, prod(moduli))`` congruent to each
    residue.  Raises ``ValueError`` if two moduli share a factor.
    """
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    r, m = 0, 1
    for ri, mi in zip(residues, moduli):
        if mi < 1:
            raise ValueError(f"modulus {mi} < 1")
        g, s, _ = bezout(m, mi)
        if g != 1:
            raise ValueError(f"moduli not pairwise coprime: gcd({m}, {mi}) = {g}")
        # r + m*k ≡ ri (mod mi)  =>  k ≡ (ri - r) * m^{-1}
        k = ((ri - r) * s) % mi
        r, m = r + m * k, m * mi
        r %= m
    return r


def modinv(a: int, m: int) -> int:
    g, x, _ = bezout(a % m, m)
    if g != 1:
        raise ValueError(f"{a} is not invertible mod {m}")
    return x % m


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def hnf(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``.  ``h`` is in
    row echelon form with positive pivots, entries above each pivot reduced
    into ``[0, pivot)``, and zero rows at the bottom.
    """
    h = _copy(m)
    rows, cols = _shape(h)
    u = identity(rows)

    def swap(i, j):
        h[i], h[j] = h[j], h[i]
        u[i], u[j] = u[j], u[i]

    def addmul(dst, src, k):
        # row[dst] += k * row[src]
        if k:
            h[dst] = [a + k * b for a, b in zip(h[dst], h[src])]
            u[dst] = [a + k * b for a, b in zip(u[dst], u[src])]

    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(h[i][c]))
            swap(r, p)
            done = True
            for i in range(r + 1, rows):
                if h[i][c]:
                    addmul(i, r, -(h[i][c] // h[r][c]))
                    if h[i][c]:
                        done = False
            if done:
                break
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-v for v in h[r]]
            u[r] = [-v for v in u[r]]
        for i in range(r):
            addmul(i, r, -(h[i][c] // h[r][c]))
        r += 1
    return h, u


def snf(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``u @ m @ v == s`` with ``u``, ``v`` unimodular.

    The diagonal of ``s`` is non-negative and forms a divisibility chain,
    with zeros last.
    """
    s = _copy(m)
    rows, cols = _shape(s)
    u = identity(rows)
    v = identity(cols)

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def row_add(dst, src, k):
        s[dst] = [a + k * b for a, b in zip(s[dst], s[src])]
        u[dst] = [a + k * b for a, b in zip(u[dst], u[src])]

    def col_add(dst, src, k):
        for row in s:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            entries = [(abs(s[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if s[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            row_swap(t, pi)
            col_swap(t, pj)
            p = s[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = s[i][t] // p
                if q:
                    row_add(i, t, -q)
                if s[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = s[t][j] // p
                if q:
                    col_add(j, t, -q)
                if s[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if s[i][j] % p),
                None,
            )
            if bad is None:
                break
            row_add(t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, v


def kernel_mod(a: Sequence[Sequence[int]], modulus: int) -> IntMatrix:
    """Basis rows of the lattice ``{c in Z^k : c @ a ≡ 0 (mod modulus)}``.

    ``a`` is ``k x m``.  The returned lattice always contains
    ``modulus * Z^k``; the basis has exactly ``k`` rows.
    """
    k, m = _shape(a)
    if k == 0:
        return []
    if m == 0:
        return identity(k)
    s, u, _ = snf(a)
    # c = y @ u, need y_i * s_ii ≡ 0 (mod modulus)
    basis = []
    for i in range(k):
        d = s[i][i] if i < m else 0
        step = modulus // gcd(modulus, d) if d else 1
        basis.append([step * x for x in u[i]])
    return basis


def rational_rank(m: Sequence[Sequence[int | Fraction]]) -> int:
    """Rank over the rationals by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = _shape(a)
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, rows):
            if a[i][c]:
                f = a[i][c] / a[rank][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def det(m: Sequence[Sequence[int | Fraction]]) -> Fraction:
    """Exact determinant of a square matrix (fraction-free elimination over Q)."""
    a = [[Fraction(x) for x in row] for row in m]
    n, cols = _shape(a)
    if n != cols:
        raise ValueError("determinant of a non-square matrix")
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            out = -out
        out *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def reduce_by_hnf(h: Sequence[Sequence[int]], vec: Sequence[int]) -> tuple[list[int], list[int]]:
    """Reduce ``vec`` against the echelon rows of ``h``.

    Returns ``(remainder, coeffs)`` with ``vec == coeffs @ h + remainder``.
    ``vec`` lies in the row lattice of ``h`` iff the remainder is zero.
    """
    r = [int(x) for x in vec]
    coeffs = [0] * len(h)
    for i, row in enumerate(h):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            break
        q = r[piv] // row[piv]
        if q:
            coeffs[i] = q
            r = [a - q * b for a, b in zip(r, row)]
    return r, coeffs


def unimodular_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix (Gauss-Jordan over Q)."""
    n, cols = _shape(m)
    if n != cols:
        raise ValueError("inverse of a non-square matrix")
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = []
    for row in a:
        tail = row[n:]
        if any(x.denominator != 1 for x in tail):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in tail])
    return out
