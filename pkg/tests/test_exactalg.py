import itertools
from fractions import Fraction
from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedreg import exactalg as ea


def cofactor_det(m):
    """Exact determinant by Laplace expansion (independent of the Fraction elimination)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([row[:j] + row[j + 1:] for row in m[1:]]) for j in range(n))


def minors_gcd(m, k):
    rows, cols = len(m), len(m[0])
    g = 0
    for r in itertools.combinations(range(rows), k):
        for c in itertools.combinations(range(cols), k):
            g = gcd(g, cofactor_det([[m[i][j] for j in c] for i in r]))
    return g


small_ints = st.integers(-6, 6)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


class TestBezout:
    @pytest.mark.parametrize("a,b,expected", [(2, 3, (1, -1, 1)), (6, 0, (6, 1, 0)), (10, 6, (2, -1, 2))])
    def test_examples(self, a, b, expected):
        assert ea.bezout(a, b) == expected

    def test_both_zero(self):
        with pytest.raises(ValueError):
            ea.bezout(0, 0)

    @given(small_ints, small_ints)
    def test_identity(self, a, b):
        if a == 0 and b == 0:
            return
        g, x, y = ea.bezout(a, b)
        assert g == gcd(a, b) and a * x + b * y == g


class TestCrt:
    @pytest.mark.parametrize(
        "res,mods,expected", [([1, 2], [2, 3], 5), ([0], [7], 0), ([1, 1, 1], [2, 3, 5], 1)]
    )
    def test_examples(self, res, mods, expected):
        assert ea.crt(res, mods) == expected

    def test_first_example_by_scan(self):
        assert [r for r in range(6) if r % 2 == 1 and r % 3 == 2] == [5]

    def test_not_coprime(self):
        with pytest.raises(ValueError):
            ea.crt([1, 1], [4, 6])

    @given(st.sampled_from([[2, 3], [3, 4, 5], [7, 9], [2, 5, 9, 7]]), st.data())
    def test_residues_reproduced(self, mods, data):
        res = [data.draw(st.integers(-50, 50)) for _ in mods]
        r = ea.crt(res, mods)
        assert 0 <= r < prod(mods)
        assert all(r % m == x % m for x, m in zip(res, mods))


class TestHnf:
    def test_identity(self):
        h, u = ea.hnf([[1, 0], [0, 1]])
        assert h == [[1, 0], [0, 1]] and u == [[1, 0], [0, 1]]

    def test_lattice_with_extra_row(self):
        m = [[2, 0], [0, 3], [1, 1]]
        h, u = ea.hnf(m)
        assert h[0][0] * h[1][1] == 1
        # oracle: e1 and e2 are small integer combinations of the rows
        combos = {
            tuple(a * m[0][j] + b * m[1][j] + c * m[2][j] for j in range(2))
            for a, b, c in itertools.product(range(-3, 4), repeat=3)
        }
        assert (1, 0) in combos and (0, 1) in combos

    def test_zero_row(self):
        h, _ = ea.hnf([[0, 0]])
        assert h == [[0, 0]]

    @settings(max_examples=80)
    @given(matrices(5, 4))
    def test_post(self, m):
        h, u = ea.hnf(m)
        assert ea.matmul(u, m) == h
        assert abs(cofactor_det(u)) == 1
        col = -1
        for row in h:
            nz = [j for j, v in enumerate(row) if v]
            if not nz:
                continue
            p = nz[0]
            assert p > col and row[p] > 0
            col = p
        # entries above pivots reduced
        for i, row in enumerate(h):
            nz = [j for j, v in enumerate(row) if v]
            if nz:
                p = nz[0]
                assert all(0 <= h[k][p] < row[p] for k in range(i))


class TestSnf:
    def test_examples(self):
        assert ea.snf([[2, 0], [0, 3]])[0] == [[1, 0], [0, 6]]
        assert ea.snf([[0, 0], [0, 0]])[0] == [[0, 0], [0, 0]]
        assert ea.snf([[4]])[0] == [[4]]

    def test_det_preserved(self):
        s, _, _ = ea.snf([[2, 0], [0, 3]])
        assert s[0][0] * s[1][1] == 6

    @settings(max_examples=80)
    @given(matrices())
    def test_minors(self, m):
        s, u, v = ea.snf(m)
        assert ea.matmul(ea.matmul(u, m), v) == s
        assert abs(cofactor_det(u)) == 1 and abs(cofactor_det(v)) == 1
        r = min(len(m), len(m[0]))
        diag = [s[i][i] for i in range(r)]
        assert all(s[i][j] == 0 for i in range(len(s)) for j in range(len(s[0])) if i != j)
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            assert b == 0 or (a != 0 and b % a == 0)
        # d_1 ... d_k equals the gcd of the k x k minors
        for k in range(1, r + 1):
            assert prod(diag[:k]) == minors_gcd(m, k)

    def test_larger_unimodular(self):
        m = [[(3 * i + 5 * j) % 7 - 3 for j in range(6)] for i in range(6)]
        _, u, v = ea.snf(m)
        assert abs(ea.det(u)) == 1 and abs(ea.det(v)) == 1
        assert abs(cofactor_det(u)) == 1


class TestRationalRank:
    def test_examples(self):
        f = Fraction
        assert ea.rational_rank([[0, f(-1, 10)], [f(1, 10), 0]]) == 2
        assert ea.rational_rank([[0] * 3 for _ in range(3)]) == 0
        assert ea.rational_rank([[f(1, 2), f(1, 2)], [f(1, 2), f(1, 2)]]) == 1

    @given(matrices(4, 4))
    def test_matches_minors(self, m):
        rank = ea.rational_rank(m)
        r = min(len(m), len(m[0]))
        nonzero = [k for k in range(1, r + 1) if minors_gcd(m, k)]
        assert rank == (max(nonzero) if nonzero else 0)


class TestKernelMod:
    @settings(max_examples=40)
    @given(st.sampled_from([2, 4, 6, 12]), matrices(3, 2))
    def test_kernel_complete(self, modulus, a):
        basis = ea.kernel_mod(a, modulus)
        rows, cols = len(a), len(a[0])
        for b in basis:
            assert all(sum(b[i] * a[i][j] for i in range(rows)) % modulus == 0 for j in range(cols))
        # every kernel vector mod L is an integer combination of the basis mod L
        span = {tuple([0] * rows)}
        frontier = list(span)
        while frontier:
            nxt = []
            for v in frontier:
                for b in basis:
                    w = tuple((x + y) % modulus for x, y in zip(v, b))
                    if w not in span:
                        span.add(w)
                        nxt.append(w)
            frontier = nxt
        for c in itertools.product(range(modulus), repeat=rows):
            if all(sum(c[i] * a[i][j] for i in range(rows)) % modulus == 0 for j in range(cols)):
                assert c in span


def test_reduce_by_hnf_membership():
    h, _ = ea.hnf([[2, 0], [0, 3]])
    rem, _ = ea.reduce_by_hnf(h, [4, 9])
    assert not any(rem)
    rem, _ = ea.reduce_by_hnf(h, [1, 0])
    assert any(rem)


def test_modinv_and_lcm():
    assert ea.modinv(3, 10) == 7
    assert ea.lcm(4, 6, 10) == 60
    with pytest.raises(ValueError):
        ea.modinv(2, 4)
