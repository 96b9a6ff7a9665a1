"""Symplectic Gram-Schmidt for finitely generated mixed-register Pauli subgroups.

Any subgroup ``T`` splits into an isotropic part (its radical, the elements
pairing trivially with all of ``T``) and hyperbolic pairs ``(U_i, V_i)`` with
``symp(U_i, V_i) = 1/d_i`` and trivial pairing across pairs.  The orders
satisfy ``d_1 | d_2 | ... | d_c`` and the multiset is an invariant of ``T``.

Everything is exact: pairings are handled as integers scaled by the lcm
``L`` of the device moduli.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import gcd

from . import exactalg
from .analysis import minimal_generators
from .pauli import Device, PauliVec, combine, power, symp_scaled


@dataclass(frozen=True)
class HyperbolicPair:
    u: PauliVec
    v: PauliVec
    d: int

    def __iter__(self):
        return iter((self.u, self.v, self.d))


@dataclass(frozen=True)
class DecompositionResult:
    device: Device
    isotropic: tuple[PauliVec, ...] = ()
    pairs: tuple[HyperbolicPair, ...] = field(default_factory=tuple)

    @property
    def ds(self) -> list[int]:
        return [p.d for p in self.pairs]

    def generators(self) -> list[PauliVec]:
        """``W_1..W_l`` followed by ``U_1, V_1, ..., U_c, V_c``."""
        out = list(self.isotropic)
        for p in self.pairs:
            out += [p.u, p.v]
        return out


def _pairing_matrix(gens: Sequence[PauliVec]) -> list[list[int]]:
    return [[symp_scaled(a, b) for b in gens] for a in gens]


def radical(gens: Sequence[PauliVec], device: Device | None = None) -> list[PauliVec]:
    """Minimal generating set of ``{W in <gens> : symp(W, g) = 0 for all g}``."""
    if not gens:
        return []
    device = device or gens[0].device
    for g in gens:
        if g.device != device:
            raise ValueError(f"device mismatch: {g.device} vs {device}")
    big = device.lcm
    kernel = exactalg.kernel_mod(_pairing_matrix(gens), big)
    elems = [combine(gens, row, device) for row in kernel]
    elems = [e for e in elems if not e.is_identity()]
    return minimal_generators(elems, device) if elems else []


def _bezout_vector(values: Sequence[int], modulus: int) -> tuple[int, list[int]]:
    """``(g, a)`` with ``g = gcd(modulus, *values)`` and ``sum(a_i * values_i) ≡ g (mod modulus)``."""
    g = modulus
    coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v % modulus == 0:
            continue
        g_new, s, t = exactalg.bezout(g, v)
        # g_new = s*g + t*v; existing combination realises g (mod modulus)
        coeffs = [s * c for c in coeffs]
        coeffs[i] += t
        g = g_new
    return g, [c % modulus for c in coeffs]


def _gram_schmidt_step(current: list[PauliVec], big: int) -> tuple[HyperbolicPair, list[PauliVec]] | None:
    b = [[x % big for x in row] for row in _pairing_matrix(current)]
    if all(x == 0 for row in b for x in row):
        return None
    device = current[0].device
    # first SNF row transform gives an element of maximal order in T / R(T)
    s, u_t, _ = exactalg.snf(b)
    u_coeffs = [c % big for c in u_t[0]]
    u = combine(current, u_coeffs, device)
    row = [symp_scaled(u, a) for a in current]
    g, a_coeffs = _bezout_vector(row, big)
    d = big // g
    v = combine(current, a_coeffs, device)
    assert symp_scaled(u, v) == g, "pair normalisation failed"

    rest = []
    for a in current:
        a_a = symp_scaled(a, v) // g
        b_a = -(symp_scaled(a, u) // g)
        # A' = A (U^a_A V^b_A)^{-1}
        a_prime = combine([a, u, v], [1, -a_a, -b_a], device)
        if not a_prime.is_identity():
            rest.append(a_prime)
    return HyperbolicPair(u, v, d), rest


def gram_schmidt(gens: Sequence[PauliVec], device: Device | None = None) -> DecompositionResult:
    """Decompose ``<gens>`` into isotropic generators and hyperbolic pairs.

    Each step picks ``U`` of maximal order in ``T / R(T)`` (read off the
    Smith form of the scaled pairing matrix), solves for ``V`` with
    ``symp(U, V) = 1/d`` by Bezout, and projects the remaining generators
    onto the orthogonal complement of ``<U, V>``.  Orders come out
    non-increasing and are returned as an ascending divisibility chain.
    """
    gens = list(gens)
    if not gens:
        if device is None:
            raise ValueError("an empty generator list needs an explicit device")
        return DecompositionResult(device)
    device = device or gens[0].device
    for g in gens:
        if g.device != device:
            raise ValueError(f"device mismatch: {g.device} vs {device}")
    big = device.lcm
    isotropic = radical(gens, device)

    pairs = []
    current = [g for g in gens if not g.is_identity()]
    while current:
        step = _gram_schmidt_step(current, big)
        if step is None:
            break
        pair, current = step
        pairs.append(pair)
    pairs.reverse()
    return DecompositionResult(device, tuple(isotropic), tuple(pairs))


def _prime_powers(d: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            out.append((p, e))
        p += 1
    if d > 1:
        out.append((d, 1))
    return out


def amalgamate(result: DecompositionResult) -> DecompositionResult:
    """Rewrite hyperbolic pairs in invariant-factor form.

    Pairs are split into prime-power pieces and the largest pieces of each
    prime are merged by Chinese remaindering, so pairs with coprime orders
    (say 2 and 3) become a single pair (order 6).  The subgroup generated is
    unchanged and the output orders satisfy ``d_1 | d_2 | ...``.
    """
    by_prime: dict[int, list[tuple[int, PauliVec, PauliVec]]] = {}
    for u, v, d in result.pairs:
        for p, e in _prime_powers(d):
            pe = p ** e
            m = d // pe
            t = exactalg.modinv(m, pe)
            by_prime.setdefault(p, []).append((pe, power(u, m), power(v, m * t)))
    if not by_prime:
        return result
    for pieces in by_prime.values():
        pieces.sort(key=lambda piece: piece[0], reverse=True)
    count = max(len(pieces) for pieces in by_prime.values())

    merged = []
    for j in range(count):
        parts = [pieces[j] for pieces in by_prime.values() if j < len(pieces)]
        total = 1
        for pe, _, _ in parts:
            total *= pe
        u = result.device.identity()
        v = result.device.identity()
        for pe, up, vp in parts:
            # symp(u, v) = sum_p t_p / p^e must equal 1 / total
            t = exactalg.modinv(total // pe, pe)
            u = u * up
            v = v * power(vp, t)
        merged.append(HyperbolicPair(u, v, total))
    merged.reverse()
    return DecompositionResult(result.device, result.isotropic, tuple(merged))


def decompose(gens: Sequence[PauliVec], device: Device | None = None) -> DecompositionResult:
    """``gram_schmidt`` followed by ``amalgamate``."""
    return amalgamate(gram_schmidt(gens, device))


def check_relations(result: DecompositionResult, gens: Sequence[PauliVec]) -> None:
    """Assert every commutation and divisibility condition, exactly."""
    big = result.device.lcm
    for w in result.isotropic:
        for p in list(gens) + result.generators():
            assert symp_scaled(w, p) == 0, f"isotropic {w} pairs with {p}"
    pairs = result.pairs
    for i, (ui, vi, di) in enumerate(pairs):
        assert big % di == 0
        assert symp_scaled(ui, vi) * di == big, f"pair {i} does not pair to 1/{di}"
        for j, (uj, vj, _) in enumerate(pairs):
            assert symp_scaled(ui, uj) == 0 and symp_scaled(vi, vj) == 0
            if i != j:
                assert symp_scaled(ui, vj) == 0
    for (_, _, a), (_, _, b) in zip(pairs, pairs[1:]):
        assert b % a == 0, f"divisibility chain broken at {a}, {b}"
    assert all(gcd(d, big) == d for d in result.ds)
