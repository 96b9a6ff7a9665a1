"""Subgroup arithmetic and code parameters.

A set of generators spans a lattice in ``Z^{2n}`` once the modulus relations
``Q_i e_i`` and ``Q_i e_{n+i}`` are appended.  Group orders, membership and
minimal generating sets all come from Hermite/Smith forms of that lattice.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import gcd, prod

from . import exactalg
from .code import InvalidCodeError, StabilizerCode
from .pauli import Device, PauliVec, combine, symp_scaled


def _relations(device: Device) -> list[list[int]]:
    n = device.n
    rows = []
    for half in range(2):
        for i, q in enumerate(device.moduli):
            row = [0] * (2 * n)
            row[half * n + i] = q
            rows.append(row)
    return rows


def _device_of(gens: Sequence[PauliVec], device: Device | None) -> Device:
    if device is not None:
        return device
    if not gens:
        raise ValueError("an empty generator list needs an explicit device")
    return gens[0].device


def _lattice_hnf(gens: Sequence[PauliVec], device: Device) -> tuple[list[list[int]], list[list[int]]]:
    for g in gens:
        if g.device != device:
            raise ValueError(f"device mismatch: {g.device} vs {device}")
    rows = [list(g.vector) for g in gens] + _relations(device)
    return exactalg.hnf(rows)


def group_order(gens: Sequence[PauliVec], device: Device | None = None) -> int:
    """Order of ``<gens>`` mod phases.

    Equal to ``prod(Q_i)^2`` divided by the index of the generator-plus-relation
    lattice in ``Z^{2n}``.
    """
    device = _device_of(gens, device)
    h, _ = _lattice_hnf(gens, device)
    index = 1
    for i in range(2 * device.n):
        index *= h[i][i]
    return device.dim ** 2 // index


def express(gens: Sequence[PauliVec], p: PauliVec) -> list[int] | None:
    """Exponents ``c`` with ``combine(gens, c) == p``, or ``None`` if ``p`` is not in ``<gens>``."""
    device = p.device
    h, u = _lattice_hnf(gens, device)
    rem, coeffs = exactalg.reduce_by_hnf(h, p.vector)
    if any(rem):
        return None
    k = len(gens)
    full = [sum(coeffs[i] * u[i][j] for i in range(len(h))) for j in range(k)]
    return full


def contains(gens: Sequence[PauliVec], p: PauliVec) -> bool:
    """Whether ``p`` lies in ``<gens>`` mod phases."""
    h, _ = _lattice_hnf(gens, p.device)
    rem, _ = exactalg.reduce_by_hnf(h, p.vector)
    return not any(rem)


class Membership:
    """Reusable membership test against a fixed generating set (one HNF)."""

    def __init__(self, gens: Sequence[PauliVec], device: Device | None = None):
        self.device = _device_of(gens, device)
        self._h, _ = _lattice_hnf(gens, self.device)

    def __contains__(self, p: PauliVec) -> bool:
        rem, _ = exactalg.reduce_by_hnf(self._h, p.vector)
        return not any(rem)


def _scaled_exponent_matrix(gens: Sequence[PauliVec], device: Device) -> list[list[int]]:
    # column j scaled by L / Q_j so that "≡ 0 mod Q_j" becomes "≡ 0 mod L"
    big = device.lcm
    scale = [big // q for q in device.moduli] * 2
    return [[s * v for s, v in zip(scale, g.vector)] for g in gens]


def relation_lattice(gens: Sequence[PauliVec], device: Device | None = None) -> list[list[int]]:
    """Basis rows of ``{c : combine(gens, c) == identity}``."""
    device = _device_of(gens, device)
    return exactalg.kernel_mod(_scaled_exponent_matrix(gens, device), device.lcm)


def invariant_basis(gens: Sequence[PauliVec], device: Device | None = None) -> list[tuple[PauliVec, int]]:
    """A minimal generating set of ``<gens>`` as a direct sum of cyclic groups.

    Returns ``(generator, order)`` pairs whose orders form a divisibility
    chain; the number of pairs is the minimum number of generators of the
    subgroup.
    """
    device = _device_of(gens, device)
    if not gens:
        return []
    ker = relation_lattice(gens, device)
    s, _, v = exactalg.snf(ker)
    vinv = exactalg.unimodular_inverse(v)
    out = []
    for i in range(len(gens)):
        e = s[i][i]
        if e == 1:
            continue
        out.append((combine(gens, vinv[i], device), e))
    return out


def minimal_generators(gens: Sequence[PauliVec], device: Device | None = None) -> list[PauliVec]:
    return [g for g, _ in invariant_basis(gens, device)]


def canonical_generators(gens: Sequence[PauliVec], device: Device | None = None) -> list[tuple[PauliVec, int]]:
    """Invariant basis computed from the Hermite form of the subgroup lattice.

    The result depends only on the subgroup, not on the generating set given.
    """
    device = _device_of(gens, device)
    h, _ = _lattice_hnf(gens, device)
    rows = [PauliVec.from_vector(device, row) for row in h]
    rows = [r for r in rows if not r.is_identity()]
    return invariant_basis(rows, device)


def same_group(a: Sequence[PauliVec], b: Sequence[PauliVec], device: Device | None = None) -> bool:
    device = _device_of(list(a) + list(b), device)
    n2 = 2 * device.n
    # the lattice has full rank, so the first 2n HNF rows determine it
    return _lattice_hnf(a, device)[0][:n2] == _lattice_hnf(b, device)[0][:n2]


def logical_count(code: StabilizerCode) -> int:
    """Number of orthonormal codewords, ``prod(Q_i) / |S|``."""
    code.validate()
    return code.device.dim // group_order(code.generators, code.device)


def centralizer(code: StabilizerCode) -> list[PauliVec]:
    """Generators of all operators commuting with every stabilizer generator."""
    device = code.device
    n = device.n
    big = device.lcm
    # symp(p, g) * L = sum_h (L/Q_h) (x_p z_g - x_g z_p): linear in p
    cols = []
    for g in code.generators:
        col = [(big // q) * zg for q, zg in zip(device.moduli, g.z)]
        col += [-(big // q) * xg for q, xg in zip(device.moduli, g.x)]
        cols.append(col)
    a = [[cols[j][i] for j in range(len(cols))] for i in range(2 * n)]
    basis = exactalg.kernel_mod(a, big)
    elems = [PauliVec.from_vector(device, row) for row in basis]
    return minimal_generators([e for e in elems if not e.is_identity()] or [device.identity()], device)


def _nontrivial_locals(q: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(q) for b in range(q) if a or b]


def iter_weight(device: Device, w: int) -> Iterator[PauliVec]:
    """All operators of weight exactly ``w``, in a fixed lexicographic order.

    Supports are visited in ``itertools.combinations`` order; within a support
    the local ``(x, z)`` pairs vary lexicographically.
    """
    n = device.n
    for support in itertools.combinations(range(n), w):
        choices = [_nontrivial_locals(device.moduli[i]) for i in support]
        for local in itertools.product(*choices):
            xs = [0] * n
            zs = [0] * n
            for i, (a, b) in zip(support, local):
                xs[i] = a
                zs[i] = b
            yield PauliVec(device, xs, zs)


@dataclass(frozen=True)
class DistanceResult:
    distance: int
    witness: PauliVec


def distance_witness(code: StabilizerCode, max_weight: int = 3, pure_k1: bool = True) -> DistanceResult | None:
    """Brute-force minimum-weight undetectable error, with a witness.

    For ``K > 1`` the candidates are centralizer elements outside the
    stabilizer group.  For ``K == 1`` there are no logical operators; with
    ``pure_k1`` (the default) the distance is the least weight of a
    non-identity stabilizer element, the usual convention for ``[[n, 0, d]]``
    codes, otherwise ``None``.  Returns ``None`` when nothing is found up to
    ``max_weight``.
    """
    code.validate()
    device = code.device
    gens = code.generators
    member = Membership(gens, device)
    pure = logical_count(code) == 1
    if pure and not pure_k1:
        return None
    scaled = [(g, device.lcm) for g in gens]
    for w in range(1, min(max_weight, device.n) + 1):
        for p in iter_weight(device, w):
            if any(symp_scaled(p, g) for g, _ in scaled):
                continue
            if pure or p not in member:
                return DistanceResult(w, p)
    return None


def distance(code: StabilizerCode, max_weight: int = 3, pure_k1: bool = True) -> int | None:
    found = distance_witness(code, max_weight, pure_k1)
    return None if found is None else found.distance


def coprime_blocks(device: Device) -> dict[int, list[int]]:
    """Registers grouped by modulus; distinct moduli must be pairwise coprime."""
    distinct = sorted(set(device.moduli))
    for a, b in itertools.combinations(distinct, 2):
        if gcd(a, b) != 1:
            raise ValueError(f"moduli {a} and {b} share a factor; device is not block-coprime")
    return {q: [i for i, m in enumerate(device.moduli) if m == q] for q in distinct}


def split_coprime(code: StabilizerCode) -> StabilizerCode:
    """Rewrite a code on coprime blocks with generators supported on single blocks.

    Each generator ``g`` is replaced by ``(lcm / Q_b) * g`` for every block
    modulus ``Q_b``; the multiplier kills the other blocks and is invertible
    on block ``b``.  Redundant rows are then dropped greedily in order.
    """
    device = code.device
    blocks = coprime_blocks(device)
    big = prod(blocks)
    rows = []
    for g in code.generators:
        for q in blocks:
            r = g ** (big // q)
            if not r.is_identity():
                rows.append(r)
    kept: list[PauliVec] = []
    for r in rows:
        if not kept or not contains(kept, r):
            kept.append(r)
    return StabilizerCode(device, kept)


@dataclass(frozen=True)
class CodeParams:
    n: int
    moduli: tuple[int, ...]
    group_order: int
    K: int
    distance: int | None = None
    witness: PauliVec | None = None


def params(code: StabilizerCode, distance_cap: int | None = None) -> CodeParams:
    order = group_order(code.generators, code.device)
    k = logical_count(code)
    if order * k != code.device.dim:
        raise InvalidCodeError("group order and K disagree with the device dimension")
    found = distance_witness(code, distance_cap) if distance_cap else None
    return CodeParams(
        n=code.n,
        moduli=code.device.moduli,
        group_order=order,
        K=k,
        distance=found.distance if found else None,
        witness=found.witness if found else None,
    )
