"""Building mixed-register stabilizer codes.

Two constructions live here: appending registers to cancel the
non-commutativity of an arbitrary generator set (``resolve``), and joining
codes over coprime moduli on shared registers (``scan`` / ``scan_many``).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from math import gcd

from .code import StabilizerCode
from .decompose import decompose
from .exactalg import modinv, rational_rank
from .pauli import Device, PauliVec, commutator_matrix, skew_lift

__all__ = [
    "ScanMap",
    "StabilizerCode",
    "embed_scale",
    "resolution_lower_bound",
    "resolve",
    "scan",
    "scan_many",
    "scan_scalings",
]


def _extend(p: PauliVec, device: Device, xs: Sequence[int] = (), zs: Sequence[int] = ()) -> PauliVec:
    extra = device.n - p.device.n
    xs = list(xs) or [0] * extra
    zs = list(zs) or [0] * extra
    return PauliVec(device, p.x + tuple(xs), p.z + tuple(zs))


def resolve(gens: Sequence[PauliVec], device: Device | None = None) -> StabilizerCode:
    """Append one register per hyperbolic pair so that everything commutes.

    With ``<gens>`` decomposed as ``W_i`` plus pairs ``(U_i, V_i, d_i)``, a
    register of modulus ``d_i`` is appended for each pair and the generators
    become ``W_i (x) I``, ``U_i (x) X_{d_i}`` and ``V_i (x) Z_{d_i}^{-1}``.
    """
    gens = list(gens)
    if device is None:
        if not gens:
            raise ValueError("an empty generator list needs an explicit device")
        device = gens[0].device
    result = decompose(gens, device)
    c = len(result.pairs)
    if c == 0:
        return StabilizerCode(device, gens)
    ds = result.ds
    out_device = device + Device(ds)
    out = [_extend(w, out_device) for w in result.isotropic]
    for i, (u, v, d) in enumerate(result.pairs):
        xs = [0] * c
        zs = [0] * c
        xs[i] = 1
        out.append(_extend(u, out_device, xs=xs))
        zs[i] = d - 1
        out.append(_extend(v, out_device, zs=zs))
    return StabilizerCode(out_device, out)


def commutator_rank(gens: Sequence[PauliVec]) -> int:
    """Rational rank of the (antisymmetrically lifted) commutator matrix."""
    if not gens:
        return 0
    return rational_rank(skew_lift(commutator_matrix(gens)))


def resolution_lower_bound(gens: Sequence[PauliVec]) -> int:
    """Half the rational rank of the skew-lifted commutator matrix.

    On a decomposed generating set (isotropic elements plus hyperbolic
    pairs) this is exactly the number of registers ``resolve`` appends.  On
    an arbitrary generating set it can be larger than what is needed: the
    pairs of ``{X_2, Z_2}`` and ``{X_3, Z_3}`` give rank 4, yet one 6-level
    register resolves both.
    """
    rank = commutator_rank(gens)
    assert rank % 2 == 0, "alternating matrix with odd rank"
    return rank // 2


@dataclass(frozen=True)
class ScanMap:
    """Injective 1-based placements of two (or more) codes' registers."""

    maps: tuple[tuple[int, ...], ...]

    def __init__(self, *maps: Sequence[int]):
        object.__setattr__(self, "maps", tuple(tuple(int(i) for i in m) for m in maps))
        self._validate()

    def _validate(self) -> None:
        for m in self.maps:
            if len(set(m)) != len(m):
                raise ValueError(f"map {list(m)} is not injective")
            if any(i < 1 for i in m):
                raise ValueError(f"map {list(m)} has indices below 1")
        covered = set().union(*self.maps) if self.maps else set()
        n = len(covered)
        if covered != set(range(1, n + 1)):
            raise ValueError(f"maps cover {sorted(covered)}, not 1..{n}")

    @property
    def n(self) -> int:
        return len(set().union(*self.maps))

    @property
    def overlap(self) -> set[int]:
        seen: dict[int, int] = {}
        for m in self.maps:
            for i in m:
                seen[i] = seen.get(i, 0) + 1
        return {i for i, k in seen.items() if k > 1}


def _uniform_modulus(code: StabilizerCode) -> int:
    mods = set(code.device.moduli)
    if len(mods) != 1:
        raise ValueError(f"expected a uniform-modulus code, got moduli {list(code.device.moduli)}")
    return mods.pop()


def scan_scalings(out_mods: Sequence[int], q: int, placement: Sequence[int]) -> list[tuple[int, int]]:
    """``(x, z)`` multipliers for a modulus-``q`` code placed on ``placement``."""
    out = []
    for dst in placement:
        r = out_mods[dst - 1] // q
        out.append((r, r * modinv(r, q) if q > 1 else r))
    return out


def scan_many(codes: Sequence[StabilizerCode], maps: Sequence[Sequence[int]] | ScanMap) -> StabilizerCode:
    """Join codes over pairwise-coprime moduli on arbitrary shared registers.

    Each output register's modulus is the product of the moduli of every
    code placed on it.  On a register of modulus ``M = Q * R`` (``Q`` the
    code's own modulus) x-exponents are multiplied by ``R`` and z-exponents
    by ``R * t`` with ``t = R^{-1} mod Q``.  Both multipliers keep every
    generator's order and kill cross terms between codes; the extra ``t``
    makes the register contribute ``x z / Q`` to the symplectic product,
    exactly as it did in the source code.
    """
    scan_map = maps if isinstance(maps, ScanMap) else ScanMap(*maps)
    if len(scan_map.maps) != len(codes):
        raise ValueError("need exactly one map per code")
    mods = [_uniform_modulus(c) for c in codes]
    for i in range(len(mods)):
        for j in range(i + 1, len(mods)):
            if gcd(mods[i], mods[j]) != 1:
                raise ValueError(f"moduli {mods[i]} and {mods[j]} are not coprime")
    for code, m in zip(codes, scan_map.maps):
        if len(m) != code.n:
            raise ValueError(f"map {list(m)} has length {len(m)}, code has {code.n} registers")

    n = scan_map.n
    out_mods = [1] * n
    for q, m in zip(mods, scan_map.maps):
        for i in m:
            out_mods[i - 1] *= q
    device = Device(out_mods)

    out = []
    for q, code, m in zip(mods, codes, scan_map.maps):
        scales = scan_scalings(out_mods, q, m)
        for g in code.generators:
            xs = [0] * n
            zs = [0] * n
            for src, dst in enumerate(m):
                sx, sz = scales[src]
                xs[dst - 1] = g.x[src] * sx
                zs[dst - 1] = g.z[src] * sz
            out.append(PauliVec(device, xs, zs))
    return StabilizerCode(device, out)


def scan(code1: StabilizerCode, code2: StabilizerCode, map1: Sequence[int], map2: Sequence[int]) -> StabilizerCode:
    """Scanned construction for two codes over coprime moduli ``Q1`` and ``Q2``.

    Registers hit by both maps get modulus ``Q1 * Q2``; there ``code1``'s
    x-exponents are scaled by ``Q2`` and ``code2``'s by ``Q1`` (z-exponents
    pick up an extra unit factor, see ``scan_many``).
    """
    return scan_many([code1, code2], ScanMap(map1, map2))


def embed_scale(code: StabilizerCode, modulus: int) -> StabilizerCode:
    """Move a uniform-``q`` code into modulus-``L`` registers by scaling exponents by ``L / q``."""
    q = _uniform_modulus(code)
    if modulus % q:
        raise ValueError(f"{q} does not divide {modulus}")
    k = modulus // q
    device = Device([modulus] * code.n)
    gens = [PauliVec(device, [k * a for a in g.x], [k * b for b in g.z]) for g in code.generators]
    return StabilizerCode(device, gens)


def product_code(*codes: StabilizerCode) -> StabilizerCode:
    """Disjoint tensor product (plain concatenation of registers)."""
    device = Device([q for c in codes for q in c.device.moduli])
    out = []
    offset = 0
    for c in codes:
        for g in c.generators:
            xs = [0] * device.n
            zs = [0] * device.n
            xs[offset:offset + c.n] = g.x
            zs[offset:offset + c.n] = g.z
            out.append(PauliVec(device, xs, zs))
        offset += c.n
    return StabilizerCode(device, out)

