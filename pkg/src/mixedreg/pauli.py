"""Pauli operators mod phases on mixed-register devices.

A device is an ordered list of register moduli ``Q_i >= 2``.  An operator is
stored as its exponent vector: ``x[i]`` is the power of the shift on register
``i`` and ``z[i]`` the power of the clock, each reduced mod ``Q_i``.  Global
phases are dropped throughout.

The pairing between two operators is the rational number

    sum_h (x_a[h] * z_b[h] - x_b[h] * z_a[h]) / Q_h   (mod 1)

and two operators commute exactly when it vanishes.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactalg import lcm


@dataclass(frozen=True)
class Device:
    """Ordered register moduli."""

    moduli: tuple[int, ...]

    def __init__(self, moduli: Iterable[int]):
        mods = tuple(moduli)
        if not mods:
            raise ValueError("a device needs at least one register")
        for q in mods:
            if not isinstance(q, int) or isinstance(q, bool):
                raise ValueError(f"register modulus {q!r} must be a finite integer")
            if q < 2:
                raise ValueError(f"register modulus {q} < 2")
        object.__setattr__(self, "moduli", mods)

    @property
    def n(self) -> int:
        return len(self.moduli)

    @property
    def lcm(self) -> int:
        return lcm(*self.moduli)

    @property
    def dim(self) -> int:
        """Hilbert-space dimension, the product of all moduli."""
        out = 1
        for q in self.moduli:
            out *= q
        return out

    def identity(self) -> PauliVec:
        return PauliVec(self, [0] * self.n, [0] * self.n)

    def x(self, register: int, power: int = 1) -> PauliVec:
        """Shift on one register (0-based index)."""
        xs = [0] * self.n
        xs[register] = power
        return PauliVec(self, xs, [0] * self.n)

    def z(self, register: int, power: int = 1) -> PauliVec:
        """Clock on one register (0-based index)."""
        zs = [0] * self.n
        zs[register] = power
        return PauliVec(self, [0] * self.n, zs)

    def __add__(self, other: Device) -> Device:
        return Device(self.moduli + other.moduli)

    def __repr__(self) -> str:
        return f"Device({list(self.moduli)})"


@dataclass(frozen=True)
class PauliVec:
    """An exponent vector ``(x | z)`` on a device; entries are reduced on construction."""

    device: Device
    x: tuple[int, ...]
    z: tuple[int, ...]

    def __init__(self, device: Device | Sequence[int], x: Iterable[int], z: Iterable[int]):
        if not isinstance(device, Device):
            device = Device(device)
        xs, zs = tuple(x), tuple(z)
        if len(xs) != device.n or len(zs) != device.n:
            raise ValueError(f"expected {device.n} x and z exponents, got {len(xs)} and {len(zs)}")
        q = device.moduli
        object.__setattr__(self, "device", device)
        object.__setattr__(self, "x", tuple(int(a) % m for a, m in zip(xs, q)))
        object.__setattr__(self, "z", tuple(int(b) % m for b, m in zip(zs, q)))

    @classmethod
    def from_vector(cls, device: Device, vec: Sequence[int]) -> PauliVec:
        """Build from a length-``2n`` vector laid out as ``x`` then ``z``."""
        n = device.n
        if len(vec) != 2 * n:
            raise ValueError(f"expected a vector of length {2 * n}")
        return cls(device, vec[:n], vec[n:])

    @property
    def vector(self) -> tuple[int, ...]:
        return self.x + self.z

    def is_identity(self) -> bool:
        return not any(self.x) and not any(self.z)

    def __mul__(self, other: PauliVec) -> PauliVec:
        return compose(self, other)

    def __pow__(self, k: int) -> PauliVec:
        return power(self, k)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"PauliVec({list(self.device.moduli)}, {render(self)!r})"


def _check_same(a: PauliVec, b: PauliVec) -> None:
    if a.device != b.device:
        raise ValueError(f"device mismatch: {a.device} vs {b.device}")


def compose(a: PauliVec, b: PauliVec) -> PauliVec:
    """Product of two operators (entrywise sum of exponents)."""
    _check_same(a, b)
    return PauliVec(
        a.device,
        [u + v for u, v in zip(a.x, b.x)],
        [u + v for u, v in zip(a.z, b.z)],
    )


def power(p: PauliVec, k: int) -> PauliVec:
    """``p`` raised to an integer power; negative ``k`` gives inverse powers."""
    return PauliVec(p.device, [k * a for a in p.x], [k * b for b in p.z])


def combine(gens: Sequence[PauliVec], coeffs: Sequence[int], device: Device | None = None) -> PauliVec:
    """The product ``prod_i gens[i] ** coeffs[i]``."""
    if device is None:
        if not gens:
            raise ValueError("need a device for an empty product")
        device = gens[0].device
    n = device.n
    xs = [0] * n
    zs = [0] * n
    for g, c in zip(gens, coeffs):
        if g.device != device:
            raise ValueError(f"device mismatch: {g.device} vs {device}")
        if c:
            for i in range(n):
                xs[i] += c * g.x[i]
                zs[i] += c * g.z[i]
    return PauliVec(device, xs, zs)


def order(p: PauliVec) -> int:
    """Multiplicative order mod phases: lcm over registers of ``Q / gcd(Q, x, z)``."""
    out = 1
    for q, a, b in zip(p.device.moduli, p.x, p.z):
        out = lcm(out, q // gcd(q, a, b))
    return out


def symp(a: PauliVec, b: PauliVec) -> Fraction:
    """Generalized symplectic product, reduced into ``[0, 1)``."""
    _check_same(a, b)
    big = a.device.lcm
    total = 0
    for q, xa, za, xb, zb in zip(a.device.moduli, a.x, a.z, b.x, b.z):
        total += (big // q) * (xa * zb - xb * za)
    return Fraction(total % big, big)


def symp_scaled(a: PauliVec, b: PauliVec) -> int:
    """``symp(a, b)`` times the device lcm, as an integer in ``[0, lcm)``."""
    big = a.device.lcm
    total = 0
    for q, xa, za, xb, zb in zip(a.device.moduli, a.x, a.z, b.x, b.z):
        total += (big // q) * (xa * zb - xb * za)
    return total % big


def commutes(a: PauliVec, b: PauliVec) -> bool:
    return symp(a, b) == 0


def commutator_matrix(gens: Sequence[PauliVec]) -> list[list[Fraction]]:
    """Matrix of pairwise symplectic products, entries in ``[0, 1)``."""
    for g in gens[1:]:
        _check_same(gens[0], g)
    return [[symp(a, b) for b in gens] for a in gens]


def skew_lift(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Rational antisymmetric representative of a mod-1 commutator matrix.

    The upper triangle keeps its ``[0, 1)`` values and the lower triangle is
    their negation, so the result is alternating over Q (even rank).
    """
    k = len(matrix)
    out = [[Fraction(0)] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            out[i][j] = Fraction(matrix[i][j])
            out[j][i] = -out[i][j]
    return out


def weight(p: PauliVec) -> int:
    """Number of registers on which ``p`` acts non-trivially."""
    return sum(1 for a, b in zip(p.x, p.z) if a or b)


def render(p: PauliVec) -> str:
    """Text form ``x1 ... xn / z1 ... zn``."""
    return " ".join(map(str, p.x)) + " / " + " ".join(map(str, p.z))


def parse_pauli(device: Device, text: str) -> PauliVec:
    """Inverse of :func:`render`.  Exponents must already lie in ``[0, Q_i)``."""
    if text.count("/") != 1:
        raise ValueError("expected exactly one '/' separating x and z exponents")
    left, right = text.split("/")
    xs = [int(t) for t in left.split()]
    zs = [int(t) for t in right.split()]
    if len(xs) != device.n or len(zs) != device.n:
        raise ValueError(f"expected {device.n} x and {device.n} z exponents")
    for q, a, b in zip(device.moduli, xs, zs):
        if not (0 <= a < q and 0 <= b < q):
            raise ValueError(f"exponent out of range for modulus {q}")
    return PauliVec(device, xs, zs)
