"""Dense Hilbert-space ground truth for small devices.

Register 1 is the most significant tensor factor: the basis state
``|j_1 ... j_n>`` has index ``sum_i j_i * prod_{k > i} Q_k``.

The shift lowers the basis label, ``X|j> = |j - 1 mod Q>``, and the clock is
``Z|j> = w^j |j>`` with ``w = exp(2 pi i / Q)``.  With this choice
``X Z = w Z X``, so ``A B = exp(2 pi i symp(A, B)) B A`` for every pair of
operators.  The shift direction is otherwise immaterial: the group generated,
its orbits and every codespace are the same either way.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import reduce

import numpy as np

from .analysis import canonical_generators, express
from .code import CapacityError, ConsistencyError, StabilizerCode
from .pauli import Device, PauliVec, order

MAX_DIM = 1024
TOL = 1e-9


def _check_dim(dim: int) -> None:
    if dim > MAX_DIM:
        raise CapacityError(f"dimension {dim} exceeds the dense cap of {MAX_DIM}")


def shift(q: int) -> np.ndarray:
    x = np.zeros((q, q), dtype=complex)
    for j in range(q):
        x[(j - 1) % q, j] = 1
    return x


def clock(q: int) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * np.arange(q) / q))


def pauli_matrix(p: PauliVec) -> np.ndarray:
    """Dense matrix of ``prod_i X_i^{x_i} Z_i^{z_i}`` (no phase correction)."""
    _check_dim(p.device.dim)
    factors = [
        np.linalg.matrix_power(shift(q), a) @ np.linalg.matrix_power(clock(q), b)
        for q, a, b in zip(p.device.moduli, p.x, p.z)
    ]
    return reduce(np.kron, factors)


def basis_index(device: Device, digits: Sequence[int]) -> int:
    if len(digits) != device.n:
        raise ValueError(f"expected {device.n} digits")
    idx = 0
    for q, j in zip(device.moduli, digits):
        if not 0 <= j < q:
            raise ValueError(f"digit {j} out of range for modulus {q}")
        idx = idx * q + j
    return idx


def basis_digits(device: Device, index: int) -> tuple[int, ...]:
    out = []
    index = int(index)
    for q in reversed(device.moduli):
        index, j = divmod(index, q)
        out.append(j)
    return tuple(reversed(out))


def _fix_order(m: np.ndarray, e: int) -> np.ndarray:
    # rescale so that m**e is exactly the identity
    lam = np.linalg.matrix_power(m, e)[0, 0]
    return m * np.exp(-1j * np.angle(lam) / e)


class StabilizerLift:
    """A consistent choice of phases for every element of a stabilizer group.

    Phases are fixed on a canonical invariant basis of the group (which
    depends only on the group), and every other element is represented as
    the matching product of basis matrices.  Different generating sets of
    the same group therefore produce identical matrices and projectors.
    """

    def __init__(self, code: StabilizerCode):
        code.validate()
        _check_dim(code.device.dim)
        self.device = code.device
        self.basis = canonical_generators(code.generators, code.device)
        self.matrices = [_fix_order(pauli_matrix(h), e) for h, e in self.basis]

    def matrix(self, p: PauliVec) -> np.ndarray:
        coeffs = express([h for h, _ in self.basis], p)
        if coeffs is None:
            raise ValueError(f"{p} is not in the stabilizer group")
        out = np.eye(self.device.dim, dtype=complex)
        for m, (_, e), c in zip(self.matrices, self.basis, coeffs):
            out = out @ np.linalg.matrix_power(m, c % e)
        return out

    def projector(self) -> np.ndarray:
        return averaged_projector(self.matrices, [e for _, e in self.basis], self.device.dim)


def averaged_projector(matrices: Sequence[np.ndarray], orders: Sequence[int], dim: int | None = None) -> np.ndarray:
    """``prod_i (1/ord_i) sum_j M_i^j`` for commuting matrices with ``M_i^{ord_i} = I``."""
    if dim is None:
        if not matrices:
            raise ValueError("need a dimension for an empty product")
        dim = matrices[0].shape[0]
    out = np.eye(dim, dtype=complex)
    for m, e in zip(matrices, orders):
        acc = np.zeros_like(out)
        power = np.eye(dim, dtype=complex)
        for _ in range(e):
            acc += power
            power = power @ m
        out = out @ (acc / e)
    return out


def stabilizer_matrices(code: StabilizerCode) -> list[np.ndarray]:
    """Phase-consistent matrices for ``code.generators``."""
    lift = StabilizerLift(code)
    return [lift.matrix(g) for g in code.generators]


def projector(code: StabilizerCode) -> np.ndarray:
    """Projector onto the joint +1 eigenspace of the stabilizer group."""
    return StabilizerLift(code).projector()


def generator_projector(code: StabilizerCode) -> np.ndarray:
    """Projector built literally from the listed generators (with consistent phases)."""
    mats = stabilizer_matrices(code)
    return averaged_projector(mats, [order(g) for g in code.generators], code.device.dim)


def codespace_dim(code: StabilizerCode) -> int:
    tr = np.trace(projector(code))
    k = round(tr.real)
    if abs(tr - k) > TOL:
        raise ConsistencyError(f"projector trace {tr} is not an integer")
    return k


def codeword(code: StabilizerCode, seed: int | Sequence[int]) -> np.ndarray:
    """Normalised projection of a computational basis state onto the codespace."""
    if not isinstance(seed, (int, np.integer)):
        seed = basis_index(code.device, seed)
    pi = projector(code)
    vec = pi[:, seed].copy()
    norm = np.linalg.norm(vec)
    if norm < TOL:
        raise ValueError(f"basis state {basis_digits(code.device, seed)} has zero projection onto the codespace")
    return vec / norm


def controlled_shift(q1: int, q2: int) -> np.ndarray:
    """``sum_j |j><j| (x) X_{q2}^j`` on a ``q1 * q2`` dimensional space."""
    _check_dim(q1 * q2)
    x = shift(q2)
    out = np.zeros((q1 * q2, q1 * q2), dtype=complex)
    for j in range(q1):
        proj = np.zeros((q1, q1))
        proj[j, j] = 1
        out += np.kron(proj, np.linalg.matrix_power(x, j))
    return out


def all_paulis(device: Device):
    n = device.n
    ranges = [range(q) for q in device.moduli] * 2
    for vec in np.ndindex(*[len(r) for r in ranges]):
        yield PauliVec(device, vec[:n], vec[n:])


def conjugate_decompose(u: np.ndarray, p: PauliVec) -> list[tuple[complex, PauliVec]]:
    """Expand ``u P u^dagger`` in the Pauli basis of ``p``'s device.

    Coefficients are Hilbert-Schmidt overlaps ``tr(sigma^dagger A) / dim``;
    terms with magnitude at most ``1e-9`` are dropped.
    """
    dim = p.device.dim
    if u.shape != (dim, dim):
        raise ValueError(f"operator shape {u.shape} does not match dimension {dim}")
    if not np.allclose(u @ u.conj().T, np.eye(dim), atol=TOL, rtol=0):
        raise ValueError("operator is not unitary")
    a = u @ pauli_matrix(p) @ u.conj().T
    out = []
    for sigma in all_paulis(p.device):
        c = np.vdot(pauli_matrix(sigma), a) / dim
        if abs(c) > TOL:
            out.append((complex(c), sigma))
    return out
