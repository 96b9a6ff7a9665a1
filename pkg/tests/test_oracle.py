import random

import numpy as np
import pytest

from conftest import random_commuting, random_device
from mixedreg import oracle
from mixedreg.analysis import logical_count
from mixedreg.code import CapacityError, StabilizerCode
from mixedreg.pauli import Device, PauliVec, combine

D263 = Device([2, 6, 3])
EX1 = StabilizerCode(D263, [PauliVec(D263, [1, 3, 0], [0] * 3), PauliVec(D263, [0, 2, 1], [0] * 3)])
W3 = np.exp(2j * np.pi / 3)


class TestPauliMatrix:
    def test_examples(self):
        d2 = Device([2])
        assert np.allclose(oracle.pauli_matrix(d2.x(0)), [[0, 1], [1, 0]])
        d3 = Device([3])
        assert np.allclose(oracle.pauli_matrix(d3.z(0)), np.diag([1, W3, W3 ** 2]))
        assert np.allclose(oracle.pauli_matrix(Device([2, 3]).identity()), np.eye(6))

    def test_capacity(self):
        with pytest.raises(CapacityError):
            oracle.pauli_matrix(Device([6, 6, 6, 6]).identity())

    def test_basis_order(self):
        d = Device([2, 3])
        assert oracle.basis_index(d, (1, 2)) == 5
        assert oracle.basis_digits(d, 5) == (1, 2)
        # X on register 1 is the most significant tensor factor
        m = oracle.pauli_matrix(d.x(0))
        assert np.allclose(m, np.kron(oracle.shift(2), np.eye(3)))


class TestProjector:
    def test_example1(self):
        pi = oracle.projector(EX1)
        assert abs(np.trace(pi) - 6) < 1e-9
        assert oracle.codespace_dim(EX1) == 6

    def test_empty(self):
        d = Device([2])
        assert np.allclose(oracle.projector(StabilizerCode(d, [])), np.eye(2))
        assert oracle.codespace_dim(StabilizerCode(D263, [])) == 36

    def test_qubit_x(self):
        d = Device([2])
        pi = oracle.projector(StabilizerCode(d, [d.x(0)]))
        assert np.allclose(pi, (np.eye(2) + oracle.shift(2)) / 2)

    def test_bell_dim(self):
        d = Device([2, 2])
        assert oracle.codespace_dim(StabilizerCode(d, [PauliVec(d, [1, 1], [0, 0])])) == 2

    def test_random_properties(self):
        rng = random.Random(1)
        for _ in range(40):
            device = random_device(rng, max_n=3)
            if device.dim > 400:
                continue
            code = StabilizerCode(device, random_commuting(rng, device))
            pi = oracle.projector(code)
            assert np.max(np.abs(pi @ pi - pi)) < 1e-9
            assert np.max(np.abs(pi - pi.conj().T)) < 1e-9
            assert oracle.codespace_dim(code) == logical_count(code)
            # stabilizer elements act as the identity on the codespace
            lift = oracle.StabilizerLift(code)
            for g in code.generators:
                m = lift.matrix(g)
                assert np.allclose(m @ pi, pi, atol=1e-9)

    def test_supergens(self):
        """Adding redundant products of generators leaves the projector unchanged."""
        rng = random.Random(4)
        for _ in range(30):
            device = random_device(rng, max_n=3)
            if device.dim > 200:
                continue
            gens = random_commuting(rng, device)
            code = StabilizerCode(device, gens)
            extra = [combine(gens, [rng.randrange(-3, 4) for _ in gens], device) for _ in range(3)] if gens else []
            bigger = StabilizerCode(device, gens + extra)
            a = oracle.generator_projector(code)
            b = oracle.generator_projector(bigger)
            c = oracle.projector(code)
            assert np.max(np.abs(a - b)) < 1e-9
            assert np.max(np.abs(a - c)) < 1e-9


class TestCodeword:
    def test_example1(self):
        vec = oracle.codeword(EX1, (0, 0, 0))
        expected = {(0, 0, 0), (1, 3, 0), (0, 2, 1), (0, 4, 2), (1, 5, 1), (1, 1, 2)}
        support = {oracle.basis_digits(D263, i) for i in np.nonzero(np.abs(vec) > 1e-9)[0]}
        assert support == expected
        for digits in expected:
            assert abs(vec[oracle.basis_index(D263, digits)] - 1 / np.sqrt(6)) < 1e-9

    def test_qubit_plus(self):
        d = Device([2])
        vec = oracle.codeword(StabilizerCode(d, [d.x(0)]), 0)
        assert np.allclose(vec, [1 / np.sqrt(2)] * 2)

    def test_zero_projection(self):
        d = Device([2])
        with pytest.raises(ValueError):
            oracle.codeword(StabilizerCode(d, [d.z(0)]), 1)

    def test_x_type_code_has_no_zero_projection(self):
        # every basis state lies in some orbit of an X-type stabilizer group
        pi = oracle.projector(EX1)
        assert min(np.linalg.norm(pi[:, i]) for i in range(36)) > 0.4
        zero = oracle.codeword(EX1, (0, 0, 0))
        other = oracle.codeword(EX1, (0, 1, 0))
        assert abs(np.vdot(zero, other)) < 1e-9


class TestConjugation:
    def test_cnot23_eq7(self):
        u = oracle.controlled_shift(2, 3)
        d = Device([2, 3])
        terms = oracle.conjugate_decompose(u, PauliVec(d, [0, 0], [0, 1]))
        got = {p.vector: c for c, p in terms}
        assert len(terms) == 2
        assert abs(got[(0, 0, 0, 1)] - (1 + W3) / 2) < 1e-9
        assert abs(got[(0, 0, 1, 1)] - (1 - W3) / 2) < 1e-9
        assert abs(sum(abs(c) ** 2 for c, _ in terms) - 1) < 1e-9

    def test_cnot22(self):
        u = oracle.controlled_shift(2, 2)
        assert np.allclose(u, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        d = Device([2, 2])
        terms = oracle.conjugate_decompose(u, PauliVec(d, [1, 0], [0, 0]))
        assert len(terms) == 1
        c, p = terms[0]
        assert abs(c - 1) < 1e-9 and p == PauliVec(d, [1, 1], [0, 0])

    def test_trivial_control(self):
        assert np.allclose(oracle.controlled_shift(1, 3), np.eye(3))

    def test_identity(self):
        d = Device([2, 3])
        p = PauliVec(d, [1, 2], [1, 0])
        terms = oracle.conjugate_decompose(np.eye(6), p)
        assert len(terms) == 1 and abs(terms[0][0] - 1) < 1e-9 and terms[0][1] == p

    def test_non_unitary(self):
        d = Device([2])
        with pytest.raises(ValueError):
            oracle.conjugate_decompose(2 * np.eye(2), d.x(0))

    def test_normalization_random(self):
        rng = np.random.default_rng(0)
        d = Device([2, 3])
        q, _ = np.linalg.qr(rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6)))
        for p in [PauliVec(d, [1, 0], [0, 1]), PauliVec(d, [0, 2], [1, 1])]:
            terms = oracle.conjugate_decompose(q, p)
            assert abs(sum(abs(c) ** 2 for c, _ in terms) - 1) < 1e-9
