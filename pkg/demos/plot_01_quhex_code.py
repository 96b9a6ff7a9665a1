"""
Joining a qubit and a qutrit code on one 6-level register
==========================================================

Two repetition codes, one over qubits and one over qutrits, share their
middle register.  That register becomes 6-level and the result encodes
six logical states.
"""

import numpy as np

from mixedreg import Device, PauliVec, StabilizerCode, logical_count, scan
from mixedreg import oracle
from mixedreg.analysis import centralizer, contains, distance_witness
from mixedreg.pauli import render


def x_repetition(q):
    d = Device([q, q])
    return StabilizerCode(d, [PauliVec(d, [1, 1], [0, 0])])


code = scan(x_repetition(2), x_repetition(3), (1, 2), (2, 3))
print("moduli:", code.device.moduli)
for g in code.generators:
    print("  gen", render(g))

# the qubit generator carries X^3 on the 6-level register, the qutrit one X^2
print("K =", logical_count(code))

# I X_6 I commutes with everything but is not a stabilizer: a logical operator
xbar = PauliVec(code.device, [0, 1, 0], [0, 0, 0])
print("I X6 I logical:", contains(centralizer(code), xbar) and not contains(code.generators, xbar))

found = distance_witness(code, 3)
print("distance", found.distance, "witness", render(found.witness))

# dense check: the codeword grown from |000>
vec = oracle.codeword(code, (0, 0, 0))
for i in np.nonzero(np.abs(vec) > 1e-9)[0]:
    digits = "".join(map(str, oracle.basis_digits(code.device, i)))
    print(f"|{digits}>  {vec[i].real:+.6f}")
print("1/sqrt(6) =", 1 / np.sqrt(6))
