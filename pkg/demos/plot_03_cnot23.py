"""
A qubit-controlled qutrit shift is not Clifford
================================================

Conjugating I (x) Z_3 by CNOT(2,3) gives a sum of two Paulis rather than a
single one.
"""

import numpy as np

from mixedreg import Device, PauliVec
from mixedreg import oracle
from mixedreg.pauli import render

u = oracle.controlled_shift(2, 3)
d = Device([2, 3])
target = PauliVec(d, [0, 0], [0, 1])

terms = oracle.conjugate_decompose(u, target)
for c, p in terms:
    print(f"{c.real:+.6f}{c.imag:+.6f}i   {render(p)}")

w3 = np.exp(2j * np.pi / 3)
print("(1 + w3)/2 =", np.round((1 + w3) / 2, 6), "  (1 - w3)/2 =", np.round((1 - w3) / 2, 6))
print("sum |c|^2 =", sum(abs(c) ** 2 for c, _ in terms))

# for comparison, the ordinary qubit CNOT maps X (x) I to X (x) X
terms = oracle.conjugate_decompose(oracle.controlled_shift(2, 2), PauliVec(Device([2, 2]), [1, 0], [0, 0]))
print("CNOT(2,2):", [(round(c.real, 6), render(p)) for c, p in terms])
