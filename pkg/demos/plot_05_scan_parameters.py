"""
How overlap changes a scanned code
===================================

Qubit and qutrit seeds joined on 0, 1 or 2 shared registers.  The logical
dimension stays 2^k1 3^k2 and the distance stays the smaller seed distance.
"""

from mixedreg import Device, PauliVec, StabilizerCode, distance, logical_count, scan
from mixedreg import oracle


def seed(q, rows):
    d = Device([q] * len(rows[0][0]))
    return StabilizerCode(d, [PauliVec(d, x, z) for x, z in rows])


qubit = seed(2, [([1, 1, 1, 1], [0] * 4), ([0] * 4, [1, 1, 1, 1])])
qutrit = seed(3, [([1, 1, 1, 1], [0] * 4), ([0] * 4, [1, 1, 2, 2])])
print("seeds: K =", logical_count(qubit), logical_count(qutrit), " d =", distance(qubit), distance(qutrit))

for m in (0, 1, 2):
    code = scan(qubit, qutrit, (1, 2, 3, 4), tuple(range(5 - m, 9 - m)))
    k = logical_count(code)
    line = f"overlap {m}: moduli {code.device.moduli}  K = {k}  d = {distance(code, 3)}"
    if code.device.dim <= 1024:
        line += f"  trace = {oracle.codespace_dim(code)}"
    print(line)
