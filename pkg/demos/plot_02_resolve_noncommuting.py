"""
Resolving non-commuting generators with extra registers
========================================================

X_6^3 Z_5^3 and Z_6 X_5 fail to commute by a phase of order 10.  The
decomposition isolates one hyperbolic pair, and one appended 10-level
register absorbs its phase.
"""

from mixedreg import Device, PauliVec, commutator_matrix, decompose, resolve
from mixedreg.construct import commutator_rank, resolution_lower_bound
from mixedreg.pauli import render, symp

d = Device([6, 5])
g1 = PauliVec(d, [3, 0], [0, 3])
g2 = PauliVec(d, [0, 1], [1, 0])

print("symp(g1, g2) =", symp(g1, g2))
print("commutator matrix:", [[str(v) for v in row] for row in commutator_matrix([g1, g2])])

r = decompose([g1, g2], d)
for w in r.isotropic:
    print("isotropic", render(w))
for u, v, dd in r.pairs:
    print(f"pair d={dd}: U = {render(u)}, V = {render(v)}, symp(U, V) = {symp(u, v)}")

code = resolve([g1, g2], d)
print("resolved device:", code.device.moduli)
for g in code.generators:
    print("  gen", render(g))
print("registers appended:", code.n - d.n, " rank/2:", resolution_lower_bound([g1, g2]))

# coprime pairs merge: a qubit pair and a qutrit pair need a single 6-level register
d23 = Device([2, 3])
gens = [d23.x(0), d23.z(0), d23.x(1), d23.z(1)]
merged = resolve(gens, d23)
print()
print("qubit + qutrit pairs resolve onto", merged.device.moduli)
print("rank/2 of the raw set:", resolution_lower_bound(gens),
      " of the decomposed set:", commutator_rank(decompose(gens, d23).generators()) // 2)
