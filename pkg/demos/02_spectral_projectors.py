#!/usr/bin/env python3
# A multiplicity-free matrix splits the space into one-dimensional
# eigenspaces; the rank-one projectors onto them are computed from the
# product formula and verified exactly on construction.

import random

from leonardkit import GF, QQ, SquareMatrix, eigenspace, inverse, is_multiplicity_free, spectral_data

a = SquareMatrix.from_rows(QQ, [[1, 0], [1, 0]])
print("is [[1,0],[1,0]] multiplicity-free?", is_multiplicity_free(a))

# order the spectrum explicitly: eigenvalue 1 first, then 0
sd = spectral_data(a, [QQ.element(1), QQ.element(0)])
for i, (theta, e) in enumerate(zip(sd.eigenvalues, sd.idempotents)):
    print(f"theta_{i} = {theta},  E_{i} = {e}")

# each projector acts as the identity on its eigenspace and kills the others
v0 = eigenspace(sd, 0)
print("eigenspace spanner for theta_0:", v0, "-> A v =", a.apply(v0))

# the invariants hold over any prime field as well; build a conjugated
# triangular matrix so the spectrum is known in advance
f = GF(101)
rng = random.Random(0)
tri = SquareMatrix.from_rows(f, [[3, 0, 0], [rng.randrange(101), 17, 0],
                                 [rng.randrange(101), rng.randrange(101), 55]])
g = SquareMatrix.from_rows(f, [[1, 2, 0], [0, 1, 5], [3, 0, 1]])
m = inverse(g) @ tri @ g
sd = spectral_data(m)
print("\nGF(101) spectrum:", [str(t) for t in sd.eigenvalues])
print("sum of projectors is the identity:",
      sum(sd.idempotents[1:], sd.idempotents[0]) == SquareMatrix.identity(f, 3))

# the whole spectrum annihilates the matrix: prod (A - theta_i I) = 0
prod = SquareMatrix.identity(f, 3)
for theta in sd.eigenvalues:
    prod = prod @ (m - SquareMatrix.identity(f, 3).scale(theta))
print("prod (A - theta_i I) is zero:", prod.is_zero())
