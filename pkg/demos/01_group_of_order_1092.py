"""The six-dimensional S and T, their relations, and the closure they generate."""

import numpy as np

from hauptmodul.repgroup import CycMatrix, build_matrix, displayed, enumerate_group, projective_eq

S = build_matrix("S6")
T = build_matrix("T6")
I6 = CycMatrix.identity(6)

# T is diagonal with 13th roots of unity; S is the sine-block matrix times -1/sqrt13
print("T diagonal:", [str(T[i, i]) for i in range(6)])

# S squares to -I on the nose, so relations hold up to a scalar
print("S^2 == -I:", S * S == -I6)
ok, lam = projective_eq((S * T) ** 3, I6)
print("(ST)^3 = lambda I with lambda =", lam)

# projectively, <S, T> is PSL(2, 13)
G = enumerate_group([S, T])
print("order of <S, T>:", G.order)

# the Borel image <H, T> has index 14
B = enumerate_group([displayed("H"), T])
print("order of <H, T>:", B.order, "index:", G.order // B.order)

# numeric view through numpy
s = S.to_complex()
# S is unitary
print("max |S S^H - I| =", np.abs(s @ s.conj().T - np.eye(6)).max())
