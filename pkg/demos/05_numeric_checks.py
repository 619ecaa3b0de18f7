"""Floating-point look at the transformation laws of A(z) = (a_1, ..., a_6)."""

import numpy as np

from hauptmodul.numcheck import a_vector_value, eval_series_point, verify_transformation

z = 0.5 + 1j
print("eta(i) =", eval_series_point("eta(1)", 1j))
print("A(z) =", np.round(a_vector_value(z), 6))

for tid in ("N1_Tshift", "N2_Sflip", "N5_rademacher5", "N5_rademacher13", "N6_sine_unit"):
    rep = verify_transformation(tid)
    print(f"{tid:16s} {rep.status:5s} {rep.detail}")
