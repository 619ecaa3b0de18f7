"""j and j(13z) as rational functions of the Hauptmodul."""

from hauptmodul.qexpand import format_terms, horner, j_series, tau_series

j = j_series(4)
print("j =", format_terms(j.items()))

t = tau_series(6)
rhs = horner((1, 5, 13), t) * horner((1, 247, 3380, 15379, 28561), t) ** 3 / t ** 13
print("from tau:", format_terms(rhs.truncate(5).items()))
print("difference below q^5 is zero:", (j - rhs).truncate(4).is_zero())
