"""tau = (eta(z)/eta(13z))^2 from the theta constants a_1..a_6, as exact series."""

from hauptmodul.invariants import build_form
from hauptmodul.qexpand import a_vector, eta_series, format_terms, tau_series

N = 12
a = a_vector(N)
for i, s in enumerate(a, start=1):
    print(f"a{i}:", format_terms(s.items()[:3]))

# the degree-12 invariant evaluated on the thetas
phi = build_form("Phi12").evaluate(a, coerce=lambda c: c)
eta = eta_series(1, N)
print("Phi12(a) - eta^12 vanishes below q^%s:" % (phi - eta ** 12).trunc, (phi - eta ** 12).is_zero())

# and the product of the thetas
prod = a[0] * a[1] * a[2] * a[3] * a[4] * a[5]
eta13 = eta_series(13, N + 13)
print("prod a + eta eta13^5 is zero:", (prod + eta * eta13 ** 5).is_zero())

# tau^5 is their quotient
tau5 = phi / prod ** 2
print("tau^5 leading terms:", format_terms(tau5.items()[:4]))
print("tau^5 from eta:     ", format_terms((tau_series(N) ** 5).items()[:4]))
