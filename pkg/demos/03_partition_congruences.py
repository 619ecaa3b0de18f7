"""Ramanujan's p(5n+4) and Zuckerman's p(13n+6) as eta quotients."""

from fractions import Fraction

from hauptmodul.qexpand import extract_progression, partition_series, verify_q_identity

p = partition_series(200)
five = extract_progression(p, 5, 4)
print("p(5n+4):", [five.coefficient(n) for n in range(8)])
print("all divisible by 5:", all(c % 5 == 0 for _, c in five.items()))

seven = extract_progression(p, 7, 5)
print("p(7n+5):", [seven.coefficient(n) for n in range(8)])

thirteen = extract_progression(p, 13, 6)
print("p(13n+6):", [thirteen.coefficient(n) for n in range(6)])

for qid in ("Q1", "Q2", "Q3"):
    rep = verify_q_identity(qid, Fraction(12))
    print(qid, rep.status, rep.detail)
