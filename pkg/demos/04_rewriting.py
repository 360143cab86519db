#!/usr/bin/env python3
"""Quadratic rewriting systems for the monoid algebras.

When every row of the solution is the same permutation, the defining
relations collapse to xy = yy and orient into the fixed confluent system
yz -> 0z.  For an arbitrary solution the degree-2 relations are closed
transitively and oriented onto class minima; all length-3 overlaps are
then tested, and a confluent outcome certifies the normal-word counts.
"""

from ybx import (SOL_Z2, SOL_Z3INV, check_overlaps, constant_rules, growth,
                 normal_word_count, reduce, solution_rules)
from ybx.search import EnumOptions, enumerate_solutions

print("== the constant-row system ==")
for n in (2, 3, 4):
    rs = constant_rules(n)
    overlaps = check_overlaps(rs)
    counts = normal_word_count(rs, 6)
    print(f"n={n}: rules={len(rs.rules)} unresolved={len(overlaps)} counts={counts}")

rs = constant_rules(3)
print("reducing 2 1 0 2:", reduce(rs, (2, 1, 0, 2)))

print()
print("== systems read off arbitrary solutions ==")
for s, name in ((SOL_Z2, "Z2"), (SOL_Z3INV, "Z3 inversion")):
    rs, report = solution_rules(s)
    print(f"{name}: rules={[(r.lhs, r.rhs) for r in rs.rules]}")
    print(f"   status: {report.status}")
    counts = normal_word_count(rs, 6)
    oracle = growth(s, 6).oracle
    print(f"   normal words {counts} vs growth {list(oracle)}")

print()
print("== every class on up to 4 points, empirically ==")
total = confluent = 0
for n in (2, 3, 4):
    for s in enumerate_solutions(EnumOptions(n, up_to_iso=True)).solutions:
        total += 1
        _, report = solution_rules(s)
        confluent += report.confluent
print(f"quadratically confluent classes: {confluent} of {total}")
