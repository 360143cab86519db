#!/usr/bin/env python3
"""Arithmetic in the structure monoid and its groups of quotients.

Every monoid element is determined by its length and last letter, so a
pair (k, x) is an exact representation.  Each component embeds into a
group of fractions over the central element c_u = (d, u); the degree-0
fractions form the finite torsion groups.
"""

from ybx import (MElem, SOL_SWAP2, SOL_Z2, SOL_Z3INV, center_basis,
                 component, conjugation_action, gq_identity, gq_inverse,
                 gq_mul, growth, is_cancellative, mul, normal_form,
                 torsion_elem)
from ybx.monoid import gq_from, power

z3 = SOL_Z3INV
print("== products carry the grading of the right factor ==")
a, b = MElem(1, 1), MElem(2, 2)
print(f"(1,1) . (2,2) = {mul(z3, a, b)}")
print("component of the product:", component(z3, mul(z3, a, b)),
      "= component of right factor:", component(z3, b))

print()
print("== every word normalises to t^(k-1) . x ==")
word = [2, 0, 1, 1]
k, x = normal_form(z3, word, 0)
print(f"word {word} with t=0 -> (k={k}, x={x})")
print("re-multiplied:", mul(z3, power(z3, MElem(1, 0), k - 1), MElem(1, x)))

print()
print("== growth: the pair model against the word-rewriting oracle ==")
for s, name in ((SOL_Z2, "Z2"), (z3, "Z3 inversion")):
    rep = growth(s, 6)
    print(f"{name}: model {rep.model} oracle {rep.oracle} agree {rep.agree}")

print()
print("== cancellativity detects the size of the diagonal ==")
for s, name in ((SOL_Z2, "Z2 (diagonal size 1)"), (SOL_SWAP2, "swap (size 2)")):
    ok, witness = is_cancellative(s, 2 * s.d + 1)
    print(f"{name}: cancellative={ok} witness={witness}")

print()
print("== the center of the monoid algebra, degree by degree ==")
for s, name in ((SOL_Z2, "Z2"), (SOL_SWAP2, "swap")):
    for deg in (1, 2):
        basis = center_basis(s, deg)
        print(f"{name} degree {deg}: dimension {len(basis)}")

print()
print("== fraction arithmetic in the quotient groups ==")
t1 = torsion_elem(z3, 0, 1)
t2 = torsion_elem(z3, 0, 2)
print("t_{0,1} . t_{0,2} =", gq_mul(z3, t1, t2), "=", gq_identity(z3, 0))
print("inverse of t_{0,1}:", gq_inverse(z3, t1), "=", t2)
g = gq_from(z3, 1, 0)
print("a length-1 fraction:", g, "inverse:", gq_inverse(z3, g))

print()
print("== conjugation by the base element acts on the torsion group ==")
ca = conjugation_action(z3, 0)
print(f"base x_0 = {ca.base}, action {ca.as_dict()}, order {ca.order}")
print("(inversion: the group extension is the infinite dihedral flavor)")
ca2 = conjugation_action(SOL_Z2, 0)
print("for Z2 the action is trivial:", ca2.as_dict())
