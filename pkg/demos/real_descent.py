"""
Which class has totally real fibers?
====================================

A cover descends to the reals exactly when an involution tau satisfies four
relations with the branch cycles. One relation pins tau down, so the test is
a direct computation. Only one class per degree passes with tau = 1.
"""

from hurwitz_family.descent import an_lift_report, descent_check, find_totally_real_classes
from hurwitz_family.nielsen import ClassLabel, enumerate_sni, make_class

for n in (6, 8, 10, 12):
    print(n, [str(lab) for lab in find_totally_real_classes(n)])

# %%
# The verdict for every class at n = 6:
for label, t in enumerate_sni(6):
    v = descent_check(t)
    print(f"{label!s:>4}  over R: {v.defined_over_R!s:5}  totally real: {v.totally_real}")

# %%
# Pairing each branch cycle with a sheet swap when it is odd gives a degree 2n
# tuple of even permutations. It still generates a group of order n! and still
# passes the descent test, which is what the alternating-group variant needs.
rep = an_lift_report(make_class(8, ClassLabel("A", 3)))
print("odd positions:", rep.odd_positions, " order:", rep.order, " totally real:", rep.verdict.totally_real)
