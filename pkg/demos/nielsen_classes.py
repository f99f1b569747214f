"""
Nielsen classes and the Hurwitz curve
=====================================

Covers of the line with branch cycles of type
((n-2), 3, 2^((n-2)/2), 2^(n/2)) come in finitely many braid-equivalence
classes. We list them, check the list against a brute-force search, and read
off the genus of the Hurwitz curve from the braid monodromy.
"""

from hurwitz_family.nielsen import brute_force_sni, canonicalize, enumerate_sni, gamma_monodromy

n = 8

# Every class has a representative whose first entry is the (n-2)-cycle.
classes = enumerate_sni(n)
for label, t in classes:
    print(f"{label!s:>4}  {t}")

# %%
# An independent enumeration runs over all 3-cycles and all involutions of
# the right shape, then keeps the generating tuples.
bf = brute_force_sni(n)
ours = sorted(canonicalize(t).key() for _, t in classes)
print("brute force agrees:", ours == sorted(t.key() for t in bf.representatives),
      f"({bf.tuples_examined} tuples examined)")

# %%
# The pure braids Q1^2, Q2^2 permute the classes. Their cycle types are the
# ramification of the Hurwitz curve over the three fixed branch points, and
# Riemann-Hurwitz gives its genus.
rep = gamma_monodromy(n)
for name, action in rep.to_json()["actions"].items():
    print(f"{name:>13}: {action}")
print("cycle types:", {k: v for k, v in rep.cycle_types.items()})
print("orbits:", rep.orbit_count, " genus:", rep.genus)
