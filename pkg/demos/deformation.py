"""
From a degenerate cover to power series
=======================================

At the boundary of the family the cover splits into a Padé-type piece and a
Chebyshev piece. Their coefficients are the mu = 0 solution of a square
polynomial system, which Newton's method lifts to power series in mu.
"""

from hurwitz_family.family.degenerate import chebyshev_degenerate, initial_coefficients, pade_degenerate
from hurwitz_family.family.newton import newton_lift
from hurwitz_family.family.normalize import normalize
from hurwitz_family.family.system import jacobian_rank_at_degenerate_point

n = 6
print("Pade denominator:", pade_degenerate(n).denominator)
print("Chebyshev piece: ", chebyshev_degenerate(n).y)
m0 = initial_coefficients(n)
print("initial delta:", [str(d) for d in m0.delta])

# %%
# In the original unknowns the Jacobian at mu = 0 is singular; after
# rescaling the S_0 and S_lambda coefficients by powers of mu it is not.
for scaled in (False, True):
    rank, _ = jacobian_rank_at_degenerate_point(n, scaled)
    print(f"scaled={scaled!s:5}  rank {rank} of {2 * n}")

# %%
# Each Newton step doubles the certified order.
state = newton_lift(n, 32)
print("certified orders:", state.certified_orders)
print("valuation of lambda:", state.lambda_valuation())
print("lambda =", [str(c) for c in state.model.lam.coeffs[:10]], "...")

# %%
# A homography fixing 1 and infinity removes the subleading term of S_0.
report = normalize(state)
print("subleading coefficient now:", report.model.alpha[n // 2 - 1].valuation(), "(None means 0)")
