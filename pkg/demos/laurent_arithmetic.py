# Exact Laurent polynomials in W, and what they turn into at W = exp(-alpha/2).
from spin7link.exactalg import RatFunc, W, lp_div_exact, lp_gcd, lp_to_alpha_series
from spin7link.repdata import DELTA

p = (1 + W**4) * (1 + W**12) * (1 + W**20)
print("product          :", p)
print("unknot value     :", DELTA)        # the same product, shifted by W^-18
print("at W = 1         :", DELTA(1))      # 8, the dimension of the spinor rep
print("mirror-invariant :", DELTA.mirror() == DELTA)

# division either lands in Z[W, W^-1] or raises NotDivisible
print("(1 - W^8)/(1 + W^4) =", lp_div_exact(1 - W**8, 1 + W**4))
print("gcd(W^8 - 1, W^4 - 1) =", lp_gcd(W**8 - 1, W**4 - 1))

# rational functions are kept reduced
r = RatFunc(W**4 * (W**24 - 1), 1 + W**4)
print("W^4 (W^24 - 1)/(1 + W^4) =", r, "| Laurent:", r.is_laurent())

# the substitution into truncated alpha series
for k in (0, -21, 21):
    print(f"W^{k} to order 3 :", lp_to_alpha_series(W**k, 3))
print("Delta to order 2 :", lp_to_alpha_series(DELTA, 2))
