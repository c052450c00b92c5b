# The four-term relation for R12^2, and the comparison with the alpha-picture.
from spin7link.analysis import derive_skein_coefficients, series_consistency_check, w1_degeneration_check
from spin7link.exactalg import W

sc = derive_skein_coefficients()
print("R12^2 = c_cross R12 + c_id + c_crossinv R12^-1 + c_clasp A12")
for name, c in zip(("c_cross", "c_id", "c_crossinv", "c_clasp"), sc.as_tuple()):
    print(f"  {name:<10} = {c}")
print("c_clasp is a Laurent polynomial:", sc.c_clasp.is_laurent())
print("c_cross * W^-24 =", sc.c_cross * W**-24)

# traces of R12^n, expanded in alpha, against exp(-alpha/2 r12) s12 to order 6
rep = series_consistency_check(n_max=6, order=6)
print(rep.name, "->", "all equal" if rep.ok else rep.failures)

print(w1_degeneration_check())
