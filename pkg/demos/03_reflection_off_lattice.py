# %% [markdown]
# # The reflection identity away from (1/2)Z
#
# For q outside (1/2)Z the Taylor coefficients of Gamma(q+t) Gamma(1-q-t) equal those
# of pi / sin(pi (q + t)), i.e. d_j pi^(j+1) with algebraic d_j. Both sides are computed
# numerically and independently, at a chosen precision.

# %%
from gammacert import verify_theorem2

for q in ["1/3", "1/4", "2/5", "1/7"]:
    rep = verify_theorem2(q, 16, prec=256)
    worst = max(r["rel_err_log2"] or -1e9 for r in rep.rows)
    print(f"q = {q}: agree = {rep.all_agree}, worst rel. error 2^{worst:.1f}, non-zero d_j: {rep.nonzero_count}/17")

# %%
rep = verify_theorem2("1/4", 4, prec=128)
for row in rep.rows:
    print(row["j"], row["d"])
