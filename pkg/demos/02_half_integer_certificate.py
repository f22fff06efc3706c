# %% [markdown]
# # Exact certificate at integer and half-integer points
#
# For q = xi + m with xi in {1, 1/2}, the coefficient c_j of t^(2j) in
# Gamma(q+t) Gamma(q-t) is computed two ways:
#
# * multiplying the symbolic Taylor series (gamma, ln 2 and odd zetas must cancel);
# * convolving the rational R_q(t^2) with the pi t / sin(pi t) or pi / cos(pi t) series.

# %%
from gammacert import c_via_cauchy, c_via_pi, rq_coefficients, verify_theorem1

q = "5/2"
rq = rq_coefficients(q, 4)
print(f"q = {q}: xi = {rq.xi}, m = {rq.m}, b = {[str(b) for b in rq.b]}")

symbolic = c_via_cauchy(q, 4)
for j, (row, vec) in enumerate(zip(symbolic.rows, c_via_pi(q, 4))):
    print(f"c_{j}: {row}    |  via pi powers: {vec.to_const()}")

# %% [markdown]
# Each row's top pi exponent is 2(j + 1 - xi) with coefficient b_0 a_j != 0,
# so the rows are triangular in the powers of pi.

# %%
for q in ["1", "1/2", "-3/2", "7/2"]:
    rep = verify_theorem1(q, 10)
    lead = ", ".join(f"p^{e}:{c}" for e, c in rep.leading_entries[:4])
    print(f"q = {q:>5}: passed = {rep.passed}; leading entries {lead}, ...")
