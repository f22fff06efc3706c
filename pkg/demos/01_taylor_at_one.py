# %% [markdown]
# # Taylor coefficients of Gamma at 1
#
# `gammacert.taylor` expands Gamma(1 + t) exactly. Coefficients live in the ring
# Q[gamma, ln 2, sqrt(pi), zeta(3), zeta(5), ...]; even zeta values are rewritten as
# rational multiples of powers of pi as soon as they appear.

# %%
from gammacert import taylor, taylor_via_recursion

t = taylor(1, 6)
for n in range(7):
    print(f"Gamma^({n})(1) = {t.derivative(n)}")

# %% [markdown]
# The same numbers come out of the classical recursion in gamma and zeta values.
# The two routes share no code beyond ring arithmetic, so exact agreement is a
# strong check on both.

# %%
print("routes agree to order 12:", taylor(1, 12).series == taylor_via_recursion(12).series)

# %% [markdown]
# Gamma''(1) - Gamma'(1)^2 collapses to zeta(2) = pi^2/6, which is what makes one
# of Gamma'(1), Gamma''(1) transcendental.

# %%
print("Gamma''(1) - Gamma'(1)^2 =", t.derivative(2) - t.derivative(1) ** 2)

# %%
from gammacert import evaluate

print("numerically:", evaluate(t.derivative(3), 128))
