# %% [markdown]
# # Arbitrary-precision backend
#
# Every public numeric function runs twice, at `prec` and `prec + 64` bits, and
# raises `PrecisionError` if the two disagree beyond `prec - 8` bits.

# %%
from fractions import Fraction

from gammacert import numeric

print("gamma    ", numeric.to_decimal(numeric.const_gamma(256), 60))
print("zeta(3)  ", numeric.to_decimal(numeric.const_zeta(3, 256), 60))
print("zeta(2, 1/2) = 3 zeta(2):", numeric.to_decimal(numeric.hurwitz_zeta(2, Fraction(1, 2), 128), 30))
print("psi(1/2) = -gamma - 2 ln 2:", numeric.to_decimal(numeric.polygamma_numeric(Fraction(1, 2), 0, 128), 30))

# %%
nt = numeric.gamma_taylor_numeric(Fraction(1, 3), 5, 192)
for n in range(6):
    print(f"Gamma^({n})(1/3) = {numeric.to_decimal(nt.derivative(n), 40)}")

# %% [markdown]
# Hex-float renderings are exact and suitable for golden files.

# %%
print(numeric.to_hex(numeric.const_pi(64)))
