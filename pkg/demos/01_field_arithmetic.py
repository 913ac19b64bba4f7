# %% [markdown]
# Exact arithmetic in Q(zeta_N).  Everything downstream rests on equality
# being decidable, so elements are kept reduced mod the cyclotomic polynomial.

# %%
from skeingram.cyclotomic import (
    CycNumber, RootOfUnity, conjugate, cyclotomic_polynomial, embed_root, invert, to_complex,
)

print("Phi_6  =", cyclotomic_polynomial(6))     # 1 - x + x^2, lowest degree first
print("Phi_24 =", cyclotomic_polynomial(24))

# %%
N = 120
z = embed_root(RootOfUnity(1, N))
x = 3 + z ** 7 - CycNumber.from_int(N, 2) * z ** 50   # z^50 is past phi(120) = 32, so it reduces
print("x       =", x)
print("1/x has denominator", invert(x).denominator)
print("x * 1/x =", x * invert(x))

# %%
# conjugation is the Galois map zeta -> zeta^-1; x + conj(x) is real
s = x + conjugate(x)
print("x + conj(x) ~", to_complex(s))
print("2 Re x      ~", 2 * to_complex(x).real)
