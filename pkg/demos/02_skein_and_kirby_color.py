# %% [markdown]
# The skein module of the solid torus, the twist map and the Kirby color
# for p = 5.  The construction checks are recorded, not assumed.

# %%
from skeingram import kirby_color, make_params, twist, unknot_eval
from skeingram.cyclotomic import to_complex
from skeingram.skein import SkeinElement, z_to_e

params = make_params(5)
for name, ok in params.checks:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")

# %%
N = params.n_order
print("z^3 =", z_to_e(SkeinElement.z(3, N)))   # e_3 + 2 e_1

# %%
omega = kirby_color(params)
print("eta U(omega)         =", params.eta * unknot_eval(params, omega))
print("U(t omega) == mu     :", unknot_eval(params, twist(params, omega, 1)) == params.mu)
print("t^10 omega == omega  :", twist(params, omega, 10).equals(omega))
print("eta ~", to_complex(params.eta))
