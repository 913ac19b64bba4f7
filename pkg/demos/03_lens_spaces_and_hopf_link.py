# %% [markdown]
# Surgery invariants: lens spaces L(n, 1), then the Hopf-linked pair
# (W(2pk), Z(2pl)) evaluated straight from its linking matrix, without
# blowing anything down.

# %%
from skeingram import hopf_link_presentation, lens_invariant, make_params, wrt_invariant
from skeingram.cyclotomic import embed_root

params = make_params(5)
mu = lambda k: embed_root(params.mu_root ** k)

for n in (0, 1, 10, -10, 20):
    v = lens_invariant(params, n)
    print(f"<L({n},1)> is 1: {v == 1}, eta: {v == params.eta}, mu^-1: {v == mu(-1)}, mu: {v == mu(1)}")

# %%
pres = hopf_link_presentation(params, 1, 2)
print(pres.format_matrix())
print("signature", pres.signature())

# %%
for k in (1, 2):
    for l in (1, 2):
        v = wrt_invariant(params, hopf_link_presentation(params, k, l))
        sign = (l > k) - (l < k)
        print(f"k={k} l={l}: direct == mu^{-sign}: {v == mu(-sign)}")
