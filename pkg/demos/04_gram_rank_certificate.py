# %% [markdown]
# Truncated Gram matrices of the torus pairing.  det B(1, n) is computed
# by the recursion, spot-checked by Bareiss elimination, and the scan
# certifies that w_10, ..., w_10n are linearly independent.

# %%
import numpy as np

from skeingram import make_params, singularity_scan, truncated_matrix
from skeingram.gram import det_bareiss, det_by_reduction, det_sequence, singular_sizes_closed_form

params = make_params(5)
t = truncated_matrix(params, [3, 7, 20])
print(np.array([[complex(x) for x in row] for row in t.entries]).round(3))

# %%
seq = det_sequence(params, 12)
print("routes agree up to 12:",
      all(det_bareiss(params, n) == seq[n - 1] == det_by_reduction(params, n) for n in range(1, 13)))

# %%
report = singularity_scan(params, 100)
print(report.to_text())
print("closed form predicts:", singular_sizes_closed_form(params, 100))

# %%
mags = np.abs(report.determinant_floats())
print("smallest nonzero |det|:", mags[mags > 0].min())
