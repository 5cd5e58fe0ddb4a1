# %% [markdown]
# # Non-Mersenne numbers
#
# The bound on the minimum variable degree is a function nm(k) of the
# deficiency (or surplus) k.  It is defined by a max-min recursion, has a
# closed form, and skips exactly the numbers 2^n - 1.

# %%
import numpy as np

from cnfstruct import NonMersenneTable, aux_indices, jump_set, nm1, nm_closed

table = NonMersenneTable.build(60)
print("nm(1..26):", list(table.values[:26]))

# %% [markdown]
# The sequence steps by 1 except right after the jump positions, where it
# steps by 2.  The jumps have the form 2^(m+1) - m - 2.

# %%
values = np.array(table.values)
steps = np.diff(values)
print("step sizes:", sorted(set(steps.tolist())))
print("jumps from the table:", list(table.jumps))
print("jumps from the formula:", list(jump_set(60)))

# %% [markdown]
# Values missing from the range are exactly the Mersenne numbers.

# %%
missing = sorted(set(range(2, values[-1] + 1)) - set(values.tolist()))
print("missing values:", missing)

# %% [markdown]
# The recursion's maximizing index i(k) splits nm(k) as h(k) + i(k).

# %%
for k in (2, 4, 5, 11, 26):
    a = aux_indices(k)
    print(f"k={k:2d}  i={a.i:2d}  i'={a.i_prime:2d}  h={a.h:2d}  h+i={a.h + a.i:2d}  nm={nm_closed(k)}")

# %% [markdown]
# For minimally unsatisfiable clause-sets the bound drops by one at
# k = 2^m - m + 1.

# %%
print([(k, nm_closed(k), nm1(k)) for k in range(1, 30) if nm1(k) != nm_closed(k)])
