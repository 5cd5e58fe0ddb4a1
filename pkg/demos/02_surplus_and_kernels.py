# %% [markdown]
# # Surplus, matching autarkies and kernels
#
# The surplus of F is the minimum deficiency over all restrictions F[V].
# Here it comes from one min cut per variable and is compared with an
# exhaustive search.

# %%
import random

from cnfstruct import MultiClauseSet, full_clause_set, m_construction, matching_lean_kernel, surplus
from cnfstruct.mu import lean_kernel
from cnfstruct.oracle import brute_surplus, random_clause_set

for name, F in [("A(2)", full_clause_set([1, 2])), ("M(2)", m_construction([1, 2])),
                ("{v}", MultiClauseSet([[1]]))]:
    cert = surplus(F)
    print(f"{name:5s} surplus={cert.surplus} witness={sorted(cert.witness)} "
          f"brute={brute_surplus(F).surplus}")

# %% [markdown]
# Random agreement check between the flow computation and the oracle.

# %%
rng = random.Random(1)
agree = 0
for _ in range(100):
    F = random_clause_set(rng, rng.randint(1, 10), rng.randint(1, 16), max_multiplicity=3)
    agree += surplus(F).surplus == brute_surplus(F).surplus
print("agreement on 100 random instances:", agree)

# %% [markdown]
# Surplus <= 0 means there is a matching autarky; applying them until none is
# left gives the matching-lean kernel.  The lean kernel removes every
# autarky, which is stronger.

# %%
F = MultiClauseSet([[1], [-1], [2, 3], [2, -3], [4, 5], [-4, 5], [4, -5]])
print("F:", F)
print("matching-lean kernel:", matching_lean_kernel(F))
print("lean kernel:", lean_kernel(F))
