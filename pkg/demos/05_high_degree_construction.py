# %% [markdown]
# # Matching-lean clause-sets with large literal degrees
#
# Gluing M(var(G)) to a fresh copy M(V') on top of a matching-lean G raises
# the deficiency by one and keeps every positive literal degree >= K.  The
# degrees grow without bound for fixed deficiency, so no degree bound can
# hold for matching-lean clause-sets in general.

# %%
from cnfstruct import construct_high_degree_mlean, is_matching_lean, mlcr_conditions
from cnfstruct.cnf import degrees

for k in (1, 2, 3):
    for K in (2, 4, 6):
        F = construct_high_degree_mlean(k, K)
        table = degrees(F)
        low = min(table.ldeg(v) for v in F.variables)
        print(f"k={k} K={K}: n={F.n:3d} c={F.c:3d} deficiency={F.deficiency} "
              f"min positive degree={low} matching lean={is_matching_lean(F)}")

# %% [markdown]
# None of these are in the critical class: the copy V' alone reaches
# surplus 1, so var(F) is not the unique minimizer.

# %%
print(mlcr_conditions(construct_high_degree_mlean(3, 3)))
