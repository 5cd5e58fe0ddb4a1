# %% [markdown]
# # Certifying the bound: low-degree variable or autarky
#
# For any clause-set, `certify` returns either a variable with degree at most
# nm(surplus) or an explicit non-trivial autarky.  The high-degree
# construction below has surplus 1 but minimum degree 3 > nm(1) = 2, so it
# has to produce an autarky.

# %%
from cnfstruct import certify, construct_high_degree_mlean, full_clause_set, is_autarky, surplus
from cnfstruct.cnf import apply, degrees

F = construct_high_degree_mlean(3, 2, full_clause_set([1, 2]))
print("F:", F)
print("deficiency", F.deficiency, "surplus", surplus(F).surplus, "minvdeg", degrees(F).minvdeg)
verdict = certify(F)
print("verdict:", verdict.kind, verdict.autarky)
print("is autarky:", is_autarky(verdict.autarky, F))
print("after applying it:", apply(verdict.autarky, F))

# %% [markdown]
# On the full clause-set over two variables the bound is tight: degree 4 at
# surplus 2, and a witness variable is returned.

# %%
print(certify(full_clause_set([1, 2])).as_dict())
