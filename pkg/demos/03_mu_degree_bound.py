# %% [markdown]
# # The degree bound for minimally unsatisfiable clause-sets
#
# Every minimally unsatisfiable F has a variable of degree at most
# nm(deficiency), whose two literal degrees are both at most the deficiency.
# Below: all MU clause-sets over 3 variables up to isomorphism.

# %%
from collections import Counter

from cnfstruct import check_mu_bound, degrees, saturate
from cnfstruct.nonmersenne import nm_closed
from cnfstruct.oracle import enumerate_mu

shapes = [F for F in enumerate_mu(3, canonical=True) if F.n]
print(len(shapes), "isomorphism classes")
tally = Counter()
for F in shapes:
    check = check_mu_bound(F)
    assert check.holds and check.strong_witness
    tally[(check.deficiency, check.minvdeg)] += 1
for (k, d), count in sorted(tally.items()):
    print(f"deficiency {k}: minvdeg {d} (bound {nm_closed(k)})  x{count}")

# %% [markdown]
# Saturating and then splitting on a minimum-degree variable drops the
# deficiency by (literal degree - 1); this is the step behind the recursion.

# %%
F = next(G for G in shapes if G.deficiency >= 2 and saturate(G) != G)
print("original: ", F)
S = saturate(F)
table = degrees(S)
v = table.min_vdeg_variables[0]
print("saturated:", S)
print(f"split on {v}: ldeg+={table.ldeg(v)} ldeg-={table.ldeg(-v)} deficiency={S.deficiency}")
