# %% [markdown]
# # Linguistic truth values
#
# Truth values are hedge strings over two generators, ordered linearly.
# The default algebra uses hedges M < V (strengthening) and P < L (weakening).

# %%
from hedgeres import AlgebraConfig, compare, enumerate_terms, implies, join, meet, negate, sign

alg = AlgebraConfig.default()
T = alg.term

# %% [markdown]
# Comparison and signs. `V` pushes `True` up and `False` down.

# %%
for a, b in [("VTrue", "True"), ("MTrue", "True"), ("LTrue", "PTrue"), ("MFalse", "False"), ("VPFalse", "VPLFalse")]:
    print(f"{a:9} {compare(T(a), T(b)).symbol} {b}")

print(sign(T("VTrue")), sign(T("LTrue")))

# %% [markdown]
# Every term of depth <= 1 in ascending order, with its negation.

# %%
terms = sorted(enumerate_terms(alg, 1))
for t in terms:
    print(f"{str(t):7} ~ {negate(t)}")

# %% [markdown]
# Lattice operations are min and max; implication is `max(~x, y)`.

# %%
x, y = T("VTrue"), T("MFalse")
print(meet(x, y), join(x, y), implies(x, y), implies(y, x))

# %% [markdown]
# A custom algebra can be read from a `.hal` block.

# %%
from pathlib import Path
from hedgeres import parse_algebra

custom = parse_algebra(Path("problems/default.hal").read_text())
print(custom == alg)
