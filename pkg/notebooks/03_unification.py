# %% [markdown]
# # Unification
#
# Most general unifiers with an occurs check. Substitutions are idempotent.

# %%
from hedgeres import apply, compose, mgu
from hedgeres.syntax import parse_atom

# %%
a, b = parse_atom("E(?t, f(?t))"), parse_atom("E(a, ?u)")
s = mgu(a, b)
print(s)
print(apply(s, a), apply(s, b))

# %% [markdown]
# The occurs check rejects cyclic bindings; clashing symbols fail too.

# %%
print(mgu(parse_atom("P(?x)"), parse_atom("P(f(?x))")))
print(mgu(parse_atom("P(a)"), parse_atom("P(b)")))

# %%
s1 = mgu(parse_atom("P(?x)"), parse_atom("P(g(?y))"))
s2 = mgu(parse_atom("Q(?y)"), parse_atom("Q(c)"))
print(compose(s1, s2))
