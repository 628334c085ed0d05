# %% [markdown]
# # Reading problems and building clauses
#
# A problem file holds `clause` and `formula` statements. Formulas are
# turned into clauses: negation normal form, Skolem functions, then CNF.

# %%
from hedgeres import clausify, parse_formula, read_problem, to_nnf, to_text
from hedgeres.normalize import clausify_problem, skolemize
from hedgeres.syntax import format_problem

# %%
f = parse_formula("~forall ?x . (Bird(?x):True -> exists ?y . Wing(?x, ?y):VTrue)")
print(to_text(f))
nnf = to_nnf(f)
print(to_text(nnf))
print(to_text(skolemize(nnf)))

# %% [markdown]
# Negating a literal negates its annotation, so no `~` survives normalization.

# %%
for c in clausify(parse_formula("forall ?x . (S(?x):True -> G(?x):MTrue)")):
    print(c)

# %% [markdown]
# Problems round-trip through their printed form.

# %%
text = """
formula exists ?x . P(?x):True.
clause Q(a):LTrue | P(f(?y)):MFalse.
"""
p = read_problem(text)
print(format_problem(p))
print(read_problem(format_problem(p)) == p)
for c in clausify_problem(p):
    print(c)
