# %% [markdown]
# # Saturation search
#
# `first` stops at the first empty clause. `best` keeps going and returns
# the refutation with the highest reliability found within the budget.

# %%
from pathlib import Path

from hedgeres import SearchBudget, read_problem, saturate

clauses = list(read_problem(Path("problems/worked_example.lfol").read_text()).clauses)

for strategy in ("first", "best"):
    r = saturate(clauses, SearchBudget(strategy=strategy))
    print(strategy, type(r).__name__, r.reliability, r.generated)

# %%
r = saturate(clauses, SearchBudget(strategy="best"))
print(r.proof.render())

# %% [markdown]
# Budgets bound the number of derived clauses, derivation depth and term
# nesting. Exceeding any of them yields `BudgetExhausted`.

# %%
print(type(saturate(clauses, SearchBudget(max_clauses=1))).__name__)
loop = read_problem("clause P(?x):True | P(f(?x)):False.\nclause P(a):True.").clauses
print(type(saturate(list(loop), SearchBudget(max_term_depth=4))).__name__)
