# %% [markdown]
# # Semantic checks on ground clauses
#
# Ground clause sets are checked by searching truth assignments over a
# finite sample of the algebra. Strict acceptance needs a value above W,
# weak acceptance allows W itself.

# %%
from pathlib import Path

from hedgeres import check_sat, herbrand_universe, read_problem
from hedgeres.ground_oracle import ground_clause_set

pair = list(read_problem("clause A:VTrue.\nclause A:VFalse.").clauses)
for mode in ("strict", "weak"):
    r = check_sat([c.clause for c in pair], mode=mode)
    print(mode, type(r).__name__, getattr(r, "interpretation", None) and r.interpretation.atoms)

# %% [markdown]
# Herbrand levels of the worked example and its ground instances.

# %%
clauses = [c.clause for c in read_problem(Path("problems/worked_example.lfol").read_text()).clauses]
for k in range(3):
    print(k, [str(t) for t in herbrand_universe(clauses, k).terms])

ground = ground_clause_set(clauses, 0)
print(len(ground), type(check_sat(ground)).__name__)

# %% [markdown]
# Small finite models for quantified formulas.

# %%
from hedgeres import find_model, parse_formula

f = parse_formula("forall ?x . exists ?y . (P(?x):True -> Q(?y):VTrue)")
print(find_model([f], 2, 1).to_json())
