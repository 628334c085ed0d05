# %% [markdown]
# # Resolution with reliability
#
# Two literals with the same atom resolve when their annotations sit on
# opposite sides of W. The resolvent's reliability is the weaker of the
# premises' reliabilities and the meet of the two annotations' values.

# %%
from pathlib import Path

from hedgeres import AlgebraConfig, combine_reliability, read_problem, replay, resolve
from hedgeres.syntax import AnnotatedClause, parse_clause

T = AlgebraConfig.default().term
clauses = list(read_problem(Path("problems/worked_example.lfol").read_text()).clauses)
for i, c in enumerate(clauses):
    print(i, c)

# %%
print(combine_reliability(T("Top"), T("Top"), T("MFalse"), T("VTrue")))
print(resolve(clauses[0], clauses[4], 0, 0))

# %% [markdown]
# Replaying a scripted derivation. Each step names the premises by index
# and the literal positions to resolve on; new clauses are appended.

# %%
script = [
    ("resolve", (0, 4), (0, 0)),
    ("resolve", (7, 5), (0, 0)),
    ("resolve", (8, 1), (0, 0)),
    ("resolve", (9, 6), (0, 0)),
]
tree = replay(clauses, script)
print(tree.render())

# %% [markdown]
# A different order reaches the empty clause with a better reliability.

# %%
script = [
    ("resolve", (2, 3), (1, 0)),
    ("resolve", (7, 1), (0, 0)),
    ("resolve", (8, 6), (0, 0)),
]
print(replay(clauses, script).conclusion)
