# %% [markdown]
# # Command line
#
# The `hedgeres` command wraps the library. Exit codes: 0 for `compare`
# and `eval`, 10 unsat, 20 sat, 30 unknown, 2 on errors.

# %%
import io

from hedgeres.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    print(f"exit {code}")
    print(out.getvalue())


run("compare", "VTrue", "MTrue")
run("refute", "problems/worked_example.lfol", "--strategy", "best")

# %%
run("oracle", "problems/worked_example.lfol", "--herbrand-level", "0")
