"""
Checking a code and saving it
=============================

The structural check and the adversary game must agree; small edits to a
good code should break both.
"""

import tempfile
from pathlib import Path

from feedback_codes import codefile, complete_chain
from feedback_codes.cloud import validate_structure
from feedback_codes.verify import bound_report, certify, game_check, mutations

code = complete_chain(4, 6)
print(bound_report(code).to_dict())

for label, bad in mutations(code, 5):
    g, s = game_check(bad), validate_structure(bad)
    print(f"{label}: game={g.ok} structure={s.violation}")

path = Path(tempfile.mkdtemp()) / "chain_4_6.json"
codefile.write(code, path)
print(path.read_text().splitlines()[:5])
print("reloaded:", certify(codefile.read(path)).ok)
# same file from the shell:  feedback-codes verify chain_4_6.json
