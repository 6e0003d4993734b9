"""
The full classification run
===========================

Every class, the join lattice of the surviving candidate rings, the
transposition-split cases and the dimension bound.  About four minutes on
one core; pass a job count to spread it out.
"""

from __future__ import annotations

import json
import sys

from schurring.classification import verify_all

jobs = int(sys.argv[1]) if len(sys.argv) > 1 else None
report = verify_all(jobs=jobs)
print(report.summary())

with open("classification_report.json", "w", encoding="utf-8") as fh:
    json.dump(report.to_json(), fh, indent=2, sort_keys=True)
