"""Seeded random certification and byte-identical reports.

gen_random rejection-samples instances that satisfy a requested
predicate; the suites draw many of them and re-verify the library's
claims from the outside.  Reports drop their timing fields and
serialize with sorted keys, so the same seed gives the same bytes.
"""

import json

from matroidfrag import gen_random, serialize_instance
from matroidfrag.cli import run
from matroidfrag.suites import canonical_report, run_suite

gi = gen_random("relax", seed=7, q=2, rows=3, cols=3)
print("a generated relaxation instance (after",
      gi.rejections, "rejected draws):")
print(json.dumps(serialize_instance(gi.instance), indent=2, sort_keys=True))

report, code = run("relax", gi.instance)
print("\ncli relax on it -> exit", code, " h =", report["h"],
      " final field:", report["field"])

print("\nrunning the pipeline suite twice at seed 1:")
first = run_suite("pipeline", seed=1)
second = run_suite("pipeline", seed=1)
print("  checked:", first["checked"], " ok:", first["ok"])
same = canonical_report(first) == canonical_report(second)
print("  canonical reports byte-identical:", same)
assert same
