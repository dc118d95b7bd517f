# Copyright 2026 The eclosure Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the eclosure executable and checks exit codes and report schema."""

import json
import subprocess
import sys

cli, schema_path = sys.argv[1], sys.argv[2]

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)

with open(schema_path) as fh:
    validator = jsonschema.Draft202012Validator(json.load(fh))

failures = []


def run(args, code=0):
    p = subprocess.run([cli, *args], capture_output=True, text=True)
    if p.returncode != code:
        failures.append(f"{args}: exit {p.returncode}, wanted {code}: {p.stderr.strip()}")
    return p


def report(args):
    p = run(args)
    if p.returncode != 0:
        return None
    try:
        doc = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{args}: bad JSON: {e}")
        return None
    for err in validator.iter_errors(doc):
        failures.append(f"{args}: schema: {err.message} at {list(err.path)}")
    if run(args).stdout != p.stdout:
        failures.append(f"{args}: output differs between runs")
    return doc


families = [
    "fin(3)", "omega", "zeta +split zeta", "zeta +merged zeta", "eta(tight)",
    "eta(gapped)", "omega +absorbed fin(1) +separate omega*", "(zeta +split)^omega",
    "fin(3) + omega + zeta", "eta(tight) + zeta",
]
for f in families:
    for cmd in ("analyze", "closure", "genset", "spectrum"):
        report([cmd, f])
    report(["oracle", "verify", f, "--depth", "16"])
    run(["--format", "text", "analyze", f])

doc = report(["analyze", "zeta +split zeta"])
if doc and (doc["spectrum"]["value"] != 4 or not doc["genset"]["exists_least"]):
    failures.append("analyze zeta +split zeta: wrong values")
report(["catalog"])
report(["--pretty", "catalog"])
for args in (
    ["sig", "supp", "1: 1, 0; 3: 2, 2"],
    ["sig", "uniformize", "3,1,5"],
    ["sig", "dom", "1: {1}, {2}", "1: {1,2}, empty"],
    ["sig", "iilu", "1: 1, 0"],
    ["ptoy", "clp", "{3,5}"],
    ["ptoy", "clpdr", "{7}"],
    ["ptoy", "hausdorff-demo"],
    ["ptoy", "intersect", "from(3) + omega", "{1} + from(9) + omega"],
):
    report(args)

run([], 1)
run(["frobnicate"], 1)
run(["analyze"], 1)
run(["--format", "yaml", "analyze", "omega"], 1)
run(["analyze", "fin(3"], 2)
run(["analyze", "fin(0)"], 2)
run(["oracle", "verify", "omega", "--depth", "4"], 2)
run(["oracle", "verify", "omega", "--depth", "1000"], 2)
run(["sig", "dom", "1: {1}, {2}", "1: {1}, {3}"], 2)
run(["sig", "uniformize", "0"], 2)
run(["ptoy", "intersect", "{1}", "I"], 2)

for line in failures:
    print("FAIL", line)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
