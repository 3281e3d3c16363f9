# Copyright 2026 The gop Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs gop over every command and checks each JSON document, errors included, against its schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

gop, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
ids = [e["id"] for e in json.loads(subprocess.check_output([gop, "catalog", "list"]))["result"]["entries"]]

series = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
json.dump({"trunc_order": 10, "components": [[["1", str(n)] for n in range(1, 11)]]}, series)
series.close()

runs = [["catalog", "list"], ["classify", "theta^2 - 2"], ["exponents", "(z^2-2)*D - z", "--point", "inf"],
        ["pade", "--series", series.name, "--N", "3", "--M", "2"]]
for i in ids:
    runs += [["catalog", "get", i], ["classify", "--catalog", i], ["exponents", "--catalog", i, "--point", "0"],
             ["pcurv", "--catalog", i, "--prime", "7"], ["scan", "--catalog", i, "--primes", "2..20"],
             ["galochkin", "--catalog", i, "--s", "6"], ["size", "--catalog", i, "--s", "6", "--P", "7"],
             ["radius", "--catalog", i, "--prime", "7", "--s", "8"], ["bombieri", "--catalog", i, "--s", "8", "--P", "7"],
             ["pade", "--catalog", i, "--N", "4", "--M", "2"]]

failures = 0
checked = 0
for args in runs:
    proc = subprocess.run([gop, *args], capture_output=True, text=True)
    try:
        doc = json.loads(proc.stderr if proc.returncode else proc.stdout)
    except json.JSONDecodeError:
        print("FAIL", args, "exit", proc.returncode, proc.stderr.strip())
        failures += 1
        continue
    name = "error" if proc.returncode else doc["command"].replace(" ", "_")
    schema = json.loads((schema_dir / (name + ".schema.json")).read_text())
    try:
        jsonschema.validate(doc, schema)
        checked += 1
    except jsonschema.ValidationError as e:
        print("FAIL", args, e.message)
        failures += 1

print(f"{checked} documents valid, {failures} failures")
sys.exit(1 if failures or checked == 0 else 0)
