#!/usr/bin/env python3
"""CLI smoke test: JSON output against the schemas, plus exit codes.

usage: cli_schema.py <satake binary> <schema dir>
"""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMAS = Path(sys.argv[2])
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validate(name, args, code=0):
    p = run(*args, "--format", "json")
    if p.returncode != code:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, wanted {code}\n{p.stderr}")
        return None
    try:
        doc = json.loads(p.stdout)
        jsonschema.validate(doc, schema(name))
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        failures.append(f"{' '.join(args)}: {str(e).splitlines()[0]}")
        return None
    return doc


def expect_code(args, code, stderr_has=None):
    p = run(*args)
    if p.returncode != code:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, wanted {code}")
    elif stderr_has and stderr_has not in p.stderr:
        failures.append(f"{' '.join(args)}: stderr lacks {stderr_has!r}: {p.stderr.strip()}")


for spec in ["G2[X=1]", "A3[X=2; tau=1:3]", "A~2[X=0]", "A2[tau=1:2; chi=1:2,2:1/2]", "A3[chi=1:2]"]:
    validate("check", ["check", spec])
doc = validate("check", ["check", "G2[X=1]"])
if doc and (not doc["gsat"] or doc["satake"] or doc.get("restricted_type") != "(B,C)1+"):
    failures.append(f"check G2[X=1]: unexpected content {doc}")

for spec in ["A2[]", "G2[X=1]", "B2[X=2]", "A~1[]", "A2[X=1]"]:
    doc = validate("verify", ["verify", spec])
    if doc and not doc["consistent"]:
        failures.append(f"verify {spec}: inconsistent")

for spec in ["G2[X=1]", "G~v2[X=1]", "A4[tau=1:4,2:3]", "A~1[]"]:
    validate("restricted", ["restricted", spec])
doc = validate("restricted", ["restricted", "G~v2[X=1]"])
if doc and doc["gram"] != [["2", "-1"], ["-1", "1/2"]]:
    failures.append(f"restricted G~v2[X=1]: gram {doc['gram']}")

validate("table", ["table", "1", "4"])
doc = validate("table", ["classify", "A", "1", "5"])
if doc and doc.get("table_diff"):
    failures.append(f"classify A 1 5: table differs {doc['table_diff']}")
validate("table", ["classify", "D~", "4", "--filter", "satake"])

for spec in ["G2[X=1]", "C~'2[X=1; chi=1:-1]"]:
    doc = validate("decoration", ["render", spec])
    if doc and doc.get("spec") != spec:
        failures.append(f"render {spec}: spec {doc.get('spec')}")
p = run("render", "A3[X=2; tau=1:3]", "--format", "dot")
if p.returncode != 0 or "dir=both" not in p.stdout:
    failures.append("render --format dot: no tau edge")

# exit codes: 2 parse / input, 3 verification, 4 resource guards
expect_code(["check", "A3[X=1,1]"], 2, "position 7")
expect_code(["check", "Q3[]"], 2, "position 0")
expect_code(["verify", "A3[X=1; tau=1:3]"], 3, "NotCompatible")
expect_code(["verify", "A3[X=2; tau=1:3; chi=1:2]"], 3, "InvalidCharacter")
expect_code(["classify", "A", "13"], 4, "RankGuardExceeded")
expect_code(["verify", "E8[]"], 4)
expect_code(["verify", "A~1[X=1]", "--height", "3"], 4, "height")
expect_code(["check", "G2[X=1]"], 0)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli ok")
