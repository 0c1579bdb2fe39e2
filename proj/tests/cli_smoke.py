"""Runs the command-line tool and checks outputs, exit codes and JSON shapes."""

import json
import subprocess
import sys

import jsonschema

CLI = sys.argv[1]

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}
RATFUNC = {
    "type": "object",
    "required": ["num", "den"],
    "properties": {"num": {"type": "array", "items": RATIONAL}, "den": {"type": "array", "items": RATIONAL}},
}
SET_PARTITION = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
PERM = {"type": "array", "items": {"type": "integer"}}
ELEMENT = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["partition", "perm", "coeff"],
        "properties": {"partition": SET_PARTITION, "perm": PERM, "coeff": RATFUNC},
    },
}
ENTRY = {
    "type": "object",
    "required": ["lambda", "m", "mu"],
    "properties": {"lambda": PERM, "m": {"type": "integer"}, "mu": PERM},
}
CHECKS = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["family", "relation", "pass"],
        "properties": {"pass": {"type": "boolean"}},
    },
}
SCHEMAS = {
    "dim": {"type": "object", "required": ["n", "dim", "factorial", "bell"]},
    "eval": {"type": "object", "required": ["n", "text", "terms"], "properties": {"terms": ELEMENT}},
    "verify": {
        "type": "object",
        "required": ["relations", "pass"],
        "properties": {
            "relations": {"type": "object", "required": ["n", "pass", "checks"], "properties": {"checks": CHECKS}},
            "tensor": {"type": "object", "required": ["mode", "points", "tensors", "pass", "checks"]},
        },
    },
    "specht": {
        "type": "object",
        "required": ["n", "labels", "dims", "sumSquares", "dimAlgebra", "equal"],
        "properties": {
            "labels": {"type": "array", "items": {"anyOf": [ENTRY, {"type": "array", "items": ENTRY}]}},
            "dims": {"type": "array", "items": {"type": "integer"}},
        },
    },
    "faithful": {"type": "object", "required": ["n", "rank", "expected", "pass", "probes", "method"]},
    "labels": {"type": "object", "required": ["n", "count", "labels"]},
    "moebius": {"type": "object", "required": ["n", "rows", "matchesLattice", "closedForm"]},
}

failures = 0


def run(args, code=0, contains=None, schema=None):
    global failures
    p = subprocess.run([CLI] + args, capture_output=True, text=True)
    ok = p.returncode == code
    if ok and contains is not None:
        ok = contains in p.stdout
    if ok and schema is not None:
        try:
            jsonschema.validate(json.loads(p.stdout), SCHEMAS[schema])
        except (jsonschema.ValidationError, json.JSONDecodeError) as e:
            print(e)
            ok = False
    print(("ok   " if ok else "FAIL ") + " ".join(args))
    if not ok:
        failures += 1
        print(p.stdout, p.stderr)
    return p


run(["dim", "--n", "3"], contains="30")
run(["eval", "--n", "2", "--expr", "T1*T1"], contains="1 + (u-1)*E{1,2} + (u-1)*E{1,2}*T1")
out = run(["specht", "--n", "3"], contains="sum of squares 30").stdout
dims = [int(line.split("dim ")[1]) for line in out.splitlines() if "  dim " in line]
if dims != [1, 2, 1, 3, 3, 1, 2, 1]:
    failures += 1
    print("FAIL specht dims", dims)
run(["verify", "--n", "3", "--tensor"], contains="PASS")
run(["faithful", "--n", "3"], contains="rank 30 of 30")
run(["gram", "--n", "3", "--u1"], contains="rank 30")
run(["moebius", "--n", "3"], contains="(k-1)!")
run(["labels", "--n", "2"], contains="((1),2,(2))")
run(["basis", "--n", "2"], contains="E{1,2}*T1")

run(["dim", "--n", "4", "--json"], schema="dim")
run(["eval", "--n", "3", "--expr", "E{1,3}*T2 - u^-1*T1", "--json"], schema="eval")
run(["verify", "--n", "2", "--tensor", "--json"], schema="verify")
run(["specht", "--n", "3", "--json"], schema="specht")
run(["faithful", "--n", "2", "--json"], schema="faithful")
run(["labels", "--n", "3", "--json"], schema="labels")
run(["moebius", "--n", "3", "--json"], schema="moebius")

a = run(["faithful", "--n", "4", "--seed", "9"]).stdout
b = run(["faithful", "--n", "4", "--seed", "9"]).stdout
if a != b:
    failures += 1
    print("FAIL seed determinism")

run(["frobnicate"], code=2)
run(["dim"], code=2)
run(["dim", "--n", "0"], code=2)
run(["eval", "--n", "2", "--expr", "T1 * ?"], code=2)
run(["eval", "--n", "2", "--expr", "T5"], code=2)
run(["dim", "--n", "7"], code=2)
run(["faithful", "--n", "5"], code=2)
run(["gram", "--n", "2", "--u1", "--at", "2"], code=2)

sys.exit(1 if failures else 0)
