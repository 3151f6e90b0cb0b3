#!/usr/bin/env python3
"""Runs the CLI and checks reports against the shipped schemas, exit codes and CSV output."""
import csv
import io
import json
import pathlib
import subprocess
import sys

import jsonschema

CLI = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
W11 = '{"h": "1/1", "c1": "1/1"}'
W12 = '{"h": 1, "c1": 2}'
W01 = '{"h": "0/1", "c1": "1/1"}'

failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def check(name, cond, msg=""):
    if not cond:
        failures.append(f"{name}: {msg}")
        print(f"FAIL {name} {msg}")
    else:
        print(f"ok   {name}")


def validated(command, *args):
    r = run(command, *args)
    name = " ".join([command, *args])
    check(name + " [exit]", r.returncode == 0, r.stderr.strip())
    if r.returncode != 0:
        return None
    doc = json.loads(r.stdout)
    schema = json.loads((SCHEMAS / f"{command}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
        check(name + " [schema]", True)
    except jsonschema.ValidationError as e:
        check(name + " [schema]", False, e.message)
    again = run(command, *args)
    check(name + " [stable]", again.stdout == r.stdout)
    return doc


doc = validated("bracket", "e(1,0)", "f(-1,0)")
if doc:
    check("bracket value", doc["result"]["terms"] == [
        {"basis": "h(0,0)", "coeff": "1/1"}, {"basis": "c1", "coeff": "1/1"}])

validated("roots", "--root", "1,-2,1")
doc = validated("roots", "--box", "2")
if doc:
    real = [r for r in doc["roots"] if r["kind"] != "not_root"]
    keys = {(r["alpha"], r["delta1"], r["delta2"]): r["positive"] for r in real}
    check("roots box sign split", all(keys[(-a, -m, -n)] != p for (a, m, n), p in keys.items()))

doc = validated("reflect", "--weight", W12, "--dot", "r0r1")
if doc:
    check("reflect dot value", doc["result"]["h"] == "9/1" and doc["result"]["d1"] == "-6/1")
validated("reflect", "--weight", W12, "--root", "-1,1,0")

doc = validated("dims", "--depth", "4")
if doc:
    check("dims agree", all(r["pbw_dim"] == r["oracle_dim"] for r in doc["table"]))

doc = validated("singular", "--weight", W11, "--depth", "4", "--jobs", "2")
if doc:
    found = {(c["eta"]["a0"], c["eta"]["a1"]) for c in doc["certificates"]}
    check("singular finds 2 alpha and alpha_0", {(0, 2), (1, 0)} <= found)
    check("singular verified", doc["verified"])
validated("singular", "--weight", W11, "--eta", "0,2")

doc = validated("reducible", "--weight", W11, "--kmax", "3")
if doc:
    pairs = {(w["beta"]["alpha"], w["beta"]["delta1"], w["beta"]["delta2"], w["l"]) for w in doc["witnesses"]}
    check("reducible witnesses", {(1, 0, 0, 2), (-1, 1, 0, 1)} <= pairs)
doc = validated("reducible", "--weight", '{"h": "1/2", "c1": "1/3"}')
if doc:
    check("generic weight irreducible", doc["reducible"] is False)

doc = validated("quotient-char", "--weight", W12, "--depth", "4", "--format", "json")
if doc:
    check("quotient matches oracle", all(r["quotient"] == r["l_oracle"] for r in doc["table"]))

doc = validated("demos", "--weight", W01, "--n", "4", "--m", "5")
if doc:
    check("demos verified", doc["nonintegrability"]["verified"] and doc["infinite_dim"]["rank"] == 5)

r = run("quotient-char", "--weight", W12, "--depth", "3")
rows = list(csv.reader(io.StringIO(r.stdout)))
check("csv header", r.returncode == 0 and rows[0] == ["eta", "ambient", "submodule", "quotient", "l_oracle"], r.stdout[:80])
check("csv rows", len(rows) == 1 + 10 and all(len(x) == 5 and x[3] == x[4] for x in rows[1:]))
r = run("dims", "--depth", "2", "--format", "csv")
check("dims csv", r.returncode == 0 and r.stdout.splitlines()[1] == '"0,0",1,1', r.stdout[:80])

for label, args in [
    ("missing c1", ["reducible", "--weight", '{"h": 1}']),
    ("c2 nonzero", ["reducible", "--weight", '{"h": 1, "c1": 1, "c2": 1}']),
    ("negative level", ["singular", "--weight", '{"h": 1, "c1": -1}', "--depth", "2"]),
    ("bad rational", ["reducible", "--weight", '{"h": "1/0", "c1": 1}']),
    ("not json", ["reducible", "--weight", "{h: 1"]),
    ("non dominant quotient", ["quotient-char", "--weight", '{"h": "1/2", "c1": 1}']),
    ("malformed element", ["bracket", "e(1,0)*f(0,0)", "c1"]),
    ("unknown option", ["dims", "--bogus"]),
]:
    r = run(*args)
    check("exit 2: " + label, r.returncode == 2, f"got {r.returncode}")
    check("no stdout: " + label, r.stdout == "", r.stdout[:80])

r = run("reducible", "--weight", '{"h": 1, "c1": 1, "c2": 1}')
check("error names field", "'c2'" in r.stderr, r.stderr.strip())

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
