"""Command-line checks: smoke expectations, exit codes, schema validity, determinism.

usage: check_cli.py ORBITKIT SCHEMA DATA_DIR {smoke,schema,determinism}
"""

import json
import os
import subprocess
import sys

import jsonschema

ORBITKIT, SCHEMA, DATA, MODE = sys.argv[1:5]

CATALOG = ["abelian3", "heisenberg3", "heisenberg3+R", "axb", "g49_0", "b5", "e2-motion"]
COMMANDS = ["analyze", "stabilizer", "condition-r", "polarize", "orbit", "invariants", "regularity-report"]

failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("ORBITKIT_SEED", None)
    if env:
        full_env.update(env)
    p = subprocess.run([ORBITKIT, *args], capture_output=True, text=True, env=full_env, timeout=120)
    return p.returncode, p.stdout, p.stderr


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


def report_invocations():
    out = []
    for name in CATALOG:
        for cmd in COMMANDS:
            out.append([cmd, "--catalog", name])
        out.append(["catalog", "--catalog", name])
    out.append(["catalog"])
    out.append(["analyze", "--file", os.path.join(DATA, "b5.alg")])
    out.append(["closure-test", "--catalog", "b5", "--g", "e1=1,e2=2"])
    out.append(["closure-test", "--catalog", "b5", "--g", "e0=1/2,e1=1,e3=1/2", "--seed", "3"])
    out.append(["closure-test", "--catalog", "b5", "--g", "e0=-2,e1=1", "--seed", "5"])
    out.append(["closure-test", "--catalog", "b5", "--g", "e1=1,e2=2", "--critical"])
    out.append(["closure-test", "--catalog", "b5", "--g", "e0=-1", "--critical", "--seed", "2"])
    out.append(["closure-test", "--catalog", "heisenberg3", "--g", "e1=2,e3=1"])
    out.append(["closure-test", "--catalog", "axb", "--g", "a=1,b=-1"])
    out.append(["invariants", "--catalog", "g49_0", "--degree", "3"])
    out.append(["orbit", "--catalog", "b5", "--f", "e3=1,e0=f0"])
    return out


def smoke():
    code, out, _ = run("analyze", "--catalog", "b5")
    expect(code == 0, "analyze b5 exits 0")
    for needle in ["dim: 5", "nilradical: span{e1, e2, e3}", "exponential: yes", "roots:"]:
        expect(needle in out, "analyze b5 prints " + needle)

    code, out, _ = run("regularity-report", "--catalog", "heisenberg3")
    expect(code == 0 and "verdict: StarRegular(nilpotent" in out, "heisenberg3 is StarRegular(nilpotent)")

    code, out, _ = run("closure-test", "--catalog", "b5", "--g", "e1=1,e2=2", "--json")
    r = json.loads(out)["result"] if code == 0 else {}
    expect(r.get("kind") == "NotInClosure", "b5 closure-test gives NotInClosure")
    expect(r.get("invariant") == "e0*e3 - e1*e2" and r.get("value") == "-2/1", "certificate p with value -2")
    expect(r.get("verified") is True, "certificate re-verifies")

    code, out, _ = run("orbit", "--catalog", "b5")
    for needle in ["e0: f0 - x1*x2", "e1: x2*exp(t)", "e2: -x1*exp(-s - t)", "e3: exp(-s)"]:
        expect(needle in out, "orbit b5 prints " + needle)

    code, out, _ = run("stabilizer", "--file", os.path.join(DATA, "b5.alg"), "--f", "e3=1")
    expect(code == 0 and "stabilizer: span{e0} (dim 1)" in out, "stabilizer from the shipped file")

    # exit codes
    expect(run()[0] == 1, "no subcommand is a usage error")
    expect(run("analyze")[0] == 1, "missing algebra is a usage error")
    expect(run("analyze", "--catalog", "nope")[0] == 1, "unknown catalog entry is a usage error")
    expect(run("stabilizer", "--catalog", "b5", "--f", "q=1")[0] == 1, "bad functional is a usage error")
    expect(run("closure-test", "--catalog", "b5")[0] == 1, "closure-test without --g is a usage error")
    expect(run("closure-test", "--catalog", "b5", "--g", "e1=1", "--tol", "0")[0] == 1, "zero tolerance rejected")
    expect(run("analyze", "--catalog", "b5", env={"ORBITKIT_SEED": "x"})[0] == 1, "bad ORBITKIT_SEED rejected")
    expect(run("--help")[0] == 0, "--help exits 0")
    code, _, err = run("invariants", "--catalog", "e2-motion")
    expect(code == 2 and "not rational" in err, "non-rational spectrum is a computation error")

    # seed from the environment
    args = ["closure-test", "--catalog", "b5", "--g", "e0=-2,e1=1", "--json"]
    code, out, _ = run(*args, env={"ORBITKIT_SEED": "17"})
    expect(code == 0 and json.loads(out)["result"]["seed"] == 17, "ORBITKIT_SEED sets the default seed")
    code2, out2, _ = run(*args, "--seed", "17")
    expect(out == out2, "--seed 17 matches ORBITKIT_SEED=17")


def schema():
    with open(SCHEMA) as fh:
        validator = jsonschema.Draft202012Validator(json.load(fh))
    validated = 0
    for args in report_invocations():
        code, out, err = run(*args, "--json")
        expect(code in (0, 2), f"{args}: exit {code} {err.strip()}")
        if code != 0:
            expect(err.strip() != "", f"{args}: computation error has a diagnostic")
            continue
        try:
            doc = json.loads(out)
        except json.JSONDecodeError as e:
            expect(False, f"{args}: invalid JSON ({e})")
            continue
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:3]:
            expect(False, f"{args}: {list(e.path)}: {e.message}")
        expect(doc["command"] == args[0], f"{args}: command field")
        if "verified" in doc["result"]:
            expect(doc["result"]["verified"] is True, f"{args}: report re-verifies")
        validated += 1
    expect(validated >= 50, f"validated {validated} reports")
    print("validated", validated, "reports")


def determinism():
    for args in report_invocations():
        first = run(*args, "--json")
        second = run(*args, "--json")
        expect(first == second, f"{args}: output differs between runs")
    a = run("closure-test", "--catalog", "b5", "--g", "e0=-2,e1=1", "--json", "--seed", "1")[1]
    b = run("closure-test", "--catalog", "b5", "--g", "e0=-2,e1=1", "--json", "--seed", "1")[1]
    expect(a == b and '"InClosureNumeric"' in a, "seeded search is reproducible")


{"smoke": smoke, "schema": schema, "determinism": determinism}[MODE]()
if failures:
    print(len(failures), "failure(s)")
    sys.exit(1)
print("ok")
