"""Exit codes, determinism and schema conformance of the ranklab CLI.

cli_contract.py RANKLAB_BINARY SCHEMA_DIR
"""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = sys.argv[2]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("RANKLAB_SEED", None)
    full_env.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def expect(label, cond, extra=""):
    print(f"{'ok  ' if cond else 'FAIL'} {label}{(': ' + extra) if extra and not cond else ''}")
    if not cond:
        failures.append(label)


def schema(name):
    with open(os.path.join(SCHEMAS, name)) as f:
        return jsonschema.Draft202012Validator(json.load(f))


report_schema = schema("report.schema.json")
cert_schema = schema("certification.schema.json")


def valid(validator, text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError:
        return False
    return not list(validator.iter_errors(doc))


r = run("check", "--entries", "v31,w3", "--dims", "2..4", "--trials", "50", "--seed", "7")
expect("check v31,w3 exits 0", r.returncode == 0, r.stderr)
doc = json.loads(r.stdout)
expect("150 passes per entry", [e["passes"] for e in doc["entries"]] == [150, 150])
expect("check report matches schema", valid(report_schema, r.stdout))
again = run("check", "--entries", "v31,w3", "--dims", "2..4", "--trials", "50", "--seed", "7")
expect("check output is byte-identical", again.stdout == r.stdout)
env = run("check", "--entries", "v31,w3", "--dims", "2..4", "--trials", "50", env={"RANKLAB_SEED": "7"})
expect("RANKLAB_SEED is the seed fallback", env.stdout == r.stdout)
expect("bad RANKLAB_SEED exits 2", run("check", "--entries", "v31", env={"RANKLAB_SEED": "x"}).returncode == 2)

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "r.json")
    o = run("check", "--entries", "v31,w3", "--dims", "2..4", "--trials", "50", "--seed", "7", "--out", path)
    with open(path) as f:
        expect("--out writes the same document", o.returncode == 0 and f.read() == r.stdout)

bad = run("check", "--entries", "nosuch")
expect("unknown id exits 2 and names it", bad.returncode == 2 and "nosuch" in bad.stderr and bad.stdout == "")
expect("v36 in Q(i) exits 2", run("check", "--entries", "v36", "--field", "0").returncode == 2)
expect("malformed dims exit 2", run("check", "--entries", "v31", "--dims", "4..2").returncode == 2)
expect("dims above the cap exit 2", run("check", "--entries", "v31", "--dims", "2..9").returncode == 2)
expect("missing subcommand exits 2", run().returncode == 2)

audit = run("check", "--entries", "v310,T4c,TN45b3,w24", "--dims", "2..3", "--trials", "5", "--audit")
expect("audit run exits 0", audit.returncode == 0, audit.stderr)
expect("audit report matches schema", valid(report_schema, audit.stdout))
expect("audit lists the annotations", sorted(a["id"] for a in json.loads(audit.stdout)["audit"]) == sorted(["v310", "T4c", "TN45b3", "w24"]))

ext = run("extremal", "--family", "TN44", "--dims", "2..4", "--trials", "16", "--seed", "3")
expect("extremal TN44 exits 0", ext.returncode == 0, ext.stderr)
expect("certification matches schema", valid(cert_schema, ext.stdout))
expect("certification is byte-identical",
       ext.stdout == run("extremal", "--family", "TN44", "--dims", "2..4", "--trials", "16", "--seed", "3").stdout)
one = run("extremal", "--family", "T10", "--trials", "1")
expect("extremal T10 single draw exits 0", one.returncode == 0 and
       all(c["draws"] >= 1 for c in json.loads(one.stdout)["certifications"]), one.stderr)
expect("extremal bad dims exit 2", run("extremal", "--dims", "4..2").returncode == 2)
expect("extremal unknown family exits 2", run("extremal", "--family", "T11").returncode == 2)
full = run("extremal", "--dims", "2..3", "--trials", "8")
expect("extremal over every family exits 0", full.returncode == 0 and valid(cert_schema, full.stdout), full.stderr)

g = run("gen", "--kind", "idempotent-pair", "--m", "3", "--ranks", "1,2", "--seed", "9")
expect("gen idempotent-pair", g.returncode == 0 and json.loads(g.stdout)["checks"] == {"idempotent": True})
g = run("gen", "--kind", "projector-pair", "--m", "2", "--ranks", "0,2")
mats = json.loads(g.stdout)["matrices"]
expect("gen projector-pair gives 0 and I",
       mats["A"]["entries"] == [["0", "0"], ["0", "0"]] and mats["B"]["entries"] == [["1", "0"], ["0", "1"]])
g = run("gen", "--kind", "star-pair", "--m", "2")
expect("gen star-pair", json.loads(g.stdout)["checks"]["conjugateTranspose"] is True)
expect("gen rank above m exits 2", run("gen", "--kind", "idempotent-pair", "--m", "2", "--ranks", "3,1").returncode == 2)
expect("gen unknown kind exits 2", run("gen", "--kind", "nope").returncode == 2)

idx = run("report")
expect("report emits the index", idx.returncode == 0 and len(json.loads(idx.stdout)["entries"]) > 200)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
