"""Run the CLI on a fixed set of inputs and validate every JSON document."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CASES = [
    ("classify", ["--lambda", "-1", "--nu", "2", "-N", "1", "-m", "2"], 0),
    ("classify", ["--lambda", "1/2", "--nu", "7/2", "-N", "1", "-m", "2"], 0),
    ("classify", ["--lambda", "-3", "--nu", "1", "-N", "2", "-m", "-4"], 0),
    ("solve", ["--lambda", "-1", "--nu", "2", "-N", "1", "-m", "2"], 0),
    ("solve", ["--lambda", "-3", "--nu", "2", "-N", "2", "-m", "-3"], 0),
    ("solve", ["--lambda", "0", "--nu", "3", "-N", "1", "-m", "2"], 3),
    ("solve", ["--lambda", "1/2", "--nu", "5/3", "-N", "1", "-m", "2"], 3),
    ("operator", ["--lambda", "-1", "--nu", "1", "-N", "0", "-m", "2"], 0),
    ("operator", ["--lambda", "-4", "--nu", "1", "-N", "1", "-m", "2", "--form", "canonical"], 0),
    ("operator", ["--lambda", "-4", "--nu", "1", "-N", "1", "-m", "-2", "--form", "both"], 0),
    ("operator", ["--lambda", "0", "--nu", "3", "-N", "1", "-m", "2"], 3),
    ("sweep", ["--n-max", "1", "--m-offset-max", "2"], 0),
    ("verify", ["--suite", "system", "--quick", "--format", "json"], 0),
]

SCHEMA_FOR = {"classify": "classify", "solve": "solve", "operator": "operator", "verify": "verify"}


def main():
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    resources = []
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        resources.append((doc["$id"], Resource.from_contents(doc)))
        schemas[path.name.removesuffix(".schema.json")] = doc
    registry = Registry().with_resources(resources)

    def validator(name):
        return jsonschema.Draft202012Validator(schemas[name], registry=registry)

    failed = 0
    documents = 0
    bad = {"dimension": 1, "lambda_admissible": True, "nu_admissible": True, "sporadic": True,
           "all_sbos_differential": True, "params": {"lambda": 0.5, "nu": "2", "N": 1, "m": 2, "a": 3}}
    if validator("classify").is_valid(bad):
        print("FAIL schema accepts a floating-point lambda")
        failed += 1
    for cmd, args, want in CASES:
        proc = subprocess.run([exe, cmd, *args], capture_output=True, text=True)
        label = " ".join([cmd, *args])
        if proc.returncode != want:
            print(f"FAIL {label}: exit {proc.returncode}, expected {want}\n{proc.stderr}")
            failed += 1
            continue
        lines = [l for l in proc.stdout.splitlines() if l.strip()]
        if cmd == "sweep":
            pairs = [(validator("certificate"), l) for l in lines[:-1]] + [(validator("sweep_summary"), lines[-1])]
        else:
            pairs = [(validator(SCHEMA_FOR[cmd]), l) for l in lines]
        for v, line in pairs:
            documents += 1
            errors = list(v.iter_errors(json.loads(line)))
            if errors:
                failed += 1
                print(f"FAIL {label}: {errors[0].message}")
    print(f"{documents} documents validated, {failed} failures")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
