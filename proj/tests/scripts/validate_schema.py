"""Validate a ranklab JSON document against a schema.

validate_schema.py SCHEMA DOC
validate_schema.py SCHEMA --from-command PROGRAM [ARGS...]
"""
import json
import subprocess
import sys

import jsonschema


def validate(schema_path: str, doc, label: str) -> int:
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    errors = sorted(jsonschema.Draft202012Validator(schema).iter_errors(doc), key=lambda e: list(e.path))
    for e in errors[:10]:
        print(f"{'/'.join(map(str, e.path))}: {e.message}")
    print(f"{label}: {'valid' if not errors else f'{len(errors)} error(s)'}")
    return 1 if errors else 0


def main() -> int:
    schema_path = sys.argv[1]
    if sys.argv[2] == "--from-command":
        out = subprocess.run(sys.argv[3:], check=True, capture_output=True, text=True).stdout
        return validate(schema_path, json.loads(out), " ".join(sys.argv[3:]))
    with open(sys.argv[2]) as f:
        return validate(schema_path, json.load(f), sys.argv[2])


if __name__ == "__main__":
    sys.exit(main())
