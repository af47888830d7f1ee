#!/usr/bin/env python3
"""Run the deutsch CLI with --json and validate every envelope and payload.

usage: validate_cli_json.py <deutsch-executable> <envelope.schema.json>
"""

import json
import subprocess
import sys

import jsonschema

SUBCOMMANDS = {"count", "enumerate", "series", "biject", "verify", "stats", "selftest"}
PAYLOAD_DEF = {"series": "series_payload"}

CASES = [
    (["count", "--family", "deutsch", "--n", "4", "--end-level", "0"], 0),
    (["count", "--family", "reversed", "--n", "5", "--max-height", "3"], 0),
    (["enumerate", "--family", "motzkin", "--n", "4"], 0),
    (["series", "--formula", "area_A", "--terms", "10"], 0),
    (["series", "--formula", "height_sum_open", "--terms", "6"], 0),
    (["series", "--formula", "psi(4,1)", "--terms", "6"], 0),
    (["biject", "--path", "U U D2"], 0),
    (["biject", "--inverse", "--path", "U F D"], 0),
    (["verify", "det", "--max-n", "5"], 0),
    (["verify", "bijection", "--max-n", "6"], 0),
    (["stats", "height", "--n", "10,20", "--family", "open"], 0),
    (["stats", "area", "--n", "12"], 0),
    (["selftest"], 0),
    (["selftest", "--inject", "det-exponent"], 1),
]


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    validator_cls = jsonschema.validators.validator_for(schema)
    validator_cls.check_schema(schema)
    envelope = validator_cls(schema)

    failures = 0
    for args, expected_code in CASES:
        proc = subprocess.run([exe, "--json", *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != expected_code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {expected_code}\n{proc.stderr}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
            envelope.validate(doc)
            sub = next(a for a in args if a in SUBCOMMANDS)
            name = PAYLOAD_DEF.get(sub, sub)
            payload_schema = {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]}
            validator_cls(payload_schema).validate(doc["payload"])
            if doc["command"] != ["--json", *args]:
                raise ValueError(f"command echo {doc['command']!r}")
        except (ValueError, jsonschema.ValidationError) as exc:
            print(f"FAIL {label}: {exc}")
            failures += 1
            continue
        print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
