#!/usr/bin/env python3
"""Validate qlcd --json output against docs/report.schema.json."""

import json
import re
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(cli, args, expect=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode != expect:
        raise SystemExit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc.stdout


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        exported = str(Path(tmp) / "v21.txt")
        run(cli, ["export", "--n", "21", "--k", "3", "--out", exported])
        cases = {
            "classify": ["classify", "--n", "21", "--k", "3", "--json"],
            "classify lift": ["classify", "--n", "25", "--k", "2", "--json"],
            "classify near-optimal": ["classify", "--n", "14", "--k", "2", "--near-optimal", "--json"],
            "classify all classes": ["classify", "--n", "7", "--k", "2", "--d", "4", "--all-classes", "--json"],
            "tables k=2": ["tables", "--k", "2", "--json"],
            "tables k=3": ["tables", "--k", "3", "--json"],
            "verify table": ["verify", "--table", "dim2-optimal", "--json"],
            "verify capped": ["verify", "--table", "dim3-optimal", "--max-n", "12", "--json"],
            "verify blocks": ["verify", "--table5", "--json"],
            "verify shift": ["verify", "--shift", "--n", "19", "--k", "2", "--json"],
            "verify several": ["verify", "--table", "dim2-optimal", "--table5", "--json"],
            "equiv": ["equiv", "0,1,1,2,2", "2,2,1,1,0", "--backend", "both", "--json"],
            "import": ["import", exported, "--json"],
        }
        failures = 0
        docs = {}
        for name, args in cases.items():
            doc = json.loads(run(cli, args))
            docs[name] = doc
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            print(f"{'ok  ' if not errors else 'FAIL'} {name}")
            for e in errors[:5]:
                print(f"     {list(e.path)}: {e.message}")
            failures += bool(errors)

        # Text and JSON agree on the class count.
        header = run(cli, ["classify", "--n", "21", "--k", "3"]).splitlines()[0]
        text_count = int(re.search(r"count (\d+)", header).group(1))
        if text_count != docs["classify"]["count"] or text_count != len(docs["classify"]["representatives"]):
            print(f"FAIL text count {text_count} differs from JSON")
            failures += 1
        if docs["import"]["canonical"] != docs["classify"]["representatives"]:
            print("FAIL imported canonical forms differ from the classification")
            failures += 1

        # A document of the wrong shape must be rejected.
        bad = dict(docs["classify"], count="five")
        if validator.is_valid(bad):
            print("FAIL schema accepted a malformed document")
            failures += 1

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
