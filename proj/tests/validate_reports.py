"""Runs `centra analyze` on a few groups and validates each report against the schema."""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    cli, schema_path, data = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    specs = [
        ["--builtin", "dihedral:8"],
        ["--builtin", "cyclic:5"],
        ["--builtin", "symmetric:4"],
        ["--builtin", "heisenberg:3"],
        ["--table", f"{data}/q8.tbl"],
        ["--gens", f"{data}/c2_wr_c4.gens"],
        ["--product", "dihedral:8,cyclic:2"],
    ]
    failed = 0
    for spec in specs:
        run = subprocess.run([cli, "analyze", *spec], capture_output=True, text=True)
        if run.returncode != 0:
            print(f"FAIL {' '.join(spec)}: exit {run.returncode}: {run.stderr.strip()}")
            failed += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(run.stdout)), key=lambda e: list(e.path))
        for e in errors:
            print(f"FAIL {' '.join(spec)}: {'/'.join(map(str, e.path))}: {e.message}")
        failed += bool(errors)
        if not errors:
            print(f"ok   {' '.join(spec)}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
