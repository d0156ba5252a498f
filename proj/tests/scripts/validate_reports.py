#!/usr/bin/env python3
"""Run the CLI in JSON mode and validate every report against docs/schemas."""
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

CASES = [
    ("diagram", ["diagram", "Y^2 + t*Y + t^3"], 0),
    ("diagram", ["diagram", "Y'' + t*Y^3 - t^2"], 0),
    ("solve", ["solve", "Y^2 + t*Y + t^3"], 0),
    ("solve", ["--target", "3/2", "solve", "Y^2 - t"], 0),
    ("solve", ["solve", "Y - t"], 0),
    ("solve", ["--preset", "monotone", "solve", "Y' + Y - z - t"], 0),
    ("solve", ["solve", "Y^2 + t^3 where Y preceq 1"], None),
    ("analyze", ["analyze", "Y^2 - 2*t*Y + t^2 - t^3"], 0),
    ("analyze", ["analyze", "Y^2 + t*Y + t^3 where Y preceq 1"], 0),
    ("analyze", ["--dim", "2", "analyze", "Y^2 - t^(1,0)*Y"], 0),
    ("equalizer", ["equalizer", "Y^2", "t*Y"], 0),
    ("check-field", ["--samples", "20", "check-field"], 0),
    ("check-field", ["--preset", "monotone", "--samples", "20", "check-field"], 0),
    ("chain-ddeg", ["chain-ddeg", "Y^2 + t*Y + t^3", "0", "-t", "-t + t^2"], 0),
    ("error", ["solve", "Y^2 +"], 1),
    ("error", ["equalizer", "Y^2", "t*Y^2"], 1),
    ("error", ["--preset", "h-type", "solve", "Y - z"], 1),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (f"{name}.schema.json", Resource.from_contents(s)) for name, s in schemas.items()
    )
    failures = 0
    for kind, args, code in CASES:
        proc = subprocess.run([binary, "--format", "json", *args], capture_output=True, text=True)
        label = " ".join(args)
        if code is not None and proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stdout}{proc.stderr}")
            failures += 1
            continue
        try:
            # errors are reported on stderr
            doc = json.loads(proc.stdout if proc.returncode != 1 else proc.stderr)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})\n{proc.stdout}{proc.stderr}")
            failures += 1
            continue
        validator = Draft202012Validator(schemas[kind], registry=registry)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}:")
            for e in errors:
                print(f"  {list(e.path)}: {e.message}")
        else:
            print(f"ok   {label} [{kind}]")
    for name, schema in schemas.items():
        Draft202012Validator.check_schema(schema)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
