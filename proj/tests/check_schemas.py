"""Run every gaplab subcommand with --json and validate against schemas/."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

INVOCATIONS = [
    ["poly", "--poly", "x^3-19", "--mod", "7", "--eval", "2"],
    ["poly", "--poly", "123456789012345678901234567890x+1", "--eval", "5"],
    ["intersective-check", "--poly", "x^5+x^4+x^3-19x^2-19x-19", "--mode", "primes", "--witnesses"],
    ["intersective-check", "--poly", "x^2+1", "--mode", "integers", "--prime-bound", "100"],
    ["roots-mod", "--poly", "x^2+x+1", "--q", "91"],
    ["gap-avoids", "--steps", "3,5", "--widths", "1,1", "--poly", "x^2"],
    ["gap-avoids", "--steps", "11", "--widths", "10", "--poly", "x^2", "--inputs", "primes"],
    ["gap-info", "--steps", "1,2", "--widths", "2,1"],
    ["detect", "--steps", "3,7", "--widths", "20,20", "--poly", "x^2"],
    ["detect", "--steps", "1000003", "--widths", "3", "--poly", "x^2"],
    ["weyl", "--poly", "x^2", "--n", "100", "--t", "1", "--d", "101", "--bound", "lemma1"],
    ["weyl", "--poly", "x^3", "--n", "64", "--t", "1", "--d", "64", "--bound", "lemma3"],
    ["weyl", "--poly", "x^2", "--n", "50", "--t", "1", "--d", "101", "--inputs", "primes", "--q", "4", "--r", "1"],
    ["weyl-verify", "--box", "20,20,-2,2"],
    ["divisor-moment", "--j", "3", "--M", "1000"],
    ["divisor-moment", "--j", "2", "--M", "1"],
    ["psi", "--x", "1000", "--q", "10", "--classes"],
    ["psi", "--x", "1000", "--a", "1", "--q", "10"],
    ["linnik-scan", "--qmax", "30"],
    ["extremal-search", "--N", "100,1000"],
    ["extremal-search", "--N", "1000,10000", "--dims", "2", "--strategy", "hill_climb", "--budget", "500",
     "--require-proper", "--prime-major-step", "--out", "{search}"],
    ["envelope-report", "--in", "{search}", "--theorem", "t1"],
    ["exponents", "--poly", "x^2", "--k", "2"],
    ["shape-report", "--lemma", "3", "--count", "3"],
    ["shape-report", "--lemma", "4", "--count", "3"],
    ["shape-report", "--lemma", "5", "--count", "3"],
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--gaplab", required=True)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    args = ap.parse_args()

    schemas = {p.name.removesuffix(".schema.json"): json.loads(p.read_text())
               for p in args.schemas.glob("*.schema.json")}
    covered = set()
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        search = str(pathlib.Path(tmp) / "search.json")
        for inv in INVOCATIONS:
            argv = [args.gaplab, "--json"] + [a.replace("{search}", search) for a in inv]
            proc = subprocess.run(argv, capture_output=True, text=True)
            label = " ".join(inv)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            doc = json.loads(proc.stdout)
            schema = schemas.get(inv[0])
            if schema is None:
                print(f"FAIL {label}: no schema for {inv[0]}")
                failures += 1
                continue
            try:
                jsonschema.validate(doc, schema)
            except jsonschema.ValidationError as e:
                print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
                failures += 1
                continue
            covered.add(inv[0])
            print(f"ok   {label}")
    missing = sorted(set(schemas) - covered)
    if missing:
        print("schemas never exercised:", ", ".join(missing))
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
