#!/usr/bin/env python3
"""Run the monoalg binary with --json across its commands and validate every
report against docs/cli-report.schema.json.

usage: validate_cli_schema.py MONOALG_BINARY SCHEMA_FILE
"""
import json
import subprocess
import sys

import jsonschema

# (arguments, stdin, expected exit code, schema definition)
CASES = [
    (["analyze", "-"], "0 0 0 1", 0, "analyze_finite"),
    (["analyze", "-"], "A[2; w, 3]", 0, "analyze_symbolic"),
    (["analyze", "-"], "1 _ 0", 0, "analyze_partial"),
    (["analyze", "-"], '{"n": 3, "ops": [[2, 2, 1], [1, 0, 0]]}', 0, "analyze_multiunary"),
    (["iso", "0 0 1 0", "0 0 0 1"], None, 0, "iso"),
    (["iso", "1 0", "0 0"], None, 1, "iso"),
    (["aut", "-"], "1 0 3 2", 0, "aut"),
    (["orbits", "--n", "2", "-"], "1 2 0", 0, "orbits"),
    (["check", "uh", "-"], "1 0 2", 0, "check"),
    (["check", "uh", "-"], "0 0 0 1", 1, "check"),
    (["check", "phom-n", "--n", "2", "-"], "0 0", 0, "check"),
    (["check", "omega-cat", "-"], "B[w]", 1, "check"),
    (["check", "pseudoforest-uh", "-"], "1 _ 0", None, "check"),
    (["classify", "-"], "1 0 2", 0, "lattice"),
    (["classify", "-"], "A[1; 1] + 2*Z3", 0, "symbolic_properties"),
    (["decompose", "-"], "1 0 3 2 4", 0, "normal_form"),
    (["limit", "--kind", "Fk", "--k", "2"], None, 0, "symbolic_properties"),
    (["limit", "--kind", "F"], None, 0, "symbolic_properties"),
    (["instantiate", "--w", "2", "-"], "w*A[1; 2]", 0, "table"),
    (["truncate", "--h", "1", "-"], "A[1; 2, 3]", 0, "normal_form"),
    (["enumerate", "--n", "4", "--count"], None, 0, "counts"),
    (["enumerate", "--n", "3"], None, 0, "corpus"),
    (["enumerate", "--n", "5", "--random", "--seed", "7"], None, 0, "table"),
    (["semilinear", "--root", "0", "-"], "1 0 0 1", 0, "semilinear"),
    (["export-dot", "-"], "1 0 1", 0, "dot"),
]


def run(binary, args, stdin):
    proc = subprocess.run([binary, "--json", *args], input=stdin or "", capture_output=True, text=True,
                          timeout=120)
    return proc.returncode, proc.stdout, proc.stderr


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    whole = jsonschema.Draft202012Validator(schema)
    failures = 0

    def fail(label, message):
        nonlocal failures
        failures += 1
        print(f"FAIL {label}: {message}")

    for args, stdin, want_code, definition in CASES:
        label = " ".join(args) + (f" <<< {stdin!r}" if stdin else "")
        code, out, err = run(binary, args, stdin)
        if want_code is not None and code != want_code:
            fail(label, f"exit {code}, wanted {want_code}; stderr: {err.strip()}")
            continue
        if code not in (0, 1):
            fail(label, f"exit {code}; stderr: {err.strip()}")
            continue
        try:
            report = json.loads(out)
        except json.JSONDecodeError as exc:
            fail(label, f"not JSON ({exc}): {out[:200]!r}")
            continue
        sub = dict(schema)
        sub.pop("anyOf")
        sub["$ref"] = f"#/$defs/{definition}"
        errors = list(jsonschema.Draft202012Validator(sub).iter_errors(report))
        errors += list(whole.iter_errors(report))
        if errors:
            fail(label, "; ".join(e.message for e in errors[:3]))
        else:
            print(f"ok   {label}")

    # Errors go to stderr with exit code 2 and nothing on stdout.
    for args, stdin in [(["analyze", "-"], "A[1; 2"), (["enumerate", "--n", "9"], None),
                        (["decompose", "-"], "0 0 0 1"), (["bogus"], None)]:
        label = " ".join(args)
        code, out, err = run(binary, args, stdin)
        if code != 2 or out.strip() or not err.strip():
            fail(label, f"expected exit 2 with a message on stderr, got {code}, stdout {out[:80]!r}")
        else:
            print(f"ok   {label} -> 2")

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
