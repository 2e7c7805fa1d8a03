#!/usr/bin/env python3
"""End-to-end checks of the command-line tool: exit codes, payloads, and
schema validation of the emitted reports."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(binary, *args, expect=0):
    proc = subprocess.run(
        [binary, *args], capture_output=True, text=True, timeout=600
    )
    if proc.returncode != expect:
        raise SystemExit(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stderr: {proc.stderr}"
        )
    return proc


def main():
    binary = sys.argv[1]
    source_dir = Path(sys.argv[2])
    data = source_dir / "data"
    schemas = source_dir.parent / "schemas"
    envelope_schema = json.loads((schemas / "envelope.schema.json").read_text())
    verify_schema = json.loads(
        (schemas / "verify_report.schema.json").read_text()
    )
    stratum_schema = json.loads(
        (schemas / "stratum_report.schema.json").read_text()
    )

    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)

        # chain check on the nested model passes with status 0
        proc = run(binary, "chain", "check", "--spec", str(data / "nested.json"))
        report = json.loads(proc.stdout)
        jsonschema.validate(report, envelope_schema)
        assert report["results"]["pass"] is True

        # the bound through the dictionary reports the excess
        proc = run(
            binary, "lls", "bound", "--r", "1", "--d", "4",
            "--aY", "2,3", "--aZ", "1,3",
        )
        report = json.loads(proc.stdout)
        assert report["results"] == {"excess": 1}, report["results"]

        # stratum report on the transverse pair
        proc = run(
            binary, "stratum",
            "--chain", str(data / "nested.json"),
            "--v1", str(data / "e2.json"),
            "--vn", str(data / "e1.json"),
            "--spec", "1,1,0",
        )
        report = json.loads(proc.stdout)
        jsonschema.validate(report["results"], stratum_schema)
        assert report["results"]["nonempty"] is True
        assert report["results"]["dimension"] == 1

        # a verification sweep passes, validates, and is reproducible
        out1, out2 = tmp / "v1.json", tmp / "v2.json"
        for out in (out1, out2):
            run(
                binary, "verify", "--d", "2", "--n", "3", "--r", "1",
                "--primes", "2,3,5", "--escalate", "7", "--seed", "11",
                "--out", str(out),
            )
        assert out1.read_bytes() == out2.read_bytes(), "reports differ"
        report = json.loads(out1.read_text())
        jsonschema.validate(report, envelope_schema)
        jsonschema.validate(report["results"], verify_schema)
        assert report["results"]["pass"] is True

        # the frozen sweep of one mid-size model reproduces exactly
        golden_out = tmp / "golden.json"
        run(
            binary, "verify", "--d", "3", "--n", "3", "--r", "1",
            "--primes", "2,3,5,7,11", "--escalate", "13",
            "--out", str(golden_out),
        )
        live = json.loads(golden_out.read_text())["results"]
        model = next(
            m for m in live["models"]
            if m["sizes"] == [1, 2] and m["d"] == 3 and m["r"] == 1
        )
        golden = json.loads((data / "golden_d3_n3_s12.json").read_text())
        assert model == golden, "golden model report drifted"

        # error paths: unknown subcommand, bad JSON, budget
        run(binary, "no-such-command", expect=2)
        bad = tmp / "bad.json"
        bad.write_text("{broken")
        run(binary, "chain", "check", "--spec", str(bad), expect=2)
        run(
            binary, "enumerate", "--chain", str(data / "nested.json"),
            "--r", "1", "--budget", "2", expect=2,
        )

        # csv census output
        proc = run(
            binary, "enumerate", "--chain", str(data / "nested.json"),
            "--r", "1", "--fiber",
            "--v1", str(data / "e2.json"), "--vn", str(data / "e1.json"),
            "--census", "--format", "csv",
        )
        lines = [l for l in proc.stdout.splitlines() if l]
        assert lines[0] == "stratum,count"
        assert lines[-1] == '"total",3', lines

    print("cli checks passed")


if __name__ == "__main__":
    main()
