#!/usr/bin/env python3
# Copyright 2026 The LiCi-2 Lab Authors
# SPDX-License-Identifier: Apache-2.0
"""Runs the lici2 binary and checks exit codes, JSON schemas and determinism."""

import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

cli, schema_dir, data_dir = os.path.abspath(sys.argv[1]), pathlib.Path(sys.argv[2]).resolve(), pathlib.Path(sys.argv[3]).resolve()

resources = []
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    resources.append((path.name, Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

failures = []
workdir = tempfile.mkdtemp(prefix="lici2-cli-")
env = dict(os.environ, LICI2_PROFILE_PATH=os.path.join(workdir, "profile.conf"))


def run(*args, code=0):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, cwd=workdir, env=env)
    if proc.returncode != code:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
    return proc


def validate(schema, text):
    doc = json.loads(text)
    validator = jsonschema.Draft202012Validator(
        json.loads((schema_dir / f"{schema}.schema.json").read_text()), registry=registry)
    errors = list(validator.iter_errors(doc))
    if errors:
        failures.append(f"{schema}: {errors[0].message}")
    return doc


def check(cond, what):
    if not cond:
        failures.append(what)


KEY0 = "0" * 32
JSON = ["--format", "json"]

# Every JSON-producing command validates and repeats byte for byte.
cases = [
    ("cipher", ["--profile", "verified", "encrypt", "--key", KEY0, "--in", "f" * 16]),
    ("cipher", ["--profile", "verified", "decrypt", "--key", KEY0, "--in", "c7ac349cecb57df3"]),
    ("cipher", ["keys", "--key", KEY0]),
    ("kat", ["kat", "--no-save"]),
    ("ddt", ["analyze", "ddt"]),
    ("lat", ["analyze", "lat"]),
    ("trails", ["analyze", "trails", "--max-rounds", "5"]),
    ("trails", ["analyze", "trails", "--mode", "truncated", "--max-rounds", "25", "--type", "differential"]),
    ("complexity", ["analyze", "complexity", "--active", "13"]),
    ("complexity", ["analyze", "complexity", "--type", "differential", "--active", "40"]),
    ("avalanche", ["avalanche", "--trials", "500", "--seed", "9"]),
    ("avalanche", ["avalanche", "--trials", "500", "--target", "key", "--rounds", "3"]),
    ("ge", ["ge"]),
    ("frame", ["frame", "encode", "--key", KEY0, "--text", "hello 6lowpan", "--seq", "7"]),
]
docs = {}
for schema, args in cases:
    first = run(*JSON, *args).stdout
    second = run(*JSON, *args).stdout
    check(first == second, f"{' '.join(args)}: JSON differs between identical runs")
    docs[" ".join(args)] = validate(schema, first)

check(docs["--profile verified encrypt --key %s --in %s" % (KEY0, "f" * 16)]["output"] == "c7ac349cecb57df3",
      "published vector 2 not reproduced")
check(docs["kat --no-save"]["match"] == "msb/LR/w31/ext/rc0", "kat match changed")
lin = docs["analyze complexity --active 13"]
check(lin["total_bias"]["log2"] == -14 and lin["data_complexity"]["log2"] == 28, "single-trail estimate")
composed = validate("complexity", run(*JSON, "analyze", "complexity", "--active", "13", "--segments", "4").stdout)
check(composed["total_bias"]["log2"] == -53 and composed["data_complexity"]["log2"] == 106, "composed estimate")
check(docs["ge"]["grand_total"] == "1051", "ge total")

bench = validate("bench", run(*JSON, "bench", "--blocks", "4096").stdout)
check(len(bench["results"]) >= 1, "bench reported no kernel")

# Bills from files reproduce the built-in totals.
ge = validate("ge", run(*JSON, "ge", "--data-bill", str(data_dir / "data_path.json"),
                        "--key-bill", str(data_dir / "key_path.json"),
                        "--weights", str(data_dir / "weights.json")).stdout)
check((ge["data_path"]["total"], ge["key_path"]["total"], ge["grand_total"]) == ("357", "694", "1051"),
      "ge from data files")

# Frame decode: success, then a corrupted frame fails with a structured error.
frame = docs["frame encode --key %s --text hello 6lowpan --seq 7" % KEY0]["frame"]
dec = validate("frame", run(*JSON, "frame", "decode", "--key", KEY0, "--frame", frame).stdout)
check(bytes.fromhex(dec["payload_hex"]) == b"hello 6lowpan", "frame decode payload")
bad = frame[:30] + ("0" if frame[30] != "0" else "1") + frame[31:]
err = validate("frame", run(*JSON, "frame", "decode", "--key", KEY0, "--frame", bad, code=1).stdout)
check(err["error"] == "TagMismatch", "corrupted frame verdict")

# Demo transcripts, both transports.
for transport in ("memory", "udp"):
    out = run("frame", "demo", "--transport", transport, "--script", str(data_dir / "demo_script.txt")).stdout
    lines = [validate("transcript", line) for line in out.splitlines()]
    verdicts = [l["verdict"] for l in lines if l["event"] == "frame"]
    check(verdicts == ["delivered", "delivered", "ReplayDetected", "TagMismatch", "delivered"],
          f"{transport} demo verdicts {verdicts}")

# Profile resolution: kat persists the match, later commands pick it up.
run("kat")
check(pathlib.Path(env["LICI2_PROFILE_PATH"]).exists(), "kat did not persist the profile")
out = run("encrypt", "--key", "1234567890abcdef1234567890abcdef", "--in", "1234567890abcdef").stdout.strip()
check(out == "1339607b88df737a", f"persisted profile not used: {out}")

# Usage errors and timeouts.
run("encrypt", "--key", "123", "--in", "0" * 16, code=2)
run("encrypt", "--key", KEY0, "--in", "zz" * 8, code=2)
run("--profile", "msb/XX/w31/ext/rc0", "keys", "--key", KEY0, code=2)
run("no-such-command", code=2)
run("avalanche", "--trials", "0", code=2)
run("analyze", "trails", "--rounds", "9", code=2)
partial = run(*JSON, "analyze", "trails", "--type", "differential", "--rounds", "8", "--timeout-ms", "1", code=3)
validate("trails", partial.stdout)

helptext = run("avalanche", "--help").stdout
check("--seed" in helptext and "[1]" in helptext, "avalanche --help does not show the seed default")

if failures:
    print("\n".join(failures))
    sys.exit(1)
print(f"cli contract: {len(cases) * 2 + 20} invocations ok")
