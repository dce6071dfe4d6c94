#!/usr/bin/env python3
"""Canned-response solver used to exercise the oracle subprocess protocol."""
import json
import sys

mode = sys.argv[1] if len(sys.argv) > 1 else "unknown"

for line in sys.stdin:
    req = json.loads(line)
    if mode == "unsat":
        resp = {"status": "unsat"}
    elif mode == "sat-bogus":
        resp = {"status": "sat", "witness": {v: "0" for v in req.get("vars", [])}}
    else:
        resp = {"status": "unknown"}
    sys.stdout.write(json.dumps(resp) + "\n")
    sys.stdout.flush()
