#!/usr/bin/env python3
# Parameter arrays package a Leonard pair as pure field data:
# (d; theta; theta_star; varphi).  Closed-form conditions decide validity
# and produce the companion sequence phi realized by the reversal
# conjugator G.  The same machinery powers the leonard-kit CLI.

import json
import random
import subprocess
import sys

from leonardkit import (
    GF,
    QQ,
    check_parameter_array,
    construct_pair,
    g_conjugation,
    inverse,
)
from leonardkit.leonard import ParameterArray
from leonardkit.sampling import sample_parameter_array

pa = ParameterArray(
    field=QQ,
    theta=tuple(QQ.element(v) for v in (2, 0, -2)),
    theta_star=tuple(QQ.element(v) for v in (2, 0, -2)),
    varphi=(QQ.element(-4), QQ.element(-4)),
)
report = check_parameter_array(pa)
print("valid:", report.valid, " companion phi:", [str(x) for x in report.phi])

# G conjugates A to the reversed bidiagonal form; its superdiagonal
# realizes exactly the companion sequence
a, a_star = construct_pair(pa)
g, phi = g_conjugation(a, a_star)
print("G =", g)
print("G^-1 A G =", inverse(g) @ a @ g)
print("G^-1 A* G =", inverse(g) @ a_star @ g)

# seeded random arrays are always valid; eigenvalue ladders are affine so
# the shared-ratio condition holds for free
rng = random.Random(2)
sample = sample_parameter_array(rng, 5, GF(997))
print("\nrandom GF(997) array, d=5:")
print("  theta:", [str(t) for t in sample.theta])
print("  varphi:", [str(v) for v in sample.varphi])
print("  valid:", check_parameter_array(sample).valid)

# the CLI speaks JSON with exact string entries; exit codes are stable
instance = {
    "field": {"kind": "rational"},
    "parameter_array": {
        "d": 1,
        "theta": ["1", "0"],
        "theta_star": ["1", "0"],
        "varphi": ["1"],
    },
}
proc = subprocess.run(
    [sys.executable, "-m", "leonardkit.cli", "construct"],
    input=json.dumps(instance),
    capture_output=True,
    text=True,
)
print("\nCLI construct exit code:", proc.returncode)
print("CLI report:", json.loads(proc.stdout)["report"])
