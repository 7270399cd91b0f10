"""End-to-end checks of the radlie command line: outputs, exit codes, JSON reports."""
import json
import math
import os
import subprocess
import sys

BIN, FIX = sys.argv[1], sys.argv[2]
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("RADLIE_SEED", None)
    if env:
        full_env.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)


def fx(name):
    return os.path.join(FIX, name)


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL:", what)


def expect_exit(code, *args):
    p = run(*args)
    check(p.returncode == code, f"{' '.join(args)}: exit {p.returncode}, wanted {code}; stderr={p.stderr.strip()}")
    return p


# analyze
p = expect_exit(0, "analyze", fx("e12.json"))
check("algebra dimension: 2" in p.stdout, "analyze E12 algebra dim")
check("radical dimension: 1" in p.stdout, "analyze E12 radical dim")
check("center dimension: 2" in p.stdout, "analyze E12 center dim")
p = expect_exit(0, "analyze", fx("e12.json"), "--format", "json")
j = json.loads(p.stdout)
check(j["algebra_dim"] == 2 and j["radical_dim"] == 1 and j["center_dim"] == 2, "analyze json dims")
check(j["nilpotent"]["E12"] is True, "analyze json nilpotent flag")

# funcalc
p = expect_exit(0, "funcalc", fx("diag01.json"), "--element", "a", "--fn", "exp")
check("2.718281828459" in p.stdout, "exp(diag(0,1)) printed value")
p = expect_exit(0, "funcalc", fx("diag01.json"), "--element", "a", "--fn", "exp", "--format", "json")
m = json.loads(p.stdout)["matrix"]
check(abs(m[1][1][0] - math.e) < 1e-9 and abs(m[0][0][0] - 1.0) < 1e-9, "exp json entries")
p = expect_exit(0, "funcalc", fx("diag01.json"), "--element", "d", "--fn", "poly", "--coeffs", "1,0,1", "--format", "json")
m = json.loads(p.stdout)["matrix"]
check(abs(m[0][0][0] - 5.0) < 1e-9 and abs(m[1][1][0] - 17.0) < 1e-9, "poly 1+z^2 on diag(2,4)")
p = expect_exit(0, "funcalc", fx("diag01.json"), "--element", "d", "--fn", "inv", "--format", "json")
m = json.loads(p.stdout)["matrix"]
check(abs(m[0][0][0] - 0.5) < 1e-9 and abs(m[1][1][0] - 0.25) < 1e-9, "inv diag(2,4)")
p = expect_exit(0, "funcalc", fx("diag01.json"), "--element", "u", "--fn", "log", "--format", "json")
m = json.loads(p.stdout)["matrix"]
check(abs(m[0][1][0] - 1.0) < 1e-12 and abs(m[0][0][0]) < 1e-12, "log of I+E12")
p = expect_exit(0, "funcalc", fx("diag01.json"), "--element", "d", "--fn", "log", "--format", "json")
m = json.loads(p.stdout)["matrix"]
check(abs(m[0][0][0] - math.log(2)) < 1e-8 and abs(m[1][1][0] - math.log(4)) < 1e-8, "principal log of diag(2,4)")
expect_exit(3, "funcalc", fx("e12.json"), "--element", "E12", "--fn", "inv")
expect_exit(2, "funcalc", fx("e12.json"), "--element", "E12", "--fn", "poly")
expect_exit(2, "funcalc", fx("e12.json"), "--element", "E12", "--fn", "poly", "--coeffs", "1,x")
expect_exit(2, "funcalc", fx("e12.json"), "--element", "nope", "--fn", "exp")
expect_exit(2, "funcalc", fx("e12.json"), "--element", "E12", "--fn", "sin")

# spectrum
p = expect_exit(0, "spectrum", fx("diag01.json"), "--element", "d", "--format", "json")
j = json.loads(p.stdout)
check(abs(j["spectral_radius"] - 4.0) < 1e-12, "spectral radius of diag(2,4)")
p = expect_exit(0, "spectrum", fx("e12.json"), "--element", "E12")
check("multiplicity 2" in p.stdout, "E12 spectrum is 0 twice")

# cartan
p = expect_exit(0, "cartan", fx("borel.json"), "--format", "json", "--seed", "3")
j = json.loads(p.stdout)
check(j["cartan_dim"] == 2 and len(j["roots"]) == 1 and j["fitting_plus_dim"] == 1, "borel cartan/roots")
p = expect_exit(0, "cartan", fx("heisenberg.json"), "--format", "json")
check(json.loads(p.stdout)["cartan_dim"] == 3, "heisenberg is its own cartan")
expect_exit(2, "cartan", fx("e12.json"))

# sylvester
p = expect_exit(0, "sylvester", fx("sylvester.json"), "--format", "json")
spec = sorted(round(z[0], 9) for z in json.loads(p.stdout)["spectrum"])
check(spec == [1.0, 2.0, 2.0, 3.0], f"sylvester spectrum {spec}")
p = expect_exit(0, "sylvester", fx("sylvester.json"), "--lambda", "10", "--rhs", "y", "--format", "json")
j = json.loads(p.stdout)
x = j["solution"]
check(abs(x[0][0][0] - 1 / 8) < 1e-9 and abs(x[1][1][0] - 1 / 8) < 1e-9, "sylvester resolvent diagonal")
check(j["residual"] < 1e-7, "sylvester residual")
expect_exit(3, "sylvester", fx("sylvester.json"), "--lambda", "2", "--rhs", "y")
expect_exit(2, "sylvester", fx("sylvester.json"), "--lambda", "10")

# malformed input and usage
expect_exit(2, "analyze", fx("malformed_shape.json"))
expect_exit(2, "analyze", fx("truncated.json"))
expect_exit(2, "analyze", fx("missing.json"))
expect_exit(2)
expect_exit(2, "frobnicate")
expect_exit(2, "verify", "--suite", "t43", "--trials", "0")
expect_exit(2, "verify", "--suite", "nope")
expect_exit(2, "verify", "--suite", "t43", "--trials", "abc")

# verify reports
p = expect_exit(0, "verify", "--suite", "t43", "--trials", "10", "--seed", "5", "--format", "json")
rep = json.loads(p.stdout)
for key in ["suite", "trials", "failures", "max_residual", "hypothesis_not_met", "tolerances", "elapsed_ms"]:
    check(key in rep, f"report key {key}")
check(rep["tolerances"]["residual_tol"] == 1e-8, "default residual tolerance")
p2 = run("verify", "--suite", "t43", "--trials", "10", "--format", "json", env={"RADLIE_SEED": "5"})
rep2 = json.loads(p2.stdout)
rep.pop("elapsed_ms")
rep2.pop("elapsed_ms")
check(rep == rep2, "RADLIE_SEED matches --seed")
p = expect_exit(0, "verify", "--suite", "t43", "--trials", "5", "--tol", "1e-6", "--format", "json")
check(json.loads(p.stdout)["tolerances"]["residual_tol"] == 1e-6, "--tol sets residual tolerance")
# An impossible tolerance turns residuals into violations.
p = expect_exit(1, "verify", "--suite", "funcalc", "--trials", "10", "--tol", "1e-14", "--format", "json")
check(len(json.loads(p.stdout)["failures"]) > 0, "violations are reported")

outs = []
for _ in range(2):
    p = expect_exit(0, "verify", "--suite", "all", "--trials", "8", "--seed", "11", "--format", "json", "--jobs", "2")
    arr = json.loads(p.stdout)
    check(isinstance(arr, list) and len(arr) >= 10, "verify all gives an array of reports")
    for r in arr:
        r.pop("elapsed_ms")
    outs.append(json.dumps(arr, sort_keys=True))
check(outs[0] == outs[1], "verify all deterministic")
p = expect_exit(0, "verify", "--suite", "all", "--trials", "3", "--format", "text")
check(p.stdout.count("PASS") >= 10, "text report one line per suite")

if failures:
    print(f"{len(failures)} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
