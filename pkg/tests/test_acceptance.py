"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible without ``-s``)
and then asserts, so the report and the pass/fail status always agree.
"""

import itertools
import json
import random
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np
import pytest

from galoiscalc.classifier import (
    classify,
    classify_int,
    dedekind_check,
    is_irreducible,
    trinomial_route,
)
from galoiscalc.groups import EVEN_GROUPS, GaloisGroup as G
from galoiscalc.numeric import all_roots, theta1, theta_classes
from galoiscalc.polynomial import IntPoly, depress_quintic
from galoiscalc.resolvent import (
    disc_cubic,
    disc_quartic,
    disc_quintic,
    resolvent_cubic,
    resolvent_sextic,
)

from oracles import brute_has_factor, numeric_discriminant, resultant_discriminant

GOLDEN_FILE = Path(__file__).parent / "data" / "golden.txt"

# every report produced in this module, checked for the parity law at the end
CLASSIFIED = []


def P(*high):
    return IntPoly.from_high(high)


def _report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")


def _classify(f):
    r = classify(f)
    CLASSIFIED.append(r)
    return r


def _disc(high):
    n = len(high) - 1
    c = high[1:]
    if n == 3:
        return disc_cubic(*c)
    if n == 4:
        return disc_quartic(*c)
    return disc_quintic(*c[1:])


def test_1_golden_examples(capsys):
    problems = []

    def check(cond, what):
        if not cond:
            problems.append(what)

    r = _classify(P(1, 0, 1, 1))
    check(r.group == G.S3 and r.certificate.delta == -31, "x^3+x+1")
    r = _classify(P(1, 3, 0, -3))
    check(r.group == G.A3 and r.certificate.delta == 81, "x^3+3x^2-3")
    r = _classify(P(1, 0, 0, -1, -1))
    check(r.group == G.S4 and r.certificate.delta == -283 and r.certificate.resolvent == P(1, 0, 4, -1), "x^4-x-1")
    r = _classify(P(1, 0, 0, 8, 12))
    check(r.group == G.A4 and r.certificate.delta == 331776 and r.certificate.delta_sqrt == 576, "x^4+8x+12")
    r = _classify(P(1, 0, 0, 36, 63))
    check(r.group == G.V and r.certificate.resolvent_roots == [-12, -6, 18], "x^4+36x+63")
    r = _classify(P(1, 0, 0, 3, 3))
    kw = r.certificate.kappe_warren
    check(r.group == G.D8 and (kw.n1, kw.n2) == (-56700, -14175), "x^4+3x+3")
    r = _classify(P(1, 0, 0, 5, 5))
    kw = r.certificate.kappe_warren
    check(r.group == G.C4 and (kw.n1, kw.n1_sqrt, kw.n2, kw.n2_sqrt) == (302500, 550, 75625, 275), "x^4+5x+5")
    r = _classify(P(1, 0, 0, 0, -1, -1))
    check(
        r.group == G.S5 and r.certificate.delta == 2869
        and r.certificate.resolvent == P(1, -8, 40, -160, 400, -3637, 9631),
        "x^5-x-1",
    )
    r = _classify(P(1, 0, 0, 0, 20, 16))
    check(r.group == G.A5 and r.certificate.delta == 2**16 * 5**6, "x^5+20x+16")
    r = _classify(P(1, 0, 0, 0, 15, 12))
    check(r.group == G.F20 and 0 in r.certificate.resolvent_roots, "x^5+15x+12")
    r = _classify(P(1, 0, 0, 0, -5, 12))
    c = r.certificate
    check(
        r.group == G.D10 and c.resolvent_root == 40
        and abs(c.sigma1 - complex(-5, -15.8113882)) < 1e-3,
        "x^5-5x+12",
    )
    r = _classify(P(1, 0, -10, 5, 10, 1))
    c = r.certificate
    check(r.group == G.C5 and c.resolvent_root == -55 and abs(c.sigma1 - 35) < 1e-3, "x^5-10x^3+5x^2+10x+1")

    _report(capsys, 1, not problems, f"12 golden examples, mismatches: {problems or 'none'}")
    assert not problems


def test_2_discriminant_oracle(capsys):
    rng = random.Random(2024)
    worst = 0.0
    resultant_mismatch = 0
    zero = 0
    for i in range(1000):
        deg = 3 + i % 3
        high = [1] + [rng.randint(-20, 20) for _ in range(deg)]
        if deg == 5:
            high[1] = 0
        exact = _disc(high)
        if exact != resultant_discriminant(high):
            resultant_mismatch += 1
        num = numeric_discriminant(high)
        if exact == 0:
            zero += 1
            continue
        worst = max(worst, abs(num - exact) / abs(exact))
    ok = resultant_mismatch == 0 and worst < 1e-6
    _report(
        capsys, 2,
        ok,
        f"1000 discriminants, resultant mismatches {resultant_mismatch}, "
        f"worst numeric relative error {worst:.2e} (< 1e-6), {zero} with zero discriminant",
    )
    assert ok


def _near_all(values, roots):
    worst = 0.0
    for v in values:
        err = min(abs(v - w) for w in roots) / max(1.0, abs(v))
        worst = max(worst, err)
    return worst


def test_3_resolvent_root_property(capsys):
    rng = random.Random(3)
    worst = 0.0
    for i in range(200):
        if i % 2 == 0:
            a, b, c, d = (rng.randint(-20, 20) for _ in range(4))
            r = np.roots([1, a, b, c, d])
            vals = [r[0] * r[1] + r[2] * r[3], r[0] * r[2] + r[1] * r[3], r[0] * r[3] + r[1] * r[2]]
            res = np.roots(resolvent_cubic(a, b, c, d).high())
        else:
            p, q, s, t = (rng.randint(-10, 10) for _ in range(4))
            r = np.roots([1, 0, p, q, s, t])
            vals = [v for v, _ in theta_classes(list(r))]
            res = np.roots(resolvent_sextic(p, q, s, t).high())
        worst = max(worst, _near_all(vals, res))
    ok = worst < 1e-4
    _report(capsys, 3, ok, f"200 quartics/quintics, worst relative gap {worst:.2e} (< 1e-4)")
    assert ok


def test_4_trinomial_fast_path(capsys):
    rng = random.Random(4)
    mismatches = []
    classified = 0
    for n in (3, 4, 5):
        for _ in range(500):
            p, q = rng.randint(-60, 60), rng.randint(-60, 60)
            f = IntPoly([q, p] + [0] * (n - 2) + [1])
            general_delta = _disc(f.high())
            general_res = {3: None, 4: resolvent_cubic(0, 0, p, q), 5: resolvent_sextic(0, 0, p, q)}[n]
            if general_delta == 0:
                continue
            delta, res, label = trinomial_route(f)
            if (delta, res) != (general_delta, general_res):
                mismatches.append(f)
                continue
            if not is_irreducible(f):
                continue
            report = classify_int(f)
            CLASSIFIED.append(report)
            classified += 1
            general = "C5/D10" if report.group in (G.C5, G.D10) else report.group
            if general != label or not report.certificate.fast_path:
                mismatches.append(f)
    ok = not mismatches
    _report(capsys, 4, ok, f"1500 trinomials, {classified} irreducible classified, mismatches {len(mismatches)}")
    assert ok


def test_5_dedekind_consistency(capsys):
    rng = random.Random(5)
    failures = []
    done = 0
    while done < 200:
        deg = rng.randint(3, 5)
        f = IntPoly([rng.randint(-12, 12) for _ in range(deg)] + [1])
        if not is_irreducible(f):
            continue
        r = _classify(f)
        done += 1
        if not dedekind_check(f, r.group, 200):
            failures.append((str(f), r.group.label))
    ok = not failures
    _report(capsys, 5, ok, f"200 irreducible polynomials, Dedekind failures {failures or 0}")
    assert ok


def test_6_stabilizer_count(capsys):
    counts = []
    for f, target in [(P(1, 0, 0, 0, -5, 12), 40), (P(1, 0, -10, 5, 10, 1), -55)]:
        roots = all_roots(f).roots
        counts.append(
            sum(
                1
                for perm in itertools.permutations(range(5))
                if abs(theta1([roots[i] for i in perm]) - target) < 1e-3 * abs(target)
            )
        )
    ok = counts == [20, 20]
    _report(capsys, 6, ok, f"orderings matching theta1 for D10 and C5 examples: {counts} (expect 20 each)")
    assert ok


def test_7_irreducibility_oracle(capsys):
    rng = random.Random(7)
    mismatches = []
    total = 0
    reducible = 0
    for i in range(2400):
        deg = 2 + i % 4
        f = IntPoly([rng.randint(-8, 8) for _ in range(deg)] + [1])
        brute = brute_has_factor(list(f.coeffs))
        reducible += brute
        if is_irreducible(f) == brute:
            mismatches.append(str(f))
        total += 1
    ok = not mismatches and total >= 2000
    _report(capsys, 7, ok, f"{total} polynomials ({reducible} reducible), mismatches {len(mismatches)}")
    assert ok


def test_8_parity_law(capsys):
    assert len(CLASSIFIED) > 100, "criteria 1, 4 and 5 must run first"
    broken = [
        str(r.certificate.working)
        for r in CLASSIFIED
        if r.group.degree >= 2 and r.certificate.delta_is_square != (r.group in EVEN_GROUPS)
    ]
    ok = not broken
    _report(capsys, 8, ok, f"{len(CLASSIFIED)} classifications in this module, parity violations {len(broken)}")
    assert ok


def _cli(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "galoiscalc", *args],
        capture_output=True, text=True, input=stdin, timeout=120,
    )


def test_9_cli_contract(capsys):
    expected = ["S3", "A3", "S4", "A4", "V", "D8", "C4", "S5", "A5", "F20", "D10", "C5"]
    batch = _cli("--json", "--batch", str(GOLDEN_FILE))
    rows = [json.loads(line) for line in batch.stdout.splitlines()]
    groups = [r["group"] for r in rows]
    schema = json.loads(resources.files("galoiscalc").joinpath("report.schema.json").read_text())
    invalid = 0
    for row in rows:
        try:
            jsonschema.validate(row, schema)
        except jsonschema.ValidationError:
            invalid += 1
    reducible = _cli("x^2−1")
    ok = batch.returncode == 0 and groups == expected and reducible.returncode == 2 and invalid == 0
    _report(
        capsys, 9, ok,
        f"batch exit {batch.returncode}, groups {'match' if groups == expected else groups}, "
        f"'x^2-1' exit {reducible.returncode}, schema-invalid rows {invalid}",
    )
    assert ok
