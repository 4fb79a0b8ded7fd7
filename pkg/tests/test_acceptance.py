"""Acceptance criteria 1-12, each judged at its stated tolerance.

Every test records one line in the terminal summary, e.g.
``PASS 4: oracle equivalence ...``.
"""

import subprocess
import sys
import time

from conftest import ACCEPTANCE_LINES
from zerofield import verify
from zerofield.observables import s_parameter
from zerofield.units import from_si


def record(num, title, ok, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {num}: {title} -- {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def timed(fn, *a):
    t = time.perf_counter()
    r = fn(*a)
    return r, time.perf_counter() - t


def test_1_s_parameter_reproduction():
    s, dt = timed(lambda: s_parameter(from_si(158, 5, 1e9)))
    record(1, "S-parameter reproduction", 2.33 <= s <= 2.57 and dt < 1.0,
           f"S = {s:.10g} (window [2.33, 2.57]), {dt:.3f} s (budget 1 s)")


def test_2_contrast_vanishing():
    r = verify.check_contrast_vanishing()
    record(2, "contrast vanishing", r.passed, f"max |P/P0 - 0.5| = {r.measured:.3e} (tol 1e-12); {r.detail}")


def test_3_static_limit():
    v = verify.check_static_limit_value()
    o = verify.check_static_limit_order()
    record(3, "static limit", v.passed and o.passed,
           f"rel. deviation at kR=1e-4, rho=2R: {v.measured:.3e} (tol 1e-7); "
           f"fitted order {o.measured:.3f} (need >= 2)")


def test_4_oracle_equivalence():
    r, dt = timed(verify.check_oracle_equivalence)
    record(4, "oracle equivalence", r.passed and dt < 30.0,
           f"worst relative gap {r.measured:.3e} (tol 1e-8) over 45 points, {dt:.2f} s (budget 30 s)")


def test_5_flux_consistency():
    r = verify.check_flux()
    record(5, "flux consistency", r.passed, f"worst relative gap {r.measured:.3e} (tol 1e-8) at kR in 0.1, 0.7, 2.0")


def test_6_static_coincidence_and_dynamic_divergence():
    o = verify.check_static_coincidence_order()
    d = verify.check_dynamic_divergence()
    record(6, "static coincidence / dynamic divergence", o.passed and d.passed,
           f"fitted order of |omega1/|Phi| - 1| = {o.measured:.3f} (need >= 2); "
           f"|omega1/|Phi| - 1| at kR=0.5 = {d.measured:.4f} (need > 0.01)")


def test_7_zero_field_nullity():
    c = verify.check_zero_field_curl()
    e = verify.check_zero_field_e()
    record(7, "zero-field nullity", c.passed and e.passed,
           f"curl {c.measured:.3e} (tol 1e-9), E {e.measured:.3e} (tol 1e-10) at 16 points")


def test_8_real_part_split():
    r = verify.check_real_part_split()
    record(8, "real-part split", r.passed, f"worst gap {r.measured:.3e} (tol 1e-12), 16 phases x 5 radii")


def test_9_addition_theorem():
    r = verify.check_addition_theorem()
    record(9, "addition theorem", r.passed, f"worst |lhs - rhs| {r.measured:.3e} (tol 1e-9); {r.detail}")


def test_10_special_function_suite():
    w = verify.check_wronskian()
    rc = verify.check_recurrence()
    record(10, "special-function suite", w.passed and rc.passed,
           f"Wronskian {w.measured:.3e}, recurrence {rc.measured:.3e} (tol 1e-10), x in [0.1, 50], n in 0..2")


def test_11_gauge_equivalence():
    r = verify.check_gauge_equivalence()
    record(11, "gauge-equivalence demonstrator", r.passed, r.detail)


def test_12_verify_end_to_end():
    t = time.perf_counter()
    p = subprocess.run([sys.executable, "-m", "zerofield.cli", "verify"], capture_output=True, text=True)
    dt = time.perf_counter() - t
    failed = [ln.split(":")[0][5:] for ln in p.stdout.splitlines() if ln.startswith("FAIL")]
    record(12, "verify end-to-end", p.returncode == 0 and dt < 60.0,
           f"exit {p.returncode} in {dt:.2f} s (budget 60 s); failing: {', '.join(failed) or 'none'}")
