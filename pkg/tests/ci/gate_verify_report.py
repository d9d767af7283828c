#!/usr/bin/env python3
"""
Gate 1: Verification Report Determinism

Proves:
  1. The full invariant suite passes with the default rule
  2. Two runs with the same seed produce the same fingerprint
  3. A saved report reloads with an unchanged fingerprint
  4. An oversized breakpoint step is caught as a (II) violation
"""

import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "..", "src"))

from lipset.construction import BreakpointRule
from lipset.verification import VerificationReport, run_suite

SEED = 42
SAMPLES = 200


def test_full_suite_passes():
    """Run every suite once with the default rule."""
    print("  Test 1: Full suite passes")

    report = run_suite("all", seed=SEED, depth=3, samples=SAMPLES)
    failed = report.get_failed()
    if failed:
        for result in failed:
            print(f"    FAIL: {result}")
        return False

    print(f"    {len(report.results)} checks passed")
    return True


def test_fingerprint_determinism():
    """Two identical runs must agree byte for byte."""
    print("  Test 2: Fingerprint determinism")

    first = run_suite("intervals", seed=SEED, samples=SAMPLES)
    second = run_suite("intervals", seed=SEED, samples=SAMPLES)
    if first.fingerprint != second.fingerprint:
        print(f"    FAIL: {first.fingerprint[:16]} != {second.fingerprint[:16]}")
        return False

    print(f"    fingerprint {first.fingerprint[:16]}... stable")
    return True


def test_report_round_trip():
    """Save and reload a report."""
    print("  Test 3: Report round trip")

    report = run_suite("density", seed=SEED, samples=20)
    with tempfile.TemporaryDirectory(prefix="gate1_report_") as tmpdir:
        path = Path(tmpdir) / "report.json"
        report.save(path)
        loaded = VerificationReport.load(path)

    if loaded.fingerprint != report.fingerprint:
        print("    FAIL: fingerprint changed after reload")
        return False

    print("    reloaded report matches")
    return True


def test_oversized_step_detected():
    """Factor 2 must violate the step bound."""
    print("  Test 4: Oversized step detected")

    report = run_suite("builder", seed=SEED, samples=20, rule=BreakpointRule(factor=Fraction(2)))
    conditions = {r.name: r.condition for r in report.get_failed()}
    if conditions.get("breakpoint_conditions") != "(II)":
        print(f"    FAIL: expected (II), got {conditions.get('breakpoint_conditions')}")
        return False

    print("    (II) violation reported")
    return True


def main():
    print("Gate 1: Verification Report Determinism")
    print("=" * 50)

    results = [
        test_full_suite_passes(),
        test_fingerprint_determinism(),
        test_report_round_trip(),
        test_oversized_step_detected(),
    ]

    print()
    passed = sum(results)
    total = len(results)
    print(f"  Results: {passed}/{total} tests passed")

    if not all(results):
        print()
        print("  GATE 1 FAIL: invariant suite or report determinism broken")
        sys.exit(1)

    print()
    print("  GATE 1 PASS: invariant suite and report determinism verified")


if __name__ == "__main__":
    main()
