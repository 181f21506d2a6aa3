#!/usr/bin/env python3
"""End-to-end golden verification of the (m, k1, k2) = (9, 2, 4) code.

Builds the pair, runs both the closed-form and transform enumeration
paths, and compares every number against the embedded golden data.
"""

import time

from terncode.code import cwe, weight_distribution
from terncode.golden_example import GOLDEN_PARAMS, golden_cwe
from terncode.hwconstruct import (
    HWParams,
    build_spec,
    closed_form_cwe,
    closed_form_weight_distribution,
    extremes_report,
)


def main() -> int:
    t0 = time.time()
    p = HWParams(GOLDEN_PARAMS["m"], GOLDEN_PARAMS["k1"], GOLDEN_PARAMS["k2"])
    spec = build_spec(p)
    print(f"validated spec: length {spec.length}, dimension {spec.dimension}")

    wd_transform = weight_distribution(spec)
    wd_closed = closed_form_weight_distribution(p)
    cwe_transform = cwe(spec)
    cwe_closed = closed_form_cwe(p)
    golden = golden_cwe()
    report = extremes_report(p)

    checks = {
        "length": spec.length == GOLDEN_PARAMS["length"],
        "dimension": spec.dimension == GOLDEN_PARAMS["dimension"],
        "wmin": wd_transform.min_nonzero() == GOLDEN_PARAMS["wmin"] == report.wmin,
        "wmax": wd_transform.max_weight() == GOLDEN_PARAMS["wmax"] == report.wmax,
        "ashikhmin_barg_violated": not report.ab_satisfied,
        "ratio_le_two_thirds": report.ratio_le_two_thirds,
        "wd closed == transform": wd_closed == wd_transform,
        "cwe closed == transform": cwe_closed == cwe_transform,
        "cwe == golden": cwe_transform == golden,
        "cwe term count": len(golden.terms) == len(cwe_transform.terms),
    }
    width = max(len(k) for k in checks)
    for name, ok in checks.items():
        print(f"  {name:<{width}} : {'ok' if ok else 'MISMATCH'}")
    print(f"done in {time.time() - t0:.2f}s")
    return 0 if all(checks.values()) else 1


if __name__ == "__main__":
    raise SystemExit(main())
