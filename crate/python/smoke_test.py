#!/usr/bin/env python3
"""Smoke test for the qappell_py extension module.

Builds nothing itself: run `cargo build --release -p qappell-py` first
(or `--profile dev`; both locations are searched), then execute this
script with any Python >= 3.9.
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    candidates = [
        REPO / "target" / "release" / "libqappell_py.so",
        REPO / "target" / "debug" / "libqappell_py.so",
    ]
    for c in candidates:
        if c.exists():
            return c
    print("extension not built; running: cargo build --release -p qappell-py")
    subprocess.run(
        ["cargo", "build", "--release", "-p", "qappell-py"], cwd=REPO, check=True
    )
    return candidates[0]


def import_module():
    lib = locate_cdylib()
    tmp = Path(tempfile.mkdtemp(prefix="qappell-py-"))
    shutil.copy2(lib, tmp / "qappell_py.so")
    sys.path.insert(0, str(tmp))
    import qappell_py

    return qappell_py


def main() -> None:
    qa = import_module()

    # exact field arithmetic: zeta3^3 = 1, 1 + zeta3 + zeta3^2 = 0
    z3 = qa.CycNum.zeta3()
    one = qa.CycNum.integer(1)
    assert z3 * z3 * z3 == one
    assert (one + z3 + z3 * z3).is_zero()
    assert z3.inv() == z3 * z3
    assert str(qa.CycNum.rational(-2, 4)) == "-1/2"

    # series evaluation: a product rearrangement is exactly zero
    zero = qa.eval("J(1,2) - Jp(1)^2/Jp(2)", 80)
    assert zero.valuation() is None, str(zero)
    assert zero.order() == 80

    # a degenerate theta is the honest zero series, not an error
    assert str(qa.eval("j(q;q)", 40)) == "0 + O(q^41)"

    # Eulerian mock theta series come out integral
    f3 = qa.mock_series("f3", 12)
    assert str(f3.coeff(0)) == "1"
    assert all(c.is_integer() for _, c in f3.terms())

    # two computation routes for f3 agree
    appell_route = qa.eval("2*m(-q, q; q^3) + 2*m(-q, q^2; q^3)", 40)
    assert f3.truncate(12).first_mismatch(appell_route, 12) is None

    # order demands propagate through substitution
    demands = qa.required_order("f3(q^3)", 60)
    assert demands == [("f3(q^3)", 20)], demands

    # the catalog: 25 active identities and 3 labeled gaps
    ids = qa.catalog_ids()
    assert len(ids) == 28
    assert sum(1 for _, status, _ in ids if status == "active") == 25

    # verify a Garvan-Mukhopadhyay identity with cyclotomic constants
    out = qa.verify("gm.2", 50)
    assert out["status"] == "pass", out
    out = qa.verify("gm.1.final", 50)
    assert out["status"] == "pass", out

    # seeded property run is deterministic
    names = qa.property_names()
    assert "theta.weierstrass" in names
    a = qa.run_props(cases=3, order=20, seed=11)
    b = qa.run_props(cases=3, order=20, seed=11)
    assert all(x["passed"] for x in a)
    assert [x["failures"] for x in a] == [x["failures"] for x in b]

    print("qappell_py smoke test OK")


if __name__ == "__main__":
    main()
