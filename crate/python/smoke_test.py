#!/usr/bin/env python3
"""Smoke test for the multimult_py extension module.

Builds nothing itself: it locates the compiled cdylib under target/, copies
it next to a temp directory under the import name Python expects, and runs a
few end-to-end checks. Build the library first:

    cargo build -p multimult-python          # or --release

then run:

    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    candidates = [
        REPO_ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libmultimult_py.so", "multimult_py.so", "libmultimult_py.dylib")
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "could not find the compiled extension; run "
        "`cargo build -p multimult-python` first"
    )


def main() -> None:
    cdylib = locate_cdylib()
    staging = Path(tempfile.mkdtemp(prefix="multimult-smoke-"))
    shutil.copy2(cdylib, staging / "multimult_py.so")
    sys.path.insert(0, str(staging))

    import multimult_py as mm

    # Generate the dihedral table for n = 3 and sanity-check known entries.
    table = mm.dihedral_kl(3)
    assert table.carrier() == ["e", "s", "t", "st", "ts", "sts"]
    assert table.bound() == "omega"
    assert table.verify() is None, "the generated table must satisfy the law"
    assert table.mu("st", "st") == {"st": 1, "sts": 2}
    assert table.mu("sts", "sts") == {"sts": 6}

    # Word evaluation from both ends.
    front = table.evaluate_word(["sts", "st", "s"])
    back = table.evaluate_word(["sts", "st", "s"], from_end=True)
    assert front == back == {"sts": 8}

    # JSON round trip is byte-stable.
    text = table.to_json()
    again = mm.MultiMultisemigroup.from_json(text)
    assert again == table
    assert again.to_json() == text

    # Reduction to bound 1 and the underlying multisemigroup agree.
    reduced = table.reduce("1")
    assert reduced.bound() == "1"
    under = table.underlying_multisemigroup()
    assert under.product("s", "ts") == ["s", "sts"]
    assert under.is_associative()

    # Finitarity and structure constants.
    finitary, reasons = table.is_finitary()
    assert finitary, reasons
    constants = json.loads(table.structure_constants_json())
    assert constants["constants"]["sts|sts"]["sts"] == 6

    # Lifting sends membership to the top of the bound.
    lifted = under.lift("omega")
    assert lifted.mu("s", "s") == {"s": "omega"}
    finitary, reasons = lifted.is_finitary()
    assert not finitary and reasons

    # The obstructed two-element base: certificate and search agree.
    bad = mm.obstructed()
    assert bad.find_obstruction() == ("a", "b")
    result = mm.search_deformation(bad, 4)
    assert result["outcome"] == "obstructed"
    assert result["witness"] == ("a", "b")
    exhaustive = mm.search_deformation(bad, 4, obstruction_check=False)
    assert exhaustive["outcome"] == "none_within_bound"
    assert exhaustive["nodes"] > 0

    # A deformable base yields a verified witness.
    found = mm.search_deformation(under, 6)
    assert found["outcome"] == "found"
    witness = found["witness"]
    assert witness.verify() is None
    assert witness.underlying_multisemigroup() == under

    # Other generators.
    catalan = mm.catalan_monoid(4)
    assert len(catalan.carrier()) == 14
    proj = mm.projective_functors([[1, 2], [0, 1]])
    assert proj.verify() is None
    single = mm.singleton("2", "omega")
    assert single.mu("a", "a") == {"a": 2}

    # Axiom checker.
    report = mm.check_axioms("card:4")
    assert report["exhaustive"] and report["failures"] == []
    report = mm.check_axioms("tropical-max-plus")
    assert not report["exhaustive"] and report["failures"] == []

    print("smoke test passed")


if __name__ == "__main__":
    main()
