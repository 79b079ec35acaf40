"""Smoke test for the pydessins extension module.

Builds the extension with cargo when it is not importable, then exercises the
main types and functions.

    python3 python/smoke_test.py
"""

import importlib
import os
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load():
    try:
        return importlib.import_module("pydessins")
    except ImportError:
        pass
    subprocess.run(
        ["cargo", "build", "--release", "-p", "dessins-py", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    target = Path(os.environ.get("CARGO_TARGET_DIR", ROOT / "target"))
    built = target / "release" / "libpydessins.so"
    staging = Path(tempfile.mkdtemp())
    shutil.copy(built, staging / "pydessins.so")
    sys.path.insert(0, str(staging))
    return importlib.import_module("pydessins")


def main():
    pd = load()

    assert pd.dedekind_psi(6) == 12
    assert pd.euler_phi(12) == 4
    assert pd.jordan_totient(2, 6) == pd.dedekind_psi(6) * pd.euler_phi(6)
    assert pd.sqrt_one_units(8) == [1, 3, 5, 7]

    q8 = pd.Group("q8")
    assert q8.order == 8 and len(q8) == 8
    assert q8.automorphism_count() == 24
    assert q8.nilpotency_class() == 2

    classes = pd.classify(q8)
    assert len(classes) == 1
    d = classes[0]
    assert d.type_triple() == (4, 4, 4)
    assert d.genus() == 2
    assert d.is_totally_symmetric()
    assert pd.Dessin.from_json(d.to_json()) == d

    c6 = pd.cyclic_classes(6)
    assert len(c6) == 12
    inv = pd.cyclic_closed_invariants(6, 1, 5)
    assert inv["graph"] == "K_{1,1}^(6)" and inv["genus"] == 0

    d3 = pd.Dessin("alt4", "(123)", "(124)")
    d4 = pd.Dessin("alt4", "(132)", "(124)")
    j = d3.join(d4)
    assert j.order == 144 and j.genus() == 13 and j.type_triple() == (3, 3, 6)
    assert j.is_symmetric() and j.is_reflexible()

    c = pd.Dessin("cyclic:6", 1, 2)
    assert c.dual().type_triple() == (3, 6, 2)
    assert c.triality("wfb").triality("fbw").is_isomorphic(c)
    assert c.wilson(5, 5).is_isomorphic(c)
    assert [p.order for p in c.sylow_decompose()] == [2, 3]
    assert c.invariants()["symmetric"] is False
    try:
        pd.Dessin("cyclic:6", 2, 4)
    except pd.DessinError as e:
        assert "generate" in str(e)
    else:
        raise AssertionError("non-generating pair accepted")

    ab = pd.classify_abelian(2, 12)
    assert ab["total_count"] == 12 and ab["symmetric_count"] == 2
    assert len(ab["representatives"]) == 12

    a = pd.abelian_p_dessin(2, 1, 3, 2, 3)
    assert a.type_triple() == (8, 8, 2)

    ext = pd.Dessin("abelian:4,4", 4, 1).extended_group()
    assert ext.order == 32 and ext.nilpotency_class() == 3

    for check in pd.verify("c6"):
        assert check["pass"], check

    print("pydessins smoke test passed")


if __name__ == "__main__":
    main()
