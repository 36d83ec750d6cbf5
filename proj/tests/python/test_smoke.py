import json
import os
from pathlib import Path

import pytest

import mu2forge as mf


def test_typecheck_infers_free_variables():
    r = mf.typecheck("C[s] (\\k. k M)", ascii=True)
    assert r["type"] == "s"
    assert r["vars"] == {"M": "s"}


def test_double_negation_elimination():
    assert mf.eq("C[s] (\\k. k M)", "M", theory="p")
    assert mf.eq("C[s] (\\k. k M)", "M", theory="beta-eta")


def test_discarding_an_instantiation_needs_p():
    v = {"x": "bot"}
    assert mf.eq("x [bot]", "x", vars=v, theory="p")
    assert not mf.eq("x [bot]", "x", vars=v, theory="beta-eta")


def test_cps_then_uncps_round_trips():
    v = {"g": "s -> t", "n": "s"}
    image = mf.cps("g n", vars=v, ascii=True)
    assert image["term"] == "\\k:t. g <n, k>"
    back = mf.uncps(image["term"], vars=v, ascii=True)
    assert back["kind"] == "Program"
    assert mf.cps(back["term"], vars=v, ascii=True)["term"] == image["term"]


def test_normalize_reports_kind():
    r = mf.normalize("\\k:s. f k", tvars={"f": "not s"}, ascii=True)
    assert r["term"] == "f"
    assert r["type"] == "not s"


def test_focal_check():
    assert mf.focal_check("\\x:s -> t. x n", vars={"n": "s"})["focal"]
    r = mf.focal_check("\\x:s. c", vars={"c": "t"})
    assert not r["focal"] and r["reason"]


def test_free_theorem_matches_golden():
    golden = Path(os.environ.get("MU2FORGE_GOLDEN", Path(__file__).parents[1] / "golden"))
    want = (golden / "free_theorem_bottom.txt").read_text(encoding="utf-8")
    assert mf.free_theorem("forall X. X") + "\n" == want
    tree = json.loads(mf.free_theorem("forall X. X", json=True))
    assert tree["tag"] == "forall_term"


def test_kernel_errors_carry_a_code():
    with pytest.raises(mf.KernelError) as e:
        mf.typecheck("\\x:s x")
    assert e.value.code == "SyntaxError"
    with pytest.raises(mf.KernelError) as e:
        mf.free_theorem("s -> s")
    assert e.value.code == "OpenType"
    with pytest.raises(ValueError):
        mf.eq("x", "x", vars={"x": "s"}, theory="q")


def test_catalog_and_acceptance():
    names = [e["name"] for e in mf.catalog()]
    assert "exotic" in names and "Peirce" in names
    (r,) = mf.acceptance(only=[6])
    assert r["id"] == 6 and r["pass"], r["line"]
