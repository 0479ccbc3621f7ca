import json
import os

import pytest

import longhom

GOLDEN = os.environ.get("LONGHOM_GOLDEN_DIR", os.path.join(os.path.dirname(__file__), "..", "golden"))


def load(name):
    with open(os.path.join(GOLDEN, name)) as f:
        return json.load(f)


def test_ordinals_normalize():
    assert longhom.normalize_ordinal("w*2+w") == "w*3"
    assert longhom.normalize_ordinal("3+w") == "w"
    with pytest.raises(longhom.ParseError):
        longhom.normalize_ordinal("w+")


def test_finite_class_counts():
    assert len(longhom.classes("uud")[0]) == 4
    found, complete = longhom.classes("udududud")
    assert len(found) == 47 and complete


def test_infinite_classes_report_completeness():
    found, complete = longhom.classes({"alpha": "w", "up": [{"lo": "0", "hi": "tail"}]})
    assert complete and len(found) == 2
    found, complete = longhom.classes({"alpha": "w", "up": [{"lo": "1", "hi": "tail"}]}, max_parts=2)
    assert not complete and len(found) == 7


def test_check_witnesses():
    assert longhom.check("uud", "{2}") == (True, None)
    assert longhom.check("uud", "{1}") == (False, "ClosureEdge(1,2)")
    seq = {"alpha": "w", "up": [{"lo": "0", "hi": "tail"}]}
    assert longhom.check(seq, "[3,w)") == (False, "LimitMismatch(w)")


def test_homotopic_and_inconsistent_maps():
    zvv, vhv, hzz = load("map_zvv.json"), load("map_vhv.json"), load("map_hzz.json")
    assert longhom.homotopic(zvv, zvv)
    assert not longhom.homotopic(vhv, zvv)
    with pytest.raises(longhom.InconsistentMap):
        longhom.homotopic(hzz, zvv)
    assert issubclass(longhom.InconsistentMap, longhom.Error)


def test_diagonal_intersection():
    d, club = longhom.diagonal(load("diag_two_pieces.json"))
    assert club
    assert [p["lo"] for p in d["parts"]] == ["0", "w", "w*2"]


def test_dot_and_normalize():
    assert longhom.export_dot("ud").startswith("digraph P {")
    with pytest.raises(longhom.DomainError):
        longhom.export_dot({"alpha": "w", "up": []})
    seq = longhom.normalize({"alpha": "w+2", "up": [{"lo": "w", "hi": {"incl": "w+1"}}]})
    assert seq == {"alpha": "w", "up": [{"lo": "0", "hi": {"incl": "1"}}]}


def test_cli_matches_golden_output():
    code, out, _ = longhom.run_cli(["classes", "-s", "uud"])
    assert code == 0
    with open(os.path.join(GOLDEN, "classes_uud.out")) as f:
        assert out == f.read()
    assert longhom.run_cli(["check", "-s", "uud", "--subset", "{1}"])[0] == 1
    assert longhom.run_cli(["classes", "-s", "uuX"])[0] == 2
