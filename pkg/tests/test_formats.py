import json

import numpy as np
import pytest

from zsfusion import formats
from zsfusion.crossact import pointed_crossed_action
from zsfusion.errors import FormatError, ValidationError
from zsfusion.fusring import rep_ring, tambara_yamagami
from zsfusion.grp import cyclic_group
from zsfusion.suite import ty_inversion_action


def _round(obj):
    doc = json.loads(json.dumps(formats.dump(obj)))
    return formats.parse(doc)


def test_group_round_trip(groups):
    for G in groups.values():
        kind, G2 = _round(G)
        assert kind == "group"
        assert np.array_equal(G2.table, G.table)


def test_group_from_permutations():
    kind, G = formats.parse({"permutations": [[2, 3, 1], [2, 1, 3]]})
    assert kind == "group" and G.n == 6


def test_matched_pair_round_trip(s3_pair):
    kind, mp = _round(s3_pair)
    assert kind == "matched-pair"
    assert np.array_equal(mp.lact, s3_pair.lact) and np.array_equal(mp.ract, s3_pair.ract)


def test_ring_round_trip(S3):
    for R in (rep_ring(S3), tambara_yamagami(cyclic_group(3))):
        kind, R2 = _round(R)
        assert kind == "fusion-ring"
        assert np.array_equal(R2.N, R.N) and R2.dual == R.dual and R2.labels == R.labels


def test_crossed_action_round_trip(s3_pair):
    for d in (pointed_crossed_action(s3_pair), ty_inversion_action(3)):
        kind, d2 = _round(d)
        assert kind == "crossed-action"
        assert np.array_equal(d2.act, d.act)
        assert np.array_equal(d2.C.N, d.C.N)


def test_load_from_file(tmp_path, S3):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(formats.dump(S3)))
    kind, G = formats.load(p)
    assert kind == "group" and G.n == 6


@pytest.mark.parametrize("doc", [
    [],
    {"something": 1},
    {"rank": 2, "unit": 0, "dual": [0], "N": []},
    {"rank": 2, "unit": 0, "dual": [0, 1], "N": [[0, 0, 5, 1]]},
    {"rank": 2, "unit": 0, "dual": [0, 1], "N": [[0, 0, 0]]},
    {"rank": 0, "unit": 0, "dual": [], "N": []},
    {"permutations": [["a", 1]]},
    {"G": {"table": [[0]]}, "lact": [[0]]},
])
def test_malformed_documents(doc):
    with pytest.raises(FormatError):
        formats.parse(doc)


def test_table_failing_axioms():
    # x * y = -x - y mod 3 is a Latin square but not associative
    with pytest.raises(ValidationError):
        formats.parse({"table": [[0, 2, 1], [2, 1, 0], [1, 0, 2]]})
    with pytest.raises(FormatError):
        formats.parse({"table": [[0, 1], [0, 1]]})


def test_bad_json_file(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    with pytest.raises(FormatError):
        formats.load(p)
    with pytest.raises(FormatError):
        formats.load(tmp_path / "missing.json")


def test_unknown_kind_rejected():
    with pytest.raises(FormatError):
        formats.parse({"table": [[0]]}, kind="sheaf")


def test_dump_rejects_other_types():
    with pytest.raises(TypeError):
        formats.dump(3)
