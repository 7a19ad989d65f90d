import json
import random
from fractions import Fraction as F

import pytest

from hyperpierce import io as hio
from hyperpierce.equipartition import MassInstance, ham_sandwich
from hyperpierce.gale import PointConfig
from hyperpierce.generate import colorable_family, dolnikov_instance
from hyperpierce.kneser import SetFamily
from hyperpierce.radon import find_minimal_radon_pair
from hyperpierce.transversal import AffineHyperplane, dolnikov_hyperplane
from hyperpierce.gale import LinearHyperplane


def roundtrip(to, frm, obj):
    text = hio.dumps(to(obj))
    return frm(json.loads(text))


def test_point_config_roundtrip():
    cfg = PointConfig(2, [(F(1, 2), 0), (3, F(-7, 3)), (1, 1)])
    data = hio.point_config_to_json(cfg)
    assert data["points"][0] == ["1/2", "0"] and data["points"][1] == ["3", "-7/3"]
    assert roundtrip(hio.point_config_to_json, hio.point_config_from_json, cfg) == cfg


def test_radon_pair_roundtrip_is_one_based():
    pair = find_minimal_radon_pair(PointConfig(1, [(0,), (1,), (2,)]))
    data = hio.radon_pair_to_json(pair)
    assert data["plus"] == [1, 3] and data["minus"] == [2]
    assert data["lambdaPlus"] == ["1/2", "1/2"]
    assert hio.radon_pair_from_json(data) == pair


def test_set_family_roundtrip():
    fam = SetFamily(4, [(0, 2), (1, 3)])
    data = hio.set_family_to_json(fam)
    assert data == {"n": 4, "members": [[1, 3], [2, 4]]}
    assert hio.set_family_from_json(data) == fam


def test_polytope_family_roundtrip_and_classes():
    pf = colorable_family(3, 2, [2, 3], 6, 5, random.Random(0))
    back = roundtrip(hio.polytope_family_to_json, hio.polytope_family_from_json, pf)
    assert back == pf and pf.m == 2
    assert [len(c) for c in pf.classes()] == [2, 3]
    plain = hio.polytope_family_from_json({"c": 1, "polytopes": [{"vertices": [["0"], ["1"]]}]})
    assert plain.coloring == (0,)


def test_mass_instance_roundtrip():
    inst = MassInstance(1, [[(0,), (1,)], [(F(5, 2),)]])
    assert roundtrip(hio.mass_instance_to_json, hio.mass_instance_from_json, inst) == inst


def test_hyperplanes():
    a = AffineHyperplane([1, -2], 3)
    assert hio.hyperplane_from_json(hio.hyperplane_to_json(a)) == a
    lin = LinearHyperplane((1, 0, -1))
    assert "offset" not in hio.hyperplane_to_json(lin)
    assert hio.hyperplane_from_json(hio.hyperplane_to_json(lin)) == lin


def test_transversal_certificate_roundtrip():
    pf = dolnikov_instance(2, [2, 2], 5, random.Random(1))
    cert = dolnikov_hyperplane(pf.classes())
    data = hio.transversal_certificate_to_json(cert)
    assert min(w["polytope"] for w in data["witnesses"]) == 1
    back = hio.transversal_certificate_from_json(json.loads(hio.dumps(data)))
    assert back.hyperplanes == cert.hyperplanes and back.witnesses == cert.witnesses


def test_equipartition_certificate_keys():
    cert = ham_sandwich(MassInstance(1, [[(0,), (1,), (2,), (3,)]]))
    data = hio.equipartition_certificate_to_json(cert)
    assert set(data["orthants"]) == {"+", "-"}
    assert hio.equipartition_hyperplanes_from_json(data) == cert.hyperplanes


def test_instance_file_wrapped_and_bare():
    cfg = PointConfig(1, [(0,), (1,)])
    wrapped = hio.InstanceFile("pointConfig", cfg, {"seed": 3}).to_json()
    parsed = hio.instance_from_json(wrapped)
    assert parsed.payload == cfg and parsed.metadata == {"seed": 3}
    bare = hio.instance_from_json({"n": 2, "members": [[1]]})
    assert bare.kind == "setFamily"


def test_dumps_is_canonical():
    assert hio.dumps({"b": 1, "a": [1, 2]}) == hio.dumps({"a": [1, 2], "b": 1})
    assert hio.dumps({}).endswith("\n")
    assert hio.digest({"a": 1}) == hio.digest({"a": 1}) != hio.digest({"a": 2})


@pytest.mark.parametrize("bad", [
    [],
    {"what": 1},
    {"kind": "nope", "payload": {}},
    {"kind": "pointConfig"},
    {"kind": "pointConfig", "payload": {"d": 1, "points": []}},
    {"d": 1, "points": [["1/0"]]},
    {"d": 1, "points": [["1", "2"]]},
    {"d": "1", "points": [["1"]]},
    {"d": 1, "points": [["x"]]},
    {"n": 3, "members": [[0]]},
    {"n": 3, "members": [[4]]},
    {"n": 3, "members": [[True]]},
    {"c": 1, "polytopes": []},
    {"c": 1, "polytopes": [{"vertices": []}]},
    {"c": 1, "polytopes": [{"vertices": [["0"]]}], "coloring": [0, 1]},
    {"c": 1, "polytopes": [{"vertices": [["0"]]}], "coloring": [-1]},
    {"d": 1, "sets": [[]]},
    {"kind": "pointConfig", "metadata": [], "payload": {"d": 1, "points": [["0"]]}},
])
def test_malformed_inputs_raise_format_error(bad):
    with pytest.raises(hio.FormatError):
        hio.instance_from_json(bad)


def test_load_instance_reports_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(hio.FormatError):
        hio.load_instance(str(path))
    good = tmp_path / "good.json"
    hio.save_json({"d": 1, "points": [["0"], ["1"]]}, str(good))
    assert hio.load_instance(str(good)).payload.n == 2
