"""Scene loading, trace serialization, and replay."""

import json

import pytest

from lu.errors import SceneError
from lu.fields import QQ
from lu.pipeline import run_reduction
from lu.scenes import (
    load_scene,
    replay_trace,
    scene_from_dict,
    trace_to_dict,
    trace_to_json,
    write_trace,
)
from lu.valuations import Value


def _cusp_dict():
    return {
        "field": "Q",
        "vars": ["x", "y"],
        "ideal": ["y^2 - x^3"],
        "localize_at": ["x", "y"],
        "valuation": {
            "support": ["y^2 - x^3"],
            "weights": {"x": [2], "y": [3]},
            "rank": 1,
        },
    }


def test_scene_from_dict_builds_the_instance():
    local, nu = scene_from_dict(_cusp_dict())
    assert local.ring.field is QQ
    assert local.ring.names == ("x", "y")
    assert local.defining.canonical_strings() == ["y^2 - x^3"]
    assert nu.rank == 1
    assert nu.value_of(local.ring.var("x")) == Value((2,))


def test_scene_weights_default_to_zero():
    d = _cusp_dict()
    d["ideal"] = []
    d["valuation"]["support"] = []
    del d["valuation"]["weights"]["x"]
    _, nu = scene_from_dict(d)
    assert nu.column("x") == (0,)
    assert nu.column("y") == (3,)


@pytest.mark.parametrize(
    "mutate,needle",
    [
        (lambda d: d.pop("vars"), "missing"),
        (lambda d: d.update(field="R"), "unknown field"),
        (lambda d: d.update(field={"Fp": "5"}), "integer prime"),
        (lambda d: d.update(vars=["x", "x"]), "distinct"),
        (lambda d: d["valuation"].update(rank=0), "positive integer"),
        (lambda d: d["valuation"]["weights"].update(x=[2, 1]), "wants 1 integers"),
        (lambda d: d["valuation"]["weights"].update(z=[1]), "unknown variable"),
        (lambda d: d["valuation"].pop("support"), "missing"),
        (lambda d: d.update(ideal="y^2 - x^3"), "list of strings"),
    ],
)
def test_scene_validation_errors(mutate, needle):
    d = _cusp_dict()
    mutate(d)
    with pytest.raises(SceneError) as err:
        scene_from_dict(d)
    assert needle in str(err.value)


def test_packaged_fixtures_load():
    for name in ("F1", "F2", "F3", "F4"):
        local, nu = load_scene(name)
        assert nu.rank >= 1
        assert local.center.contains_ideal(local.defining)
    with pytest.raises(SceneError):
        load_scene("F99")


def test_load_scene_from_a_file(tmp_path):
    path = tmp_path / "cusp.json"
    path.write_text(json.dumps(_cusp_dict()))
    local, _ = load_scene(str(path))
    assert local.defining.canonical_strings() == ["y^2 - x^3"]
    with pytest.raises(SceneError):
        load_scene(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SceneError):
        load_scene(str(bad))


def test_trace_serialization_is_stable(tmp_path):
    local, nu = load_scene("F1")
    trace = run_reduction(local, nu)
    text = trace_to_json(trace)
    again = trace_to_json(run_reduction(*load_scene("F1")))
    assert text == again
    assert text.endswith("\n")

    path = tmp_path / "trace.json"
    write_trace(trace, str(path))
    assert path.read_text() == text

    data = json.loads(text)
    assert data["verdict"] == "Uniformized"
    assert [s["label"] for s in data["steps"]] == ["ass-prime"]
    assert data["final"]["ideal_gb"] == ["x", "t"]
    assert data["final"]["regular"] and data["final"]["normally_flat"]


def test_trace_dict_records_the_blowup_data():
    local, nu = load_scene("F2")
    trace = run_reduction(local, nu)
    d = trace_to_dict(trace)
    (step,) = d["steps"]
    assert step["b"] == "v"
    assert step["a_list"] == ["y"]
    assert step["chart_ideal_gb"] == ["y - v*t", "x - u*t", "t^2"]
    assert step["report"]["stabilization_N"] == 2
    assert d["final"]["N"] == 2


def test_replay_reproduces_every_fixture():
    for name in ("F1", "F2", "F3", "F4"):
        trace = run_reduction(*load_scene(name))
        assert replay_trace(name, trace_to_json(trace)) == [], name


def test_replay_catches_tampering():
    trace = run_reduction(*load_scene("F2"))
    data = trace_to_dict(trace)
    data["steps"][0]["chart_ideal_gb"][0] = "y - u*t"
    problems = replay_trace("F2", json.dumps(data))
    assert problems and "step 0" in problems[0]

    data = trace_to_dict(trace)
    data["final"]["center_gb"] = ["y"]
    problems = replay_trace("F2", json.dumps(data))
    assert any(p.startswith("final") for p in problems)
