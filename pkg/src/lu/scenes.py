"""Scene files and reduction traces.

A scene is a JSON description of a localized instance: field, variables,
defining ideal, localization center, and the weight valuation.  Traces are
the JSON record of a reduction run; serialization is deterministic (sorted
keys, fixed separators) so a repeated run of the same scene is byte
identical, and a trace can be replayed against its scene by re-applying the
recorded blowups and comparing the charts.
"""

import json
import re
from importlib import resources

from .errors import SceneError
from .fields import GF, QQ
from .ideals import Ideal
from .localring import LocalRing, is_normally_flat, is_regular_local, nilpotent_length
from .parse import parse_many, parse_poly
from .poly import PolyRing
from .blowup import local_blowup
from .valuations import WeightValuation

_FIXTURE = re.compile(r"^F[1-9][0-9]*$")


def _field(spec):
    if spec == "Q":
        return QQ
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        p = spec["Fp"]
        if not isinstance(p, int):
            raise SceneError("Fp wants an integer prime")
        return GF(p)
    raise SceneError(f"unknown field {spec!r}; use \"Q\" or {{\"Fp\": p}}")


def _str_list(d, key):
    v = d.get(key)
    if not isinstance(v, list) or not all(isinstance(s, str) for s in v):
        raise SceneError(f"scene key {key!r} wants a list of strings")
    return v


def scene_from_dict(d):
    """Build the localized ring and its valuation from parsed scene JSON."""
    if not isinstance(d, dict):
        raise SceneError("scene wants a JSON object")
    for key in ("field", "vars", "ideal", "localize_at", "valuation"):
        if key not in d:
            raise SceneError(f"scene is missing {key!r}")
    field = _field(d["field"])
    names = _str_list(d, "vars")
    if not names or len(set(names)) != len(names):
        raise SceneError("vars wants distinct names")
    ring = PolyRing(field, tuple(names))
    defining = Ideal(ring, parse_many(ring, _str_list(d, "ideal")))
    center = Ideal(ring, parse_many(ring, _str_list(d, "localize_at"))) + defining
    val = d["valuation"]
    if not isinstance(val, dict):
        raise SceneError("valuation wants a JSON object")
    for key in ("support", "weights", "rank"):
        if key not in val:
            raise SceneError(f"valuation is missing {key!r}")
    rank = val["rank"]
    if not isinstance(rank, int) or rank < 1:
        raise SceneError("rank wants a positive integer")
    support = defining + Ideal(ring, parse_many(ring, _str_list(val, "support")))
    weights = val["weights"]
    if not isinstance(weights, dict):
        raise SceneError("weights wants an object of variable -> vector")
    cols = {}
    for nm, col in weights.items():
        if nm not in ring.names:
            raise SceneError(f"weight for unknown variable {nm!r}")
        if (
            not isinstance(col, list)
            or len(col) != rank
            or not all(isinstance(c, int) for c in col)
        ):
            raise SceneError(f"weight vector for {nm!r} wants {rank} integers")
        cols[nm] = tuple(col)
    zero = (0,) * rank
    rows = tuple(
        tuple(cols.get(nm, zero)[k] for nm in ring.names) for k in range(rank)
    )
    L = LocalRing(ring, defining, center)
    nu = WeightValuation(ring, support, rows)
    return L, nu


def load_scene(source):
    """Scene from a file path, a packaged fixture name (F1..), or a dict."""
    if isinstance(source, dict):
        return scene_from_dict(source)
    if _FIXTURE.match(source):
        ref = resources.files("lu").joinpath(f"fixtures/{source}.json")
        if not ref.is_file():
            raise SceneError(f"no packaged fixture named {source}")
        text = ref.read_text()
    else:
        try:
            with open(source, "r") as fh:
                text = fh.read()
        except OSError as e:
            raise SceneError(f"cannot read scene: {e}") from None
    try:
        data = json.loads(text)
    except ValueError as e:
        raise SceneError(f"scene is not valid JSON: {e}") from None
    return scene_from_dict(data)


def trace_to_dict(trace):
    steps = []
    for s in trace.steps:
        B = s.blowup
        steps.append(
            {
                "label": s.label,
                "b": B.b.text(),
                "a_list": [a.text() for a in B.a_list],
                "chart_ideal_gb": list(B.chart.defining.canonical_strings()),
                "center_gb": list(B.chart.center.canonical_strings()),
                "report": s.report,
            }
        )
    final = trace.final_ring
    return {
        "steps": steps,
        "final": {
            "ideal_gb": list(final.defining.canonical_strings()),
            "center_gb": list(final.center.canonical_strings()),
            "regular": is_regular_local(final.reduced()).regular,
            "normally_flat": is_normally_flat(final).flat,
            "N": nilpotent_length(final),
        },
        "verdict": trace.verdict,
        "reason": trace.reason,
    }


def trace_to_json(trace):
    """Deterministic serialization; equal runs give equal bytes."""
    return json.dumps(trace_to_dict(trace), sort_keys=True, separators=(",", ":")) + "\n"


def write_trace(trace, path):
    with open(path, "w") as fh:
        fh.write(trace_to_json(trace))


def replay_trace(source, trace_json):
    """Re-apply a trace's blowups to its scene and compare every chart.

    Returns the list of mismatch descriptions; empty means the replay
    reproduced the recorded charts exactly.
    """
    L, _ = load_scene(source)
    data = json.loads(trace_json)
    problems = []
    for i, s in enumerate(data["steps"]):
        ring = L.ring
        b = parse_poly(ring, s["b"])
        a_list = [parse_poly(ring, a) for a in s["a_list"]]
        B = local_blowup(L, b, a_list)
        got_gb = list(B.chart.defining.canonical_strings())
        got_center = list(B.chart.center.canonical_strings())
        if got_gb != s["chart_ideal_gb"]:
            problems.append(f"step {i}: chart ideal {got_gb} != {s['chart_ideal_gb']}")
        if got_center != s["center_gb"]:
            problems.append(f"step {i}: center {got_center} != {s['center_gb']}")
        L = B.chart
    final = data["final"]
    got_gb = list(L.defining.canonical_strings())
    got_center = list(L.center.canonical_strings())
    if got_gb != final["ideal_gb"]:
        problems.append(f"final: chart ideal {got_gb} != {final['ideal_gb']}")
    if got_center != final["center_gb"]:
        problems.append(f"final: center {got_center} != {final['center_gb']}")
    return problems
