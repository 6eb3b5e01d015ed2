"""Command line front end.

Every command takes a scene: a JSON file path or a packaged fixture name
(F1..F4).  Exit codes: 0 success or Uniformized, 1 input or certification
error, 2 unsupported instance or Unsupported verdict, 3 budget exceeded.
"""

import argparse
import sys

from .errors import LuError, UnsupportedInstance
from .localring import is_normally_flat, is_regular_local, nilpotent_length
from .pipeline import (
    BUDGET_EXCEEDED,
    UNIFORMIZED,
    UNSUPPORTED,
    run_reduction,
    step1,
    step2,
    step3,
    toric_uniformizer,
)
from .parse import parse_poly
from .scenes import load_scene, trace_to_json, write_trace
from .blowup import local_blowup, transport_through_blowup, verify_center_isos
from .valuations import axiom_violations, certify, support_class

_ORACLES = {"toric": toric_uniformizer}


def _print_state(L):
    print(f"ideal: {L.defining.canonical_strings()}")
    print(f"center: {L.center.canonical_strings()}")


def _print_steps(steps):
    for s in steps:
        a = ", ".join(a.text() for a in s.blowup.a_list)
        extra = "".join(f" {k}={v}" for k, v in sorted(s.report.items()))
        print(f"{s.label}: b={s.blowup.b.text()} a=[{a}]{extra}")


def _cmd_check(args):
    L, nu = load_scene(args.scene)
    cls = certify(nu, L.defining, L.center)
    print(f"class: {cls}")
    print(f"rank: {nu.rank}")
    print(f"support: {nu.support.canonical_strings()}")
    _print_state(L)
    reg = is_regular_local(L.reduced())
    flat = is_normally_flat(L)
    print(
        f"reduced regular: {reg.regular} "
        f"(embdim={reg.embedding_dimension}, dim={reg.dimension})"
    )
    print(f"normally flat: {flat.flat} (N={nilpotent_length(L)})")
    bad = axiom_violations(nu, count=args.samples, seed=args.seed)
    print(f"axiom samples: {len(bad)} violations in {args.samples}")
    return 0 if not bad else 1


def _blowup_args(args, L, nu):
    b = parse_poly(L.ring, args.b)
    a_list = [parse_poly(L.ring, a) for a in args.a or []]
    return local_blowup(L, b, a_list, nu=nu)


def _cmd_blowup(args):
    L, nu = load_scene(args.scene)
    certify(nu, L.defining, L.center)
    B = _blowup_args(args, L, nu)
    print(f"chart variables: {list(B.t_names)}")
    print(f"stabilization N: {B.stabilization_N}")
    _print_state(B.chart)
    rep = verify_center_isos(B, nu)
    print(f"center isomorphisms: {'ok' if rep.ok else rep.failures}")
    return 0 if rep.ok else 1


def _cmd_verify_lemmas(args):
    L, nu = load_scene(args.scene)
    certify(nu, L.defining, L.center)
    B = _blowup_args(args, L, nu)
    rep = verify_center_isos(B, nu)
    for line in rep.failures:
        print(f"failed: {line}")
    nu2 = transport_through_blowup(nu, B)
    cls = certify(nu2, B.chart.defining, B.chart.center)
    print(f"center isomorphisms: {'ok' if rep.ok else 'failed'}")
    print(f"transported certificate: {cls}")
    return 0 if rep.ok else 1


def _run_step(args, fn):
    L, nu = load_scene(args.scene)
    certify(nu, L.defining, L.center)
    L2, nu2, steps = fn(L, nu)
    _print_steps(steps)
    print(f"blowups: {len(steps)}")
    _print_state(L2)
    return 0


def _cmd_run(args):
    L, nu = load_scene(args.scene)
    oracle = _ORACLES[args.oracle]
    trace = run_reduction(L, nu, oracle=oracle, budget=args.budget)
    _print_steps(trace.steps)
    _print_state(trace.final_ring)
    print(f"verdict: {trace.verdict}" + (f" ({trace.reason})" if trace.reason else ""))
    if args.trace:
        write_trace(trace, args.trace)
        print(f"trace written: {args.trace}")
    if trace.verdict == UNIFORMIZED:
        return 0
    if trace.verdict == BUDGET_EXCEEDED:
        return 3
    return 2


def _parser():
    p = argparse.ArgumentParser(
        prog="lu", description="instance verification for valuation reductions"
    )
    sub = p.add_subparsers(dest="command", required=True)

    def scene_cmd(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("scene", help="scene JSON path or fixture name (F1..F4)")
        sp.set_defaults(fn=fn)
        return sp

    sp = scene_cmd("check", _cmd_check, "certify a scene's valuation data")
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=lambda s: int(s, 16), default=0xC0FFEE,
                    help="hex seed for axiom sampling")

    for name, fn, help in (
        ("blowup", _cmd_blowup, "perform one local blowing up"),
        ("verify-lemmas", _cmd_verify_lemmas, "check the chart isomorphisms"),
    ):
        sp = scene_cmd(name, fn, help)
        sp.add_argument("--b", required=True, help="element divided out")
        sp.add_argument("--a", action="append", default=[],
                        help="numerator (repeatable)")

    scene_cmd("step1", lambda a: _run_step(a, step1),
              "separate associated primes")
    scene_cmd("step2", lambda a: _run_step(a, step2),
              "make the reduced ring regular")
    scene_cmd("step3", lambda a: _run_step(a, step3),
              "make the graded pieces free")

    sp = scene_cmd("run", _cmd_run, "run the full reduction")
    sp.add_argument("--oracle", choices=sorted(_ORACLES), default="toric")
    sp.add_argument("--budget", type=int, default=32)
    sp.add_argument("--trace", help="write the trace JSON here")

    return p


def main(argv=None):
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except UnsupportedInstance as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return 2
    except (LuError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
