"""Command-line front door: parse JSON inputs, dispatch to the library, emit
a machine-readable report on stdout.

The report is byte-identical for identical inputs and seed: no timestamps,
sorted keys, pinned version string.  Exit codes: 0 success, 1 I/O or parse
trouble, 2 domain errors (precondition failures).  No mathematical logic
lives here.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, acceptance, formats, hecke, homext, invariants, kacmoody
from .bundles import EXAMPLE_NAMES, get_bundle
from .errors import DomainError, FormatError, QuivexError, UnknownExampleError
from .quiver import ZetaParam, cb_extend_dim, cb_transform, chi, d_of, dim_bigM
from .rep import cb_apply, is_flat, moment_map, simple_rep
from .stability import is_stable, stabilizer_trivial


class _Inputs:
    """Collects path -> sha256 records for the report envelope."""

    def __init__(self):
        self.records: dict[str, dict] = {}

    def json_arg(self, label: str, value: str):
        """A CLI value that is either a path, '-' for stdin, or inline JSON."""
        text = value.strip()
        if text.startswith("{") or text.startswith("["):
            self.records[label] = {"inline": True, "sha256": formats.text_sha256(text)}
            try:
                return json.loads(text)
            except json.JSONDecodeError as exc:
                raise FormatError(f"inline JSON for {label}: {exc}") from exc
        if text == "-":
            data = sys.stdin.read()
            self.records[label] = {"stdin": True, "sha256": formats.text_sha256(data)}
            try:
                return json.loads(data)
            except json.JSONDecodeError as exc:
                raise FormatError(f"stdin JSON for {label}: {exc}") from exc
        path = Path(value)
        payload = formats.load_json_file(path)
        self.records[label] = {"path": str(path), "sha256": formats.file_sha256(path)}
        return payload


def _load_rep(inputs: _Inputs, label: str, value: str):
    obj = inputs.json_arg(label, value)
    base = Path(value).parent if value not in ("-",) and not value.strip().startswith("{") else None
    return formats.rep_from_json(obj, base_dir=base)


def _zeta_for(rep, inputs: _Inputs, value: str) -> ZetaParam:
    if value == "pos":
        return ZetaParam.constant(rep.dq, 1)
    if value == "neg":
        return ZetaParam.constant(rep.dq, -1)
    return formats.zeta_from_json(rep.dq.base, inputs.json_arg("zeta", value))


def _emit(command: str, inputs: _Inputs, result: dict, seed: int | None = None) -> int:
    report = {
        "command": command,
        "version": __version__,
        "inputs": inputs.records,
        "result": result,
    }
    if seed is not None:
        report["seed"] = seed
    print(json.dumps(report, indent=2, sort_keys=True))
    return 0


def _cmd_check_moment(args) -> int:
    inputs = _Inputs()
    x = _load_rep(inputs, "rep", args.rep)
    mu = moment_map(x)
    result = {
        "flat": mu.is_zero,
        "moment": {i: formats.matrix_to_json(m) for i, m in sorted(mu.blocks.items())},
    }
    return _emit("check-moment", inputs, result)


def _cmd_hom_ext(args) -> int:
    inputs = _Inputs()
    x1 = _load_rep(inputs, "rep1", args.rep1)
    x2 = _load_rep(inputs, "rep2", args.rep2)
    return _emit("hom-ext", inputs, homext.hom_ext_report(x1, x2))


def _cmd_stability(args) -> int:
    inputs = _Inputs()
    x = _load_rep(inputs, "rep", args.rep)
    zeta = _zeta_for(x, inputs, args.zeta)
    verdict = is_stable(x, zeta)
    result = {
        "verdict": verdict.verdict,
        "witness_dims": verdict.witness.dims() if verdict.witness else None,
        "stabilizer_trivial": stabilizer_trivial(x),
    }
    return _emit("stability", inputs, result)


def _cmd_dim(args) -> int:
    inputs = _Inputs()
    q = formats.quiver_from_json(inputs.json_arg("quiver", args.quiver))
    v = formats.dimvec_from_json(q, inputs.json_arg("dimV", args.dim_v))
    w = formats.dimvec_from_json(q, inputs.json_arg("dimW", args.dim_w))
    result = {"dim_bigM": dim_bigM(q, v, w), "d": d_of(q, v, w)}
    return _emit("dim", inputs, result)


def _cmd_chi(args) -> int:
    inputs = _Inputs()
    q = formats.quiver_from_json(inputs.json_arg("quiver", args.quiver))
    v1 = formats.dimvec_from_json(q, inputs.json_arg("v1", args.v1))
    w1 = formats.dimvec_from_json(q, inputs.json_arg("w1", args.w1))
    v2 = formats.dimvec_from_json(q, inputs.json_arg("v2", args.v2))
    w2 = formats.dimvec_from_json(q, inputs.json_arg("w2", args.w2))
    return _emit("chi", inputs, {"chi": chi(q, v1, w1, v2, w2)})


def _cmd_invariants(args) -> int:
    inputs = _Inputs()
    x = _load_rep(inputs, "rep", args.rep)
    bound = args.max_length if args.max_length is not None else invariants.default_degree_bound(x)
    fingerprint = invariants.pi_fingerprint(x, bound)
    result = {
        "max_length": bound,
        "fingerprint": formats.fingerprint_to_json(fingerprint),
        "all_zero": invariants.fingerprint_is_zero(fingerprint),
    }
    return _emit("invariants", inputs, result)


def _cmd_reduce(args) -> int:
    inputs = _Inputs()
    x = _load_rep(inputs, "rep", args.rep)
    red = hecke.reduce_i(x, args.vertex)
    classes = hecke.recovery_classes(x, args.vertex, red)
    layout = homext.build_complex(simple_rep(x.dq, args.vertex), red.reduced)
    result = {
        "r": red.r,
        "dimV_reduced": red.reduced.dim_v.as_dict(),
        "reduced": formats.rep_to_json(red.reduced),
        "inclusion": {i: formats.matrix_to_json(m) for i, m in sorted(red.inclusion.items())},
        "recovery_classes": formats.classes_to_json(layout, args.vertex, classes),
    }
    return _emit("reduce", inputs, result)


def _cmd_extend(args) -> int:
    inputs = _Inputs()
    x = _load_rep(inputs, "rep", args.rep)
    payload = inputs.json_arg("classes", args.classes)
    complex3 = homext.build_complex(simple_rep(x.dq, args.vertex), x)
    classes = formats.classes_from_json(payload, complex3, args.vertex)
    extended = hecke.extend_i(x, args.vertex, classes)
    result = {
        "extended": formats.rep_to_json(extended),
        "dimV": extended.dim_v.as_dict(),
        "flat": is_flat(extended),
        "stable": is_stable(extended, ZetaParam.constant(extended.dq, 1)).stable,
    }
    return _emit("extend", inputs, result)


def _cmd_weight_mult(args) -> int:
    inputs = _Inputs()
    q = formats.quiver_from_json(inputs.json_arg("quiver", args.quiver))
    v = formats.dimvec_from_json(q, inputs.json_arg("dimV", args.dim_v))
    w = formats.dimvec_from_json(q, inputs.json_arg("dimW", args.dim_w))
    height = args.cutoff if args.cutoff is not None else v.total() + kacmoody.DEFAULT_CUTOFF_SLACK
    roots = kacmoody.roots_for_quiver(q, height)
    mult = kacmoody.weight_multiplicity(roots, kacmoody.WeightSpec(w, v))
    result = {
        "multiplicity": mult,
        "weight": {"highest": w.as_dict(), "drop": v.as_dict()},
        "finite_type": roots.finite,
        "cutoff": roots.cutoff,
    }
    return _emit("weight-mult", inputs, result)


def _cmd_cb_transform(args) -> int:
    inputs = _Inputs()
    result: dict
    if args.rep:
        x = _load_rep(inputs, "rep", args.rep)
        transformed = cb_apply(x)
        result = {
            "quiver": formats.quiver_to_json(transformed.dq.base),
            "infinity": "inf",
            "rep": formats.rep_to_json(transformed),
            "flat": is_flat(transformed),
        }
    else:
        if not args.quiver or not args.dim_w:
            raise FormatError("cb-transform needs --rep, or --quiver together with --dim-w")
        q = formats.quiver_from_json(inputs.json_arg("quiver", args.quiver))
        w = formats.dimvec_from_json(q, inputs.json_arg("dimW", args.dim_w))
        q2, inf = cb_transform(q, w)
        result = {"quiver": formats.quiver_to_json(q2), "infinity": inf}
        if args.dim_v:
            v = formats.dimvec_from_json(q, inputs.json_arg("dimV", args.dim_v))
            result["dimV_extended"] = cb_extend_dim(v, q2, inf).as_dict()
    return _emit("cb-transform", inputs, result)


def _cmd_example(args) -> int:
    inputs = _Inputs()
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    bundle = get_bundle(args.name, **params)
    payload = formats.bundle_to_json(bundle)
    if args.member:
        if args.member not in bundle.reps:
            raise UnknownExampleError(
                f"bundle {args.name!r} has no member {args.member!r}; "
                f"members: {sorted(bundle.reps)}"
            )
        print(json.dumps(formats.rep_to_json(bundle.reps[args.member]), indent=2, sort_keys=True))
        return 0
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "quiver.json").write_text(
            json.dumps(payload["quiver"], indent=2, sort_keys=True) + "\n"
        )
        for name, rep in payload["reps"].items():
            (outdir / f"rep_{name}.json").write_text(
                json.dumps(rep, indent=2, sort_keys=True) + "\n"
            )
        written = ["quiver.json"] + [f"rep_{name}.json" for name in payload["reps"]]
        return _emit("example", inputs, {"bundle": args.name, "written": sorted(written)})
    return _emit("example", inputs, payload)


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else acceptance.DEFAULT_SEED
    numbers: set[int] = set()
    for suite in args.suites or ["all"]:
        if suite not in acceptance.SUITES:
            raise FormatError(
                f"unknown suite {suite!r}; choices: {', '.join(sorted(acceptance.SUITES))}"
            )
        numbers.update(acceptance.SUITES[suite])
    if args.n is not None and not numbers == set(acceptance.SUITES["an"]):
        raise FormatError("--n only applies to the 'an' suite")
    results = acceptance.run_suites(seed, tuple(numbers), an_n=args.n)
    for r in results:
        print(r.line(), file=sys.stderr)
    payload = {
        "criteria": [
            {
                "number": r.number,
                "name": r.name,
                "passed": r.passed,
                "details": r.details,
            }
            for r in results
        ],
        "all_passed": all(r.passed for r in results),
    }
    code = _emit("verify", _Inputs(), payload, seed=seed)
    if not payload["all_passed"]:
        return 2
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivex",
        description="Exact computations with framed representations of preprojective algebras.",
    )
    parser.add_argument("--version", action="version", version=f"quivex {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-moment", help="evaluate the moment map of a representation")
    p.add_argument("--rep", required=True, help="representation JSON (path, '-', or inline)")
    p.set_defaults(func=_cmd_check_moment)

    p = sub.add_parser("hom-ext", help="Hom/Ext^1 data of a pair of representations")
    p.add_argument("--rep1", required=True)
    p.add_argument("--rep2", required=True)
    p.set_defaults(func=_cmd_hom_ext)

    p = sub.add_parser("stability", help="sign-definite stability verdict")
    p.add_argument("--rep", required=True)
    p.add_argument("--zeta", required=True, help="'pos', 'neg', or a zeta JSON (path/inline)")
    p.set_defaults(func=_cmd_stability)

    p = sub.add_parser("dim", help="ambient and moduli dimension counts")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim-v", required=True)
    p.add_argument("--dim-w", required=True)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("chi", help="Euler characteristic of the pair complex")
    p.add_argument("--quiver", required=True)
    p.add_argument("--v1", required=True)
    p.add_argument("--w1", required=True)
    p.add_argument("--v2", required=True)
    p.add_argument("--w2", required=True)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("invariants", help="cycle-trace and framed-path fingerprint")
    p.add_argument("--rep", required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("reduce", help="strip the simple module at a vertex")
    p.add_argument("--rep", required=True)
    p.add_argument("--vertex", required=True)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("extend", help="extend by cocycle classes at a vertex")
    p.add_argument("--rep", required=True)
    p.add_argument("--vertex", required=True)
    p.add_argument("--classes", required=True, help="cocycle file (path/inline)")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("weight-mult", help="Kac-Moody weight multiplicity oracle")
    p.add_argument("--quiver", required=True)
    p.add_argument("--dim-v", required=True)
    p.add_argument("--dim-w", required=True)
    p.add_argument("--cutoff", type=int, default=None)
    p.set_defaults(func=_cmd_weight_mult)

    p = sub.add_parser("cb-transform", help="one-extra-vertex framing rewrite")
    p.add_argument("--quiver")
    p.add_argument("--dim-w")
    p.add_argument("--dim-v")
    p.add_argument("--rep", help="rewrite a full representation instead")
    p.set_defaults(func=_cmd_cb_transform)

    p = sub.add_parser("example", help="emit a named example bundle")
    p.add_argument("name", choices=sorted(EXAMPLE_NAMES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--member", default=None, help="emit a single member as a bare rep JSON")
    p.add_argument("--out", default=None, help="write the bundle files into a directory")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument(
        "suites",
        nargs="*",
        metavar="SUITE",
        help=f"suites to run (default: all); choices: {', '.join(sorted(acceptance.SUITES))}",
    )
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--n", type=int, default=None, help="restrict the 'an' suite to one n")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(
            json.dumps(
                {
                    "command": args.command,
                    "version": __version__,
                    "error": {"type": type(exc).__name__, "message": str(exc)},
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 2
    except (FormatError, OSError) as exc:
        print(
            json.dumps(
                {
                    "command": args.command,
                    "version": __version__,
                    "error": {"type": type(exc).__name__, "message": str(exc)},
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 1
    except QuivexError as exc:
        print(
            json.dumps(
                {
                    "command": args.command,
                    "version": __version__,
                    "error": {"type": type(exc).__name__, "message": str(exc)},
                },
                indent=2,
                sort_keys=True,
            )
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
