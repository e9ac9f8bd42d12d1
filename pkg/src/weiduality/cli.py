"""Command-line front door.

Exit codes: 0 every check passed, 1 some check failed, 2 bad input,
3 enumeration cap exceeded.  Errors are reported as a JSON object on
stdout so callers never have to scrape text.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .anchors import anchor_for
from .demimatroid import dual as dual_demimatroid
from .demimatroid import theorem41_report, theorem42_report, weights_profiles_poset
from .demipolymatroid import (
    SubspaceFamily,
    dual_polymatroid,
    galois_closed_family,
    qmatroid_report,
    theorem51_report,
)
from .errors import DEFAULT_CAP, CapExceeded, HypothesisViolation, InputError
from .fuzz import CATEGORIES, DEFAULT_COUNTS, run_fuzz
from .galois import abundance_bridge_check, bridge_report, central_theorem_report
from .hamming import dual_code, dlp_table, ghw_table, wei_forney_report
from . import io
from .algebra.lattice import SubspaceLattice
from .metric_codes import (
    dual_flags,
    f1_demimatroid,
    ghwr_weights,
    lemma71_verdict,
    theorem71_report,
    theorem72_report,
    theorem73_report,
    theorem74_report,
    delsarte_weights,
    gr_weights,
)
from .report import Report, digest

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3
CHECKS = ("wei", "forney", "t22", "t31", "t32", "t41", "t42", "t51", "t71", "t72", "t73", "t74")


class Inputs:
    """Loads input files once and remembers their contents for the digest."""

    def __init__(self, paths):
        self.paths = list(paths)
        self.payloads = [io.read_json(p) for p in self.paths]

    def need(self, count, usage):
        if len(self.payloads) < count:
            raise InputError(f"expected {usage}")
        return self.payloads

    def optional(self, i):
        return self.payloads[i] if len(self.payloads) > i else None

    @property
    def digest(self):
        return digest(self.payloads)


def _family(inputs, i, lattice, choice):
    obj = inputs.optional(i)
    if obj is not None:
        return io.load_subspace_family(obj, lattice)
    if choice == "galois" or (choice is None and lattice.ring.e > 1):
        return galois_closed_family(lattice)
    return SubspaceFamily.full(lattice)


def _weights_report(pair, title):
    report = Report(title)
    report.tables.update(d=list(pair.phi), K=list(pair.psi))
    return report


# --- compute commands -------------------------------------------------------------


def cmd_ghw(args, inputs):
    code = io.load_field_code(inputs.need(1, "a code file")[0])
    report = Report("generalized Hamming weights")
    report.tables["d"] = ghw_table(code, args.method, args.cap)
    return report


def cmd_dlp(args, inputs):
    code = io.load_field_code(inputs.need(1, "a code file")[0])
    report = Report("dimension/length profile")
    report.tables["K"] = dlp_table(code)
    return report


def cmd_weights(args, inputs):
    data = inputs.need(1, "an input file")
    if args.metric == "gr":
        flags = io.load_flags(data[0])
        lattice = SubspaceLattice(flags.ring, flags.n, args.cap)
        return _weights_report(gr_weights(flags, _family(inputs, 1, lattice, args.family)), "Gabidulin-Roth weights")
    if args.metric == "delsarte":
        flags = io.load_flags(data[0])
        lattice = SubspaceLattice(flags.ring, flags.w_dim, args.cap)
        return _weights_report(delsarte_weights(flags, _family(inputs, 1, lattice, args.family or "full")), "Delsarte weights")
    data = inputs.need(2, "an input file and a poset file")
    poset = io.load_poset(data[1])
    if args.metric == "poset":
        flags = io.load_flags(data[0])
        return _weights_report(weights_profiles_poset(f1_demimatroid(flags), poset), "poset weights")
    code = io.load_chain_code(data[0])
    return _weights_report(ghwr_weights(code, poset), "generalized weights with respect to rank")


def cmd_dual(args, inputs):
    obj = inputs.need(1, "an input file")[0]
    report = Report(f"dual {args.kind}")
    if args.kind == "code":
        code = io.load_code(obj)
        if not hasattr(code, "gen"):
            raise InputError("dual code needs a field code")
        report.tables["dual"] = dual_code(code).to_json()
    elif args.kind == "demimatroid":
        report.tables["dual"] = dual_demimatroid(io.load_demimatroid(obj)).to_json()
    elif args.kind == "polymatroid":
        report.tables["dual"] = dual_polymatroid(io.load_polymatroid(obj, args.cap)).to_json()
    else:
        flags = io.load_flags(obj)
        dual = dual_flags(flags)
        lattice = SubspaceLattice(flags.ring, flags.n, args.cap)
        report.add("lemma71", lemma71_verdict(flags, dual, lattice.spaces))
        report.tables["dual"] = dual.to_json()
    return report


# --- checks -----------------------------------------------------------------------


def _central_w(pair1, pair2, obj):
    if isinstance(obj, dict) and "w" in obj:
        return int(obj["w"])
    m = pair1.m
    if m == 0 or (pair2.k + pair1.k) % m:
        raise InputError("cannot infer w from the pair sizes; add \"w\" to the first pair file")
    return (pair2.k + pair1.k) // m


def cmd_check(args, inputs):
    name = args.theorem
    data = inputs.payloads
    if name in ("wei", "forney"):
        return wei_forney_report(io.load_field_code(inputs.need(1, "a code file")[0]))
    if name == "t22":
        inputs.need(2, "two pair files")
        pair1, pair2 = io.load_pair(data[0]), io.load_pair(data[1])
        return central_theorem_report(pair1, pair2, _central_w(pair1, pair2, data[0]))
    if name == "t31":
        return bridge_report(io.load_bridge(inputs.need(1, "a bridge tuple file")[0]))
    if name == "t32":
        obj = inputs.need(1, "a q-matroid or demi-polymatroid file")[0]
        if "rho" in obj:
            return qmatroid_report(io.load_qmatroid(obj, args.cap))
        dp = io.load_polymatroid(obj, args.cap)
        lat = dp.lattice
        return abundance_bridge_check(len(lat), lat.leq, lat.dims, dp.f, dp.w, lat.perp_map())
    if name == "t41":
        inputs.need(2, "a demi-matroid file and a family file")
        return theorem41_report(io.load_demimatroid(data[0]), io.load_set_family(data[1]))
    if name == "t42":
        inputs.need(2, "a demi-matroid file and a poset file")
        return theorem42_report(io.load_demimatroid(data[0]), io.load_poset(data[1]))
    if name == "t51":
        dp = io.load_polymatroid(inputs.need(1, "a demi-polymatroid file")[0], args.cap)
        return theorem51_report(dp, _family(inputs, 1, dp.lattice, args.family or "full"))
    if name == "t71":
        flags = io.load_flags(inputs.need(1, "a flag file")[0])
        lattice = SubspaceLattice(flags.ring, flags.n, args.cap)
        return theorem71_report(flags, _family(inputs, 1, lattice, args.family))
    if name == "t72":
        inputs.need(2, "a flag file and a poset file")
        return theorem72_report(io.load_flags(data[0]), io.load_poset(data[1]))
    if name == "t73":
        flags = io.load_flags(inputs.need(1, "a flag file")[0])
        lattice = SubspaceLattice(flags.ring, flags.w_dim, args.cap)
        return theorem73_report(flags, _family(inputs, 1, lattice, args.family or "full"))
    inputs.need(2, "a chain-ring code file and a poset file")
    return theorem74_report(io.load_chain_code(data[0]), io.load_poset(data[1]), subcode_cap=args.cap)


def cmd_fuzz(args, inputs):
    chosen = {name: getattr(args, name) for name in CATEGORIES if getattr(args, name) is not None}
    counts = chosen if chosen else dict(DEFAULT_COUNTS)
    return run_fuzz(args.seed, counts, qs=tuple(args.q or (2, 3)), max_m=args.m)


# --- plumbing ---------------------------------------------------------------------


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized commands (default 0)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest number of objects to enumerate")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="weiduality", description="Generalized weights and Wei-type duality checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ghw", parents=[common], help="generalized Hamming weights of a code")
    p.add_argument("inputs", nargs=1, metavar="CODE")
    p.add_argument("--method", choices=("subset", "subcode"), default="subset")
    p.set_defaults(run=cmd_ghw)

    p = sub.add_parser("dlp", parents=[common], help="dimension/length profile of a code")
    p.add_argument("inputs", nargs=1, metavar="CODE")
    p.set_defaults(run=cmd_dlp)

    p = sub.add_parser("weights", parents=[common], help="weights and profiles under another metric")
    p.add_argument("metric", choices=("gr", "poset", "delsarte", "ghwr"))
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--family", choices=("full", "galois"), help="subspace family when no family file is given")
    p.set_defaults(run=cmd_weights)

    p = sub.add_parser("dual", parents=[common], help="dual structure")
    p.add_argument("kind", choices=("code", "demimatroid", "polymatroid", "flags"))
    p.add_argument("inputs", nargs=1, metavar="FILE")
    p.set_defaults(run=cmd_dual)

    p = sub.add_parser("check", parents=[common], help="verify one duality theorem on the given inputs")
    p.add_argument("theorem", choices=CHECKS)
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--family", choices=("full", "galois"), help="subspace family when no family file is given")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("fuzz", parents=[common], help="seeded randomized verification")
    for name in CATEGORIES:
        p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, metavar="N",
                       help=f"number of random {name.replace('_', ' ')} (default {DEFAULT_COUNTS[name]})")
    p.add_argument("--q", type=int, action="append", help="field size for random codes, repeatable")
    p.add_argument("--m", type=int, default=7, help="largest random code length")
    p.set_defaults(run=cmd_fuzz, inputs=[])
    return parser


def render_text(doc):
    lines = [f"{doc['title']} (version {doc['version']})"]
    for rec in doc["records"]:
        mark = "PASS" if rec["passed"] else "FAIL"
        anchor = f"  [{rec['anchor']}]" if rec["anchor"] else ""
        lines.append(f"{mark} {rec['name']}{anchor}")
        if not rec["passed"] and rec["witness"] is not None:
            lines.append(f"     witness: {json.dumps(rec['witness'], sort_keys=True)}")
    for key in sorted(doc["tables"]):
        lines.append(f"{key}: {json.dumps(doc['tables'][key], sort_keys=True)}")
    s = doc["summary"]
    lines.append(f"{'passed' if s['passed'] else 'FAILED'}: {s['n_checks'] - s['n_failed']}/{s['n_checks']} checks")
    return "\n".join(lines) + "\n"


def error_document(exc, code):
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, HypothesisViolation) and exc.condition:
        err["condition"] = exc.condition
        err["anchor"] = anchor_for(exc.condition)
        if exc.witness is not None:
            err["witness"] = exc.witness
    if isinstance(exc, CapExceeded):
        err.update(what=exc.what, needed=exc.needed, cap=exc.cap)
    return {"error": err, "exit_code": code}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cap < 1:
            raise InputError("--cap must be positive")
        inputs = Inputs(args.inputs)
        report = args.run(args, inputs)
    except CapExceeded as exc:
        print(json.dumps(error_document(exc, EXIT_CAP), sort_keys=True, default=str))
        return EXIT_CAP
    except InputError as exc:
        print(json.dumps(error_document(exc, EXIT_INPUT), sort_keys=True, default=str))
        return EXIT_INPUT
    doc = report.to_json(inputs.digest if inputs.paths else digest({"seed": args.seed}))
    if args.command == "fuzz":
        doc["input_digest"] = digest({"seed": args.seed, "instances": doc["tables"]["instances"]})
    text = render_text(doc) if args.format == "text" else json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if doc["summary"]["passed"] else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
