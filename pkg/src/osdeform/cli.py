"""Command line front end.

Exit codes: 0 success, 1 semantic failure (violation, failed check,
inequivalent orders), 2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, matroid as mat, osgb
from .ncalg import GroundOrder, NonSpecializableError, ParseError, evaluate_q, parse_poly, print_poly


class UsageError(Exception):
    pass


def _fmt_set(J, order=None) -> str:
    items = order.sort(J) if order is not None else sorted(J)
    return "{" + ",".join(str(x + 1) for x in items) + "}"


def parse_order(text: str, n: int) -> GroundOrder:
    try:
        seq = [int(x) - 1 for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"bad --order {text!r}") from exc
    if sorted(seq) != list(range(n)):
        raise UsageError(f"--order must be a permutation of 1..{n}")
    return GroundOrder.from_sequence(seq)


class Runner:
    def __init__(self, args):
        self.args = args
        self.json = args.format == "json"
        self.m = self._load()
        self.order = parse_order(args.order, self.m.n) if args.order else GroundOrder.natural(self.m.n)

    def _load(self):
        path = self.args.matroid
        if not path:
            raise UsageError("--matroid FILE is required")
        try:
            return mat.load_matroid(path)
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: malformed JSON: {exc}") from exc
        except mat.MatroidError as exc:
            raise UsageError(f"{path}: {exc}") from exc

    def emit(self, text: str, data: dict) -> None:
        if self.json:
            print(json.dumps(data, indent=2, sort_keys=True))
        else:
            print(text)

    def require_valid(self) -> None:
        bad = mat.validate_circuits(self.m)
        if bad:
            raise UsageError("matroid violates the circuit axioms; run 'validate'")

    def data(self) -> osgb.GroebnerData:
        self.require_valid()
        return osgb.groebner_data(self.m, self.order, truncate=self.args.truncate_gc)

    def gens(self, gd):
        if self.args.q is None:
            return gd.gens
        return gd.gens.specialize(self.args.q)

    # commands

    def validate(self) -> int:
        bad = mat.validate_circuits(self.m)
        lines = [f"ground set size {self.m.n}, {len(self.m.circuits)} circuits"]
        lines += [f"{v.axiom}: {' '.join(_fmt_set(s) for s in v.sets)} ({v.message})" for v in bad]
        lines.append("valid" if not bad else f"{len(bad)} violation(s)")
        self.emit("\n".join(lines), {
            "valid": not bad,
            "violations": [{"axiom": v.axiom, "sets": [sorted(x + 1 for x in s) for s in v.sets]} for v in bad],
        })
        return 0 if not bad else 1

    def circuits(self) -> int:
        d = mat.matroid_to_dict(self.m)
        self.emit("\n".join(_fmt_set(c) for c in self.m.circuits) or "(no circuits)", d)
        return 0

    def gb(self) -> int:
        gd = self.data()
        gens = self.gens(gd)
        lines = ["Groebner circuits:"]
        lines += ["  " + _fmt_set(J, self.order) for J in gd.gcircuits]
        lines.append(f"generators ({len(gens)}):")
        lines += [f"  {g.name} = {print_poly(g.poly)}" for g in gens]
        self.emit("\n".join(lines), {
            "gcircuits": [[x + 1 for x in self.order.sort(J)] for J in gd.gcircuits],
            "generators": [{"name": g.name, "family": g.family, "poly": print_poly(g.poly)} for g in gens],
        })
        return 0

    def check(self) -> int:
        gd = self.data()
        gens = self.gens(gd)
        rep = osgb.buchberger_verify(gens, jobs=self.args.jobs)
        dep = osgb.dependent_reduction_failures(gd, gens)
        ok = rep.passed and not dep
        d = rep.to_dict()
        d["pass"] = ok
        d["dependent_failures"] = [[x + 1 for x in self.order.sort(J)] for J in dep]
        lines = [f"obstructions: {rep.n_obstructions}, failures: {len(rep.failures)}"]
        lines += [f"  {f.pair[0]} x {f.pair[1]} ({f.kind}): {print_poly(f.normal_form)}" for f in rep.failures]
        lines += [f"  d{_fmt_set(J, self.order)} does not reduce to 0" for J in dep]
        lines.append("pass" if ok else "FAIL")
        self.emit("\n".join(lines), d)
        return 0 if ok else 1

    def nf(self) -> int:
        gd = self.data()
        gens = self.gens(gd)
        try:
            f = parse_poly(self.args.poly, self.order)
        except ParseError as exc:
            raise UsageError(str(exc)) from exc
        if self.args.q is not None:
            f = evaluate_q(f, self.args.q)
        r = osgb.reduce(f, gens)
        self.emit(print_poly(r), {"input": print_poly(f), "normal_form": print_poly(r)})
        return 0

    def hilbert(self) -> int:
        gd = self.data()
        h = analysis.hilbert(gd, self.args.max_degree)
        dims = ", ".join(f"{d}:{v}" for d, v in h.dims.items())
        self.emit(f"c = {list(h.c)}\nnumerator: {h.numerator}\ndims: {dims}", h.to_dict())
        return 0

    def koszul(self) -> int:
        self.require_valid()
        rep = analysis.koszul_check(self.m)
        d = rep.to_dict()
        part = d["supersolvable_partition"]
        lines = [
            "supersolvable partition: " + ("none" if part is None else " | ".join(_fmt_set([x - 1 for x in b]) for b in part)),
            "order: " + ",".join(map(str, d["order"])),
            f"max Groebner circuit size: {rep.max_gcircuit_size}",
            f"quadratic: {'true' if rep.quadratic else 'false'}",
        ]
        self.emit("\n".join(lines), d)
        return 0

    def indep(self) -> int:
        self.require_valid()
        other = parse_order(self.args.order_b, self.m.n) if self.args.order_b else self.order.reversed()
        ok = osgb.order_independence_check(self.m, self.order, other)
        self.emit(f"equivalent: {'true' if ok else 'false'}", {
            "order_a": [x + 1 for x in self.order.sequence],
            "order_b": [x + 1 for x in other.sequence],
            "equivalent": ok,
        })
        return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matroid", metavar="FILE", help="matroid JSON (circuits or matrix)")
    common.add_argument("--order", help='ground order, least first, e.g. "3,1,2"')
    common.add_argument("--q", type=int, default=None, help="specialise q to this integer")
    common.add_argument("--max-degree", type=int, default=6)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--truncate-gc", type=int, default=None, metavar="K",
                        help="keep only the first K Groebner circuits (negative tests)")

    p = argparse.ArgumentParser(prog="osdeform", description="Deformed Orlik-Solomon algebras of matroids.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common], help="check circuit axioms C1-C3")
    sub.add_parser("circuits", parents=[common], help="print the circuits (e.g. of a matrix)")
    sub.add_parser("gb", parents=[common], help="Groebner circuits and generators")
    sub.add_parser("check", parents=[common], help="verify the Groebner basis property")
    nf = sub.add_parser("nf", parents=[common], help="normal form of a polynomial")
    nf.add_argument("poly")
    sub.add_parser("hilbert", parents=[common], help="Hilbert series and graded dimensions")
    sub.add_parser("koszul", parents=[common], help="supersolvable order and quadratic test")
    ind = sub.add_parser("indep", parents=[common], help="compare ideals under two orders")
    ind.add_argument("--order-b", help="second order (default: reverse of --order)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.max_degree < 0 or args.jobs < 1:
        print("error: --max-degree must be >= 0 and --jobs >= 1", file=sys.stderr)
        return 2
    try:
        runner = Runner(args)
        return getattr(runner, args.command)()
    except (UsageError, NonSpecializableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
