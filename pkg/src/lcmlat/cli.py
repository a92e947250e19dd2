"""Command line interface.

Every command prints a JSON report on stdout (suppressed by ``--quiet``).
Exit codes: 0 success or verdict yes, 1 verdict no, 2 bad input.
"""
from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

from . import constructions as cons
from . import coordinatize as coord
from . import homology as hom
from . import strata as st
from .export import (
    ParseError,
    SchemaError,
    dumps,
    labeling_to_dot,
    lattice_to_dot,
    load_json,
    require,
)
from .lattice_core import FiniteAtomicLattice, LatticeError, bits, from_family
from .monomial_algebra import (
    Monomial,
    MonomialIdeal,
    NonMinimalGenerators,
    SupportFamily,
    lcm_lattice,
    minimal_generators,
)


class InputError(Exception):
    pass


# -- input readers ------------------------------------------------------------------

class Inputs:
    """Loads input files and remembers their digests for the report."""

    def __init__(self):
        self.digests: dict[str, str] = {}

    def load(self, path: str) -> dict:
        p = Path(path)
        if not p.exists():
            raise InputError(f"{path}: no such file")
        self.digests[str(path)] = hashlib.sha256(p.read_bytes()).hexdigest()
        return load_json(p)

    def lattice(self, path: str, data: dict | None = None) -> FiniteAtomicLattice:
        data = self.load(path) if data is None else data
        require(data, path, "n_atoms", "elements", types={"n_atoms": int, "elements": list})
        for k, e in enumerate(data["elements"]):
            if not isinstance(e, list) or not all(isinstance(i, int) for i in e):
                raise SchemaError(path, f"elements[{k}]", "expected a list of atom indices")
        return from_family(data["elements"], data["n_atoms"])

    def ideal(self, path: str, data: dict | None = None) -> MonomialIdeal:
        data = self.load(path) if data is None else data
        require(data, path, "variables", "generators",
                types={"variables": list, "generators": list})
        for k, g in enumerate(data["generators"]):
            if not isinstance(g, dict):
                raise SchemaError(path, f"generators[{k}]", "expected an object of exponents")
            for v, e in g.items():
                if v not in data["variables"]:
                    raise SchemaError(path, f"generators[{k}].{v}", "unknown variable")
                if not isinstance(e, int) or e < 0:
                    raise SchemaError(path, f"generators[{k}].{v}", "exponent must be a nonnegative int")
        return MonomialIdeal.from_json(data)

    def labeling(self, path: str, lattice: FiniteAtomicLattice | None = None):
        data = self.load(path)
        require(data, path, "labels", types={"labels": dict})
        if lattice is None:
            if "lattice" not in data:
                raise SchemaError(path, "lattice", "missing (and no lattice file given)")
            ref = data["lattice"]
            if isinstance(ref, str):
                lattice = self.lattice(str(Path(path).parent / ref))
            else:
                lattice = self.lattice(path, ref)
        labels = {}
        for k, exps in data["labels"].items():
            try:
                p = int(k)
            except ValueError:
                raise SchemaError(path, f"labels.{k}", "element index must be an integer") from None
            if not 0 <= p < len(lattice):
                raise SchemaError(path, f"labels.{k}", "no such element")
            if not isinstance(exps, dict):
                raise SchemaError(path, f"labels.{k}", "expected an object of exponents")
            labels[p] = Monomial(exps)
        variables = data.get("variables")
        return lattice, coord.Labeling.build(lattice, labels, variables)

    def tree(self, path: str, data: dict | None = None) -> cons.Tree:
        data = self.load(path) if data is None else data
        require(data, path, "vertices", "edges", types={"vertices": int, "edges": list})
        return cons.Tree.from_json(data)

    def complex(self, path: str) -> cons.FacetComplex:
        data = self.load(path)
        if isinstance(data, dict) and "edges" in data:
            return self.tree(path, data).as_complex()
        require(data, path, "vertices", "facets", types={"vertices": list, "facets": list})
        return cons.FacetComplex.from_json(data)

    def family(self, path: str) -> SupportFamily:
        data = self.load(path)
        require(data, path, "n", "sets", types={"n": int, "sets": dict})
        return SupportFamily.from_json(data)


# -- JSON views -------------------------------------------------------------------------

def ideal_view(I: MonomialIdeal) -> dict:
    return {"ideal": str(I), "generators": I.generator_strings(), **I.to_json()}


def labeling_view(M: coord.Labeling) -> dict:
    order = M.variables.names
    return {"lattice": M.lattice.to_json(), "variables": list(order),
            "labels": {str(p): m.exponents() for p, m in M.labels.items()},
            "printed": {str(p): m.format(order) for p, m in M.labels.items()}}


def betti_view(table: hom.BettiTable) -> dict:
    return {"field": str(table.field), "totals": list(table.totals),
            "graded": [{"i": i, "element": p, "value": b}
                       for (i, p), b in sorted(table.graded.items())]}


# -- commands ----------------------------------------------------------------------------

def _lattice_and_labeling(inp: Inputs, files: list[str]):
    if len(files) == 2:
        P = inp.lattice(files[0])
        return inp.labeling(files[1], P)
    if len(files) == 1:
        return inp.labeling(files[0])
    raise InputError("expected LABELING or LATTICE LABELING")


def cmd_lcm_lattice(args, inp):
    I = inp.ideal(args.ideal)
    L = lcm_lattice(minimal_generators(I))
    order = I.variables.names
    return 0, {"lattice": L.lattice.to_json(),
               "lcms": {str(p): m.format(order) for p, m in enumerate(L.labels)}}


def cmd_coordinatize(args, inp):
    P, M = _lattice_and_labeling(inp, args.files)
    return 0, ideal_view(coord.generate_ideal(P, M))


def cmd_verify(args, inp):
    P, M = _lattice_and_labeling(inp, args.files)
    v = coord.is_coordinatization(P, M)
    order = M.variables.names
    report = {
        "verdict": "yes" if v else "no",
        "ideal": str(v.ideal),
        "induced_labels": {str(p): m.format(order) for p, m in v.induced.labels.items()},
        "c1": {"passed": v.c1.passed, "unlabeled_meet_irreducibles": list(v.c1.witnesses)},
        "c2": {"passed": v.c2.passed, "incomparable": [list(w) for w in v.c2.witnesses]},
    }
    if v.lcm_family is not None:
        report["lcm_lattice_matches"] = v.lcm_family == P.family
    if v.notes:
        report["notes"] = list(v.notes)
    return (0 if v else 1), report


def cmd_deficit(args, inp):
    I = inp.ideal(args.ideal)
    L = lcm_lattice(minimal_generators(I))
    return 0, labeling_view(coord.deficit_labeling(L))


def cmd_strata_x(args, inp):
    P, M = _lattice_and_labeling(inp, args.files)
    S = coord.x_strata(P, M, args.var)
    return 0, {"variable": S.variable, "r": S.r,
               "layers": [{"s": s, "elements": sorted(A), "unique_max": u}
                          for s, A, u in S.layers],
               "residual": sorted(S.residual)}


def cmd_construct(args, inp):
    kind = args.kind
    if kind == "nearly-scarf":
        D = inp.complex(args.input)
        P, M, I = cons.nearly_scarf(D, include_empty_face=args.include_empty_face)
        return 0, {**ideal_view(I), "labeling": labeling_view(M)}
    if kind == "phan":
        P = inp.lattice(args.input)
        M, I = cons.minimal_squarefree(P)
        return 0, {**ideal_view(I), "labeling": labeling_view(M)}
    if kind == "faridi":
        D = inp.complex(args.input)
        return 0, {**ideal_view(cons.faridi_ideal(D)), "labeling": labeling_view(cons.faridi_labeling(D))}
    if kind == "floystad-tree":
        T = inp.tree(args.input)
        flips = [f - 1 for f in args.flip]
        return 0, {**ideal_view(cons.floystad_tree_ideal(T, flips)),
                   "labeling": labeling_view(cons.floystad_coordinatization(T, flips))}
    if kind == "subtree-lattice":
        T = inp.tree(args.input)
        return 0, {"lattice": cons.subtree_lattice(T).to_json()}
    raise InputError(f"unknown construction {kind}")


def _lattice_of(inp: Inputs, path: str) -> FiniteAtomicLattice:
    data = inp.load(path)
    if isinstance(data, dict) and "generators" in data:
        return lcm_lattice(minimal_generators(inp.ideal(path, data))).lattice
    return inp.lattice(path, data)


def cmd_betti(args, inp):
    P = _lattice_of(inp, args.input)
    return 0, betti_view(hom.graded_betti(P, args.field))


def cmd_supports(args, inp):
    X = inp.complex(args.complex)
    I = inp.ideal(args.ideal)
    r = hom.supports_resolution(X, I, args.field)
    return (0 if r.supports else 1), {
        "verdict": r.status, "f_vector": list(r.f_vector), "betti_totals": list(r.betti_totals),
        "failures": [{"element": p, "lcm": m, "homology": {str(k): v for k, v in h.items()}}
                     for p, m, h in r.failures]}


def cmd_cmstar(args, inp):
    X = inp.complex(args.complex)
    F = inp.family(args.family)
    rep = hom.check_cmstar_conditions(X, F, F.n, args.d, args.field)
    return (0 if rep.passed else 1), {"verdict": "pass" if rep.passed else "fail", **rep.as_dict()}


def _family_lists(fam) -> list[list[int]]:
    return [bits(m) for m in sorted(fam, key=lambda m: (bin(m).count("1"), m))]


def universe_dot(U: st.LnUniverse, report: st.StratumReport) -> str:
    palette = ["#e6f2ff", "#ffe6e6", "#e6ffe6", "#fff5cc", "#f0e6ff", "#ffe6f7", "#e6fffa"]
    color_of = {t: palette[k % len(palette)] for k, t in enumerate(sorted(report.strata))}
    lines = [f"digraph L{U.n} {{", "  rankdir=BT;", "  node [shape=box, fontsize=9, style=filled];"]
    for i, fam in enumerate(U.families):
        extra = [m for m in _family_lists(fam) if 2 <= len(m) < U.n]
        label = " ".join("".join(str(a + 1) for a in m) for m in extra) or "-"
        t = report.totals[i]
        lines.append(f'  m{i} [label="{label}\\n{t}", fillcolor="{color_of[t]}"];')
    for a, b in U.covers:
        lines.append(f"  m{a} -> m{b} [arrowhead=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_strata(args, inp):
    if args.strata_cmd == "enum":
        U = st.enumerate_L(args.atoms, allow_five=args.allow_five, workers=args.workers)
        rep = st.betti_strata(U, args.field)
        out = rep.to_json(U)
        if args.out:
            d = Path(args.out)
            d.mkdir(parents=True, exist_ok=True)
            (d / f"L{args.atoms}_strata.json").write_text(dumps(out))
            if args.atoms <= 3:
                (d / f"L{args.atoms}.dot").write_text(universe_dot(U, rep))
        return 0, out
    if args.strata_cmd == "check-tree":
        T = inp.tree(args.tree)
        rep = st.check_tree_proposition(T, args.field, allow_six=args.allow_six)
        return (0 if rep.holds else 1), {
            "verdict": "holds" if rep.holds else "fails",
            "subtree_lattice_totals": list(rep.base_totals),
            "covers": [{"added": added, "totals": list(t), "strictly_greater": ok}
                       for added, t, ok in rep.covers]}
    if args.strata_cmd == "maximal":
        P = inp.lattice(args.lattice)
        if P.n_atoms != args.atoms:
            raise InputError(f"lattice has {P.n_atoms} atoms, --atoms says {args.atoms}")
        U = st.enumerate_L(args.atoms, allow_five=args.allow_five)
        ok, viol = st.is_maximal_in_stratum(P, U, args.field)
        report = {"verdict": "maximal" if ok else "not maximal",
                  "totals": list(hom.total_betti(P, args.field))}
        if viol is not None:
            report["violator"] = _family_lists(viol.family)
        return (0 if ok else 1), report
    raise InputError("unknown strata command")


def cmd_export_dot(args, inp):
    data = inp.load(args.files[0])
    if len(args.files) == 1 and "labels" not in data:
        return 0, lattice_to_dot(inp.lattice(args.files[0], data))
    P, M = _lattice_and_labeling(inp, args.files)
    induced = coord.induced_labeling(P, M) if args.induced else None
    return 0, labeling_to_dot(M, induced)


# -- parser --------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q (rationals), f2, or f<p>")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    common.add_argument("--quiet", action="store_true", help="no report on stdout")
    common.add_argument("--out", help="write the report (or enumeration files) here")
    common.add_argument("--timing", action="store_true", help="add elapsed time to the report")

    parser = argparse.ArgumentParser(prog="lcmlat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lcm-lattice", parents=[common], help="lcm lattice of an ideal")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_lcm_lattice)

    for name, func, help_ in (("coordinatize", cmd_coordinatize, "ideal generated by a labeling"),
                              ("verify", cmd_verify, "is a labeling a coordinatization"),
                              ("export-dot", cmd_export_dot, "Hasse diagram in DOT")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("files", nargs="+", metavar="FILE", help="[LATTICE] LABELING, or LATTICE")
        if name == "export-dot":
            p.add_argument("--induced", action="store_true", help="also show the induced labeling")
        p.set_defaults(func=func)

    p = sub.add_parser("deficit", parents=[common], help="deficit labeling of an ideal's lcm lattice")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_deficit)

    p = sub.add_parser("strata-x", parents=[common], help="layers A_s for one variable")
    p.add_argument("files", nargs="+", metavar="FILE")
    p.add_argument("--var", required=True)
    p.set_defaults(func=cmd_strata_x)

    p = sub.add_parser("construct", parents=[common], help="named constructions")
    p.add_argument("kind", choices=["nearly-scarf", "phan", "faridi", "floystad-tree",
                                    "subtree-lattice"])
    p.add_argument("input")
    p.add_argument("--include-empty-face", action="store_true")
    p.add_argument("--flip", type=int, nargs="*", default=[], help="1-based edges to reorient")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("betti", parents=[common], help="graded Betti numbers")
    p.add_argument("input", help="ideal or lattice JSON")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("supports", parents=[common], help="does a complex support the resolution")
    p.add_argument("complex")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_supports)

    p = sub.add_parser("cmstar-check", parents=[common], help="family conditions on a complex")
    p.add_argument("complex")
    p.add_argument("family")
    p.add_argument("--d", type=int, default=None, help="dimension (default: that of the complex)")
    p.set_defaults(func=cmd_cmstar)

    p = sub.add_parser("strata", help="the lattice L(n) and its Betti strata")
    ssub = p.add_subparsers(dest="strata_cmd", required=True)
    q = ssub.add_parser("enum", parents=[common])
    q.add_argument("--atoms", type=int, required=True)
    q.add_argument("--allow-five", action="store_true")
    q.add_argument("--workers", type=int, default=1)
    q = ssub.add_parser("check-tree", parents=[common])
    q.add_argument("tree")
    q.add_argument("--allow-six", action="store_true")
    q = ssub.add_parser("maximal", parents=[common])
    q.add_argument("lattice")
    q.add_argument("--atoms", type=int, required=True)
    q.add_argument("--allow-five", action="store_true")
    p.set_defaults(func=cmd_strata)
    return parser


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    inp = Inputs()
    t0 = time.perf_counter()
    try:
        hom.Field.parse(args.field)
        code, result = args.func(args, inp)
    except (ParseError, SchemaError, InputError, LatticeError, NonMinimalGenerators,
            ValueError, KeyError) as e:
        msg = str(e) if not isinstance(e, KeyError) else f"unknown name {e}"
        print(f"error: {msg}", file=sys.stderr)
        return 2
    if isinstance(result, str):
        text = result
    else:
        report = {"command": ["lcmlat"] + argv, "inputs": inp.digests, "result": result}
        if args.timing:
            report["seconds"] = round(time.perf_counter() - t0, 6)
        text = dumps(report)
    if args.out and not (args.command == "strata" and args.strata_cmd == "enum"):
        Path(args.out).write_text(text)
    if not args.quiet:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
