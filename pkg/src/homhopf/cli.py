"""Command-line interface.

    homhopf check FILE --what WHAT   verify an axiom set on a .struct file
    homhopf build KIND FILE ...      build crossed / smash / biproduct
    homhopf antipode FILE            verify or solve for antipodes
    homhopf admissible FILE          canonical mapping-system conditions
    homhopf iso FILE                 the biproduct isomorphism round trip
    homhopf selftest                 re-run the corpus against its goldens

Exit codes: 0 all checks passed, 1 some check failed (a witness is
printed), 2 input error.  ``--json`` emits machine-readable reports with
stable key order.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .admissible import (
    IsoCheckFailError,
    NotAdmissibleError,
    admissible_isomorphism,
    canonical_system,
    check_admissible,
)
from .constructions import (
    BiproductSpec,
    ConditionsFailError,
    CrossedProductSpec,
    PreconditionFailError,
    biproduct_antipode,
    build_biproduct,
    check_biproduct_conditions,
    check_cocycle_conditions,
    check_twisted_comodule_cocycle,
    crossed_product,
    smash_coproduct,
)
from .convact import (
    Coaction,
    ModuleAction,
    NotConvolutionInvertible,
    check_comodule_coalgebra,
    check_hom_module,
    check_weak_module_algebra,
    convolution_inverse,
    convolve,
    convolution_unit,
)
from .exactlin import compose, identity, maps_equal
from .homcore import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopf,
    check_antipode,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
)
from .report import CheckReport
from .structfile import DocumentBuilder, StructError, parse


EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _as_bialgebra(obj):
    return obj.bialgebra if isinstance(obj, HomHopf) else obj


def _applicable_checks(what: str, obj):
    """Yield (check name, thunk) pairs applying the axiom set to a bundle."""
    is_alg = isinstance(obj, (HomAlgebra, HomBialgebra, HomHopf))
    is_coa = isinstance(obj, (HomCoalgebra, HomBialgebra, HomHopf))
    if what in ("hom-algebra", "all") and is_alg:
        alg = obj if isinstance(obj, HomAlgebra) else _as_bialgebra(obj).algebra
        yield "hom-algebra", lambda: check_hom_algebra(alg)
    if what in ("hom-coalgebra", "all") and is_coa:
        coa = obj if isinstance(obj, HomCoalgebra) \
            else _as_bialgebra(obj).coalgebra
        yield "hom-coalgebra", lambda: check_hom_coalgebra(coa)
    if what in ("hom-bialgebra", "all") and isinstance(obj, (HomBialgebra,
                                                             HomHopf)):
        yield "hom-bialgebra", \
            lambda: check_hom_bialgebra(_as_bialgebra(obj))
    if what in ("hom-hopf", "all") and isinstance(obj, HomHopf):
        yield "hom-hopf", lambda: CheckReport.combine("hom_hopf", [
            check_hom_bialgebra(obj.bialgebra), check_antipode(obj)])

    action = None
    if isinstance(obj, ModuleAction):
        action = obj
    elif isinstance(obj, CrossedProductSpec):
        action = obj.action
    elif isinstance(obj, BiproductSpec):
        action = obj.crossed.action
    if action is not None:
        if what in ("weak-module-algebra", "all"):
            yield "weak-module-algebra", \
                lambda: check_weak_module_algebra(action)
        if what in ("hom-module", "all"):
            yield "hom-module", lambda: check_hom_module(action)

    coaction = None
    if isinstance(obj, Coaction):
        coaction = obj
    elif isinstance(obj, BiproductSpec):
        coaction = obj.coaction
    if coaction is not None and what in ("comodule-coalgebra", "all"):
        yield "comodule-coalgebra", \
            lambda: check_comodule_coalgebra(coaction)

    crossed = None
    if isinstance(obj, CrossedProductSpec):
        crossed = obj
    elif isinstance(obj, BiproductSpec):
        crossed = obj.crossed
    if crossed is not None and what in ("cocycle-conditions", "all"):
        yield "cocycle-conditions", \
            lambda: check_cocycle_conditions(crossed)

    if isinstance(obj, BiproductSpec):
        if what in ("twisted-cocycle", "all"):
            yield "twisted-cocycle", \
                lambda: check_twisted_comodule_cocycle(obj)
        if what in ("biproduct-conditions", "all"):
            yield "biproduct-conditions", \
                lambda: check_biproduct_conditions(obj)


class Output:
    """Collects per-check results and renders text or JSON."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.results = []

    def add(self, bundle: str, check: str, report: CheckReport):
        self.results.append((bundle, check, report))
        if not self.as_json:
            tag = "pass" if report.passed else "FAIL"
            print(f"[{tag}] {bundle}: {check}")
            if not report.passed:
                bad = report.first_failure() or report
                w = bad.witness
                print(f"       failing identity: {bad.name}")
                if w is not None:
                    print(f"       at basis tuple ({', '.join(w.basis)})")
                    print(f"       lhs = ({', '.join(str(v) for v in w.lhs)})")
                    print(f"       rhs = ({', '.join(str(v) for v in w.rhs)})")

    def note(self, message: str):
        if not self.as_json:
            print(message)

    def finish(self, command: str, exit_code=None) -> int:
        failed = [r for _, _, r in self.results if not r.passed]
        if exit_code is None:
            exit_code = EXIT_CHECK_FAILED if failed else EXIT_OK
        if self.as_json:
            doc = {
                "command": command,
                "exit_code": exit_code,
                "results": [
                    {"bundle": b, "check": c, "report": r.as_dict()}
                    for b, c, r in self.results
                ],
            }
            print(json.dumps(doc, sort_keys=True, indent=2))
        return exit_code


def _load(path: str) -> "StructureFile":
    with open(path, "rb") as fh:
        return parse(fh.read())


def _input_error(message: str, as_json: bool, command: str) -> int:
    if as_json:
        print(json.dumps({"command": command, "exit_code": EXIT_INPUT_ERROR,
                          "error": message}, sort_keys=True, indent=2))
    else:
        print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT_ERROR


def cmd_check(args) -> int:
    out = Output(args.json)
    try:
        sf = _load(args.file)
    except (OSError, StructError, ValueError) as e:
        return _input_error(str(e), args.json, "check")
    ran = 0
    for name in sorted(sf.bundles):
        for check_name, thunk in _applicable_checks(args.what, sf.bundles[name]):
            out.add(name, check_name, thunk())
            ran += 1
    if ran == 0:
        return _input_error(
            f"no bundle in {args.file} supports check {args.what!r}",
            args.json, "check")
    return out.finish("check")


def _first_bundle(sf, kinds):
    for name in sorted(sf.bundles):
        if isinstance(sf.bundles[name], kinds):
            return name, sf.bundles[name]
    return None, None


def _with_parameters(crossed: CrossedProductSpec, m, k) -> CrossedProductSpec:
    if m is None and k is None:
        return crossed
    return CrossedProductSpec(
        algebra=crossed.algebra, hopf=crossed.hopf, action=crossed.action,
        cocycle=crossed.cocycle,
        m=crossed.m if m is None else m,
        k=crossed.k if k is None else k)


def cmd_build(args) -> int:
    out = Output(args.json)
    try:
        sf = _load(args.file)
    except (OSError, StructError, ValueError) as e:
        return _input_error(str(e), args.json, "build")

    builder = DocumentBuilder(sf.field)
    if args.kind == "crossed":
        name, spec = _first_bundle(sf, CrossedProductSpec)
        if spec is None:
            bname, bspec = _first_bundle(sf, BiproductSpec)
            name, spec = bname, bspec.crossed if bspec else None
        if spec is None:
            return _input_error("no crossed_spec bundle found", args.json,
                                "build")
        spec = _with_parameters(spec, args.m, args.k)
        algebra = crossed_product(spec)
        out.add(name, "hom-algebra", check_hom_algebra(algebra))
        builder.add_hom_algebra("built_crossed_product", algebra)
    elif args.kind == "smash":
        name, spec = _first_bundle(sf, BiproductSpec)
        if spec is None:
            return _input_error("no biproduct_spec bundle found", args.json,
                                "build")
        m = spec.crossed.m if args.m is None else args.m
        coalgebra = smash_coproduct(
            spec.coalgebra, spec.crossed.hopf_bialgebra, spec.coaction, m)
        out.add(name, "hom-coalgebra", check_hom_coalgebra(coalgebra))
        builder.add_hom_coalgebra("built_smash_coproduct", coalgebra)
    else:  # biproduct
        name, spec = _first_bundle(sf, BiproductSpec)
        if spec is None:
            return _input_error("no biproduct_spec bundle found", args.json,
                                "build")
        spec = BiproductSpec(
            crossed=_with_parameters(spec.crossed, args.m, args.k),
            coalgebra=spec.coalgebra, coaction=spec.coaction)
        try:
            built = build_biproduct(spec)
        except ConditionsFailError as e:
            out.add(name, "biproduct-conditions", e.report)
            return out.finish("build")
        out.add(name, "biproduct-conditions", built.conditions)
        out.add(name, "hom-bialgebra", built.bialgebra_check)
        builder.add_hom_bialgebra("built_biproduct", built.bialgebra)

    text = builder.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        out.note(f"wrote {args.output}")
    elif not args.json:
        print(text, end="")
    return out.finish("build")


def cmd_antipode(args) -> int:
    out = Output(args.json)
    try:
        sf = _load(args.file)
    except (OSError, StructError, ValueError) as e:
        return _input_error(str(e), args.json, "antipode")
    ran = 0
    for name in sorted(sf.bundles):
        obj = sf.bundles[name]
        if isinstance(obj, HomHopf):
            ran += 1
            out.add(name, "antipode-law", check_antipode(obj))
            try:
                solved = convolution_inverse(
                    identity(sf.field, obj.space), obj.coalgebra, obj.algebra)
                out.add(name, "antipode-unique",
                        maps_equal(solved, obj.antipode,
                                   "solved_inverse_matches_antipode"))
            except NotConvolutionInvertible:
                out.add(name, "antipode-unique",
                        CheckReport("identity_convolution_invertible", False))
        elif isinstance(obj, BiproductSpec):
            ran += 1
            hopf = obj.crossed.hopf
            s_a_name = sf.extras.get(name, {}).get("algebra_antipode")
            if isinstance(hopf, HomHopf) and s_a_name in sf.maps:
                try:
                    s = biproduct_antipode(obj, hopf.antipode,
                                           sf.maps[s_a_name])
                except PreconditionFailError as e:
                    out.add(name, "biproduct-antipode", e.report)
                    continue
                except ConditionsFailError as e:
                    out.add(name, "biproduct-conditions", e.report)
                    continue
                built = build_biproduct(obj, bypass=True).bialgebra
                e = convolution_unit(built.coalgebra, built.algebra)
                idb = identity(sf.field, built.space)
                out.add(name, "biproduct-antipode", CheckReport.combine(
                    "biproduct_antipode", [
                        maps_equal(convolve(s, idb, built.coalgebra,
                                            built.algebra), e,
                                   "antipode_left_inverse"),
                        maps_equal(convolve(idb, s, built.coalgebra,
                                            built.algebra), e,
                                   "antipode_right_inverse"),
                        maps_equal(compose(s, built.alpha),
                                   compose(built.alpha, s),
                                   "antipode_structure_commute"),
                    ]))
            else:
                try:
                    built = build_biproduct(obj)
                except ConditionsFailError as err:
                    out.add(name, "biproduct-conditions", err.report)
                    continue
                bb = built.bialgebra
                try:
                    convolution_inverse(identity(sf.field, bb.space),
                                        bb.coalgebra, bb.algebra)
                    out.add(name, "biproduct-antipode", CheckReport(
                        "identity_convolution_invertible", True))
                except NotConvolutionInvertible:
                    out.add(name, "biproduct-antipode", CheckReport(
                        "identity_convolution_invertible", False))
    if ran == 0:
        return _input_error(
            f"no hopf or biproduct bundle in {args.file}", args.json,
            "antipode")
    return out.finish("antipode")


def _biproduct_systems(sf, out, command, args):
    found = False
    for name in sorted(sf.bundles):
        obj = sf.bundles[name]
        if not isinstance(obj, BiproductSpec):
            continue
        found = True
        try:
            built = build_biproduct(obj)
        except ConditionsFailError as e:
            out.add(name, "biproduct-conditions", e.report)
            continue
        yield name, canonical_system(built)
    if not found:
        raise FileNotFoundError(
            f"no biproduct_spec bundle in {args.file}")


def cmd_admissible(args) -> int:
    out = Output(args.json)
    try:
        sf = _load(args.file)
    except (OSError, StructError, ValueError) as e:
        return _input_error(str(e), args.json, "admissible")
    try:
        for name, system in _biproduct_systems(sf, out, "admissible", args):
            out.add(name, "admissible-system", check_admissible(system))
    except FileNotFoundError as e:
        return _input_error(str(e), args.json, "admissible")
    return out.finish("admissible")


def cmd_iso(args) -> int:
    out = Output(args.json)
    try:
        sf = _load(args.file)
    except (OSError, StructError, ValueError) as e:
        return _input_error(str(e), args.json, "iso")
    try:
        for name, system in _biproduct_systems(sf, out, "iso", args):
            try:
                _, _, report = admissible_isomorphism(system)
                out.add(name, "biproduct-isomorphism", report)
            except NotAdmissibleError as e:
                out.add(name, "admissible-system", e.report)
            except IsoCheckFailError as e:
                out.add(name, "biproduct-isomorphism", e.report)
    except FileNotFoundError as e:
        return _input_error(str(e), args.json, "iso")
    return out.finish("iso")


def cmd_selftest(args) -> int:
    out = Output(args.json)
    ok, results = corpus.selftest()
    total = 0
    for entry_name in sorted(results):
        for check_name in sorted(results[entry_name]):
            expected, got = results[entry_name][check_name]
            total += 1
            matched = expected == got
            out.add(entry_name, check_name, CheckReport(
                f"golden[expected={expected}, got={got}]", matched))
    out.note(f"{total} golden checks, "
             + ("all match" if ok else "MISMATCHES FOUND"))
    return out.finish("selftest",
                      exit_code=EXIT_OK if ok else EXIT_CHECK_FAILED)


WHAT_CHOICES = [
    "hom-algebra", "hom-coalgebra", "hom-bialgebra", "hom-hopf",
    "weak-module-algebra", "hom-module", "comodule-coalgebra",
    "cocycle-conditions", "twisted-cocycle", "biproduct-conditions", "all",
]


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homhopf",
        description="Exact verification of twisted Hopf-algebraic structures "
                    "given by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify an axiom set on a .struct file")
    p.add_argument("file")
    p.add_argument("--what", choices=WHAT_CHOICES, default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("build", help="build a derived structure")
    p.add_argument("kind", choices=["crossed", "smash", "biproduct"])
    p.add_argument("file")
    p.add_argument("-m", type=int, default=None)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("antipode", help="verify or solve for antipodes")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("admissible",
                       help="check the canonical mapping system")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("iso", help="verify the biproduct isomorphism")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("selftest", help="re-run the corpus goldens")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
