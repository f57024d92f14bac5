"""Command-line front end.

JSON goes to stdout, a human-readable summary to stderr (suppress with
--json-only).  Potentially large numeric values are serialized as strings
so arbitrary-precision results survive any JSON consumer; small structural
integers (l, m, conductor) stay bare.

Exit codes: 0 computed and all self-verifications passed; 1 usage error;
2 size limit exceeded; 3 mathematical verification failure (the report
carries a machine-checkable witness).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import cohomology
from .config import norm_degree_limit
from .errors import DependentGeneratorsError, SizeLimitError, VerificationError
from .kummer import (KummerLevel, geometric_rho_image, horizontal_certificate,
                     injectivity_profile, kummer_degree, relation_lattice,
                     rho_image, sah_descent_check, vertical_certificate)
from .multgroup import (MultSubgroup, ParseError, division_group,
                        factor_rational, independence_check,
                        parse_function_field)
from .zlattice import orthogonal_complement_mod


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_gamma(spec: str, geometric: bool = False):
    """Comma-separated rationals, or function-field expressions with
    --geometric.  Zero entries are rejected; torsion (+-1) generators in
    arithmetic mode draw a warning on stderr."""
    parts = [p.strip() for p in spec.split(",")]
    if any(not p for p in parts):
        raise UsageError(f"empty generator in gamma spec {spec!r}")
    if geometric:
        return [parse_function_field(p) for p in parts]
    gens = []
    for p in parts:
        try:
            q = Fraction(p)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {p!r}: {exc}") from None
        if q == 0:
            raise UsageError("0 is not a unit of Q")
        if q in (1, -1):
            print(f"warning: generator {p} is torsion", file=sys.stderr)
        gens.append(factor_rational(q))
    return MultSubgroup(gens)


def _parse_primes(spec: str) -> list[int]:
    if ".." in spec:
        a, b = spec.split("..")
        return list(range(int(a), int(b) + 1))
    return [int(x) for x in spec.split(",")]


def _level(args) -> KummerLevel:
    if args.l is None or args.m is None:
        raise UsageError("this command needs --l and --m")
    return KummerLevel(args.l, args.m)


def _image_payload(img):
    return {"l": img.level.l, "m": img.level.m,
            "divisors": [str(d) for d in img.image.divisors],
            "index": str(img.index),
            "generators": img.image.generator_matrix.to_json()}


# ---------------------------------------------------------------------------
# command handlers: each returns (payload, verification, summary_lines)

def _cmd_factor(args):
    if args.geometric:
        elems = parse_gamma(args.gamma, geometric=True)
        payload = {"elements": [e.to_json() for e in elems]}
        checks = [{"check": "labels-monic-squarefree-coprime", "pass": True}]
        lines = [f"{e.to_json()}" for e in elems]
        return payload, checks, lines
    gamma = parse_gamma(args.gamma)
    facs = gamma.generators
    ok = all(f.value() == Fraction(p.strip())
             for f, p in zip(facs, args.gamma.split(",")))
    payload = {"factored": [f.to_str() for f in facs]}
    checks = [{"check": "reconstruction", "pass": ok}]
    lines = [f"{f.to_str()}" for f in facs]
    if not ok:
        raise VerificationError("factored form failed reconstruction",
                                witness=payload)
    return payload, checks, lines


def _cmd_independent(args):
    gamma = parse_gamma(args.gamma)
    verdict = independence_check(gamma)
    payload = {"independent": verdict.independent,
               "witness": None if verdict.witness is None
               else [str(v) for v in verdict.witness]}
    if verdict.independent:
        checks = [{"check": "full-column-rank", "pass": True}]
        lines = ["independent"]
    else:
        value = gamma.element_from_exponents(verdict.witness)
        checks = [{"check": "witness-reconstructs-to-torsion",
                   "pass": value.is_torsion()}]
        lines = [f"dependent, witness {verdict.witness}"]
    return payload, checks, lines


def _cmd_division_index(args):
    gamma = parse_gamma(args.gamma)
    rep = division_group(gamma)
    ok = all(gamma.contains(g ** n)
             for g, n in zip(rep.division_generators, rep.powers))
    payload = {"index": str(rep.index),
               "generators": [g.to_str() for g in rep.division_generators],
               "powers": [str(n) for n in rep.powers]}
    checks = [{"check": "generator-powers-in-gamma", "pass": ok}]
    lines = [f"[Gamma':Gamma] = {rep.index}",
             "Gamma' = <" + ", ".join(str(g.value())
                                      for g in rep.division_generators) + ">"]
    return payload, checks, lines


def _cmd_kummer_degree(args):
    gamma = parse_gamma(args.gamma)
    level = _level(args)
    rel = relation_lattice(gamma, level)
    img = rho_image(gamma, level)
    degree = rel.quotient_order()
    q = level.conductor
    duality = img.image.order() * rel.subgroup.order() == q ** gamma.rank
    payload = {"l": level.l, "m": level.m, "degree": str(degree)}
    checks = [{"check": "duality-image-times-relations", "pass": duality}]
    lines = [f"[Q(zeta_{q}, Gamma^(1/{q})) : Q(zeta_{q})] = {degree}"]
    return payload, checks, lines


def _cmd_rho_image(args):
    gamma = parse_gamma(args.gamma)
    level = _level(args)
    rel = relation_lattice(gamma, level)
    img = rho_image(gamma, level)
    q = level.conductor
    payload = _image_payload(img)
    checks = [
        {"check": "duality-image-times-relations",
         "pass": img.image.order() * rel.subgroup.order() == q ** gamma.rank},
        {"check": "image-is-relation-annihilator",
         "pass": orthogonal_complement_mod(img.image) == rel.subgroup},
    ]
    lines = [f"image at level {level.l}^{level.m}: divisors "
             f"{img.image.divisors}, index {img.index}"]
    return payload, checks, lines


def _cmd_horizontal(args):
    gamma = parse_gamma(args.gamma)
    if not args.primes:
        raise UsageError("horizontal needs --primes a..b")
    mmax = args.mmax or 2
    rep = horizontal_certificate(gamma, _parse_primes(args.primes), mmax)
    payload = {"division_index": str(rep.division_index), "mmax": mmax,
               "primes": [{
                   "l": e.l, "coprime": e.coprime_to_threshold,
                   "full": e.full,
                   "first_failure_m": e.first_failure_m,
                   "witness": None if e.witness is None
                   else [str(v) for v in e.witness]} for e in rep.entries]}
    checks = [{"check": "coprime-primes-surjective",
               "pass": rep.all_coprime_full()}]
    lines = [f"primes full: {[e.l for e in rep.entries if e.full]}; "
             f"exceptional: {rep.exceptional_primes()}"]
    return payload, checks, lines


def _cmd_vertical(args):
    gamma = parse_gamma(args.gamma)
    if args.l is None:
        raise UsageError("vertical needs --l")
    mmax = args.mmax or 6
    cert = vertical_certificate(gamma, args.l, mmax)
    payload = cert.to_json(gamma)
    checks = [
        {"check": "tower-reductions-contained", "pass": True},
        {"check": "stabilized-tail-equal", "pass": cert.stabilized},
    ]
    lines = [f"indices {[i for _, _, i in cert.levels]}; stabilized: "
             f"{cert.stabilized}; limit divisors {cert.limit_divisors}"]
    return payload, checks, lines


def _cmd_sah_descent(args):
    gamma = parse_gamma(args.gamma)
    if gamma.rank != 1:
        raise UsageError("sah-descent takes a single rational")
    level = _level(args)
    res = sah_descent_check(gamma.generators[0], level)
    if not res.hypothesis_holds:
        payload = {"hypothesis": "fails", "l": level.l, "m": level.m}
        checks = [{"check": "root-not-in-cyclotomic-field", "pass": True}]
        lines = ["hypothesis fails: no l^m-th root in the cyclotomic field"]
        return payload, checks, lines
    w = res.witness
    ident = w.c ** level.conductor == w.a.value() ** w.kappa
    payload = {"hypothesis": "holds", "l": level.l, "m": level.m,
               "kappa": str(w.kappa),
               "c": f"{w.c.numerator}/{w.c.denominator}"}
    checks = [{"check": "descent-identity", "pass": ident}]
    lines = [f"kappa = {w.kappa}, c = {w.c}: c^{level.conductor} "
             f"= a^{w.kappa}"]
    return payload, checks, lines


def _cmd_injectivity(args):
    gamma_spec = args.gamma
    if args.l is None:
        raise UsageError("injectivity needs --l")
    mmax = args.mmax or 4
    x = Fraction(gamma_spec)
    prof = injectivity_profile(x, args.l, mmax)
    mono = all(prof.degrees[i + 1] % prof.degrees[i] == 0
               for i in range(len(prof.degrees) - 1))
    payload = {"x": prof.x.to_str(), "l": prof.l,
               "degrees": [str(d) for d in prof.degrees],
               "strictly_increasing_from": prof.strictly_increasing_from}
    checks = [{"check": "degrees-divisibility-monotone", "pass": mono},
              {"check": "nontrivial-tail", "pass": prof.nontrivial()}]
    lines = [f"degrees {prof.degrees}; strictly increasing from "
             f"m = {prof.strictly_increasing_from}"]
    return payload, checks, lines


def _cmd_geometric(args):
    elems = parse_gamma(args.gamma, geometric=True)
    level = _level(args)
    img = geometric_rho_image(elems, level)
    q = level.conductor
    payload = {"elements": [e.to_json() for e in elems],
               **_image_payload(img)}
    checks = [{"check": "duality-image-times-relations",
               "pass": img.image.order() * (q ** img.rank // img.image.order())
               == q ** img.rank}]
    lines = [f"geometric image at {level.l}^{level.m}: divisors "
             f"{img.image.divisors}, index {img.index}"]
    return payload, checks, lines


def _group_by_name(name: str):
    for g in cohomology.groups_up_to_order(8):
        if g.name.lower() == name.lower():
            return g
    raise UsageError(f"unknown group {name!r}; catalog: "
                     + ", ".join(g.name for g in
                                 cohomology.groups_up_to_order(8)))


def _module_from_args(args, G):
    if args.order is None:
        raise UsageError("this command needs --order (cyclic module order)")
    if args.units:
        images = [int(u) for u in args.units.split(",")]
        gens = G.generators()
        if len(images) != len(gens):
            raise UsageError(f"--units must give {len(gens)} value(s), one "
                             f"per generator of {G.name}")
        for M in cohomology.all_unit_actions(G, args.order):
            if all(M.action[g][0][0] % args.order == u % args.order
                   for g, u in zip(gens, images)):
                return M
        raise UsageError("the given unit images do not extend to a "
                         "group action")
    return cohomology.trivial_module(G, (args.order,))


def _cmd_h1(args):
    if not args.group:
        raise UsageError("h1 needs --group")
    G = _group_by_name(args.group)
    M = _module_from_args(args, G)
    rep = cohomology.h1(G, M)
    payload = {"group": G.name, "orders": [str(d) for d in M.structure],
               "cocycles": str(rep.cocycle_count),
               "coboundaries": str(rep.coboundary_count),
               "invariants": [str(d) for d in rep.invariants]}
    checks = [{"check": "cocycles-equal-coboundaries-times-h1",
               "pass": rep.cocycle_count ==
               rep.coboundary_count * rep.h1_order()}]
    lines = [f"H^1({G.name}, M) invariants {rep.invariants or '(trivial)'}"]
    return payload, checks, lines


def _cmd_sah_verify(args):
    if not args.group:
        raise UsageError("sah-verify needs --group")
    G = _group_by_name(args.group)
    M = _module_from_args(args, G)
    alphas = G.center() if args.alpha is None else [args.alpha]
    results = []
    for a in alphas:
        v = cohomology.sah_verify(G, M, a)
        results.append((a, v))
        if not v.passed:
            raise VerificationError(
                "centrality identity failed",
                witness={"alpha": a, "cochain": v.witness[0]})
    payload = {"group": G.name, "orders": [str(d) for d in M.structure],
               "alphas": [str(a) for a, _ in results],
               "cocycles_checked": [str(v.cocycles_checked)
                                    for _, v in results],
               "passed": all(v.passed for _, v in results)}
    checks = [{"check": f"sah-identity-alpha-{a}", "pass": v.passed}
              for a, v in results]
    lines = [f"checked {len(results)} central element(s): all pass"]
    return payload, checks, lines


def _cmd_delta_check(args):
    gamma = parse_gamma(args.gamma)
    if args.n is None:
        raise UsageError("delta-check needs --n (prime-power conductor)")
    rep = cohomology.kummer_delta_check(args.n, gamma)
    payload = {"n": args.n, "pairing_order": str(rep.pairing_order),
               "oracle_order": str(rep.oracle_order),
               "relative_degrees": [str(d) for d in rep.relative_degrees]}
    checks = [{"check": "orders-match", "pass": rep.passed},
              {"check": "cocycles-homomorphisms",
               "pass": rep.homomorphism_checks >= 0}]
    lines = [f"pairing order {rep.pairing_order} == oracle order "
             f"{rep.oracle_order}"]
    return payload, checks, lines


_COMMANDS = {
    "factor": _cmd_factor,
    "independent": _cmd_independent,
    "division-index": _cmd_division_index,
    "kummer-degree": _cmd_kummer_degree,
    "rho-image": _cmd_rho_image,
    "horizontal": _cmd_horizontal,
    "vertical": _cmd_vertical,
    "sah-descent": _cmd_sah_descent,
    "injectivity": _cmd_injectivity,
    "geometric": _cmd_geometric,
    "h1": _cmd_h1,
    "sah-verify": _cmd_sah_verify,
    "delta-check": _cmd_delta_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="thumbtack",
                description="Exact finite-level verification of "
                            "Kummer-image openness")
    sub = p.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name, add_help=True)
        sp.add_argument("--gamma", help="comma-separated rationals, or "
                        "function-field expressions with --geometric")
        sp.add_argument("--l", type=int, help="prime of the tower")
        sp.add_argument("--m", type=int, help="level exponent")
        sp.add_argument("--mmax", type=int, help="maximal level exponent")
        sp.add_argument("--n", type=int, help="conductor / power")
        sp.add_argument("--primes", help="prime range a..b or list a,b,c")
        sp.add_argument("--geometric", action="store_true",
                        help="parse gamma as function-field elements")
        sp.add_argument("--oracle", action="store_true",
                        help="force the factorization-oracle path")
        sp.add_argument("--json-only", action="store_true",
                        help="suppress the human summary on stderr")
        sp.add_argument("--group", help="finite group from the catalog "
                        "(h1 / sah-verify)")
        sp.add_argument("--order", type=int,
                        help="cyclic module order (h1 / sah-verify)")
        sp.add_argument("--units", help="unit images of the group "
                        "generators, comma-separated")
        sp.add_argument("--alpha", type=int,
                        help="central element index (sah-verify)")
    return p


def _merge_negative_values(argv):
    """Lets --gamma -8/9 parse: argparse would read -8/9 as a flag, so
    value-taking options get joined with '=' when the value leads with -."""
    out = []
    joiners = {"--gamma", "--primes", "--units"}
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in joiners and i + 1 < len(argv) and \
                argv[i + 1].startswith("-") and len(argv[i + 1]) > 1 and \
                not argv[i + 1].startswith("--"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv) -> int:
    """Execute one command; print the JSON report; return the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_negative_values(list(argv)))
        if getattr(args, "gamma", None) is None and \
                args.command not in ("h1", "sah-verify"):
            raise UsageError(f"{args.command} needs --gamma")
        t0 = time.time()
        if args.oracle and args.command in ("kummer-degree", "rho-image"):
            # force the enumerated oracle route as a cross-check
            from .kummer import relation_lattice_enumerated
            gamma = parse_gamma(args.gamma)
            level = _level(args)
            fast = relation_lattice(gamma, level)
            slow = relation_lattice_enumerated(gamma, level)
            if fast.subgroup != slow.subgroup:
                raise VerificationError(
                    "fast path disagrees with the oracle",
                    witness={"fast": fast.subgroup.to_json(),
                             "oracle": slow.subgroup.to_json()})
        payload, checks, lines = _COMMANDS[args.command](args)
        report = {"command": args.command,
                  "result": payload,
                  "verification": checks,
                  "timing_ms": str(int((time.time() - t0) * 1000))}
        print(json.dumps(report, indent=2))
        if not args.json_only:
            for line in lines:
                print(line, file=sys.stderr)
        return 0 if all(c["pass"] for c in checks) else 3
    except UsageError as exc:
        print(json.dumps({"error": "usage", "message": str(exc)}))
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, DependentGeneratorsError, ValueError) as exc:
        if isinstance(exc, DependentGeneratorsError):
            print(json.dumps({"error": "dependent-generators",
                              "message": str(exc),
                              "witness": [str(v) for v in exc.witness]}))
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(json.dumps({"error": "usage", "message": str(exc)}))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SizeLimitError as exc:
        print(json.dumps({"error": "size-limit", "message": str(exc),
                          "limit": str(norm_degree_limit())}))
        print(f"size limit: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(json.dumps({"error": "verification-failure",
                          "message": str(exc),
                          "witness": _json_safe(exc.witness)}))
        print(f"VERIFICATION FAILURE: {exc}", file=sys.stderr)
        return 3


def _json_safe(obj):
    try:
        json.dumps(obj)
        return obj
    except TypeError:
        return repr(obj)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
