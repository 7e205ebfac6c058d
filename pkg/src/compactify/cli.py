"""Command-line front end. Every command prints one JSON document."""
from __future__ import annotations

import argparse
import sys

from . import brothers, classify, oracle, orders, weights
from .cartan import highest_short_root, parse_group, parse_weight, parse_weights
from .errors import (CompactifyError, NotDominantError, NotInLatticeError, NotSimpleError,
                     ParseError, ResourceCapError, SpecError)
from .jsonio import dumps, weight_json, weights_json
from .limits import env_limits, load_config, using_limits

EXIT_OK, EXIT_PARSE, EXIT_NOT_SIMPLE, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message, "", 0)


def _group(args):
    return parse_group(args.group)


def _weight(L, text):
    return parse_weight(text, L.root_system.rank)


def _order(args, L):
    kind = args.order.replace("-", "_")
    kind = {"lambda_dominance": "lambda", "lambda_rational": "lambda_rational"}.get(kind, kind)
    if kind.startswith("lambda"):
        if args.lam is None:
            raise ParseError("lambda orders need --lam", args.order, 0)
        return orders.Order(kind, _weight(L, args.lam))
    return orders.Order(kind)


def cmd_info(args):
    L = _group(args)
    rs = L.root_system
    return {
        "group": args.group,
        "root_system": str(rs.spec),
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "cartan_det": rs.cartan_det,
        "positive_roots": [list(b) for b in rs.positive_roots],
        "highest_short_roots": [list(highest_short_root(rs, k)) for k in range(len(rs.components))],
        "lattice_order": L.order,
        "lattice_classes": weights_json(L.class_weights()),
        "is_simply_connected": L.is_simply_connected,
        "is_adjoint": L.is_adjoint,
        "is_direct_product": L.is_split(),
    }


def cmd_compare(args):
    L = _group(args)
    nu, mu = _weight(L, args.nu), _weight(L, args.mu)
    order = _order(args, L)
    return {"nu": weight_json(nu), "mu": weight_json(mu), "order": order.kind,
            "result": orders.compare(L.root_system, nu, mu, order)}


def cmd_maximal(args):
    L = _group(args)
    ws = parse_weights(args.weights, L.root_system.rank)
    order = _order(args, L)
    return {"order": order.kind, "maximal": weights_json(orders.maximal_elements(L.root_system, ws, order))}


def cmd_pi_plus(args):
    L = _group(args)
    return {"lambda": weight_json(_weight(L, args.lam)),
            "weights": weights_json(weights.pi_plus(L, _weight(L, args.lam)))}


def cmd_pi_g_plus(args):
    L = _group(args)
    return {"lambda": weight_json(_weight(L, args.lam)),
            "weights": weights_json(weights.pi_g_plus(L, _weight(L, args.lam)))}


def cmd_orbit(args):
    L = _group(args)
    lam = _weight(L, args.lam)
    return {"lambda": weight_json(lam), "weights": weights_json(weights.weyl_orbit(L.root_system, lam))}


def cmd_little_brothers(args):
    L = _group(args)
    return brothers.little_brother_report(L, _weight(L, args.lam)).to_dict(L.root_system)


def cmd_classify(args):
    L = _group(args)
    pi = parse_weights(args.pi, L.root_system.rank)
    info = classify.classify_pi(L, pi)
    if not info.is_simple:
        raise NotSimpleError("the weight set has no unique rational-dominance maximum")
    verdicts = []
    if args.question in ("normality", "all"):
        verdicts.append(classify.normality(L, pi))
    if args.question in ("factorial", "all"):
        verdicts.extend(classify.factoriality(L, pi))
    if args.question in ("smoothness", "all"):
        verdicts.append(classify.smoothness(L, pi))
    doc = {"pi": weights_json(sorted(set(pi))), "classification": info.to_dict(),
           "verdicts": [v.to_dict() for v in verdicts]}
    if len(verdicts) == 1:
        doc.update(verdicts[0].to_dict())
        if "missing" in verdicts[0].certificate:
            doc["missing"] = verdicts[0].certificate["missing"]
    return doc


def cmd_sweep(args):
    types = classify.sweep_types(args.max_rank)
    result = classify.theorem_sweep(types)
    return {"types": types, **result, "all_agree": result["cases"] == result["agree"]}


def cmd_oracle(args):
    L = _group(args)
    rs = L.root_system
    if args.oracle_cmd == "tensor":
        lam, mu = _weight(L, args.lam), _weight(L, args.mu)
        dec = oracle.tensor_decompose(rs, lam, mu)
        return {"factors": weights_json([lam, mu]),
                "components": [{"weight": weight_json(k), "multiplicity": v}
                               for k, v in dec.components.items()]}
    pi = parse_weights(args.pi, rs.rank)
    if not classify.classify_pi(L, pi).is_simple:
        raise NotSimpleError("the weight set has no unique rational-dominance maximum")
    return oracle.verify_normality_bruteforce(L, pi, args.max_n)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="compactify", description="Combinatorics of simple linear group compactifications.")
    p.add_argument("--pretty", action="store_true", help="indent the JSON output")
    p.add_argument("--config", help="key = value file setting resource caps")
    p.add_argument("--max-candidates", type=int, help="cap on enumerated weight candidates")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("group", help="group spec, e.g. C3:sc, A2xA1:gens(1,0,0), Sp(6)")
        sp.set_defaults(func=func)
        return sp

    group_cmd("info", cmd_info, "root system and lattice data")
    sp = group_cmd("compare", cmd_compare, "compare two weights")
    sp.add_argument("nu")
    sp.add_argument("mu")
    sp.add_argument("--order", default="dominance",
                    choices=["dominance", "rational", "lambda", "lambda-rational"])
    sp.add_argument("--lam", help="dominant weight for the lambda orders")
    sp = group_cmd("maximal", cmd_maximal, "maximal elements of a weight set")
    sp.add_argument("--weights", required=True, help="weights separated by ';'")
    sp.add_argument("--order", default="dominance",
                    choices=["dominance", "rational", "lambda", "lambda-rational"])
    sp.add_argument("--lam")
    for name, func in (("pi-plus", cmd_pi_plus), ("pi-g-plus", cmd_pi_g_plus), ("orbit", cmd_orbit),
                       ("little-brothers", cmd_little_brothers)):
        group_cmd(name, func, f"{name} of a dominant weight").add_argument("lam")
    sp = group_cmd("classify", cmd_classify, "verdicts for a weight set")
    sp.add_argument("--pi", required=True, help="weights separated by ';'")
    sp.add_argument("--question", default="all", choices=["normality", "smoothness", "factorial", "all"])
    sp = sub.add_parser("sweep", help="exhaustive smoothness cross-check")
    sp.add_argument("--max-rank", type=int, default=5)
    sp.set_defaults(func=cmd_sweep)
    sp = sub.add_parser("oracle", help="representation-theoretic brute force")
    osub = sp.add_subparsers(dest="oracle_cmd", required=True, parser_class=_Parser)
    t = osub.add_parser("tensor")
    t.add_argument("group")
    t.add_argument("lam")
    t.add_argument("mu")
    t.set_defaults(func=cmd_oracle)
    v = osub.add_parser("verify-normality")
    v.add_argument("group")
    v.add_argument("--pi", required=True)
    v.add_argument("--max-n", type=int, default=3)
    v.set_defaults(func=cmd_oracle)
    return p


def run(argv=None) -> tuple:
    """Execute a command; returns ``(exit_code, json_text)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    pretty = "--pretty" in argv
    try:
        args = build_parser().parse_args(argv)
        limits = env_limits()
        if args.config:
            try:
                limits = limits.with_overrides(**load_config(args.config))
            except (OSError, ValueError) as exc:
                raise ParseError(str(exc), args.config, 0) from None
        limits = limits.with_overrides(max_candidates=args.max_candidates)
        with using_limits(limits):
            doc = args.func(args)
        return EXIT_OK, dumps(doc, pretty)
    except ParseError as exc:
        if not exc.text:
            exc.text = " ".join(argv)
        return EXIT_PARSE, dumps(exc.to_dict(), pretty)
    except NotSimpleError as exc:
        return EXIT_NOT_SIMPLE, dumps({"error": "not-simple", "message": str(exc)}, pretty)
    except ResourceCapError as exc:
        return EXIT_CAP, dumps({"error": "resource-cap", "message": str(exc)}, pretty)
    except (SpecError, NotDominantError, NotInLatticeError, CompactifyError, ValueError) as exc:
        return EXIT_PARSE, dumps({"error": "invalid-input", "message": str(exc), "position": 0}, pretty)


def main(argv=None) -> int:
    code, text = run(argv)
    sys.stdout.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
