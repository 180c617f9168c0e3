"""Command line entry point.

One computation per invocation:

    monofact lset --input '{"numerical":[17,29,37,47]}'
    monofact apery --input m.json --b '[[12,0]]'
    monofact oracle-check --input '{"numerical":[3,5,7]}' --what lset --cap 60

``--input`` (and ``--b``, ``--ops``) accept either a file path or inline
JSON.  Results print as canonical JSON: sorted keys, compact separators,
integers beyond 64 bits rendered as decimal strings, one trailing
newline.  ``--format text`` prints plain lines instead.  Identical
inputs and flags produce byte-identical output.

Exit codes: 0 ok, 2 invalid input, 3 monoid not reduced, 4 infinite
answer without --limit, 5 a cross-check or oracle comparison failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closed_forms
from .apery import apery_is_finite, apery_set
from .catenary import ceq, ceq_element_bruteforce, ceq_upper_bound_numerical
from .errors import (
    CrossCheckError,
    EmptyLSet,
    InfiniteSet,
    InfiniteWithoutLimit,
    InvalidInput,
    MonoidError,
    NotReduced,
)
from .ideal import Binomial, ideals_equal, kernel_lattice, lattice_ideal, minimal_generators
from .monoid import element_from_data, presentation_from_data, validate_reduced
from .monoid import is_minimal_generating as _gens_minimal
from .oracle import EnumerationBudget, f_invariants, lset_bruteforce, monoid_elements, tset_bruteforce
from .orders import parse_order
from .same_length import (
    f2l,
    gaps,
    homogenize,
    l_set,
    l_set_complement,
    l_set_complement_is_finite,
    t_set,
)

_INT64 = 1 << 63


def _threads_from_env() -> int:
    """MF_THREADS caps internal parallelism; every stage here is
    sequential, so any valid value only acts as a cap."""
    raw = os.environ.get("MF_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InvalidInput(f"MF_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise InvalidInput("MF_THREADS must be at least 1")
    return n


def _load_json(raw: str, flag: str):
    """Path-or-inline JSON."""
    if os.path.exists(raw):
        with open(raw, "r", encoding="utf-8") as fh:
            raw = fh.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{flag} is neither a readable file nor valid JSON: {exc}") from None


def _jsonable(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= _INT64 else value
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


def _flat(value) -> str:
    return json.dumps(_jsonable(value), sort_keys=True, separators=(",", ":"))


def _render_text(value, indent=""):
    lines = []
    if isinstance(value, dict):
        if set(value) == {"plus", "minus"}:
            return [indent + Binomial(value["plus"], value["minus"]).text()]
        for key in sorted(value):
            item = value[key]
            if isinstance(item, dict) or (
                isinstance(item, list) and any(isinstance(v, (dict, list)) for v in item)
            ):
                lines.append(f"{indent}{key}:")
                lines.extend(_render_text(item, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_flat(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict) or (
                isinstance(item, list) and any(isinstance(v, (dict, list)) for v in item)
            ):
                lines.extend(_render_text(item, indent))
            else:
                lines.append(indent + _flat(item))
    else:
        lines.append(indent + _flat(value))
    return lines


def _emit(data, args) -> None:
    if args.format == "json":
        sys.stdout.write(_flat(data) + "\n")
    else:
        sys.stdout.write("\n".join(_render_text(data)) + "\n")


def _presentation(args):
    return validate_reduced(presentation_from_data(_load_json(args.input, "--input")))


def _order(args):
    return parse_order(args.order)


def _elements(p, args):
    obj = _load_json(args.b, "--b")
    if not isinstance(obj, list) or not obj:
        raise InvalidInput("--b must be a nonempty JSON list of elements")
    return [element_from_data(p, e) for e in obj]


def _ideal_payload(ideal) -> dict:
    if ideal is None:
        return {"empty": True}
    return {
        "generators": [g.to_data() for g in ideal.generators],
        "principal": ideal.is_principal,
    }


# --- subcommand handlers ---------------------------------------------------


def _cmd_validate(args):
    p = _presentation(args)
    return {
        "valid": True,
        "rank": p.rank,
        "torsion": list(p.torsion.moduli),
        "n": p.n,
        "numerical": p.is_numerical,
        "minimal": _gens_minimal(p),
        "pointing": list(p.pointing),
        "weights": list(p.weights),
    }


def _basis_payload(basis, p=None, degrees=False) -> dict:
    data = basis.to_data()
    if degrees and p is not None:
        data["degrees"] = [b.degree(p).to_data() for b in basis.elements]
    return data


def _cmd_ideal(args):
    p = _presentation(args)
    order = _order(args)
    gb = lattice_ideal(p, order=order)
    if args.minimal:
        return _basis_payload(minimal_generators(gb, p, order), p, degrees=True)
    return _basis_payload(gb)


def _cmd_tilde_ideal(args):
    p = _presentation(args)
    order = _order(args)
    lifted = homogenize(p).lifted
    gb = lattice_ideal(lifted, order=order)
    if args.minimal:
        return _basis_payload(minimal_generators(gb, lifted, order), lifted, degrees=True)
    return _basis_payload(gb)


def _cmd_kernel(args):
    return kernel_lattice(_presentation(args)).to_data()


def _cmd_apery(args):
    p = _presentation(args)
    res = apery_set(p, _elements(p, args), order=_order(args), limit=args.limit)
    return res.to_data()


def _cmd_apery_finite(args):
    p = _presentation(args)
    return {"finite": apery_is_finite(p, _elements(p, args))}


def _cmd_tset(args):
    return _ideal_payload(t_set(_presentation(args), order=_order(args)))


def _cmd_lset(args):
    return _ideal_payload(l_set(_presentation(args), order=_order(args)))


def _cmd_lset_complement(args):
    p = _presentation(args)
    return l_set_complement(p, limit=args.limit, order=_order(args)).to_data()


def _cmd_lset_finite(args):
    return {"finite": l_set_complement_is_finite(_presentation(args))}


def _cmd_principal(args):
    ideal = l_set(_presentation(args), order=_order(args))
    if ideal is None:
        raise EmptyLSet("L_S is empty")
    if ideal.is_principal:
        return {"principal": True, "generator": ideal.generators[0].to_data()}
    return {"principal": False, "generators": [g.to_data() for g in ideal.generators]}


def _cmd_f2l(args):
    p = _presentation(args)
    order = _order(args)
    value = f2l(p, order=order)
    comp = l_set_complement(p, order=order)
    missing = {e.free[0] for e in comp.elements}
    missing.update(gaps([g.free[0] for g in p.generators]))
    return {"value": value, "complement": sorted(missing)}


def _cmd_ceq(args):
    return {"value": ceq(_presentation(args), order=_order(args))}


def _cmd_ceq_bound(args):
    return {"value": ceq_upper_bound_numerical(_presentation(args))}


def _cmd_ceq_element(args):
    p = _presentation(args)
    b = element_from_data(p, _load_json(args.b, "--b"))
    return {"value": ceq_element_bruteforce(p, b, cap=args.cap)}


_FAMILY_KEYS = {
    "arithmetic": ({"m1", "e", "n"}, set()),
    "almost": ({"m1", "e", "n", "b"}, set()),
    "unique-betti": ({"b", "t", "c"}, {"f"}),
}


def _family_params(args) -> dict:
    params = _load_json(args.params, "--params")
    if not isinstance(params, dict):
        raise InvalidInput("--params must be a JSON object")
    required, optional = _FAMILY_KEYS[args.family]
    unknown = set(params) - required - optional
    if unknown:
        raise InvalidInput(f"unknown params for {args.family}: {sorted(unknown)}")
    missing = required - set(params)
    if missing:
        raise InvalidInput(f"missing params for {args.family}: {sorted(missing)}")
    return params


def _cmd_closed_form(args):
    params = _family_params(args)
    order = _order(args)
    if args.family == "arithmetic":
        fam = closed_forms.ArithmeticFamily(params["m1"], params["e"], params["n"])
        ideal = closed_forms.lset_arithmetic(fam, order=order, verified=args.verified)
        return {
            "family": "arithmetic",
            "generators": list(fam.generators),
            "lset": _ideal_payload(ideal),
        }
    if args.family == "almost":
        fam = closed_forms.AlmostArithmeticFamily(
            params["m1"], params["e"], params["n"], params["b"]
        )
        ideal = closed_forms.lset_almost_arithmetic(fam, order=order, verified=args.verified)
        # the engine value is authoritative for c_eq; the report carries
        # both formula forms so disagreements are visible, not guessed
        report = closed_forms.ceq_almost_arithmetic_report(fam, order=order)
        return {
            "family": "almost",
            "generators": list(fam.generators),
            "lset": _ideal_payload(ideal),
            "ceq": report.engine,
            "ceq_forms": report.to_data(),
        }
    fam = closed_forms.UniqueBettiShiftFamily(
        params["b"], params["t"], params["c"], params.get("f")
    )
    ideal = closed_forms.lset_unique_betti_shift(fam, order=order, verified=args.verified)
    value = closed_forms.ceq_unique_betti_shift(fam, order=order, verified=args.verified)
    return {
        "family": "unique-betti",
        "generators": list(fam.generators),
        "m_values": list(fam.m_values),
        "lset": _ideal_payload(ideal),
        "ceq": value,
    }


def _cmd_transform(args):
    p = _presentation(args)
    if not p.is_numerical:
        raise InvalidInput("transform expects a numerical presentation")
    ops = _load_json(args.ops, "--ops")
    if not isinstance(ops, list):
        raise InvalidInput("--ops must be a JSON list of [name, scalar] pairs")
    values = [g.free[0] for g in p.generators]
    stages = closed_forms.normalized_presentation_transforms(values, ops)
    order = _order(args)
    payload = []
    bases = []
    for stage in stages:
        gb = lattice_ideal(stage.lifted, order=order)
        bases.append(gb)
        payload.append(
            {
                "values": [g.free[0] for g in stage.lifted.generators],
                "ideal": _basis_payload(gb),
            }
        )
    for prev, cur in zip(bases, bases[1:]):
        if not ideals_equal(prev, cur):
            raise CrossCheckError("transform stages generate different ideals")
    return {"stages": payload, "ideals_equal": True}


def _oracle_check_sets(p, args, order):
    budget = EnumerationBudget(args.cap)
    if args.what == "lset":
        ideal = l_set(p, order=order)
        brute = lset_bruteforce(p, budget)
    else:
        ideal = t_set(p, order=order)
        brute = tset_bruteforce(p, budget)
    universe = monoid_elements(p, budget)
    engine = set() if ideal is None else {x for x in universe if ideal.contains(x)}
    missing = sorted(brute - engine, key=lambda e: e.sort_key())
    extra = sorted(engine - brute, key=lambda e: e.sort_key())
    return {
        "what": args.what,
        "cap": args.cap,
        "ok": not missing and not extra,
        "engine_count": len(engine),
        "oracle_count": len(brute),
        "missing_from_engine": [e.to_data() for e in missing],
        "extra_in_engine": [e.to_data() for e in extra],
    }


def _oracle_check_ceq(p, args, order):
    lifted = homogenize(p).lifted
    gb = lattice_ideal(lifted, order=order)
    witness = None
    if gb.is_zero_ideal:
        engine = 0
    else:
        mg = minimal_generators(gb, lifted, order)
        top = max(mg.elements, key=lambda b: b.total_degree())
        engine = top.total_degree()
        witness = p.evaluate(top.plus)
    best = 0
    for el, facs in monoid_elements(p, EnumerationBudget(args.cap)).items():
        lengths = [sum(f) for f in facs]
        if len(set(lengths)) == len(lengths):
            continue  # all length classes are singletons
        best = max(best, ceq_element_bruteforce(p, el))
    covered = witness is None or p.weight_of(witness) <= args.cap
    ok = best == engine if covered else best <= engine
    return {
        "what": "ceq",
        "cap": args.cap,
        "ok": ok,
        "engine": engine,
        "oracle": best,
        "witness_covered": covered,
    }


def _oracle_check_f(p, args, order):
    engine = f2l(p, order=order)
    oracle = f_invariants(p, 2, True, EnumerationBudget(args.cap))
    return {
        "what": "f",
        "cap": args.cap,
        "ok": engine == oracle,
        "engine": engine,
        "oracle": oracle,
    }


def _cmd_oracle_check(args):
    p = _presentation(args)
    order = _order(args)
    if args.what in ("lset", "tset"):
        data = _oracle_check_sets(p, args, order)
    elif args.what == "ceq":
        data = _oracle_check_ceq(p, args, order)
    else:
        data = _oracle_check_f(p, args, order)
    return data, (0 if data["ok"] else 5)


# --- parser ----------------------------------------------------------------


def _add_common(sp, order=True, limit=False):
    sp.add_argument("--input", required=True, help="file path or inline JSON")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    if order:
        sp.add_argument("--order", default=None, help="lex | grevlex | wgrevlex:w1,w2,...")
    if limit:
        sp.add_argument("--limit", type=int, default=None, help="truncation degree for infinite sets")


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="monofact",
        description="factorization invariants of reduced monoids, exactly",
    )
    sub = top.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="check reducedness, report the pointing data")
    _add_common(sp, order=False)

    for name, helptext in (
        ("ideal", "Groebner basis of the lattice ideal"),
        ("tilde-ideal", "Groebner basis of the length-homogenized lattice ideal"),
    ):
        sp = sub.add_parser(name, help=helptext)
        _add_common(sp)
        sp.add_argument("--minimal", action="store_true", help="trim to minimal generators")

    sp = sub.add_parser("kernel", help="Z-basis of the factorization-difference lattice")
    _add_common(sp, order=False)

    sp = sub.add_parser("apery", help="Apery set relative to --b")
    _add_common(sp, limit=True)
    sp.add_argument("--b", required=True, help="JSON list of elements (path or inline)")

    sp = sub.add_parser("apery-finite", help="cone test for Apery finiteness")
    _add_common(sp, order=False)
    sp.add_argument("--b", required=True, help="JSON list of elements (path or inline)")

    sp = sub.add_parser("tset", help="generators of the two-factorizations ideal")
    _add_common(sp)
    sp = sub.add_parser("lset", help="generators of the equal-length ideal")
    _add_common(sp)

    sp = sub.add_parser("lset-complement", help="complement of the equal-length ideal")
    _add_common(sp, limit=True)

    sp = sub.add_parser("lset-finite", help="ray test for complement finiteness")
    _add_common(sp, order=False)

    sp = sub.add_parser("principal", help="is the equal-length ideal principal")
    _add_common(sp)

    sp = sub.add_parser("f2l", help="largest integer without two equal-length factorizations")
    _add_common(sp)

    sp = sub.add_parser("ceq", help="equal catenary degree")
    _add_common(sp)

    sp = sub.add_parser("ceq-bound", help="consecutive-steps upper bound (numerical)")
    _add_common(sp, order=False)

    sp = sub.add_parser("ceq-element", help="equal catenary degree of one element")
    _add_common(sp, order=False)
    sp.add_argument("--b", required=True, help="the element (path or inline JSON)")
    sp.add_argument("--cap", type=int, default=10**6)

    sp = sub.add_parser("closed-form", help="family formulas, optionally engine-verified")
    sp.add_argument("--family", required=True, choices=("arithmetic", "almost", "unique-betti"))
    sp.add_argument("--params", required=True, help="JSON object (path or inline)")
    sp.add_argument("--verified", action="store_true", help="cross-check against the engine")
    sp.add_argument("--order", default=None)
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("transform", help="ideal-preserving rewrites of a numerical presentation")
    _add_common(sp)
    sp.add_argument("--ops", required=True, help='JSON list like [["subtract",7],["divide",3]]')

    sp = sub.add_parser("oracle-check", help="engine vs brute force under a weight cap")
    _add_common(sp)
    sp.add_argument("--what", required=True, choices=("lset", "tset", "ceq", "f"))
    sp.add_argument("--cap", type=int, required=True)

    return top


_HANDLERS = {
    "validate": _cmd_validate,
    "ideal": _cmd_ideal,
    "tilde-ideal": _cmd_tilde_ideal,
    "kernel": _cmd_kernel,
    "apery": _cmd_apery,
    "apery-finite": _cmd_apery_finite,
    "tset": _cmd_tset,
    "lset": _cmd_lset,
    "lset-complement": _cmd_lset_complement,
    "lset-finite": _cmd_lset_finite,
    "principal": _cmd_principal,
    "f2l": _cmd_f2l,
    "ceq": _cmd_ceq,
    "ceq-bound": _cmd_ceq_bound,
    "ceq-element": _cmd_ceq_element,
    "closed-form": _cmd_closed_form,
    "transform": _cmd_transform,
    "oracle-check": _cmd_oracle_check,
}


def main(argv=None) -> int:
    try:
        _threads_from_env()
        args = _parser().parse_args(argv)
        out = _HANDLERS[args.command](args)
        data, code = out if isinstance(out, tuple) else (out, 0)
        _emit(data, args)
        return code
    except NotReduced as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InfiniteWithoutLimit, InfiniteSet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CrossCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except MonoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
