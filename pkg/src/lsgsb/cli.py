"""Command-line interface for the Lyndon-Shirshov / Groebner-Shirshov kernel.

Subcommands
-----------
``lyndon list``     enumerate Lyndon-Shirshov (bracketed) words by degree
``lyndon bracket``  standard bracketing of a Lyndon-Shirshov word
``expand``          commutator expansion of a Lie polynomial
``nf``              normal form of a Lie polynomial modulo an operator identity
``gsb-check``       bounded Groebner-Shirshov verification of a rule system
``classify``        operator-identity type checker (differential / Rota-Baxter
                    / modified Rota-Baxter / raw kernel)
``irr``             irreducible basis words below a degree bound
``catalog``         the built-in operator identities

Exit status: ``0`` for a positive verdict (or plain success), ``1`` for a
negative verdict, ``2`` for usage or input errors.

All output is deterministic for fixed inputs; JSON is emitted with sorted
keys.  The ``LSGSB_THREADS`` environment variable (or ``--threads``) controls
parallelism of composition checking.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import gsb, lyndon, opi, orders, poly, rewrite, words

_VARS = words.Alphabet(("x", "y"))


class CliError(Exception):
    """Raised for malformed CLI input; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# argument helpers


def _alphabet(text):
    names = tuple(n.strip() for n in text.split(",") if n.strip())
    if not names:
        raise CliError("alphabet must list at least one letter, e.g. --alphabet x,y,z")
    try:
        return words.Alphabet(names)
    except ValueError as exc:
        raise CliError(str(exc)) from None


_PARAM_KEYS = {"λ": "lam", "lambda": "lam", "lam": "lam", "b": "b", "c": "c", "e": "e"}


def _parse_params(text):
    """Parse ``b=2,c=0,e=0`` / ``λ=-1`` into a {key: Fraction} dict."""
    params = {}
    if not text:
        return params
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep:
            raise CliError(f"malformed parameter {item!r}; expected key=value")
        if key not in _PARAM_KEYS:
            known = ", ".join(sorted(set(_PARAM_KEYS)))
            raise CliError(f"unknown parameter {key!r}; known keys: {known}")
        try:
            params[_PARAM_KEYS[key]] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise CliError(f"parameter {key!r} has non-rational value {value!r}") from None
    return params


def _diff_olpi(params):
    """Route differential-family parameters to the right builder."""
    if "lam" in params:
        extra = sorted(k for k in params if k != "lam")
        if extra:
            raise CliError(f"derivation takes only λ; got extra parameter(s) {extra}")
        return opi.derivation(params["lam"])
    if "b" in params:
        return opi.diff_family1(params["b"], params.get("c", 0), params.get("e", 0))
    if params:
        return opi.diff_family2(params.get("c", 0), params.get("e", 0))
    return opi.diff_family1(1, 1, 0)


def _resolve_olpi(name, params):
    """Map a system name plus parameters to an operator identity."""
    if name == "diff":
        return _diff_olpi(params)
    if name == "rb":
        return opi.rb_weight(params.get("lam", 0))
    if name == "modrb":
        return opi.modified_rb(params.get("lam", 0))
    try:
        entry = opi.catalog_entry(name)
    except KeyError:
        known = ", ".join(e.name for e in opi.catalog())
        raise CliError(
            f"unknown system {name!r}; use diff/rb/modrb or a catalog name: {known}"
        ) from None
    try:
        return entry.build(**params)
    except TypeError:
        accepted = ", ".join(sorted(entry.defaults)) or "(none)"
        raise CliError(f"system {name!r} accepts parameters: {accepted}") from None


def _parse_system_spec(spec):
    name, _, ptext = spec.partition(":")
    name = name.strip()
    if not name:
        raise CliError("empty system name; expected e.g. modrb:λ=-1 or rb-weight")
    return name, _parse_params(ptext)


def _make_system(olpi, alphabet, order_kind):
    """Build a validated rule system, enforcing the family/order pairing."""
    order = orders.get_order(order_kind, alphabet) if order_kind else None
    system = opi.make_system(olpi, alphabet, order)
    try:
        rewrite.validate_lead_shape(system)
    except rewrite.OrderShapeError as exc:
        need = "dt" if olpi.shape == "diff" else "dl"
        lead = "P((uv))" if olpi.shape == "diff" else "(P(u)P(v))"
        raise CliError(
            f"order {system.order.kind!r} is incompatible with {olpi.name!r}: {exc}. "
            f"{olpi.shape}-shaped identities need an order under which {lead} "
            f"leads every instance; use --order {need}."
        ) from None
    return system


def _emit_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _format_params(params):
    return ", ".join(f"{k}={v}" for k, v in sorted(params.items()))


def _describe_olpi(olpi):
    head = olpi.name
    if olpi.params:
        head += f" ({_format_params(olpi.params)})"
    return f"{head}: {olpi.describe()}"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_lyndon_list(args):
    alphabet = _alphabet(args.alphabet)
    order = orders.get_order(args.order, alphabet)
    by_degree = lyndon.lsbw_by_degree(alphabet, order, args.bound, operated=not args.depth0)
    if args.count:
        total = 0
        for degree in sorted(by_degree):
            n = len(by_degree[degree])
            total += n
            print(f"degree {degree}: {n}")
        print(f"total: {total}")
        return 0
    for degree in sorted(by_degree):
        for w in sorted(by_degree[degree], key=order.key(), reverse=True):
            print(words.format_word(w, alphabet))
    return 0


def _cmd_lyndon_bracket(args):
    alphabet = _alphabet(args.alphabet)
    order = orders.get_order(args.order, alphabet)
    try:
        w = words.parse_word(args.word, alphabet)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if not lyndon.is_lsbw(w, order):
        raise CliError(
            f"{words.format_word(w, alphabet)!r} is not a Lyndon-Shirshov bracketed word"
        )
    print(words.format_tree(lyndon.bracketing_of(w, order), alphabet))
    return 0


def _cmd_expand(args):
    alphabet = _alphabet(args.alphabet)
    order = orders.get_order(args.order, alphabet)
    try:
        f = poly.parse_lie_poly(args.poly, alphabet, order)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(poly.format_op_poly(f.expand(), alphabet, order))
    return 0


def _cmd_nf(args):
    alphabet = _alphabet(args.alphabet)
    name, params = _parse_system_spec(args.system)
    system = _make_system(_resolve_olpi(name, params), alphabet, args.order)
    try:
        f = poly.parse_lie_poly(args.poly, alphabet, system.order)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    try:
        result = system.normal_form(f, strategy=args.strategy, want_trace=args.trace)
    except rewrite.StepCapExceeded as exc:
        raise CliError(f"rewriting did not terminate within the step cap: {exc}") from None
    if args.trace:
        nf, trace = result
        for w, q, (_, u, v), coeff in trace:
            print(
                f"reduce {words.format_word(w, alphabet)} in context "
                f"{words.format_word(q, alphabet)} "
                f"via ({words.format_word(u, alphabet)}, {words.format_word(v, alphabet)}) "
                f"coeff {coeff}"
            )
    else:
        nf = result
    print(poly.format_lie_poly(nf, alphabet, system.order))
    return 0


def _report_gsb_text(report, alphabet):
    print(f"order: {report.order_kind}  alphabet: {','.join(alphabet.names)}  bound: {report.degree_bound}")
    nontrivial = 0
    for comp, ok, residue in report.entries:
        line = f"composition [{comp.kind}] at {words.format_word(comp.w, alphabet)}: "
        if ok:
            line += "trivial"
        else:
            nontrivial += 1
            line += "NONTRIVIAL residue " + poly.format_lie_poly(
                residue, alphabet, report.order
            )
        print(line)
    print(f"compositions checked: {len(report.entries)}  nontrivial: {nontrivial}")
    if report.verdict:
        print(f"verdict: GSB (Groebner-Shirshov basis at degree bound {report.degree_bound})")
    else:
        print(f"verdict: NOT a Groebner-Shirshov basis at degree bound {report.degree_bound}")


def _cmd_gsb_check(args):
    alphabet = _alphabet(args.alphabet)
    name, params = _parse_system_spec(args.system)
    olpi = _resolve_olpi(name, params)
    system = _make_system(olpi, alphabet, args.order)
    report = gsb.check_gsb(
        system,
        args.bound,
        threads=args.threads,
        with_crosschecks=args.crosschecks,
        seed=args.seed,
    )
    if args.json:
        _emit_json(report.to_json_dict())
    else:
        print(f"system: {_describe_olpi(olpi)}")
        _report_gsb_text(report, alphabet)
        if report.crosschecks:
            for key, value in sorted(report.crosschecks.items()):
                print(f"crosscheck {key}: {value}")
    return 0 if report.verdict else 1


def _classify_report(args, alphabet):
    params = _parse_params(args.params)
    if args.family == "diff":
        olpi = _diff_olpi(params)
        return opi.check_differential_type(olpi, alphabet, args.bound, threads=args.threads)
    if args.family == "rb":
        olpi = opi.rb_weight(params.get("lam", 0))
        return opi.check_rb_type(olpi, alphabet, args.bound, threads=args.threads)
    if args.family == "modrb":
        return opi.check_modified_rb(
            params.get("lam", 0), alphabet, args.bound, threads=args.threads
        )
    # raw: a user-supplied defining kernel over the formal variables x, y
    if not args.kernel:
        raise CliError("--family raw requires --kernel, a Lie polynomial in x and y")
    order = orders.get_order("dl", _VARS)
    try:
        kernel = poly.parse_lie_poly(args.kernel, _VARS, order)
    except ValueError as exc:
        raise CliError(f"cannot parse --kernel: {exc}") from None
    checker = opi.check_differential_type if args.shape == "diff" else opi.check_rb_type
    return checker(dict(kernel.terms), alphabet, args.bound, threads=args.threads)


def _cmd_classify(args):
    alphabet = _alphabet(args.alphabet)
    if args.order:
        want = "dt" if args.family == "diff" or (args.family == "raw" and args.shape == "diff") else "dl"
        if args.order != want:
            raise CliError(
                f"family {args.family!r} is checked against the {want!r} order; "
                f"--order {args.order} is incompatible (diff-shaped identities need dt, "
                f"Rota-Baxter-shaped identities need dl)."
            )
    report = _classify_report(args, alphabet)
    if args.json:
        _emit_json(report.to_json_dict())
        return 0 if report.verdict else 1
    print(f"opi: {_describe_olpi(report.olpi)}")
    print(f"order: {report.olpi.order_kind}  alphabet: {','.join(alphabet.names)}  bound: {report.degree_bound}")
    for key, value in report.conditions.items():
        print(f"condition {key}: {'pass' if value is True else 'fail' if value is False else value}")
    if report.gsb is not None:
        bad = report.gsb.counterexamples()
        print(f"compositions checked: {len(report.gsb.entries)}  nontrivial: {len(bad)}")
        for comp, residue in bad:
            print(
                f"residue [{comp.kind}] at {words.format_word(comp.w, alphabet)}: "
                + poly.format_lie_poly(residue, alphabet, report.gsb.order)
            )
    if report.verdict:
        print(f"verdict: GSB ({report.olpi.family} type at degree bound {report.degree_bound})")
        return 0
    print(f"verdict: NOT {report.olpi.family} type at degree bound {report.degree_bound}")
    return 1


def _cmd_irr(args):
    alphabet = _alphabet(args.alphabet)
    name, params = _parse_system_spec(args.system)
    olpi = _resolve_olpi(name, params)
    system = _make_system(olpi, alphabet, args.order)
    trees = gsb.enumerate_irr(system, args.bound)
    if args.json:
        _emit_json(
            {
                "system": olpi.name,
                "params": {k: str(v) for k, v in olpi.params.items()},
                "order": system.order.kind,
                "alphabet": list(alphabet.names),
                "degree_bound": args.bound,
                "count": len(trees),
                "irreducible": [words.format_tree(t, alphabet) for t in trees],
            }
        )
        return 0
    for t in trees:
        print(words.format_tree(t, alphabet))
    return 0


def _cmd_catalog(args):
    entries = opi.catalog()
    if args.json:
        _emit_json(
            [
                {
                    "name": e.name,
                    "family": e.family,
                    "order": e.order_kind,
                    "params": {k: str(v) for k, v in e.defaults.items()},
                    "pattern": opi.format_pattern(e.olpi.phi, _VARS),
                    "kernel_antisymmetric": e.kernel_antisymmetric,
                    "note": e.note,
                }
                for e in entries
            ]
        )
        return 0
    for e in entries:
        line = f"{e.name}  [{e.family}, order {e.order_kind}]"
        if e.defaults:
            line += "  defaults: " + _format_params(e.defaults)
        print(line)
        print(f"  phi(x,y) = {opi.format_pattern(e.olpi.phi, _VARS)}")
        if e.note:
            print(f"  note: {e.note}")
    return 0


# ---------------------------------------------------------------------------
# parser


_OMIT = object()


def _add_common(sub, *, alphabet="x,y,z", order=_OMIT):
    sub.add_argument("--alphabet", default=alphabet, help="comma-separated letters (default %(default)s)")
    if order is not _OMIT:
        sub.add_argument(
            "--order",
            choices=("dl", "dt"),
            default=order,
            help="monomial order "
            + ("(default %(default)s)" if order else "(default: the system's native order)"),
        )


def build_parser():
    from . import __version__
    from ._backend import BACKEND

    p = argparse.ArgumentParser(
        prog="lsgsb",
        description="Lyndon-Shirshov words and bounded Groebner-Shirshov bases "
        "in free operated Lie algebras.",
    )
    p.add_argument(
        "--version",
        action="version",
        version=f"lsgsb {__version__} ({BACKEND} backend)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    lyn = sub.add_parser("lyndon", help="Lyndon-Shirshov word utilities")
    lsub = lyn.add_subparsers(dest="lyndon_command", required=True)

    llist = lsub.add_parser("list", help="enumerate Lyndon-Shirshov bracketed words")
    llist.add_argument("--bound", type=int, required=True, help="max total degree")
    llist.add_argument("--depth0", action="store_true", help="operator-free words only")
    llist.add_argument("--count", action="store_true", help="print per-degree counts instead of words")
    _add_common(llist, alphabet="x,y", order="dl")
    llist.set_defaults(func=_cmd_lyndon_list)

    lbr = lsub.add_parser("bracket", help="standard bracketing of a Lyndon-Shirshov word")
    lbr.add_argument("--word", required=True, help='word, e.g. "x x y y x y" or "P(x y z) P(x) P(y)"')
    _add_common(lbr, order="dl")
    lbr.set_defaults(func=_cmd_lyndon_bracket)

    exp = sub.add_parser("expand", help="commutator expansion of a Lie polynomial")
    exp.add_argument("--poly", required=True, help='Lie polynomial, e.g. "x y - 2 P(x y)"')
    _add_common(exp, order="dl")
    exp.set_defaults(func=_cmd_expand)

    nf = sub.add_parser("nf", help="normal form modulo an operator identity")
    nf.add_argument("--system", required=True, help='system spec, e.g. "modrb:λ=-1" or "rb-weight:lam=1"')
    nf.add_argument("--poly", required=True, help="Lie polynomial to reduce")
    nf.add_argument("--strategy", choices=("leading", "leading-last", "smallest"),
                    default="leading", help="rewriting strategy (default %(default)s)")
    nf.add_argument("--trace", action="store_true", help="print each rewriting step")
    _add_common(nf, order=None)
    nf.set_defaults(func=_cmd_nf)

    gc = sub.add_parser("gsb-check", help="bounded Groebner-Shirshov verification")
    gc.add_argument("--system", required=True, help="system spec (see nf)")
    gc.add_argument("--bound", type=int, required=True, help="degree bound")
    gc.add_argument("--json", action="store_true", help="emit a JSON certificate")
    gc.add_argument("--crosschecks", action="store_true",
                    help="also run fork/strategy/dimension/associative crosschecks")
    gc.add_argument("--threads", type=int, default=None, help="worker threads (default: LSGSB_THREADS or 1)")
    gc.add_argument("--seed", type=int, default=0, help="seed for randomized crosschecks")
    _add_common(gc, order=None)
    gc.set_defaults(func=_cmd_gsb_check)

    cl = sub.add_parser("classify", help="operator-identity type checker")
    cl.add_argument("--family", choices=("diff", "rb", "modrb", "raw"), required=True)
    cl.add_argument("--bound", type=int, required=True, help="degree bound")
    cl.add_argument("--params", default="", help="comma-separated, e.g. b=2,c=0,e=0 or λ=-1")
    cl.add_argument("--kernel", default=None,
                    help="(raw) defining kernel as a Lie polynomial in x and y")
    cl.add_argument("--shape", choices=("diff", "rb"), default="rb",
                    help="(raw) which lead shape the kernel completes (default %(default)s)")
    cl.add_argument("--json", action="store_true", help="emit the full report as JSON")
    cl.add_argument("--threads", type=int, default=None, help="worker threads")
    cl.add_argument("--order", choices=("dl", "dt"), default=None,
                    help="must match the family's native order; rejected otherwise")
    cl.add_argument("--alphabet", default="x,y,z", help="comma-separated letters (default %(default)s)")
    cl.set_defaults(func=_cmd_classify)

    irr = sub.add_parser("irr", help="irreducible basis words below a degree bound")
    irr.add_argument("--system", required=True, help="system spec (see nf)")
    irr.add_argument("--bound", type=int, required=True, help="degree bound")
    irr.add_argument("--json", action="store_true")
    _add_common(irr, order=None)
    irr.set_defaults(func=_cmd_irr)

    cat = sub.add_parser("catalog", help="list the built-in operator identities")
    cat.add_argument("--json", action="store_true")
    cat.set_defaults(func=_cmd_catalog)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = 2
    except BrokenPipeError:
        code = 0
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
