"""Command line front end: ``purefield compute|verify|periodicity``.

Exit codes: 0 success, 1 a probe found a counterexample, 2 hypothesis
violation or bad input, 3 internal assertion failure.
"""

import argparse
import json
import sys

from .basis import canonicalize, integral_basis, validate_field
from .discriminant import d_K_formula
from .errors import DomainError, HypothesisViolation
from .field import (FieldElement, disc_of_elements, is_algebraic_integer,
                    transition_determinant)
from .periodicity import period_modulus, transfer_check

EXIT_OK, EXIT_PROBE_FAILED, EXIT_HYPOTHESIS, EXIT_INTERNAL = 0, 1, 2, 3


def render_poly(num):
    """Ascending powers of θ, e.g. ``1 - θ^3 + θ^6``."""
    terms = []
    for i, c in enumerate(num):
        if not c:
            continue
        mono = "" if i == 0 else ("θ" if i == 1 else f"θ^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) or "0"


def render_element(num, den):
    poly = render_poly(num)
    if den == 1:
        return poly
    return f"({poly})/{den}" if len([c for c in num if c]) > 1 else f"{poly}/{den}"


def _choice_dict(adj):
    return {"k": adj.k, "j": adj.j, "a_prime": str(adj.a_prime), "w": str(adj.w),
            "u": str(adj.u), "z": str(adj.z)}


def build_report(n, a, canonical=False):
    field = validate_field(n, a)
    basis = integral_basis(field)
    elements = basis.elements
    dk = d_K_formula(field)
    index = transition_determinant(field, basis.profile)
    checks = {
        "oracle": all(is_algebraic_integer(x) for x in elements),
        "disc_match": disc_of_elements(elements) == dk.value,
        "index": str(index),
    }
    if canonical:
        records = [{"m": m, "den": str(den), "num": [str(c) for c in num], "choices": {}}
                   for m, num, den in canonicalize(basis)]
    else:
        records = [{"m": b.m, "den": str(b.denominator), "num": [str(c) for c in b.numerator],
                    "choices": {str(p): _choice_dict(adj) for p, adj in sorted(b.choices.items())}}
                   for b in basis.basis]
    return {
        "n": n,
        "a": a,
        "branch": basis.branch,
        "elements": records,
        "d_K": {"sign": dk.sign, "factors": {str(p): e for p, e in dk.exponents.items()}},
        "checks": checks,
    }


def _fmt_bool(b):
    return "true" if b else "false"


def report_to_text(rep):
    lines = [f"field: x^{rep['n']} - ({rep['a']})", f"n: {rep['n']}", f"a: {rep['a']}",
             f"branch: {rep['branch']}"]
    for e in rep["elements"]:
        if e["choices"]:
            ch = ";".join(f"{p}:" + ",".join(f"{k}={v}" for k, v in c.items())
                          for p, c in e["choices"].items())
        else:
            ch = "-"
        lines.append(f"element m={e['m']} den={e['den']} num={','.join(e['num'])} choices={ch}")
        lines.append(f"  gamma_{e['m']} = {render_element([int(c) for c in e['num']], int(e['den']))}")
    dk = rep["d_K"]
    lines.append(f"d_K: sign={dk['sign']:+d} factors="
                 + ",".join(f"{p}^{e}" for p, e in dk["factors"].items()))
    shown = " * ".join(f"{p}^{e}" for p, e in dk["factors"].items() if e) or "1"
    lines.append(f"  d_K = {'-' if dk['sign'] < 0 else ''}{shown}")
    c = rep["checks"]
    lines.append(f"checks: oracle={_fmt_bool(c['oracle'])} "
                 f"disc_match={_fmt_bool(c['disc_match'])} index={c['index']}")
    return "\n".join(lines) + "\n"


def parse_text_report(text):
    """Inverse of ``report_to_text``; indented display lines are skipped."""
    rep = {"elements": []}
    for line in text.splitlines():
        if not line or line.startswith(" ") or line.startswith("field:"):
            continue
        key, _, rest = line.partition(": ") if not line.startswith("element ") else ("element", "", line[8:])
        if key in ("n", "a"):
            rep[key] = int(rest)
        elif key == "branch":
            rep["branch"] = rest
        elif key == "element":
            fields = dict(part.split("=", 1) for part in rest.split(" "))
            choices = {}
            if fields["choices"] != "-":
                for block in fields["choices"].split(";"):
                    p, _, kvs = block.partition(":")
                    c = dict(kv.split("=", 1) for kv in kvs.split(","))
                    c["k"], c["j"] = int(c["k"]), int(c["j"])
                    choices[p] = c
            rep["elements"].append({"m": int(fields["m"]), "den": fields["den"],
                                    "num": fields["num"].split(","), "choices": choices})
        elif key == "d_K":
            fields = dict(part.split("=", 1) for part in rest.split(" "))
            factors = {}
            for pe in fields["factors"].split(","):
                p, _, e = pe.partition("^")
                factors[p] = int(e)
            rep["d_K"] = {"sign": int(fields["sign"]), "factors": factors}
        elif key == "checks":
            fields = dict(part.split("=", 1) for part in rest.split(" "))
            rep["checks"] = {"oracle": fields["oracle"] == "true",
                             "disc_match": fields["disc_match"] == "true",
                             "index": fields["index"]}
    order = ["n", "a", "branch", "elements", "d_K", "checks"]
    return {k: rep[k] for k in order}


def parse_element(text, field):
    """``q:c0,c1,...,c_{n-1}`` -> FieldElement; DomainError if malformed."""
    q, sep, coeffs = text.partition(":")
    if not sep:
        raise DomainError(f"element {text!r} is not of the form q:c0,...,c{field.n - 1}")
    try:
        den = int(q)
        num = [int(c) for c in coeffs.split(",")]
    except ValueError:
        raise DomainError(f"element {text!r} has non-integer entries") from None
    if den == 0:
        raise DomainError("element denominator is zero")
    if len(num) != field.n:
        raise DomainError(f"element needs exactly {field.n} coefficients, got {len(num)}")
    return FieldElement.make(field, num, den)


def run_compute(args, out):
    rep = build_report(args.n, args.a, canonical=args.canonical)
    if args.format == "json":
        out.write(json.dumps(rep, indent=2) + "\n")
    else:
        out.write(report_to_text(rep))
    return EXIT_OK


def verify_report(n, a, element=None):
    field = validate_field(n, a)
    if element is not None:
        x = parse_element(element, field)
        return {"n": n, "a": a, "element": element, "integral": is_algebraic_integer(x)}
    basis = integral_basis(field)
    elements = basis.elements
    per = [{"m": b.m, "integral": is_algebraic_integer(x)} for b, x in zip(basis.basis, elements)]
    dk = d_K_formula(field)
    disc = disc_of_elements(elements)
    return {"n": n, "a": a, "elements": per, "disc_match": disc == dk.value,
            "d_K": str(dk.value), "index": str(transition_determinant(field, basis.profile))}


def run_verify(args, out):
    rep = verify_report(args.n, args.a, args.element)
    if args.format == "json":
        out.write(json.dumps(rep, indent=2) + "\n")
        return EXIT_OK
    if "integral" in rep:
        out.write(f"element {rep['element']} integral: {_fmt_bool(rep['integral'])}\n")
        return EXIT_OK
    for e in rep["elements"]:
        out.write(f"gamma_{e['m']} oracle: {_fmt_bool(e['integral'])}\n")
    out.write(f"disc-match: {_fmt_bool(rep['disc_match'])}\n")
    out.write(f"d_K: {rep['d_K']}\n")
    out.write(f"index: {rep['index']}\n")
    return EXIT_OK


def run_periodicity(args, out):
    field = validate_field(args.n, args.a)
    rep = transfer_check(field, args.a_prime, modulus=args.modulus)
    data = {
        "n": rep.n, "a": rep.a, "a_prime": rep.a_prime, "modulus": str(rep.modulus),
        "period_modulus": str(period_modulus(rep.n)), "congruent": True,
        "forward": [{"m": m, "integral": ok} for m, ok in rep.forward],
        "backward": [{"m": m, "integral": ok} for m, ok in rep.backward],
        "min_rs_equal": rep.min_rs_equal,
        "denominators_equal": rep.denominators_equal,
        "pass": rep.passed,
    }
    if args.format == "json":
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        out.write(f"modulus: {data['modulus']}\n")
        out.write(f"congruent: true\n")
        for m, ok in rep.forward:
            out.write(f"forward gamma_{m}: {_fmt_bool(ok)}\n")
        for m, ok in rep.backward:
            out.write(f"backward gamma_{m}: {_fmt_bool(ok)}\n")
        out.write(f"min_rs_equal: {_fmt_bool(rep.min_rs_equal)}\n")
        out.write(f"denominators_equal: {_fmt_bool(rep.denominators_equal)}\n")
        out.write(f"result: {'pass' if rep.passed else 'fail'}\n")
    if rep.passed:
        return EXIT_OK
    return EXIT_PROBE_FAILED if args.modulus is not None else EXIT_INTERNAL


def make_parser():
    parser = argparse.ArgumentParser(prog="purefield",
                                     description="Integral bases of pure number fields Q(a^(1/n)).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compute", help="construct an integral basis and d_K")
    common(p)
    p.add_argument("--canonical", action="store_true", help="emit the HNF-normalized basis")
    p.set_defaults(run=run_compute)

    p = sub.add_parser("verify", help="oracle and discriminant checks")
    common(p)
    p.add_argument("--element", help='test one element, "q:c0,c1,...,c_{n-1}"')
    p.set_defaults(run=run_verify)

    p = sub.add_parser("periodicity", help="transfer check between congruent squarefree radicands")
    common(p)
    p.add_argument("--a-prime", dest="a_prime", type=int, required=True)
    p.add_argument("--modulus", type=int, default=None,
                   help="probe a modulus other than n * prod(p | n)")
    p.set_defaults(run=run_periodicity)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = make_parser().parse_args(argv)
    try:
        return args.run(args, out)
    except HypothesisViolation as e:
        if args.format == "json":
            out.write(json.dumps({"error": e.code, "reason": e.reason}) + "\n")
        err.write(f"error: {e.code}: {e.reason}\n")
        return EXIT_HYPOTHESIS
    except DomainError as e:
        err.write(f"error: bad-input: {e}\n")
        return EXIT_HYPOTHESIS
    except AssertionError as e:
        err.write(f"internal error: {e}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
