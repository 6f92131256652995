"""Command-line interface.

Exit status: 0 success, 1 refusal (code not self-orthogonal), 2 usage
error, 3 budget exceeded. ``--format`` defaults to ``$QCYCLIC_FORMAT`` or
``json``.
"""
import argparse
import json
import os
import sys

from . import gf4
from .cyclic import CyclicCodeSpec, code_from_zeros, cyclotomic_cosets
from .errors import BudgetError, CodingError, NotSelfOrthogonalError
from .field import Basis, polynomial_basis
from .image import image_code, self_orthogonality_report
from .quantum import bch_quantum_spec, quantum_from_image, render_table, table1_rows
from .weights import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_ENUM,
    bounded_weight_dual_search,
    min_weight_enumerate,
    weight_distribution,
)

FORMAT_ENV = "QCYCLIC_FORMAT"


class UsageError(Exception):
    pass


def parse_set(text, n):
    if text.strip() == "":
        return frozenset()
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from None
    if len(set(values)) != len(values):
        raise UsageError(f"duplicate entries in {text!r}")
    bad = [v for v in values if not 0 <= v < n]
    if bad:
        raise UsageError(f"entries {bad} outside 0..{n - 1}")
    return frozenset(values)


def parse_basis(text, field):
    if text in (None, "poly"):
        return polynomial_basis(field)
    if not text.startswith("custom:"):
        raise UsageError("--basis must be 'poly' or 'custom:<rows>'")
    return Basis.from_rows(field, text[len("custom:"):].split(","))


def _spec(args):
    if (args.zeros is None) == (args.nonzeros is None):
        raise UsageError("give exactly one of --zeros / --nonzeros")
    if args.zeros is not None:
        return CyclicCodeSpec(args.m, args.n, parse_set(args.zeros, args.n))
    return CyclicCodeSpec.from_nonzeros(args.m, args.n, parse_set(args.nonzeros, args.n))


def _fmt_set(s):
    return "{" + ",".join(map(str, sorted(s))) + "}"


def cmd_cosets(args):
    part = cyclotomic_cosets(args.n, args.q)
    text = " ".join(_fmt_set(c) for c in part.cosets) + "\n"
    return part.to_json(), text


def cmd_code(args):
    code = code_from_zeros(_spec(args))
    data = code.to_json()
    text = (f"({code.n},{code.k}) cyclic code over GF(4^{code.m})\n"
            f"zeros    {_fmt_set(code.zeros)}\n"
            f"nonzeros {_fmt_set(code.nonzeros)}\n"
            f"g(x)     {data['generator']}\n")
    return data, text


def cmd_check(args):
    code = code_from_zeros(_spec(args))
    basis = parse_basis(args.basis, code.field) if code.m > 1 else None
    report = self_orthogonality_report(code, basis)
    out = {"code": code.spec.to_json(), "report": report.to_json()}
    lines = [f"matrix check     {report.matrix_check}",
             f"dagger criterion {report.theorem4_check}",
             f"coset criterion  {report.corollary_check}"]
    lines += [f"{k:<16} {v}" for k, v in report.details.items()]
    if not report.matrix_check:
        raise NotSelfOrthogonalError("code is not hermitian self-orthogonal", report)
    return out, "\n".join(lines) + "\n"


def cmd_image(args):
    code = code_from_zeros(_spec(args))
    image = image_code(code, parse_basis(args.basis, code.field))
    data = image.to_json()
    text = f"({image.n},{image.k}) GF(4) image\n" + "".join(r + "\n" for r in data["rows"])
    return data, text


def cmd_quantum(args):
    spec = _spec(args)
    budget = dict(max_enum=args.max_enum, max_weight=args.max_weight,
                  max_candidates=args.max_candidates)
    if spec.m == 1:
        params = bch_quantum_spec(spec.n, spec.zeros, **budget)
    else:
        basis = parse_basis(args.basis, spec.field)
        params = quantum_from_image(spec.m, spec.n, spec.nonzeros, basis, **budget)
    return params.to_json(), f"{params.label} ({params.d_status})\n"


def cmd_table1(args):
    rows = table1_rows(args.m, max_delta=args.max_delta, verify_distance=args.verify,
                       max_enum=args.max_enum, max_weight=args.max_weight,
                       max_candidates=args.max_candidates)
    return [p.to_json() for p in rows], render_table(rows)


def cmd_distance(args):
    code = code_from_zeros(_spec(args))
    linear = code.as_linear() if code.m == 1 else image_code(code, parse_basis(args.basis, code.field))
    out = {"n": linear.n, "k": linear.k}
    lines = [f"({linear.n},{linear.k}) GF(4) code"]
    if args.max_weight is None:
        dist = weight_distribution(linear, args.max_enum)
        d, witness = min_weight_enumerate(linear, args.max_enum)
        out.update(min_weight=d, witness=gf4.to_string(witness) if witness is not None else None,
                   weight_distribution=dist.to_json())
        lines.append(f"minimum weight {d}")
    else:
        result = bounded_weight_dual_search(linear, args.max_weight, args.max_candidates)
        out["dual_search"] = result.to_json()
        if result.found:
            lines.append(f"dual-minus-code weight {result.weight}")
        else:
            lines.append(f"no dual-minus-code word of weight <= {result.w_max}")
    return out, "\n".join(lines) + "\n"


COMMANDS = {
    "cosets": cmd_cosets,
    "code": cmd_code,
    "check": cmd_check,
    "image": cmd_image,
    "quantum": cmd_quantum,
    "table1": cmd_table1,
    "distance": cmd_distance,
}


def build_parser():
    fmt_default = os.environ.get(FORMAT_ENV, "json")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=fmt_default)

    code_args = argparse.ArgumentParser(add_help=False)
    code_args.add_argument("--m", type=int, required=True, help="extension degree of the code field")
    code_args.add_argument("--n", type=int, required=True, help="code length")
    code_args.add_argument("--zeros", help="comma-separated zero set")
    code_args.add_argument("--nonzeros", help="comma-separated nonzero set")
    code_args.add_argument("--basis", default="poly", help="'poly' or 'custom:<row>,<row>,...'")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--max-enum", type=int, default=DEFAULT_MAX_ENUM,
                        help="largest number of codewords to enumerate")
    budget.add_argument("--max-weight", type=int, default=None,
                        help="weight limit for the bounded dual search")
    budget.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES,
                        help="candidate limit for the bounded dual search")

    parser = argparse.ArgumentParser(prog="qcyclic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("cosets", parents=[common], help="cyclotomic cosets mod n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=4)
    sub.add_parser("code", parents=[common, code_args], help="build a cyclic code")
    sub.add_parser("check", parents=[common, code_args], help="self-orthogonality report")
    sub.add_parser("image", parents=[common, code_args], help="GF(4) image generator matrix")
    sub.add_parser("quantum", parents=[common, code_args, budget], help="[[n,k,d]] parameters")
    sub.add_parser("distance", parents=[common, code_args, budget], help="minimum weights")
    p = sub.add_parser("table1", parents=[common, budget], help="Reed-Solomon table rows")
    p.add_argument("--m", type=int, required=True, choices=(2, 3, 4))
    p.add_argument("--max-delta", type=int, default=None)
    p.add_argument("--verify", action=argparse.BooleanOptionalAction, default=None,
                   help="compute exact distances (default: only for m=2)")
    return parser


def _emit(data, text, fmt, stream):
    if fmt == "json":
        stream.write(json.dumps(data, indent=2) + "\n")
    else:
        stream.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        data, text = COMMANDS[args.command](args)
    except NotSelfOrthogonalError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        report = exc.report.to_json() if exc.report is not None else {}
        _emit({"refused": str(exc), "report": report},
              "".join(f"{k}: {v}\n" for k, v in report.items()), args.format, sys.stdout)
        return 1
    except BudgetError as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return 3
    except (UsageError, CodingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(data, text, args.format, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
