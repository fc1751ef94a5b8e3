"""Command-line front end.

Commands:
  qexpand NAME --order N [--json]      print a modular q-expansion
  genus FLAVOR --input FILE [...]      evaluate a genus on a manifold record
  classify --input FILE                classification report(s) as JSON
  verify [fast|full] [--json]          run the identity verification suite

Exit codes: 0 success; 1 usage or I/O error; 2 mathematical inconsistency
(a classify input inconsistent with a string manifold, or a failed verify
check).  Output is byte-deterministic for fixed inputs and flags.
"""

import argparse
import json
import sys
from fractions import Fraction

from .series import rational_to_str, DeltaEpsPoly
from .modular import Q_EXPANDABLES
from .genus import universal_elliptic_genus
from .twist import elliptic_functional
from .records import load_records
from .string24 import classify as classify_class
from .verify import run_suite

GENUS_FLAVORS = ("elliptic", "signature", "ahat", "ell1", "ell2")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "%s: error: %s\n" % (self.prog, message))


def _build_parser():
    parser = _Parser(prog="ellcob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qexpand", help="print the q-expansion of a modular object")
    p.add_argument("name", choices=sorted(Q_EXPANDABLES))
    p.add_argument("--order", type=int, default=6, help="truncate below q^N (default 6)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("genus", help="evaluate a genus on a manifold record")
    p.add_argument("flavor", choices=GENUS_FLAVORS)
    p.add_argument("--input", required=True, help="JSON manifold record file")
    p.add_argument("--order", type=int, default=2, help="q-order for ell1/ell2 (default 2)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("classify", help="classify dimension-24 records (JSON output)")
    p.add_argument("--input", required=True, help="JSON record or list-of-records file")

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("level", nargs="?", choices=("fast", "full"), default="fast")
    p.add_argument("--json", action="store_true")
    return parser


def _emit(data):
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _cmd_qexpand(args):
    if args.order < 1:
        return _usage_error("--order must be >= 1")
    series = Q_EXPANDABLES[args.name](2 * args.order)
    if args.json:
        _emit({"name": args.name, "nu_order": series.order, "terms": series.to_terms()})
    else:
        print(series.pretty())
    return 0


def _load_single_record(path):
    records = load_records(path)
    if len(records) != 1:
        raise ValueError("expected exactly one record in %s, found %d" % (path, len(records)))
    return records[0]


def _cmd_genus(args):
    record = _load_single_record(args.input)
    if record.pontryagin is None:
        raise ValueError("record %r has no pontryagin data" % record.name)
    v = record.pontryagin
    if args.order < 0:
        return _usage_error("--order must be >= 0")

    if args.flavor in ("ell1", "ell2"):
        kind = 1 if args.flavor == "ell1" else 2
        value = elliptic_functional(kind, v.k, args.order).evaluate(v)
        if args.json:
            _emit({"name": record.name, "flavor": args.flavor,
                   "nu_order": value.order, "terms": value.to_terms()})
        else:
            print(value.pretty())
        return 0

    poly = universal_elliptic_genus(v.k)
    if args.flavor == "signature":
        value = poly.specialize(1, 1).evaluate(v)
    elif args.flavor == "ahat":
        value = poly.specialize(Fraction(-1, 8), 0).evaluate(v)
    else:
        value = poly.evaluate(v)
        if not isinstance(value, DeltaEpsPoly):
            value = DeltaEpsPoly.constant(value)
    if args.json:
        if isinstance(value, DeltaEpsPoly):
            _emit({"name": record.name, "flavor": args.flavor, "terms": value.to_terms()})
        else:
            _emit({"name": record.name, "flavor": args.flavor, "value": rational_to_str(value)})
    else:
        print(str(value) if isinstance(value, DeltaEpsPoly) else rational_to_str(value))
    return 0


def _cmd_classify(args):
    records = load_records(args.input)
    reports = []
    for record in records:
        if record.dim != 24:
            raise ValueError("record %r has dim %d; classification needs dim 24"
                             % (record.name, record.dim))
        if record.pontryagin is not None:
            reports.append(classify_class(record.pontryagin, name=record.name))
        else:
            reports.append(classify_class(record.kappa, name=record.name))
    payload = [r.to_json_dict() for r in reports]
    _emit(payload[0] if len(payload) == 1 else payload)
    return 2 if any(r.error is not None for r in reports) else 0


def _cmd_verify(args):
    results = run_suite(args.level)
    if args.json:
        _emit([{"check": c.name, "status": "pass" if c.passed else "fail", "detail": c.detail}
               for c in results])
    else:
        for c in results:
            print("%s %-24s %s" % ("PASS" if c.passed else "FAIL", c.name, c.detail))
        failed = sum(1 for c in results if not c.passed)
        print("%d/%d checks passed (%s level)" % (len(results) - failed, len(results), args.level))
    return 0 if all(c.passed for c in results) else 2


def _usage_error(message):
    sys.stderr.write("ellcob: error: %s\n" % message)
    return 1


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "qexpand": _cmd_qexpand,
        "genus": _cmd_genus,
        "classify": _cmd_classify,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("ellcob: error: %s\n" % exc)
        return 1
    except ValueError as exc:
        sys.stderr.write("ellcob: error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
