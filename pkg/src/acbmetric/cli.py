"""Command line interface: ``acbmetric {validate,analyze,example,check}``.

Exit status: 0 when everything requested passed, 1 when the run completed
but a check or predicate failed, 2 on bad input or usage.
"""

from __future__ import annotations

import argparse
import sys

from . import predicates, ratlin
from .analysis import format_witness, format_value, run_analysis
from .description import example_sasaki5, parse_manifold, serialize_manifold
from .errors import ACBError, NotApplicable
from .manifold import Manifold
from .structure import is_cosymplectic, validate_structure

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _predicate_table(m: Manifold) -> dict:
    s = m.structure

    def par(name):
        return lambda: predicates.ricci_parallelism_report(m.nabla_rho, s)[name]

    return {
        "sasaki_like": lambda: m.sasaki,
        "cosymplectic": lambda: predicates.PredicateVerdict("cosymplectic", is_cosymplectic(m.fundamental)),
        "einstein": lambda: predicates.PredicateVerdict("einstein", m.einstein.is_einstein),
        "locally_symmetric": par("locally_symmetric"),
        "eta_parallel": par("eta_parallel"),
        "parallel_along_xi": par("parallel_along_xi"),
        "cyclic_parallel": par("cyclic_parallel"),
        "codazzi": par("codazzi"),
        "r_xi_action": lambda: predicates.r_xi_action_on_rho(m.curvature.riemann_13, m.rho, s),
        "phi_symmetry_global": lambda: predicates.ricci_phi_symmetry(m.nabla_Q, s, "global"),
        "phi_symmetry_local": lambda: predicates.ricci_phi_symmetry(m.nabla_Q, s, "local"),
        "pseudo_ricci_symmetric": lambda: predicates.recurrent_forms_solve(m.nabla_rho, m.rho, "pseudo"),
        "special_weakly_ricci_symmetric": lambda: predicates.recurrent_forms_solve(
            m.nabla_rho, m.rho, "special_weakly"),
        "q_dot_r_zero": lambda: predicates.q_dot_r_zero(m.curvature.riemann_04, m.Q),
    }


PREDICATES = (
    "sasaki_like", "cosymplectic", "einstein", "locally_symmetric", "eta_parallel",
    "parallel_along_xi", "cyclic_parallel", "codazzi", "r_xi_action", "phi_symmetry_global",
    "phi_symmetry_local", "pseudo_ricci_symmetric", "special_weakly_ricci_symmetric", "q_dot_r_zero",
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _rational(text: str):
    try:
        return ratlin.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _vector(text: str):
    try:
        return [ratlin.parse_rational(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_analysis_options(p):
    p.add_argument("--potential", action="append", type=_rational, metavar="K",
                   help="vertical potential k*xi (repeatable; default 1)")
    p.add_argument("--potential-vector", action="append", type=_vector, default=[], metavar="V",
                   help="constant potential vector, comma separated components (repeatable)")
    p.add_argument("--format", choices=("text", "machine"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="acbmetric", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the structure axioms of a description")
    p.add_argument("file", help="description file, '-' for stdin")

    p = sub.add_parser("analyze", help="run the full analysis")
    p.add_argument("file", help="description file, '-' for stdin")
    _add_analysis_options(p)

    p = sub.add_parser("example", help="built-in example family")
    p.add_argument("name", choices=("sasaki5",))
    p.add_argument("--p", type=_rational, default=ratlin.parse_rational("0"))
    p.add_argument("--q", type=_rational, default=ratlin.parse_rational("0"))
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--emit", action="store_true", help="print the description (default)")
    mode.add_argument("--analyze", action="store_true", help="analyze instead of printing")
    _add_analysis_options(p)

    p = sub.add_parser("check", help="decide one predicate")
    p.add_argument("predicate", choices=PREDICATES)
    p.add_argument("file", help="description file, '-' for stdin")
    return parser


def _analyze(desc, args, out) -> int:
    rep = run_analysis(desc, args.potential or [1], args.potential_vector)
    out.write(rep.machine() if args.format == "machine" else rep.text())
    return EXIT_OK if rep.passed else EXIT_FAILED


def _validate(desc, out) -> int:
    verdict = validate_structure(desc.structure())
    for name, chk in verdict.checks.items():
        line = f"{name}: {'PASS' if chk.passed else 'FAIL'}"
        if not chk.passed and chk.witness is not None:
            line += f"  (at {format_witness(chk.witness)})"
        out.write(line + "\n")
    out.write(f"valid: {format_value(verdict.valid)}\n")
    return EXIT_OK if verdict.valid else EXIT_FAILED


def _check(name, desc, out) -> int:
    s = desc.structure()
    verdict = validate_structure(s)
    if not verdict.valid:
        out.write(f"invalid structure: {', '.join(verdict.failures)}\n")
        return EXIT_FAILED
    try:
        v = _predicate_table(Manifold(s))[name]()
    except NotApplicable as exc:
        out.write(f"{name}: not applicable ({exc})\n")
        return EXIT_FAILED
    out.write(f"{name}: {format_value(bool(v.holds))}\n")
    if not v.holds and v.witness is not None:
        out.write(f"witness: {format_witness(v.witness)}\n")
    return EXIT_OK if v.holds else EXIT_FAILED


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "example":
            desc = example_sasaki5(args.p, args.q)
            if args.analyze:
                return _analyze(desc, args, out)
            out.write(serialize_manifold(desc))
            return EXIT_OK
        desc = parse_manifold(_read(args.file))
        if args.command == "validate":
            return _validate(desc, out)
        if args.command == "analyze":
            return _analyze(desc, args, out)
        return _check(args.predicate, desc, out)
    except (OSError, ACBError) as exc:
        print(f"acbmetric: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
