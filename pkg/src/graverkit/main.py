"""Entry point for the graverkit command line."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from . import __version__
from .complexity import graver_complexity, primitive_identities, ppi_verify_bound
from .errors import GraverkitError, MatrixFormatError
from .families.ab import (
    ABInstance,
    ab_graver_closed_form,
    ab_lifted_witness,
    ab_relation,
    ab_ugb_triple,
    b_matrix,
)
from .fibers import edge_test, fiber_enumerate
from .graver import graver_certificate_check
from .groebner import TermOrder, groebner
from .lawrence import format_layered, in_lifted_kernel, lawrence_lift, parse_layered, relation_minimal
from .linalg.matrix import parse_matrix_rows, read_matrix, read_vector
from .linalg.vectors import positive_part
from .state.cache import Cache, cached_graver
from .utils.config import Config, Limits
from .verify import SECTIONS, STRESS_RUNS, stress, verify_paper

logger = logging.getLogger("graverkit")

UNBOUNDED_FACTOR = 1000


def _vec(z: Sequence[object]) -> str:
    return " ".join(str(v) for v in z)


def _emit(pairs: Sequence[tuple[str, object]], porcelain: bool) -> str:
    """Aligned `key  value` lines, or `key=value` with --porcelain."""
    if porcelain:
        return "".join(f"{k}={str(v).replace(' ', ',')}\n" for k, v in pairs)
    width = max((len(k) for k, _ in pairs), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in pairs)


class Session:
    """Options shared by every subcommand: caps, cache, threads, output style."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.config = Config(args.config)
        self.limits: Limits = self.config.limits(
            max_elements=args.max_elements,
            max_norm=args.max_norm,
            max_fiber=args.max_fiber,
            max_states=args.max_states,
        )
        self.threads = self.config.threads
        self.porcelain: bool = args.porcelain
        self.cache: Cache | None = None
        if not args.no_cache and self.config.cache_enabled:
            self.cache = Cache(args.cache or self.config.cache_path)

    def close(self) -> None:
        if self.cache is not None:
            self.cache.close()


# Subcommands; each returns (exit code, output text)


def cmd_graver(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    matrix = read_matrix(args.matrix)
    if args.check is not None:
        candidate, width = parse_matrix_rows(args.check.read_text())
        if width != matrix.cols:
            raise MatrixFormatError(
                f"candidate has {width} columns, matrix has {matrix.cols}", line=1, column=1
            )
        result = graver_certificate_check(matrix, candidate)
        pairs: list[tuple[str, object]] = [("certificate", "ok" if result.ok else "failed")]
        if not result.ok:
            pairs.append(("criterion", result.criterion))
            if result.pair is not None:
                pairs.append(("pair", f"{_vec(result.pair[0])} | {_vec(result.pair[1])}"))
            if result.witness is not None:
                pairs.append(("witness", _vec(result.witness)))
            pairs.append(("detail", result.detail))
        return (0 if result.ok else 1), _emit(pairs, s.porcelain)
    basis = cached_graver(matrix, s.limits, s.cache)
    if s.porcelain:
        return 0, _emit([("pairs", basis.size), ("max_norm", basis.max_norm)], True) + basis.to_text()
    return 0, basis.to_text()


def cmd_groebner(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    matrix = read_matrix(args.matrix)
    cost = read_vector(args.cost) if args.cost is not None else (0,) * matrix.cols
    order = TermOrder(cost=cost, tiebreak=args.tiebreak)
    basis = cached_graver(matrix, s.limits, s.cache)
    gb = groebner(matrix, order, s.limits, graver_basis=basis)
    if s.porcelain:
        return 0, _emit([("elements", gb.size), ("graver_pairs", basis.size)], True) + gb.to_text()
    return 0, gb.to_text()


def cmd_fiber(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    matrix = read_matrix(args.matrix)
    fiber = fiber_enumerate(matrix, read_vector(args.rhs), s.limits)
    if s.porcelain:
        return 0, _emit([("points", fiber.size)], True) + fiber.to_text()
    return 0, fiber.to_text()


def cmd_edge_test(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    matrix = read_matrix(args.matrix)
    z = read_vector(args.vector)
    fiber = fiber_enumerate(matrix, matrix.apply(positive_part(z)), s.limits)
    candidates = [read_vector(args.functional)] if args.functional is not None else []
    cert = edge_test(fiber, z, candidates)
    if cert is None:
        return 0, _emit([("result", "NOT-EDGE"), ("fiber", fiber.size)], s.porcelain)
    pairs: list[tuple[str, object]] = [
        ("result", "EDGE"),
        ("certificate", _vec(cert.functional)),
        ("value", cert.value),
        ("fiber", fiber.size),
    ]
    return 0, _emit(pairs, s.porcelain)


def cmd_lift(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    lift = lawrence_lift(read_matrix(args.matrix), args.copies)
    if args.witness is None:
        return 0, lift.matrix.to_text()
    x = parse_layered(args.witness.read_text())
    in_kernel = in_lifted_kernel(lift, x)
    pairs: list[tuple[str, object]] = [
        ("lift", f"{lift.matrix.rows}x{lift.matrix.cols}"),
        ("layers", x.copies),
        ("type", x.type),
        ("in_kernel", "yes" if in_kernel else "no"),
    ]
    return (0 if in_kernel else 1), _emit(pairs, s.porcelain)


def cmd_ab(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    inst = ABInstance(a=args.a, b=args.b)
    computed = cached_graver(inst.matrix, s.limits, s.cache)
    closed = ab_graver_closed_form(inst)
    report = graver_complexity(inst.matrix, s.limits, s.cache)
    triple = ab_ugb_triple(inst, s.limits)
    rel = ab_relation(inst)
    minimal = relation_minimal(rel)
    kernels = b_matrix(inst)
    witness, faces = ab_lifted_witness(inst, s.limits)
    if args.witness_out is not None:
        args.witness_out.write_text(format_layered(witness))

    pairs: list[tuple[str, object]] = [
        ("instance", inst.label()),
        ("normalized", f"({inst.a_norm},{inst.b_norm})"),
        ("graver", f"{computed.size} pairs"),
        ("closed_form", "match" if computed.elements == closed.elements else "MISMATCH"),
        ("g", report.g_value),
        ("expected_g", inst.complexity),
    ]
    if not inst.normalized:
        pairs.append(("raw_2(a+b)", 2 * (inst.a + inst.b)))
    for member in triple:
        status = "ok" if member.ok else "FAILED"
        pairs.append((f"ugb_{member.name}", f"{_vec(member.vector)} cert {_vec(member.functional)} {status}"))
        if member.chain:
            chain = ";".join(",".join(str(v) for v in p) for p in member.chain)
            pairs.append((f"chain_{member.name}", chain))
    pairs += [
        ("relation", f"{_vec(rel.multiplicities)} {'minimal' if minimal else 'NOT minimal'}"),
        ("witness_type", witness.type),
        ("kernels", "equal" if kernels.kernels_equal else "DIFFER"),
        ("factorization", "holds" if kernels.factorization_holds else "FAILS"),
        ("lifted_minimizers", faces.count),
    ]
    ok = (
        computed.elements == closed.elements
        and report.g_value == inst.complexity
        and all(m.ok for m in triple)
        and minimal.minimal
        and witness.type == inst.complexity
        and kernels.kernels_equal
        and kernels.factorization_holds
        and faces.count == 2
    )
    return (0 if ok else 1), _emit(pairs, s.porcelain)


def cmd_complexity(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    limits = s.limits.raised(UNBOUNDED_FACTOR) if args.unbounded else s.limits
    report = graver_complexity(read_matrix(args.matrix), limits, s.cache)
    derived = report.derived_matrix
    pairs: list[tuple[str, object]] = [
        ("g", report.g_value),
        ("graver_pairs", report.graver_size),
        ("derived", f"{derived.rows}x{derived.cols}" if derived is not None else "-"),
        ("derived_pairs", report.derived_graver_size),
        ("witness", _vec(report.witness) if report.witness is not None else "-"),
    ]
    return 0, _emit(pairs, s.porcelain)


def cmd_ppi(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    identities = primitive_identities(args.n, s.limits, s.cache)
    report = ppi_verify_bound(args.n, s.limits, s.cache)
    if s.porcelain:
        lines = "".join(f"identity={p.norm}:{p.render().replace(' ', '')}\n" for p in identities)
    else:
        lines = "".join(f"{p.norm:>4}  {p.render()}\n" for p in identities)
    summary: list[tuple[str, object]] = [
        ("identities", len(identities)),
        ("max_norm", report.max_norm),
        ("bound", report.expected),
        ("holds", "yes" if report.holds else "no"),
        ("tight_witness", "yes" if report.tight_present else "no"),
        ("summand_bound", "yes" if report.summand_bound_holds else "no"),
        ("delta_bound", "yes" if report.delta_bound_holds else "no"),
    ]
    if report.delta_counterexample is not None:
        summary.append(("delta_counterexample", report.delta_counterexample.render()))
    return 0, lines + ("" if s.porcelain else "\n") + _emit(summary, s.porcelain)


def cmd_verify_paper(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    report = verify_paper(
        sections=args.section,
        limits=s.limits,
        cache=s.cache,
        threads=s.threads,
        max_n=args.max_n,
        skip_slow=args.skip_slow,
    )
    text = report.porcelain() if s.porcelain else report.render(timings=args.timings)
    return report.exit_code, text


def cmd_stress(args: argparse.Namespace, s: Session) -> tuple[int, str]:
    if not args.confirm:
        raise GraverkitError(f"stress {args.name} can run for hours; pass --confirm to start it")
    report = stress(args.name, s.limits, s.cache)
    if s.porcelain:
        pairs: list[tuple[str, object]] = [
            ("name", report.name),
            ("completed", "yes" if report.completed else "no"),
            ("value", report.value if report.value is not None else "-"),
            ("reference", report.reference),
        ]
        return 0, _emit(pairs, True)
    return 0, report.render()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graverkit",
        description="Exact Graver bases, toric Gröbner bases, Lawrence liftings and their complexity.",
    )
    parser.add_argument("--version", action="version", version=f"graverkit {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for detail")
    parser.add_argument("--porcelain", action="store_true", help="Machine-readable key=value output")
    parser.add_argument("-o", "--output", type=Path, help="Write the result here instead of stdout")
    parser.add_argument("--config", type=Path, help="Configuration file (default ~/.config/graverkit)")
    parser.add_argument("--no-cache", action="store_true", help="Do not read or write the result cache")
    parser.add_argument("--cache", type=Path, help="Cache database path")
    caps = parser.add_argument_group("resource caps")
    caps.add_argument("--max-elements", type=int, help="Largest basis size during completion")
    caps.add_argument("--max-norm", type=int, help="Largest 1-norm of a completion candidate")
    caps.add_argument("--max-fiber", type=int, help="Largest enumerated fiber")
    caps.add_argument("--max-states", type=int, help="Largest DP layer in lifted minimization")

    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("graver", help="Graver basis of a matrix")
    p.add_argument("matrix", type=Path)
    p.add_argument("--check", type=Path, metavar="CANDIDATE", help="Validate a claimed Graver basis instead")
    p.set_defaults(func=cmd_graver)

    p = sub.add_parser("groebner", help="Reduced Gröbner basis of the toric ideal")
    p.add_argument("matrix", type=Path)
    p.add_argument("cost", type=Path, nargs="?", help="Cost vector file (default all zero)")
    p.add_argument("--tiebreak", choices=["lex", "degrevlex"], default="degrevlex")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("fiber", help="All nonnegative integer points of a fiber")
    p.add_argument("matrix", type=Path)
    p.add_argument("rhs", type=Path)
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("edge-test", help="Is [z+, z-] an edge of its fiber's convex hull")
    p.add_argument("matrix", type=Path)
    p.add_argument("vector", type=Path)
    p.add_argument("--functional", type=Path, help="Vector file with a functional to try before the LP")
    p.set_defaults(func=cmd_edge_test)

    p = sub.add_parser("lift", help="Lawrence lifting A^(N), or check a layered vector against it")
    p.add_argument("matrix", type=Path)
    p.add_argument("-N", "--copies", type=int, required=True)
    p.add_argument("--witness", type=Path, help="Layered vector file to check")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("ab", help="Checks for A_(a,b) = (1 1 1 1; 0 a b a+b)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--witness-out", type=Path, help="Write the lifted witness here")
    p.set_defaults(func=cmd_ab)

    p = sub.add_parser("complexity", help="Graver complexity g(A)")
    p.add_argument("matrix", type=Path)
    p.add_argument("--unbounded", action="store_true", help=f"Raise every cap {UNBOUNDED_FACTOR}-fold")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("ppi", help="Primitive partition identities with parts 1..n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_ppi)

    p = sub.add_parser("verify-paper", help="Run the reproduction checks")
    p.add_argument("--section", action="append", choices=list(SECTIONS), help="Repeatable; default all")
    p.add_argument("--max-n", type=int, default=7, help="Largest n for the partition identity bound")
    p.add_argument("--timings", action="store_true", help="Show wall time per claim")
    p.add_argument("--skip-slow", action="store_true", help="Skip g(A_3x3) and the x6-x8 lifted checks")
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("stress", help="Long informational runs")
    p.add_argument("name", choices=list(STRESS_RUNS))
    p.add_argument("--confirm", action="store_true", help="Required; these runs take hours")
    p.set_defaults(func=cmd_stress)
    return parser


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv and run one subcommand; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else 2
    _setup_logging(args.verbose)
    logger.debug("graverkit %s: %s", __version__, args.command)

    session: Session | None = None
    try:
        session = Session(args)
        code, text = args.func(args, session)
    except MatrixFormatError as e:
        print(f"graverkit: malformed input: {e}", file=sys.stderr)
        return 2
    except GraverkitError as e:
        print(f"graverkit: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"graverkit: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        # pydantic validation of user-supplied parameters
        print(f"graverkit: invalid input: {e}", file=sys.stderr)
        return 2
    finally:
        if session is not None:
            session.close()

    if args.output is not None:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> int:
    """Console script entry point."""
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
