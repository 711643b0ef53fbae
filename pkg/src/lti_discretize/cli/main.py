"""
Command line front end: ``lti-discretize {discretize,check,simulate}``.

Exit codes: 0 success, 1 the oracle comparison failed, 2 the input could
not be parsed or validated, 3 a numerical failure. Diagnostics go to
stderr; stdout only ever carries a command's result.
"""

import argparse
import functools
import logging
import math
import sys
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from pydantic import ValidationError

from lti_discretize.errors import DiscretizationError
from lti_discretize.model import DiscretizationOptions
from lti_discretize.oracle import compare, oracle_discretize
from lti_discretize.settings import settings
from lti_discretize.sim import simulate
from lti_discretize.vanloan import discretize
from .documents import dump_discrete_system, dump_trajectory, load_system_document

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NUMERICAL_FAILURE = 3


def _report(message: str) -> None:
    print(f"lti-discretize: {message}", file=sys.stderr)


def exit_codes(func: Callable[..., int]) -> Callable[..., int]:
    """Turn the exceptions a command raises into its documented exit code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except ArithmeticError as e:
            _report(f"numerical failure: {e}")
            return EXIT_NUMERICAL_FAILURE
        except ValidationError as e:
            _report(f"invalid argument: {e}")
            return EXIT_INVALID_INPUT
        except (DiscretizationError, ValueError) as e:
            _report(str(e))
            return EXIT_INVALID_INPUT
        except OSError as e:
            _report(f"cannot write output: {e}")
            return EXIT_INVALID_INPUT

    return wrapper


def _check_dt(dt: float) -> None:
    if not (math.isfinite(dt) and dt > 0):
        raise ValueError("dt must be positive")


def _write(text: str, output_path: Optional[str]) -> None:
    if output_path is None:
        sys.stdout.write(text)
    else:
        Path(output_path).write_text(text, encoding='utf-8')
        logger.info(f"Wrote {output_path}")


@exit_codes
def cmd_discretize(input_path: str, dt: float, output_path: Optional[str] = None) -> int:
    _check_dt(dt)
    document = load_system_document(input_path)
    opts = DiscretizationOptions(dt=dt, measurement_covariance=document.measurement_covariance)
    _write(dump_discrete_system(discretize(document.system, opts)), output_path)
    return EXIT_OK


@exit_codes
def cmd_check(input_path: str, dt: float, steps: Optional[int] = None, tol: Optional[float] = None) -> int:
    """Compare the single-exponential result with the RK4 oracle and print the report."""
    _check_dt(dt)
    steps = settings.oracle_steps if steps is None else steps
    tol = settings.compare_tolerance if tol is None else tol
    if steps < 1:
        raise ValueError("steps must be a positive integer")
    if not (math.isfinite(tol) and tol > 0):
        raise ValueError("tol must be positive")

    document = load_system_document(input_path)
    opts = DiscretizationOptions(
        dt=dt, oracle_steps=steps, compare_tolerance=tol, measurement_covariance=document.measurement_covariance
    )
    method = discretize(document.system, opts)
    reference = oracle_discretize(document.system, dt, opts.oracle_steps, opts.measurement_covariance)
    report = compare(method, reference, opts.compare_tolerance)
    sys.stdout.write(report.render())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


@exit_codes
def cmd_simulate(
        input_path: str,
        dt: float,
        steps: int,
        seed: Optional[int] = None,
        x0: Optional[Sequence[float]] = None,
        output_path: Optional[str] = None,
        u: Optional[Sequence[float]] = None,
) -> int:
    """Simulate ``steps`` samples with the input held at ``u`` (zeros by default)."""
    _check_dt(dt)
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if seed is not None and seed < 0:
        raise ValueError("seed must be non-negative")

    document = load_system_document(input_path)
    opts = DiscretizationOptions(dt=dt, measurement_covariance=document.measurement_covariance)
    dsys = discretize(document.system, opts)
    x0 = [0.0] * dsys.n if x0 is None else list(x0)
    u = [0.0] * dsys.m_u if u is None else list(u)
    if len(u) != dsys.m_u:
        raise ValueError(f"--u has {len(u)} entries but the system has {dsys.m_u} inputs")
    trajectory = simulate(dsys, x0, [u] * steps, seed=seed)
    _write(dump_trajectory(trajectory), output_path)
    return EXIT_OK


def _float_list(text: str) -> List[float]:
    if not text.strip():
        return []
    try:
        return [float(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='lti-discretize',
        description="Discretize continuous-time stochastic LTI systems with a single matrix exponential.",
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    def add_common(sub: argparse.ArgumentParser) -> None:
        sub.add_argument('input', help="Path to the JSON system document.")
        sub.add_argument('--dt', type=float, required=True, help="Sampling period.")

    sub = subparsers.add_parser('discretize', help="Write Ad, Bd, Cd, Md, Qd, Rd and dt.")
    add_common(sub)
    sub.add_argument('--out', default=None, help="Output path (default: stdout).")

    sub = subparsers.add_parser('check', help="Compare against the RK4 integration oracle.")
    add_common(sub)
    sub.add_argument('--steps', type=int, default=settings.oracle_steps,
                     help=f"Oracle RK4 steps (default: {settings.oracle_steps}).")
    sub.add_argument('--tol', type=float, default=settings.compare_tolerance,
                     help=f"Relative tolerance (default: {settings.compare_tolerance:g}).")

    sub = subparsers.add_parser('simulate', help="Simulate the discrete system and write the trajectory.")
    add_common(sub)
    sub.add_argument('--steps', type=int, required=True, help="Number of samples K.")
    sub.add_argument('--seed', type=int, default=None, help="Noise seed; omit for a noise-free run.")
    sub.add_argument('--x0', type=_float_list, default=None, help="Initial state, comma separated (default: zeros).")
    sub.add_argument('--u', type=_float_list, default=None, help="Held input, comma separated (default: zeros).")
    sub.add_argument('--out', default=None, help="Output path (default: stdout).")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(
        stream=sys.stderr,
        level=settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse has already printed usage to stderr
        return EXIT_INVALID_INPUT if e.code else EXIT_OK

    if args.command == 'discretize':
        return cmd_discretize(args.input, args.dt, args.out)
    if args.command == 'check':
        return cmd_check(args.input, args.dt, args.steps, args.tol)
    return cmd_simulate(args.input, args.dt, args.steps, args.seed, args.x0, args.out, args.u)


if __name__ == '__main__':
    sys.exit(main())
