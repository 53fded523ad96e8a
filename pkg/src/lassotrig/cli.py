"""Command-line interface: ``lassotrig {recover,sparsity-sweep,error-sweep,lambda-sweep}``.

Exit codes: 0 success, 2 usage error, 3 I/O error, 4 numerical domain error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .errors import ConvergenceFailure, CsvParseError, DomainError, GridMismatch, InvalidArgument
from .experiments import COMMANDS, ExperimentSpec, run
from .noise import NoiseSpec

EXIT_USAGE, EXIT_IO, EXIT_DOMAIN = 2, 3, 4


def parse_n_range(text: str) -> tuple[int, ...]:
    """``a:b:s`` -> a, a+s, ..., up to and including b."""
    try:
        parts = [int(p) for p in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad N range {text!r}, expected start:stop:step") from None
    if len(parts) == 2:
        parts.append(1)
    if len(parts) != 3 or parts[2] <= 0 or parts[0] < 1 or parts[1] < parts[0]:
        raise argparse.ArgumentTypeError(f"bad N range {text!r}, expected start:stop:step")
    start, stop, step = parts
    return tuple(range(start, stop + 1, step))


def parse_float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lassotrig", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--signal", choices=["f1", "f2", "f3"])
        src.add_argument("--input", help="samples CSV (x,value or value-only)")
        ns = p.add_mutually_exclusive_group()
        ns.add_argument("--n", type=int, help="number of equidistant nodes")
        ns.add_argument("--n-range", type=parse_n_range, help="start:stop:step, stop inclusive")
        lam = p.add_mutually_exclusive_group()
        lam.add_argument("--lambda", dest="lam", type=float, help="regularization parameter (default 0.1)")
        lam.add_argument("--lambda-grid", type=parse_float_list, help="comma-separated lambdas")
        noise = p.add_mutually_exclusive_group()
        noise.add_argument("--snr-db", type=float, help="Gaussian noise at this SNR in dB")
        noise.add_argument("--sigma", type=float, help="Gaussian noise with this standard deviation")
        p.add_argument("--seed", type=int, default=0, help="root seed (default 0)")
        p.add_argument("--repeats", type=int, default=1, help="noise realizations per point (default 1)")
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument("--plot", action="store_true", help="also write SVG plots")
        p.add_argument("--even-only", action="store_true", help="cosine-only (even) interpolation")
    return parser


def spec_from_args(args) -> ExperimentSpec:
    if args.n is not None:
        n_values = (args.n,)
    elif args.n_range is not None:
        n_values = args.n_range
    elif args.input is not None:
        n_values = ()
    else:
        raise InvalidArgument("give --n or --n-range")
    if args.lambda_grid is not None:
        lambdas = args.lambda_grid
    else:
        lambdas = (0.1 if args.lam is None else args.lam,)
    noise = None
    if args.snr_db is not None:
        noise = NoiseSpec("snr_db", args.snr_db, args.seed)
    elif args.sigma is not None:
        noise = NoiseSpec("sigma", args.sigma, args.seed)
    return ExperimentSpec(
        command=args.command,
        n_values=tuple(n_values),
        lambdas=tuple(lambdas),
        signal=args.signal,
        input_path=args.input,
        noise=noise,
        seed=args.seed,
        repeats=args.repeats,
        out_dir=args.out,
        plot=args.plot,
        even_only=args.even_only,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        spec = spec_from_args(args)
        paths = run(spec)
    except (CsvParseError, GridMismatch, OSError) as exc:
        print(f"lassotrig: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except InvalidArgument as exc:
        print(f"lassotrig: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ConvergenceFailure, FloatingPointError) as exc:
        print(f"lassotrig: numerical error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    for path in paths:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
