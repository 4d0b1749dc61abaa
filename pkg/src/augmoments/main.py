"""CLI entry point for augmoments."""

# stdlib
import argparse
import sys
from collections.abc import Sequence
from typing import Any, NoReturn

# third party
from pydantic import ValidationError

# local
from augmoments import Experiment, __version__
from augmoments.commands import commands
from augmoments.errors import UsageError
from augmoments.formatters import ConsoleFormatter, format_exception
from augmoments.loaders import list_presets
from augmoments.models.transform import TransformKind
from augmoments.utils import get_default_logger, set_verbosity

EXIT_RUNTIME = 1
EXIT_USAGE = 2


class CliParser(argparse.ArgumentParser):
    """Raises UsageError instead of printing usage and exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _float_list(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e


def _aug_list(text: str) -> list[int | str]:
    return [int(item) if item.isdigit() else item for item in text.split(",") if item]


def _run_options() -> argparse.ArgumentParser:
    """Options shared by every subcommand; unset flags stay out of the namespace so presets apply."""
    options = CliParser(add_help=False, argument_default=argparse.SUPPRESS)
    options.add_argument("--preset", "-p", help="Preset name; explicit flags override its fields")
    options.add_argument("--verbose", action="store_true", help="Debug logging and full tracebacks")
    options.add_argument("--kind", choices=[k.value for k in TransformKind], help="Transform family")
    options.add_argument("--dist", help="Parameter distribution, e.g. 'unif(-0.1,0.1)' (degrees for rotation)")
    options.add_argument("--axis", choices=["horizontal", "vertical"], help="Axis of a scalar translation")
    options.add_argument("--grid", help="HxW of the synthetic input")
    options.add_argument("--in", dest="input", help="Input PGM image")
    options.add_argument("--out", dest="output", help="Output path")
    options.add_argument("--fixture", choices=["noise", "square"], help="Synthetic input when --in is absent")
    options.add_argument("--cutoff", type=float, help="Low-pass fraction of the noise fixture")
    options.add_argument("--nodes", type=int, help="Quadrature nodes per axis")
    options.add_argument("--panel-nodes", type=int, help="Nodes per kink-aligned panel")
    options.add_argument("--no-align", dest="aligned", action="store_false", help="Plain Gauss-Legendre rules")
    options.add_argument("--analytic", action="store_true", help="Closed form where one exists")
    options.add_argument("--seed", type=int, help="Base seed")
    options.add_argument("--threads", type=int, help="Worker cap")
    options.add_argument("--k", type=int, help="Eigenvector images to export")
    options.add_argument("--rank", type=int, help="Eigenpairs kept above 96x96")
    options.add_argument("--iterations", type=int, help="Subspace iterations above 96x96")
    options.add_argument("--amplitudes", type=_float_list, help="Comma-separated amplitudes")
    options.add_argument("--n-grid", type=_int_list, help="Comma-separated Monte-Carlo sample counts")
    options.add_argument("--runs", type=int, help="Independent Monte-Carlo runs")
    options.add_argument("--outputs", type=int, help="Outputs of the random linear model")
    options.add_argument("--train-size", type=int, help="Training samples")
    options.add_argument("--test-size", type=int, help="Test samples")
    options.add_argument("--n-aug", type=_aug_list, help="Comma-separated counts, 'analytic' or 'closed_form'")
    options.add_argument("--epochs", type=int, help="Training epochs")
    options.add_argument("--lr", type=float, help="SGD step size")
    options.add_argument("--batch-size", type=int, help="Training samples per step")
    options.add_argument("--mnist-dir", help="Directory holding the MNIST IDX files")
    return options


def build_parser() -> CliParser:
    parser = CliParser(
        prog="augmoments",
        description="Exact expected images, variances and losses of image augmentation",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  augmoments expected-image --kind translation --dist 'prod(unif(-0.1,0.1),unif(-0.1,0.1))' --out mean.pgm
  augmoments variance-map --kind rotation --dist 'unif(-15,15)' --grid 48x48 --out var.pgm
  augmoments rank-sweep --preset rotation-rank-sweep
  augmoments replay mean.manifest.json
  augmoments --list-presets
        """,
    )
    parser.add_argument("--version", "-v", action="version", version=f"augmoments {__version__}")
    parser.add_argument("--list-presets", action="store_true", help="List available presets")
    subparsers = parser.add_subparsers(dest="command", parser_class=CliParser)
    options = _run_options()
    for name in commands:
        subparsers.add_parser(name, parents=[options], help=(commands[name].__doc__ or "").split("\n")[0])
    replay = subparsers.add_parser("replay", help="Run again from a saved manifest")
    replay.add_argument("manifest", help="Path to a .manifest.json")
    replay.add_argument("--verbose", action="store_true", help="Debug logging and full tracebacks")
    return parser


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "config"
    return f"{location}: {first['msg']}"


def build_experiment(args: argparse.Namespace) -> Experiment:
    """Defaults < preset frontmatter < explicit flags."""
    if args.command == "replay":
        return Experiment.from_json_file(args.manifest)
    overrides: dict[str, Any] = {
        key: value for key, value in vars(args).items() if key not in ("preset", "verbose", "list_presets")
    }
    preset = getattr(args, "preset", None)
    if preset:
        try:
            return Experiment.from_name(preset, overrides)
        except FileNotFoundError as e:
            raise UsageError(f"unknown preset {preset!r}; see --list-presets") from e
    return Experiment.from_dict(overrides)


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the exit status."""
    logger = get_default_logger()
    verbose = False
    try:
        args = build_parser().parse_args(argv)
        verbose = getattr(args, "verbose", False)
        set_verbosity(verbose)

        if args.list_presets:
            ConsoleFormatter(logger).display_table("presets", ["name", "description"], list_presets())
            return 0
        if args.command is None:
            raise UsageError("a command is required; see --help")

        experiment = build_experiment(args)
        manifest = experiment.run()
        ConsoleFormatter(logger).display_summary(experiment)
        logger.info(f"manifest: {manifest}")
        return 0
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)
    except UsageError as e:
        print(f"augmoments: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"augmoments: {_validation_message(e)}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as e:
        print(f"augmoments: {format_exception(e, run, verbose=verbose)}", file=sys.stderr)
        return EXIT_RUNTIME


def main() -> None:
    """Console script entry point."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
