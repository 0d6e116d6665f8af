"""
Command-line entry point (``python -m app.main COMMAND --input FILE``).
"""

import sys
from pathlib import Path
from typing import Optional

import click

from app import __version__
from app.cli import FORMATS, RunRequest, run
from app.config import settings
from app.utils.logger import setup_logger


@click.command(context_settings={"help_option_names": ["-h", "--help"]})
@click.argument("command")
@click.option(
    "--input",
    "input_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="JSON input document.",
)
@click.option(
    "--depth",
    type=click.IntRange(min=1),
    default=settings.certificate_depth,
    show_default=True,
    help="Certificate depth N for rees.",
)
@click.option(
    "--window",
    type=click.IntRange(min=1),
    default=settings.fit_window,
    show_default=True,
    help="Fit window M for oracle commands.",
)
@click.option(
    "--format",
    "output_format",
    default=settings.output_format,
    show_default=True,
    help=f"Output format: {', '.join(FORMATS)}.",
)
@click.option("--markdown", is_flag=True, help="Shorthand for --format markdown.")
@click.option("--weighted", is_flag=True, help="Use branch-weighted forms.")
@click.version_option(__version__)
def main(
    command: str,
    input_path: Optional[Path],
    depth: int,
    window: int,
    output_format: str,
    markdown: bool,
    weighted: bool,
) -> None:
    """Run COMMAND, one of: validate, decompose, volume, mixed, minkowski, rees,
    gamma, oracle-colength, oracle-fit, oracle-tau, oracle-truncate, toric-build,
    bridge-check."""
    setup_logger(name="app", level=settings.log_level, log_format=settings.log_format)

    request = RunRequest(
        command=command,
        input_path=input_path,
        depth=depth,
        window=window,
        format="markdown" if markdown else output_format,
        weighted=weighted,
    )
    result = run(request)

    if result.output:
        click.echo(result.output, nl=False)
    if result.diagnostic:
        click.echo(result.diagnostic, err=True)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
