"""
Command dispatch: parse the input document, call the library, render the report.
"""

import json
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, Field, ValidationError

from app.cli.formatting import render_csv, render_json, render_markdown
from app.cli.models import (
    COMMANDS,
    FORMATS,
    BridgeDocument,
    ConfigDocument,
    OracleDocument,
    RunRequest,
    ToricDocument,
)
from app.config import settings
from app.core.divisor import QDivisor
from app.core.exceptional import ExceptionalConfig, validate_config
from app.errors import (
    CliError,
    FileNotFound,
    InputError,
    InternalInvariantViolation,
    SchemaError,
    UnknownCommand,
    UnsupportedFormat,
    ZariskiError,
)
from app.multiplicity import mixed_form, polynomial_from_form, volume, weighted_mixed, weighted_volume
from app.oracle import (
    bridge_check,
    colength,
    colength_sequence,
    filtration_ideal,
    limit_fit,
    subadditivity_violations,
    tau_sequence,
    toric_config,
    truncate,
)
from app.oracle.fitting import sequence_frame
from app.theorem_checks import gamma, minkowski_report, rees_check
from app.utils.logger import get_logger
from app.utils.rationals import format_rational
from app.zariski import decompose

logger = get_logger(__name__)

CSV_COMMANDS = ("oracle-fit", "oracle-tau", "oracle-truncate")


class RunResult(BaseModel):
    """Outcome of one command: exit code, rendered report, one-line diagnostic."""

    exit_code: int = Field(..., description="Process exit code")
    output: str = Field(default="", description="Rendered report for stdout")
    diagnostic: Optional[str] = Field(default=None, description="Line for stderr")


@dataclass
class Report:
    document: dict
    frame: Optional[pd.DataFrame] = None
    exit_code: int = 0
    diagnostic: Optional[str] = None


# Config commands


def _config_input(raw: dict, need: int = 0, exact: bool = False):
    doc = ConfigDocument.model_validate(raw)
    divisors = doc.to_divisors()
    if exact and len(divisors) != need:
        raise SchemaError(f"Expected exactly {need} divisors, got {len(divisors)}")
    if len(divisors) < need:
        raise SchemaError(f"Expected at least {need} divisor(s), got {len(divisors)}")
    return doc.to_config(), divisors


def _validate(raw: dict, request: RunRequest) -> Report:
    config, _ = _config_input(raw)
    report = validate_config(config)
    document = report.to_dict()
    document["curves"] = list(config.curve_labels)
    if report.valid:
        return Report(document)
    first = report.violations[0]
    return Report(document, exit_code=1, diagnostic=f"{first.code}: {first}")


def _decompose(raw: dict, request: RunRequest) -> Report:
    config, divisors = _config_input(raw, need=1)
    return Report(
        {
            "curves": list(config.curve_labels),
            "decompositions": [decompose(config, d).to_dict() for d in divisors],
        }
    )


def _volume(raw: dict, request: RunRequest) -> Report:
    config, divisors = _config_input(raw, need=1)
    compute: Callable[[ExceptionalConfig, QDivisor], object] = (
        weighted_volume if request.weighted else volume
    )
    return Report(
        {
            "curves": list(config.curve_labels),
            "volumes": [
                {"D": d.to_strings(), "volume": format_rational(compute(config, d))}
                for d in divisors
            ],
            "weighted": request.weighted,
        }
    )


def _mixed(raw: dict, request: RunRequest) -> Report:
    config, divisors = _config_input(raw, need=1)
    form = weighted_mixed(config, divisors) if request.weighted else mixed_form(config, divisors)
    return Report(
        {
            "curves": list(config.curve_labels),
            "form": form.to_dict(),
            "polynomial": polynomial_from_form(form).to_dict(),
        }
    )


def _minkowski(raw: dict, request: RunRequest) -> Report:
    config, (d1, d2) = _config_input(raw, need=2, exact=True)
    return Report(minkowski_report(config, d1, d2, weighted=request.weighted).to_dict())


def _rees(raw: dict, request: RunRequest) -> Report:
    config, (d1, d2) = _config_input(raw, need=2, exact=True)
    report = rees_check(config, d1, d2, depth=request.depth, weighted=request.weighted)
    return Report(report.to_dict())


def _gamma(raw: dict, request: RunRequest) -> Report:
    config, divisors = _config_input(raw, need=1)
    return Report(
        {
            "candidates": [
                {"D": d.to_strings(), **gamma(config, d).to_dict()} for d in divisors
            ]
        }
    )


# Oracle commands


def _oracle_colength(raw: dict, request: RunRequest) -> Report:
    doc = OracleDocument.model_validate(raw)
    if doc.n is None:
        raise SchemaError("oracle-colength needs the index n")
    spec = doc.to_spec()
    ideal = filtration_ideal(spec, doc.n)
    return Report(
        {
            "spec": spec.to_dict(),
            "n": doc.n,
            "generators": ideal.to_list(),
            "colength": colength(ideal),
        }
    )


def _oracle_fit(raw: dict, request: RunRequest) -> Report:
    spec = OracleDocument.model_validate(raw).to_spec()
    lengths = colength_sequence(lambda m: filtration_ideal(spec, m), request.window)
    fit = limit_fit(lengths, min_points=settings.min_fit_points)
    return Report(
        {"spec": spec.to_dict(), "fit": fit.to_dict(), "lengths": lengths},
        frame=sequence_frame(lengths, "length"),
    )


def _oracle_tau(raw: dict, request: RunRequest) -> Report:
    doc = OracleDocument.model_validate(raw)
    if doc.target is None:
        raise SchemaError("oracle-tau needs a target valuation")
    spec = doc.to_spec()
    taus = tau_sequence(spec, doc.target.to_valuation(), request.window)
    violations = subadditivity_violations(taus)
    return Report(
        {
            "spec": spec.to_dict(),
            "target": doc.target.to_valuation().to_dict(),
            "tau": taus,
            "subadditive": not violations,
            "violations": [list(v) for v in violations],
        },
        frame=sequence_frame(taus, "tau"),
    )


def _oracle_truncate(raw: dict, request: RunRequest) -> Report:
    doc = OracleDocument.model_validate(raw)
    if not doc.truncation:
        raise SchemaError("oracle-truncate needs at least one truncation degree")
    spec = doc.to_spec()
    columns: Dict[str, List[int]] = {}
    truncations = []
    for a in doc.truncation:
        lengths = colength_sequence(truncate(spec, a), request.window)
        columns[f"length_a{a}"] = lengths
        fit = limit_fit(lengths, min_points=settings.min_fit_points)
        truncations.append({"a": a, "fit": fit.to_dict()})
    full = colength_sequence(lambda m: filtration_ideal(spec, m), request.window)
    frame = pd.DataFrame({"m": range(1, request.window + 1), **columns, "length": full})
    return Report(
        {
            "spec": spec.to_dict(),
            "truncations": truncations,
            "untruncated": limit_fit(full, min_points=settings.min_fit_points).to_dict(),
        },
        frame=frame,
    )


def _toric_build(raw: dict, request: RunRequest) -> Report:
    doc = ToricDocument.model_validate(raw)
    toric = toric_config([t.to_valuation() for t in doc.targets])
    document = toric.to_dict()
    document["target_volumes"] = [
        format_rational(volume(toric.config, QDivisor.prime(toric.config.size, p)))
        for p in toric.prime_index
    ]
    return Report(document)


def _bridge_check(raw: dict, request: RunRequest) -> Report:
    doc = BridgeDocument.model_validate(raw)
    report = bridge_check(
        [s.to_spec() for s in doc.specs],
        window=request.window,
        poly_window=settings.poly_fit_window,
        min_points=settings.min_fit_points,
    )
    return Report(report.to_dict())


HANDLERS: Dict[str, Callable[[dict, RunRequest], Report]] = {
    "validate": _validate,
    "decompose": _decompose,
    "volume": _volume,
    "mixed": _mixed,
    "minkowski": _minkowski,
    "rees": _rees,
    "gamma": _gamma,
    "oracle-colength": _oracle_colength,
    "oracle-fit": _oracle_fit,
    "oracle-tau": _oracle_tau,
    "oracle-truncate": _oracle_truncate,
    "toric-build": _toric_build,
    "bridge-check": _bridge_check,
}


def _load(request: RunRequest) -> dict:
    if request.input_path is None:
        raise SchemaError(f"{request.command} needs --input")
    path = request.input_path
    if not path.is_file():
        raise FileNotFound(f"No such input file: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(f"Invalid JSON in {path}: {e.msg} at line {e.lineno}") from e
    if not isinstance(raw, dict):
        raise SchemaError(f"Input document in {path} must be a JSON object")
    return raw


def _schema_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "document"
    return f"{error.error_count()} schema error(s); {location}: {first['msg']}"


def _diagnostic(error: ZariskiError) -> str:
    return f"{error.code}: {' '.join(str(error).split())}"


def _render(request: RunRequest, report: Report) -> str:
    if request.format == "csv":
        return render_csv(report.frame)
    if request.format == "markdown":
        return render_markdown(request.command, report.document)
    return render_json(report.document)


def run(request: RunRequest) -> RunResult:
    """
    Execute one command.

    Args:
        request: Command, input path and options

    Returns:
        RunResult with exit code 0 on success, 1 on invalid input or a
        failed invariant, 2 on command-line, I/O or schema errors
    """
    logger.info(f"Running {request.command} on {request.input_path}")
    try:
        if request.command not in COMMANDS:
            raise UnknownCommand(f"Unknown command {request.command!r}")
        if request.format not in FORMATS:
            raise UnsupportedFormat(f"Unknown format {request.format!r}")
        if request.format == "csv" and request.command not in CSV_COMMANDS:
            raise UnsupportedFormat(f"{request.command} has no sequence output for csv")

        raw = _load(request)
        try:
            report = HANDLERS[request.command](raw, request)
        except ValidationError as e:
            raise SchemaError(_schema_message(e)) from e

    except CliError as e:
        logger.warning(f"{request.command} rejected: {e.code}")
        return RunResult(exit_code=e.exit_code, diagnostic=_diagnostic(e))
    except (InputError, InternalInvariantViolation) as e:
        logger.warning(f"{request.command} failed: {e.code}")
        return RunResult(exit_code=1, diagnostic=_diagnostic(e))

    logger.info(f"{request.command} finished with exit code {report.exit_code}")
    return RunResult(
        exit_code=report.exit_code,
        output=_render(request, report),
        diagnostic=report.diagnostic,
    )
