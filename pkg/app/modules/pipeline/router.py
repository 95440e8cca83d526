import argparse
import csv
import io
import json
import logging
from typing import Optional

from app.core.errors import EXIT_CHECK_FAILED, EXIT_OK
from app.modules.fp_linalg.field import is_prime
from app.modules.frobenius_map.assembly import build_matrix, dump_matrix
from app.modules.frobenius_map.problem import FrobeniusProblem
from app.modules.pipeline.verify import sweep, verify
from app.schemas.cli import CliConfig
from app.schemas.reports import SWEEP_COLUMNS, SweepRow, VerificationReport
from app.utils.output import write_output

logger = logging.getLogger(__name__)


def register_commands(sub: argparse._SubParsersAction) -> None:
    verify_cmd = sub.add_parser("verify", help="Verify the failure of Kodaira vanishing for one (n, p)")
    verify_cmd.add_argument("--n", type=int, required=True, help="projective dimension, n ≥ 3")
    verify_cmd.add_argument("--p", type=int, required=True, help="prime characteristic, n−1 ≤ p < 2^20")
    verify_cmd.add_argument("--format", choices=["json", "csv", "text"], default="text")
    verify_cmd.add_argument("--dump-matrix", type=str, default=None, help="also write A in triple format")
    verify_cmd.add_argument("--allow-small-p", action="store_true", default=None, help="exploratory mode: accept p < n−1")
    verify_cmd.add_argument("--budget", type=int, default=None, help="cap on stored matrix entries (default 2e8)")
    verify_cmd.add_argument("--out", type=str, default=None)
    verify_cmd.add_argument("--verbose", action="store_true")

    sweep_cmd = sub.add_parser("sweep", help="Verify every valid (n, p) in a range")
    sweep_cmd.add_argument("--n-min", type=int, required=True)
    sweep_cmd.add_argument("--n-max", type=int, required=True)
    sweep_cmd.add_argument("--p-max", type=int, required=True, help="largest prime to try")
    sweep_cmd.add_argument("--format", choices=["json", "csv", "text"], default="text")
    sweep_cmd.add_argument("--allow-small-p", action="store_true", default=None)
    sweep_cmd.add_argument("--budget", type=int, default=None)
    sweep_cmd.add_argument("--out", type=str, default=None)
    sweep_cmd.add_argument("--verbose", action="store_true")


def report_to_json(report: VerificationReport) -> str:
    payload = report.model_dump(mode="json")
    payload["h_table"] = {str(i): report.h_table[i] for i in sorted(report.h_table)}
    return json.dumps(payload, indent=2, ensure_ascii=False)


def rows_to_csv(reports: list[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        row = SweepRow.from_report(report).model_dump()
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buffer.getvalue()


def report_to_text(report: VerificationReport) -> str:
    lines = [f"n = {report.n}, p = {report.p}, dim X = {report.dim_X}"]
    if report.bundles is not None:
        b = report.bundles
        lines.append(f"L = {b.L}, ω_Y = {b.omega_Y}, ω_X = {b.omega_X}, M = {b.M}")
    if report.error:
        lines.append(f"error: {report.error}")
    if report.matrix is not None:
        lines.append(f"A: {report.matrix.rows}x{report.matrix.cols} over F_{report.p}, rank {report.rank}")
    for i in sorted(report.h_table):
        lines.append(f"h^{i}(X, L^-1) = {report.h_table[i]}")
    if report.witness is not None:
        where = "in" if report.witness_in_image else "not in"
        lines.append(f"witness {report.witness} is {where} the image of A")
    if report.cokernel_representatives:
        lines.append("cokernel: " + ", ".join(report.cokernel_representatives))
    for check in report.checks:
        lines.append(f"[{check.status}] {check.name}: {check.detail}")
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    return "\n".join(lines)


def _render(reports: list[VerificationReport], fmt: str, single: bool) -> str:
    if fmt == "json":
        if single:
            return report_to_json(reports[0])
        return "[\n" + ",\n".join(report_to_json(r) for r in reports) + "\n]"
    if fmt == "csv":
        return rows_to_csv(reports)
    return "\n\n".join(report_to_text(r) for r in reports)


def handle(config: CliConfig) -> Optional[int]:
    """Run verify or sweep; return the exit code, or None for other commands."""
    if config.command == "verify":
        matrix = None
        if config.dump_matrix is not None:
            prob = FrobeniusProblem.create(config.n, config.p, config.allow_small_p)
            matrix = build_matrix(prob, config.budget)
            dump_matrix(prob, matrix, config.dump_matrix)
        report = verify(
            config.n, config.p,
            allow_small_p=config.allow_small_p, budget=config.budget, matrix=matrix,
        )
        write_output(_render([report], config.format, single=True), config.out)
        return EXIT_OK

    if config.command == "sweep":
        primes = [p for p in range(2, config.p_max + 1) if is_prime(p)]
        reports = sweep(
            range(config.n_min, config.n_max + 1), primes,
            allow_small_p=config.allow_small_p, budget=config.budget,
        )
        write_output(_render(reports, config.format, single=False), config.out)
        failed = [r for r in reports if not r.checks_passed]
        return EXIT_CHECK_FAILED if failed else EXIT_OK

    return None
