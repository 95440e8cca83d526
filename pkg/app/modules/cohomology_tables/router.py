import argparse
import json
from typing import Optional

from app.core.errors import EXIT_OK, InvalidInput
from app.modules.cohomology_tables.bott import pn_table, product_table, y_cohomology
from app.modules.incidence_ring.monomials import Bidegree
from app.schemas.cli import CliConfig
from app.schemas.cohomology import CohomologyTable
from app.utils.output import write_output


def register_commands(sub: argparse._SubParsersAction) -> None:
    cmd = sub.add_parser("cohomology", help="Dimension table of a line bundle on P^n, P^n x P^n or Y")
    cmd.add_argument("--n", type=int, required=True, help="projective dimension, n ≥ 1")
    cmd.add_argument("--a", type=int, required=True, help="X-degree (the only degree for --space pn)")
    cmd.add_argument("--b", type=int, default=0, help="Y-degree")
    cmd.add_argument("--space", choices=["y", "product", "pn"], default="y")
    cmd.add_argument("--format", choices=["json", "csv", "text"], default="text")
    cmd.add_argument("--out", type=str, default=None)
    cmd.add_argument("--verbose", action="store_true")


def table_for(config: CliConfig) -> CohomologyTable:
    if config.n < 1:
        raise InvalidInput(f"n must be ≥ 1, got {config.n}")
    if config.space == "pn":
        return pn_table(config.n, config.a)
    degree = Bidegree(config.a, config.b)
    if config.space == "product":
        return product_table(config.n, degree)
    return y_cohomology(config.n, degree)


def table_to_text(table: CohomologyTable) -> str:
    lines = [f"{table.bundle} on {table.space}"]
    for j in sorted(table.dims):
        lines.append(f"h^{j} = {table.dims[j]}")
    return "\n".join(lines)


def table_to_csv(table: CohomologyTable) -> str:
    lines = ["j,dim"]
    lines.extend(f"{j},{table.dims[j]}" for j in sorted(table.dims))
    return "\n".join(lines)


def handle(config: CliConfig) -> Optional[int]:
    if config.command != "cohomology":
        return None
    table = table_for(config)
    if config.format == "json":
        text = json.dumps(table.to_json_dict(), indent=2)
    elif config.format == "csv":
        text = table_to_csv(table)
    else:
        text = table_to_text(table)
    write_output(text, config.out)
    return EXIT_OK
