import argparse
import json
from typing import Optional

from app.core.errors import EXIT_OK
from app.modules.frobenius_map.assembly import build_matrix, dump_matrix
from app.modules.frobenius_map.problem import FrobeniusProblem
from app.schemas.cli import CliConfig
from app.utils.output import write_output


def register_commands(sub: argparse._SubParsersAction) -> None:
    cmd = sub.add_parser("dump", help="Write the matrix of A with row/column sidecars")
    cmd.add_argument("--n", type=int, required=True, help="projective dimension, n ≥ 3")
    cmd.add_argument("--p", type=int, required=True, help="prime characteristic, n−1 ≤ p < 2^20")
    cmd.add_argument("--out", type=str, required=True)
    cmd.add_argument("--format", choices=["json", "csv", "text"], default="text")
    cmd.add_argument("--allow-small-p", action="store_true", default=None)
    cmd.add_argument("--budget", type=int, default=None)
    cmd.add_argument("--verbose", action="store_true")


def handle(config: CliConfig) -> Optional[int]:
    if config.command != "dump":
        return None
    prob = FrobeniusProblem.create(config.n, config.p, config.allow_small_p)
    matrix = build_matrix(prob, config.budget)
    paths = dump_matrix(prob, matrix, config.out)
    if config.format == "json":
        text = json.dumps({
            "rows": matrix.rows, "cols": matrix.cols, "p": matrix.modulus,
            "entries": matrix.nnz(), "files": [str(path) for path in paths],
        }, indent=2)
    else:
        text = f"wrote {matrix.rows}x{matrix.cols} matrix over F_{matrix.modulus} ({matrix.nnz()} entries)\n"
        text += "\n".join(str(path) for path in paths)
    write_output(text)
    return EXIT_OK
