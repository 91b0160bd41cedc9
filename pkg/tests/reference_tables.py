"""Readers for the golden transcriptions of the two reference tables."""
import re

from .conftest import GOLDEN


def parse_label(text):
    return tuple(int(x) for x in text.strip("[]").split(",") if x)


def parse_pretty(text):
    out = {}
    for coeff, idx in re.findall(r"(?:(\d+)\*)?g\[([\d,]*)\]", text):
        lam = () if idx == "0" else parse_label(idx)
        out[lam] = int(coeff or 1)
    return out


def table1_cells():
    rows = {}
    for line in (GOLDEN / "table1_k3.txt").read_text().splitlines()[1:]:
        Q, lam, expr = line.split("\t")
        rows[(parse_label(Q), parse_label(lam))] = parse_pretty(expr)
    return rows


def table2_rows():
    rows = {}
    for line in (GOLDEN / "table2_k3.txt").read_text().splitlines()[1:]:
        cells = [parse_label(c) for c in line.split("\t")]
        rows[cells[0]] = {"core": cells[1], "mins": [(cells[2 + 2 * i], cells[3 + 2 * i]) for i in range(3)]}
    return rows


# Cells where the printed value does not multiply back to g_(Q u lam); see the decisions ledger.
TABLE1_MISPRINTS = {((3,), (2, 1)), ((1, 1, 1), (2, 1)), ((3, 1, 1, 1), (2, 1, 1)), ((2, 2, 1, 1, 1), (2, 1, 1))}
# The minindex entry that inherits the (3) x (2,1) misprint.
TABLE2_MISPRINTS = {((2, 1), 3)}
