"""Deterministic tabular output for the CLI.

TSV rows carry no header so they diff cleanly against golden files;
JSON-lines records name their table in a ``"table"`` field.  All rows are
emitted in a fixed enumeration order.
"""

from __future__ import annotations

import json
from typing import Iterator, Optional

from .abseq import enumerate_sequences
from .bijections import (
    count_strict_by_parts_rank,
    count_strict_by_parts_rank_formula,
    split_strict,
)
from .partitions import (
    enumerate_partitions,
    enumerate_strict_partitions,
    partition_count,
)
from .qseries import gf_coefficients

__all__ = [
    "TABLE_KINDS",
    "emit_table",
    "emit_partitions",
    "emit_strict_partitions",
    "emit_sequences",
]

TABLE_KINDS = ("table1", "s-coeffs", "theorem34", "counts")


def _json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _table1(n: int, fmt: str) -> Iterator[str]:
    for s in enumerate_strict_partitions(n):
        img = split_strict(s)
        if fmt == "tsv":
            yield f"{s}\t{img}"
        else:
            yield _json(
                {
                    "table": "table1",
                    "partition": list(s.parts),
                    "t": img.triangular,
                    "delta": list(img.seq.entries),
                }
            )


def _counts(n: int, fmt: str) -> Iterator[str]:
    for m in range(n + 1):
        strict = len(enumerate_strict_partitions(m))
        if fmt == "tsv":
            yield f"{m}\t{partition_count(m)}\t{strict}"
        else:
            yield _json(
                {"table": "counts", "n": m, "partitions": partition_count(m), "strict": strict}
            )


def _s_coeffs(a_max: int, b_max: int, trunc: int, fmt: str) -> Iterator[str]:
    table = gf_coefficients(a_max, b_max, trunc)
    for (a, b, n), value in table.cells():
        if not value:
            continue
        if fmt == "tsv":
            yield f"{a}\t{b}\t{n}\t{value}"
        else:
            yield _json({"table": "s-coeffs", "a": a, "b": b, "n": n, "count": value})


def _theorem34(k_min: int, k_max: int, m_max: int, n_max: int, fmt: str) -> Iterator[str]:
    for k in range(k_min, k_max + 1):
        for m in range(1, m_max + 1):
            for n in range(n_max + 1):
                lhs = count_strict_by_parts_rank(k, m, n)
                rhs = count_strict_by_parts_rank_formula(k, m, n)
                if fmt == "tsv":
                    yield f"{k}\t{m}\t{n}\t{lhs}\t{rhs}"
                else:
                    yield _json(
                        {
                            "table": "theorem34",
                            "k": k,
                            "m": m,
                            "n": n,
                            "count": lhs,
                            "formula": rhs,
                        }
                    )


def emit_table(kind: str, fmt: str = "tsv", **params: int) -> Iterator[str]:
    """Rows of the named table as formatted lines; see TABLE_KINDS."""
    if fmt not in ("tsv", "json-lines"):
        raise ValueError(f"unknown format {fmt!r}")
    if kind == "table1":
        return _table1(params["n"], fmt)
    if kind == "counts":
        return _counts(params["n"], fmt)
    if kind == "s-coeffs":
        return _s_coeffs(params["a_max"], params["b_max"], params["trunc"], fmt)
    if kind == "theorem34":
        return _theorem34(
            params["k_min"], params["k_max"], params["m_max"], params["n_max"], fmt
        )
    raise ValueError(f"unknown table kind {kind!r}")


def emit_partitions(
    n: int, max_part: Optional[int], parts_filter: str, fmt: str
) -> Iterator[str]:
    for p in enumerate_partitions(n, max_part=max_part, parts_filter=parts_filter):
        if fmt == "tsv":
            yield str(p)
        else:
            yield _json({"parts": list(p.parts), "weight": p.weight})


def emit_strict_partitions(n: int, num_parts: Optional[int], fmt: str) -> Iterator[str]:
    for s in enumerate_strict_partitions(n, num_parts=num_parts):
        if fmt == "tsv":
            yield str(s)
        else:
            yield _json({"parts": list(s.parts), "weight": s.weight})


def emit_sequences(a: int, b: int, half_weight: int, fmt: str) -> Iterator[str]:
    for seq in enumerate_sequences(a, b, half_weight):
        if fmt == "tsv":
            yield str(seq)
        else:
            yield _json({"a": seq.a, "b": seq.b, "entries": list(seq.entries), "weight": seq.weight})
