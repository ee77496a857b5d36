"""Verification sweeps pitting each closed form against brute enumeration.

Every sweep walks a parameter grid in canonical order, returning a
:class:`VerificationReport`.  Cells are independent pure computations, so a
grid may be sharded across worker processes; results merge in grid order and
the serialized report is byte-identical for any worker count.  Wall time is
kept on the report but deliberately left out of the serialization.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .abseq import EMPTY_SEQUENCE, enumerate_sequences
from .bijections import (
    count_strict_by_parts_rank,
    count_strict_by_parts_rank_formula,
    in_durfee_class,
    is_valid_split,
    partition_from_sequence,
    partition_from_sequence_by_filling,
    sequence_from_partition,
    split_strict,
    StaircaseSplit,
    unsplit_strict,
)
from .partitions import (
    bg_rank,
    enumerate_partitions,
    enumerate_strict_partitions,
)
from .qseries import gf_coefficients, strict_count_by_rank

__all__ = [
    "Mismatch",
    "VerificationReport",
    "CONGRUENCE_FAMILIES",
    "verify_bijection_phi",
    "verify_gf",
    "verify_iota",
    "verify_theorem34",
    "verify_euler_vandervelde",
    "verify_congruences",
]


@dataclass(frozen=True)
class Mismatch:
    law: str
    where: dict[str, object]
    expected: str
    actual: str


@dataclass
class VerificationReport:
    subject: str
    params: dict[str, int]
    checks_run: int
    mismatches: list[Mismatch]
    skipped: int = 0
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def tsv_lines(self) -> Iterator[str]:
        yield f"subject\t{self.subject}"
        yield "params\t" + " ".join(f"{k}={v}" for k, v in self.params.items())
        yield f"checks\t{self.checks_run}"
        yield f"skipped\t{self.skipped}"
        yield f"mismatches\t{len(self.mismatches)}"
        yield f"status\t{'pass' if self.passed else 'fail'}"
        for m in self.mismatches:
            where = " ".join(f"{k}={v}" for k, v in m.where.items())
            yield f"mismatch\t{m.law}\t{where}\texpected={m.expected}\tactual={m.actual}"

    def json_lines(self) -> Iterator[str]:
        head = {
            "record": "report",
            "subject": self.subject,
            "params": self.params,
            "checks": self.checks_run,
            "skipped": self.skipped,
            "mismatches": len(self.mismatches),
            "status": "pass" if self.passed else "fail",
        }
        yield json.dumps(head, sort_keys=True, separators=(",", ":"))
        for m in self.mismatches:
            rec = {
                "record": "mismatch",
                "law": m.law,
                "where": m.where,
                "expected": m.expected,
                "actual": m.actual,
            }
            yield json.dumps(rec, sort_keys=True, separators=(",", ":"))


CellResult = tuple[int, int, list[Mismatch]]


def _run_cells(fn: Callable, cells: Sequence, jobs: int) -> list:
    """Map ``fn`` over ``cells`` preserving order, optionally in processes."""
    if jobs > 1 and len(cells) > 1:
        chunk = max(1, len(cells) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, cells, chunksize=chunk))
    return [fn(cell) for cell in cells]


def _merge(subject: str, params: dict[str, int], results: list[CellResult], t0: float) -> VerificationReport:
    checks = sum(r[0] for r in results)
    skipped = sum(r[1] for r in results)
    mismatches = [m for r in results for m in r[2]]
    return VerificationReport(subject, params, checks, mismatches, skipped, time.perf_counter() - t0)


def _phi_cell(cell: tuple[int, int, int]) -> CellResult:
    a, b, n = cell
    checks = 0
    bad: list[Mismatch] = []
    seqs = enumerate_sequences(a, b, n)
    for seq in seqs:
        where = {"a": a, "b": b, "n": n, "seq": str(seq)}
        lam = partition_from_sequence(a, seq)
        checks += 4
        if lam.weight != n:
            bad.append(Mismatch("halved-weight", where, str(n), str(lam.weight)))
        if not in_durfee_class(lam, a, b):
            bad.append(Mismatch("class-membership", where, "member", f"{lam} outside class"))
        back = sequence_from_partition(a, lam)
        if back != seq:
            bad.append(Mismatch("round-trip", where, str(seq), str(back)))
        filled = partition_from_sequence_by_filling(a, seq)
        if filled != lam:
            bad.append(Mismatch("board-oracle", where, str(lam), str(filled)))
    members = sum(1 for p in enumerate_partitions(n) if in_durfee_class(p, a, b))
    checks += 1
    if members != len(seqs):
        bad.append(
            Mismatch("cardinality", {"a": a, "b": b, "n": n}, str(members), str(len(seqs)))
        )
    return checks, 0, bad


def verify_bijection_phi(a_max: int = 3, b_max: int = 4, n_max: int = 12, jobs: int = 1) -> VerificationReport:
    """Exhaustive check of the sequence <-> partition correspondence.

    On every (a, b, half-weight) cell: round trip, halved weight, class
    membership, agreement with the literal board filling, and equality of
    the two cardinalities.
    """
    t0 = time.perf_counter()
    cells = [
        (a, b, n)
        for a in range(a_max + 1)
        for b in range(1, b_max + 1)
        for n in range(n_max + 1)
    ]
    results = _run_cells(_phi_cell, cells, jobs)
    params = {"a_max": a_max, "b_max": b_max, "n_max": n_max}
    return _merge("sequence-partition-bijection", params, results, t0)


def _gf_cell(cell: tuple[int, int, int]) -> int:
    a, b, n = cell
    if b == 0:
        return 1 if cell == (0, 0, 0) else 0
    return len(enumerate_sequences(a, b, n))


def verify_gf(a_max: int = 4, b_max: int = 8, trunc: int = 15, jobs: int = 1) -> VerificationReport:
    """Compare every coefficient-table cell against direct enumeration."""
    t0 = time.perf_counter()
    table = gf_coefficients(a_max, b_max, trunc)
    cells = [
        (a, b, n)
        for a in range(a_max + 1)
        for b in range(b_max + 1)
        for n in range(trunc + 1)
    ]
    counts = _run_cells(_gf_cell, cells, jobs)
    mismatches = []
    for cell, expected in zip(cells, counts):
        actual = table.entry(*cell)
        if actual != expected:
            a, b, n = cell
            mismatches.append(
                Mismatch("coefficient", {"a": a, "b": b, "n": n}, str(expected), str(actual))
            )
    params = {"a_max": a_max, "b_max": b_max, "trunc": trunc}
    return VerificationReport(
        "sequence-gf", params, len(cells), mismatches, 0, time.perf_counter() - t0
    )


def _admissible_splits(n: int) -> list[StaircaseSplit]:
    """Every pair (triangular, sequence) of total weight n passing the image
    characterization, in deterministic order."""
    out: list[StaircaseSplit] = []
    k = 0
    while k * (k + 1) // 2 <= n:
        t = k * (k + 1) // 2
        w = n - t
        if w == 0:
            out.append(StaircaseSplit(t, EMPTY_SEQUENCE))
        elif w % 2 == 0:
            half = w // 2
            b = 1
            while k * b + b * (b + 1) // 2 <= w:
                for seq in enumerate_sequences(k, b, half):
                    out.append(StaircaseSplit(t, seq))
                b += 1
            for a in range(k):
                for seq in enumerate_sequences(a, 1, half):
                    out.append(StaircaseSplit(t, seq))
        k += 1
    return out


def _iota_cell(n: int) -> CellResult:
    checks = 0
    bad: list[Mismatch] = []
    stricts = enumerate_strict_partitions(n)
    images = []
    for s in stricts:
        where = {"n": n, "partition": str(s)}
        img = split_strict(s)
        images.append(img)
        checks += 3
        if img.triangular + img.seq.weight != n:
            bad.append(
                Mismatch("weight-additivity", where, str(n), str(img.triangular + img.seq.weight))
            )
        if not is_valid_split(img):
            bad.append(Mismatch("image-characterization", where, "valid split", str(img)))
        back = unsplit_strict(img)
        if back != s:
            bad.append(Mismatch("round-trip", where, str(s), str(back)))
    checks += 1
    keys = {(img.triangular, img.seq.entries) for img in images}
    if len(keys) != len(images):
        bad.append(Mismatch("injectivity", {"n": n}, str(len(images)), str(len(keys))))
    pairs = _admissible_splits(n)
    for img in pairs:
        checks += 1
        s = unsplit_strict(img)
        if split_strict(s) != img:
            bad.append(
                Mismatch("completeness", {"n": n, "pair": str(img)}, str(img), str(split_strict(s)))
            )
    checks += 1
    if len(pairs) != len(stricts):
        bad.append(Mismatch("pair-count", {"n": n}, str(len(stricts)), str(len(pairs))))
    return checks, 0, bad


def verify_iota(n_max: int = 25, jobs: int = 1) -> VerificationReport:
    """Check the staircase split on all strict partitions up to ``n_max``:
    round trip, weight additivity, injectivity, and that the image
    characterization is sound and complete."""
    t0 = time.perf_counter()
    cells = list(range(n_max + 1))
    results = _run_cells(_iota_cell, cells, jobs)
    return _merge("strict-staircase-split", {"n_max": n_max}, results, t0)


def _thm34_cell(cell: tuple[int, int, int]) -> CellResult:
    k, m, n = cell
    lhs = count_strict_by_parts_rank(k, m, n)
    rhs = count_strict_by_parts_rank_formula(k, m, n)
    if lhs != rhs:
        return 1, 0, [Mismatch("count-equality", {"k": k, "m": m, "n": n}, str(lhs), str(rhs))]
    return 1, 0, []


def verify_theorem34(
    k_min: int = -3, k_max: int = 3, m_max: int = 8, n_max: int = 30, jobs: int = 1
) -> VerificationReport:
    """Brute-force count of strict partitions by (parts, BG-rank) against the
    closed-form dispatch, over the full grid."""
    t0 = time.perf_counter()
    cells = [
        (k, m, n)
        for k in range(k_min, k_max + 1)
        for m in range(1, m_max + 1)
        for n in range(n_max + 1)
    ]
    results = _run_cells(_thm34_cell, cells, jobs)
    params = {"k_min": k_min, "k_max": k_max, "m_max": m_max, "n_max": n_max}
    return _merge("strict-by-parts-and-rank", params, results, t0)


def _euler_cell(n: int) -> CellResult:
    lhs = len(enumerate_strict_partitions(n))
    rhs = 0
    k = 0
    while k * (k + 1) // 2 <= n:
        rhs += len(enumerate_partitions(n - k * (k + 1) // 2, parts_filter="even-only"))
        k += 1
    if lhs != rhs:
        return 1, 0, [Mismatch("count-equality", {"n": n}, str(lhs), str(rhs))]
    return 1, 0, []


def verify_euler_vandervelde(n_max: int = 40, jobs: int = 1) -> VerificationReport:
    """Strict partitions of n versus pairs (triangular part, partition into
    even parts) of total weight n, both sides enumerated."""
    t0 = time.perf_counter()
    cells = list(range(n_max + 1))
    results = _run_cells(_euler_cell, cells, jobs)
    return _merge("strict-vs-triangular-plus-even", {"n_max": n_max}, results, t0)


# (residue of n mod 10, residues of the rank mod 10) for the six families
# whose closed-form count is divisible by 5
CONGRUENCE_FAMILIES: tuple[tuple[int, tuple[int, ...]], ...] = (
    (1, (9,)),
    (3, (3, 5)),
    (4, (2, 6)),
    (6, (4,)),
    (8, (0, 8)),
    (9, (1, 7)),
)


def _family_residue(rank: int) -> int | None:
    for n_res, rank_residues in CONGRUENCE_FAMILIES:
        if rank % 10 in rank_residues:
            return n_res
    return None


def _congruence_cell(cell: tuple[int, int]) -> CellResult:
    rank, n = cell
    if n < rank * (2 * rank - 1):
        # identically zero by the weight bound; record as skipped
        return 0, 1, []
    checks = 1
    bad: list[Mismatch] = []
    count = strict_count_by_rank(rank, n)
    if count % 5:
        bad.append(Mismatch("mod-5", {"rank": rank, "n": n}, "0 (mod 5)", f"{count}"))
    if n <= 30:
        checks += 1
        brute = sum(1 for s in enumerate_strict_partitions(n) if bg_rank(s) == rank)
        if brute != count:
            bad.append(Mismatch("closed-form", {"rank": rank, "n": n}, str(brute), str(count)))
    return checks, 0, bad


def verify_congruences(n_max: int = 101, jobs: int = 1) -> VerificationReport:
    """Scan the six mod-5 families for ranks of absolute value at most 5.

    Cells below the least admissible weight are skipped rather than passed
    vacuously; where the weight also stays within brute-force range the
    closed-form count is cross-checked against direct enumeration.
    """
    t0 = time.perf_counter()
    cells = []
    for rank in range(-5, 6):
        n_res = _family_residue(rank)
        if n_res is None:
            continue
        cells.extend((rank, n) for n in range(n_res, n_max + 1, 10))
    results = _run_cells(_congruence_cell, cells, jobs)
    return _merge("rank-count-congruences-mod5", {"n_max": n_max}, results, t0)
