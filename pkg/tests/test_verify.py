import pytest

from parity_board.verify import (
    CONGRUENCE_FAMILIES,
    Mismatch,
    VerificationReport,
    verify_bijection_phi,
    verify_congruences,
    verify_euler_vandervelde,
    verify_gf,
    verify_iota,
    verify_theorem34,
)

SMALL_SWEEPS = [
    lambda jobs=1: verify_bijection_phi(2, 3, 8, jobs=jobs),
    lambda jobs=1: verify_gf(2, 4, 8, jobs=jobs),
    lambda jobs=1: verify_iota(12, jobs=jobs),
    lambda jobs=1: verify_theorem34(-2, 2, 5, 15, jobs=jobs),
    lambda jobs=1: verify_euler_vandervelde(20, jobs=jobs),
    lambda jobs=1: verify_congruences(60, jobs=jobs),
]


@pytest.mark.parametrize("sweep", SMALL_SWEEPS)
def test_small_sweeps_pass(sweep):
    report = sweep()
    assert report.passed
    assert report.exit_code == 0
    assert report.checks_run > 0
    assert report.mismatches == []


@pytest.mark.parametrize("sweep", SMALL_SWEEPS)
def test_reports_deterministic(sweep):
    first, second = sweep(), sweep()
    assert list(first.tsv_lines()) == list(second.tsv_lines())
    assert list(first.json_lines()) == list(second.json_lines())


@pytest.mark.parametrize("sweep", [SMALL_SWEEPS[0], SMALL_SWEEPS[2], SMALL_SWEEPS[3]])
def test_worker_count_does_not_change_report(sweep):
    serial = sweep(jobs=1)
    sharded = sweep(jobs=3)
    assert list(serial.tsv_lines()) == list(sharded.tsv_lines())
    assert list(serial.json_lines()) == list(sharded.json_lines())


def test_vacuous_phi_sweep():
    report = verify_bijection_phi(0, 0, 0)
    assert report.passed
    assert report.checks_run == 0


def test_minimal_phi_sweep():
    report = verify_bijection_phi(0, 1, 1)
    assert report.passed
    assert report.checks_run > 0


def test_gf_handles_run_length_zero_slice():
    report = verify_gf(2, 0, 5)
    assert report.passed


def test_congruence_families_cover_expected_residues():
    assert CONGRUENCE_FAMILIES == (
        (1, (9,)),
        (3, (3, 5)),
        (4, (2, 6)),
        (6, (4,)),
        (8, (0, 8)),
        (9, (1, 7)),
    )


def test_congruences_record_skipped_cells():
    report = verify_congruences(101)
    assert report.passed
    # cells below the staircase weight for each rank in [-5, 5]
    expected_skips = 0
    for rank in range(-5, 6):
        rank_residue = rank % 10
        residues = [r for r, js in CONGRUENCE_FAMILIES if rank_residue in js]
        assert len(residues) == 1
        start = residues[0]
        floor = rank * (2 * rank - 1)
        expected_skips += sum(1 for n in range(start, 102, 10) if n < floor)
    assert report.skipped == expected_skips == 25


def test_failure_report_rendering():
    bad = Mismatch("demo-law", {"n": 3}, "5", "4")
    report = VerificationReport("demo", {"n_max": 3}, 7, [bad], skipped=2, elapsed=1.25)
    assert not report.passed
    assert report.exit_code == 1
    tsv = list(report.tsv_lines())
    assert tsv == [
        "subject\tdemo",
        "params\tn_max=3",
        "checks\t7",
        "skipped\t2",
        "mismatches\t1",
        "status\tfail",
        "mismatch\tdemo-law\tn=3\texpected=5\tactual=4",
    ]
    json_lines = list(report.json_lines())
    assert '"status":"fail"' in json_lines[0]
    assert '"record":"mismatch"' in json_lines[1]
    # wall time stays out of both serializations
    assert not any("1.25" in line for line in tsv + json_lines)
