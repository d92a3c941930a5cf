import json

import pytest

from starprod import Estimate, Mat, field_make, save_matrix
from starprod.catalog import mds63_gf7_codes, repetition_code
from starprod.cli import main
from starprod.matrices import identity
from starprod.oracle import exact_expected_star_dim_fixed


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_bound_plain(capsys):
    code, out, _ = run(capsys, "bound", "-q", "2", "-n", "7", "-k1", "2", "-k2", "3")
    assert code == 0
    assert "bound = 4.362865723" in out  # rounds to the published 4.3629
    assert "E[kernel] = 25481/8192" in out


def test_bound_json(capsys):
    code, out, _ = run(capsys, "bound", "-q", "2", "-n", "2", "-k1", "1", "-k2", "1", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["kernel_num"] == "1" and obj["bound"] == 1.0


def test_bound_validation_exit_code(capsys):
    code, _, err = run(capsys, "bound", "-q", "2", "-n", "2", "-k1", "3", "-k2", "3")
    assert code == 2 and "error" in err


def test_usage_error_exit_code(capsys):
    assert main(["bound", "-q", "2"]) == 2  # missing required flags
    capsys.readouterr()


def test_expect_kernel(capsys):
    code, out, _ = run(capsys, "expect-kernel", "-q", "2", "-n", "2", "-k1", "1", "-k2", "1")
    assert code == 0 and "E[kernel] = 1/1" in out


def test_mc_deterministic_json(capsys):
    args = ["mc", "-q", "2", "-n", "7", "-k1", "2", "-k2", "3", "--samples", "3000", "--seed", "4"]
    outs = []
    for threads in ("1", "4", "8"):
        code, out, _ = run(capsys, *args, "--threads", threads)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1] == outs[2]
    est = Estimate.from_json(json.loads(outs[0]))
    assert est.samples == 3000 and est.seed == 4


def test_mc_kernel_and_full_dim_stats(capsys):
    code, out, _ = run(
        capsys, "mc", "-q", "2", "-n", "4", "-k1", "2", "-k2", "2",
        "--samples", "500", "--seed", "1", "--stat", "kernel-size",
    )
    assert code == 0 and json.loads(out)["stat"] == "kernel-size"
    code, out, _ = run(
        capsys, "mc", "-q", "2", "-n", "8", "-k1", "2", "-k2", "3",
        "--samples", "500", "--seed", "1", "--stat", "full-dim",
    )
    obj = json.loads(out)
    assert code == 0 and 0 <= obj["mean_f64"] <= 1
    # the asymptotic bound is reported beside the frequency, never asserted
    assert "asymptotic_bound" in obj


def test_table1_csv(capsys):
    code, out, _ = run(capsys, "table1", "--samples", "200", "--seed", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k1,k2,q,mc_mean,bound,ratio"
    assert len(lines) == 37
    assert lines[1].startswith("7,2,3,2,")


def test_table1_seed_reproducible(capsys):
    a = run(capsys, "table1", "--samples", "150", "--seed", "3")[1]
    b = run(capsys, "table1", "--samples", "150", "--seed", "3")[1]
    assert a == b


def test_oracle_checks_pass(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "zerodiag", "--qmax", "3", "--kmax", "2")
    assert code == 0
    assert "FAIL" not in out and "PASS" in out and "all checks passed" in out
    code, out, _ = run(capsys, "oracle", "--check", "kernel", "--qmax", "2", "--nmax", "3")
    assert code == 0 and "all checks passed" in out


def test_mds_subcommand(capsys):
    code, out, _ = run(capsys, "mds", "-q", "2", "-n", "3", "-k1", "2", "-k2", "2")
    assert code == 0 and "18/7" in out
    code, _, err = run(capsys, "mds", "-q", "7", "-n", "6", "-k1", "3", "-k2", "2")
    assert code == 2  # uncovered regime


def test_intersect_subcommand(capsys):
    code, out, _ = run(capsys, "intersect", "-q", "2", "-n", "3", "-k1", "1", "-k2", "2")
    assert code == 0 and "3/7" in out
    code, out, _ = run(
        capsys, "intersect", "-q", "2", "-n", "2", "-k1", "1", "-k2", "1",
        "--mc", "--samples", "2000", "--seed", "5",
    )
    assert code == 0 and "1/3" in out


def test_limit_q_subcommand(capsys):
    code, out, _ = run(capsys, "limit-q", "-n", "7", "-k1", "2", "-k2", "3", "--qlist", "2,3,5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3 and lines[0].startswith("q=2:")


def test_apps_pir_and_sdmm(tmp_path, capsys):
    f5 = field_make(5)
    from conftest import grs_code

    c = grs_code(5, 5, 2)
    path = tmp_path / "grs.mat"
    save_matrix(c.basis, path)
    code, out, _ = run(capsys, "apps", "pir", "--c", str(path), "--d", str(path))
    obj = json.loads(out)
    assert code == 0 and obj["rate_upper"] == "2/5"
    code, out, _ = run(capsys, "apps", "sdmm", "--ca", str(path), "--cb", str(path))
    obj = json.loads(out)
    assert code == 0 and obj["recovery"] == 3 and obj["stragglers"] == 2


def test_apps_csst(tmp_path, capsys):
    f2 = field_make(2)
    r3 = repetition_code(f2, 3)
    path = tmp_path / "rep3.mat"
    save_matrix(r3.basis, path)
    code, out, _ = run(capsys, "apps", "csst", "--c1", str(path))
    obj = json.loads(out)
    assert code == 0 and obj["feasible"] is False


def test_apps_field_mismatch_exit(tmp_path, capsys):
    f2, f3 = field_make(2), field_make(3)
    p2 = tmp_path / "c2.mat"
    p3 = tmp_path / "c3.mat"
    save_matrix(identity(f2, 3), p2)
    save_matrix(identity(f3, 3), p3)
    code, _, err = run(capsys, "apps", "pir", "--c", str(p2), "--d", str(p3))
    assert code == 2 and "error" in err


def test_apps_missing_file_exit(tmp_path, capsys):
    code, _, err = run(capsys, "apps", "csst", "--c1", str(tmp_path / "nope.mat"))
    assert code == 4


def test_example_mds_custom_code(tmp_path, capsys):
    f2 = field_make(2)
    parity = Mat(f2, [[1, 0, 1], [0, 1, 1]])
    path = tmp_path / "parity.mat"
    save_matrix(parity, path)
    code, out, _ = run(capsys, "example-mds", "--code", str(path), "--l", "1", "--threads", "1")
    assert code == 0
    from starprod import code_from_matrix

    want = exact_expected_star_dim_fixed(code_from_matrix(parity), 1)
    assert f"{want.numerator}/{want.denominator}" in out


def test_example_mds_builtin_names(capsys):
    # keep the built-in run tiny: dimension-1 partners enumerate 19608 lines
    code, out, _ = run(capsys, "example-mds", "--l", "1", "--threads", "2")
    assert code == 0
    assert "E[dim C1*D]" in out and "E[dim C2*D]" in out
    c1, c2 = mds63_gf7_codes()
    e1 = exact_expected_star_dim_fixed(c1, 1)
    assert f"{e1.numerator}/{e1.denominator}" in out


def test_oracle_support_check(capsys):
    code, out, _ = run(capsys, "oracle", "--check", "support", "--qmax", "2", "--nmax", "3")
    assert code == 0 and "all checks passed" in out


def test_budget_exit_code(tmp_path, capsys):
    # a partner-dimension enumeration far beyond the budget fails fast
    f2 = field_make(2)
    big = identity(f2, 60)
    path = tmp_path / "big.mat"
    save_matrix(big, path)
    code, _, err = run(capsys, "example-mds", "--code", str(path), "--l", "30", "--threads", "1")
    assert code == 3 and "budget" in err


def test_example_mds_dump(tmp_path, capsys):
    out_dir = tmp_path / "dumped"
    code, out, _ = run(
        capsys, "example-mds", "--l", "1", "--threads", "1", "--dump", str(out_dir)
    )
    assert code == 0
    from starprod import code_from_matrix, load_matrix
    from starprod.catalog import mds63_gf7_codes

    c1, c2 = mds63_gf7_codes()
    assert code_from_matrix(load_matrix(out_dir / "C1.mat")) == c1
    assert code_from_matrix(load_matrix(out_dir / "C2.mat")) == c2
