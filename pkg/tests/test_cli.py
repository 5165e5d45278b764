from diskevac.cli import main


def test_eval_prints_time_and_case(capsys):
    rc = main(["eval", "--model", "wireless", "--d", "3.14159265",
               "--zeta", "0", "--e1", "0.78539816"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "2.1996" in out
    assert "W1a" in out


def test_eval_with_center_leg(capsys):
    rc = main(["eval", "--model", "wireless", "--d", "3.14159265",
               "--zeta", "0", "--e1", "0.78539816", "--include-center-leg"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "3.1996" in out


def test_bounds_small_d(capsys):
    rc = main(["bounds", "--d", "1.0"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "3.000000" in out


def test_verify_seeded(capsys):
    rc = main(["verify", "--samples", "150", "--seed", "7"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "max |policy - replay|" in out


def test_usage_error_on_unknown_flag(capsys):
    rc = main(["eval", "--bogus", "1"])
    capsys.readouterr()
    assert rc == 2


def test_usage_error_on_invalid_range(capsys):
    rc = main(["eval", "--model", "wireless", "--d", "9.0", "--zeta", "0",
               "--e1", "0.0"])
    capsys.readouterr()
    assert rc == 2


def test_usage_error_on_zeta_above_d(capsys):
    rc = main(["eval", "--model", "wireless", "--d", "1.0", "--zeta", "1.5",
               "--e1", "0.0"])
    capsys.readouterr()
    assert rc == 2


def test_sweep_writes_csv(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    rc = main(["sweep", "--model", "wireless", "--zeta", "d",
               "--d-step", "0.5", "--exit-step", "0.05",
               "--out", str(out_path)])
    capsys.readouterr()
    assert rc == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "d,zeta_policy,model,labeled,worst_time,argmax_e1,case"
    assert len(lines) == 9  # 0.0 .. 3.0 step 0.5, plus the pi endpoint


def test_eval_trace_dump(tmp_path, capsys):
    trace = tmp_path / "trace.txt"
    rc = main(["eval", "--model", "f2f", "--d", "2.0", "--zeta", "0",
               "--e1", "1.0", "--trace", str(trace)])
    capsys.readouterr()
    assert rc == 0
    assert trace.read_text().count("\n") >= 2


def test_compare_expectation_failure(capsys):
    # wireless zeta=d/2 is not everywhere below zeta=0, so expecting
    # dominance must fail with exit code 3
    rc = main(["compare", "--model-a", "wireless", "--zeta-a", "d/2",
               "--model-b", "wireless", "--zeta-b", "0",
               "--d-step", "0.4", "--exit-step", "0.02",
               "--expect-a-below-b"])
    capsys.readouterr()
    assert rc == 3


def test_compare_dominance_holds(capsys):
    # one exit-grid step of slack absorbs coarse-grid quantization noise
    rc = main(["compare", "--model-a", "wireless", "--zeta-a", "d",
               "--model-b", "wireless", "--zeta-b", "0",
               "--d-step", "0.4", "--exit-step", "0.02", "--slack", "0.02",
               "--expect-a-below-b"])
    capsys.readouterr()
    assert rc == 0


def test_table1_coarse(capsys):
    rc = main(["table1", "--d-step", "0.2", "--exit-step", "0.02"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.count("min_time") == 6
