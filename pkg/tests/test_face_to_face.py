import math

import numpy as np
import pytest

from diskevac import _batch
from diskevac.face_to_face import (
    catch_on_circle_from,
    eval_f2f_diff,
    eval_f2f_labeled,
    eval_f2f_same,
    intercept_moving_target,
    worst_f2f,
)
from diskevac.geometry import TWO_PI, ArcPos, cartesian, point_distance
from diskevac.scenarios import CommModel, Scenario, WrongEvaluatorError

SQRT2 = math.sqrt(2.0)


def f2f(d, zeta, e1, labeled=False):
    return Scenario(CommModel.FACE_TO_FACE, labeled, d, zeta, ArcPos(e1))


# ---------------------------------------------------------------------------
# zeta = 0
# ---------------------------------------------------------------------------

def test_same_start_on_exit():
    res = eval_f2f_same(f2f(0.5, 0.0, 0.0))
    assert res.time_from_perimeter == 0.0
    assert res.simultaneous


def test_same_case_2b():
    # exits at 1.0 and 4.0, d = 3: the finder exits, the partner marches
    res = eval_f2f_same(f2f(3.0, 0.0, 1.0))
    assert res.case_tag == "F0-2b"
    assert res.time_from_perimeter == pytest.approx(TWO_PI - 3.0 - 1.0, abs=1e-9)


def test_same_case_4c():
    # exits at 2.2 and 4.2, d = 2: R2 found and left before R1's find
    res = eval_f2f_same(f2f(2.0, 0.0, 2.2))
    assert res.case_tag == "F0-4c"
    assert res.time_from_perimeter == pytest.approx(2.2, abs=1e-9)
    assert min(res.r1_exit_time, res.r2_exit_time) == pytest.approx(
        TWO_PI - 2.0 - 2.2, abs=1e-9)


def test_same_case_1_meet_then_candidates():
    # small x with large d: catch on the circle, then the candidate tour
    res = eval_f2f_same(f2f(3.0, 0.0, 0.1))
    assert res.case_tag == "F0-1"
    assert res.time_from_perimeter > 2.0
    assert res.r1_exit_time == pytest.approx(res.r2_exit_time, abs=1e-9)


def test_same_wrong_evaluator():
    with pytest.raises(WrongEvaluatorError):
        eval_f2f_same(f2f(1.0, 1.0, 0.3))
    with pytest.raises(WrongEvaluatorError):
        eval_f2f_diff(f2f(1.0, 0.0, 0.3))
    with pytest.raises(WrongEvaluatorError):
        eval_f2f_labeled(f2f(1.0, 0.0, 0.3))


# ---------------------------------------------------------------------------
# zeta = d
# ---------------------------------------------------------------------------

def test_diff_both_start_on_exits():
    res = eval_f2f_diff(f2f(1.0, 1.0, TWO_PI - 0.5))
    assert res.time_from_perimeter == 0.0
    assert res.simultaneous


def test_diff_case_2_with_viable_catch():
    # E1 found at arc 1.5 beyond B; catching beats leaving the partner to
    # march, so the dispatcher chases (realized makespan 2.78297, a hair
    # under the separate-exit value 2*pi - x - 2d = 2.78319)
    res = eval_f2f_diff(f2f(1.0, 1.0, 2.0))
    assert res.case_tag == "Fd-2c"
    assert res.time_from_perimeter == pytest.approx(2.78296, abs=1e-4)
    assert res.time_from_perimeter < TWO_PI - 1.5 - 2.0


def test_diff_case_2c_spec_placement():
    # d = 0.3, find at x = 0.35: catch at M, then the nearer exit
    res = eval_f2f_diff(f2f(0.3, 0.3, 0.15 + 0.35))
    assert res.case_tag == "Fd-2c"
    tr_makespan = _replay_makespan(f2f(0.3, 0.3, 0.5))
    assert res.time_from_perimeter == pytest.approx(tr_makespan, abs=1e-6)


def test_diff_case_1a_returns_to_found_exit():
    # tiny find with the probable exit far beyond the catch point
    d = 0.4
    res = eval_f2f_diff(f2f(d, d, d / 2.0 + 0.399))
    assert res.case_tag == "Fd-1a"
    assert res.r1_exit_time == pytest.approx(res.r2_exit_time, abs=1e-9)


def _replay_makespan(scn):
    from diskevac.replay import replay

    _, _, makespan = replay(scn)
    return makespan


# ---------------------------------------------------------------------------
# labeled
# ---------------------------------------------------------------------------

def test_labeled_start_on_exit():
    res = eval_f2f_labeled(f2f(2.0, 0.0, 0.0, labeled=True))
    assert res.time_from_perimeter == 0.0


def test_labeled_case_2_exit_ahead_of_catch():
    # find E2 at x = 0.3 (zeta = 1, d = 2): the partner reaches E1 at
    # d - zeta - x = 0.7 before any catch could finish
    e1 = (0.5 + 0.3 - 2.0) % TWO_PI
    res = eval_f2f_labeled(f2f(2.0, 1.0, e1, labeled=True))
    assert res.case_tag == "FL-2"
    assert res.time_from_perimeter == pytest.approx(0.7, abs=1e-9)


def test_labeled_case_4():
    res = eval_f2f_labeled(f2f(1.0, 0.5, 2.55, labeled=True))
    assert res.case_tag == "FL-4"
    assert res.time_from_perimeter == pytest.approx(
        TWO_PI - 1.0 - 0.5 - 2.3, abs=1e-9)


def test_labeled_case_1_and_3_chase():
    rng = np.random.RandomState(1)
    seen = set()
    for _ in range(400):
        d = rng.uniform(0.2, math.pi)
        zeta = rng.uniform(0.0, d)
        res = eval_f2f_labeled(f2f(d, zeta, rng.uniform(0, TWO_PI), labeled=True))
        seen.add(res.case_tag)
        assert res.time_from_perimeter >= 0.0
    assert {"FL-1", "FL-2", "FL-3", "FL-4"} <= seen


# ---------------------------------------------------------------------------
# interception and catch helpers
# ---------------------------------------------------------------------------

def test_intercept_straight_line_chase():
    # target runs along the x-axis from (0,0) at t=0; chaser waits at (1,1)
    hit = intercept_moving_target((1.0, 1.0), 0.0, (0.0, 0.0), 0.0, (3.0, 0.0))
    assert hit is not None
    point, t, s = hit
    assert point_distance((1.0, 1.0), point) == pytest.approx(t, abs=1e-12)
    assert s == pytest.approx(t, abs=1e-12)


def test_intercept_miss_when_late():
    # chaser far away, short target segment: no interception
    hit = intercept_moving_target((-1.0, 0.0), 0.0, (1.0, 0.0), 0.0, (1.2, 0.0))
    assert hit is None


def test_catch_on_circle_equation():
    # the returned p satisfies p - t0 = |N - partner(p)|
    n = (0.2, 0.3)
    p = catch_on_circle_from(n, 1.0, 0.0)
    pos = cartesian(ArcPos(-p))
    assert p - 1.0 == pytest.approx(point_distance(n, pos), abs=1e-9)


# ---------------------------------------------------------------------------
# batch twins
# ---------------------------------------------------------------------------

def test_batch_matches_scalar_all_variants():
    rng = np.random.RandomState(8)
    for _ in range(30):
        d = rng.uniform(0.01, math.pi)
        e1s = rng.uniform(0.0, TWO_PI, size=40)
        times, codes = _batch.batch_f2f_same(d, e1s)
        for e1, t, c in zip(e1s, times, codes):
            res = eval_f2f_same(f2f(d, 0.0, float(e1)))
            assert res.time_from_perimeter == pytest.approx(float(t), abs=1e-9)
            assert res.case_tag == _batch.decode_tag(c)
        times, codes = _batch.batch_f2f_diff(d, e1s)
        for e1, t, c in zip(e1s, times, codes):
            res = eval_f2f_diff(f2f(d, d, float(e1)))
            assert res.time_from_perimeter == pytest.approx(float(t), abs=1e-9)
            assert res.case_tag == _batch.decode_tag(c)
        zeta = rng.uniform(0.0, d)
        times, codes = _batch.batch_f2f_labeled(d, zeta, e1s)
        for e1, t, c in zip(e1s, times, codes):
            res = eval_f2f_labeled(f2f(d, zeta, float(e1), labeled=True))
            assert res.time_from_perimeter == pytest.approx(float(t), abs=1e-9)
            assert res.case_tag == _batch.decode_tag(c)


def test_case_dispatch_total_on_grid():
    grid = _batch.exit_grid(0.01)
    for d in (0.0, 0.3, 1.0, 1.9, 2.6, math.pi):
        for fn in (lambda dd: _batch.batch_f2f_same(dd, grid),
                   lambda dd: _batch.batch_f2f_diff(dd, grid),
                   lambda dd: _batch.batch_f2f_labeled(dd, dd / 2.0, grid)):
            times, codes = fn(d)
            assert np.all(np.isfinite(times))
            assert np.all(codes >= 0)


def test_worst_f2f_variant_ordering_small_d():
    t_same, _, _ = worst_f2f(0.01, "same", 0.005)
    t_diff, _, _ = worst_f2f(0.01, "diff", 0.005)
    assert t_diff < t_same


def test_worst_f2f_ordering_flips_in_exception_window():
    # inside (1.895, 2.005) starting apart is the worse policy
    t_same, _, _ = worst_f2f(1.95, "same", 0.002)
    t_diff, _, _ = worst_f2f(1.95, "diff", 0.002)
    assert t_same < t_diff


def test_worst_f2f_d0_cross_check():
    # at d = 0 both variants collapse to the single-exit strategy whose
    # total time (with the center leg) reproduces the known 5.74 figure
    t_same, _, _ = worst_f2f(0.0, "same", 0.002)
    t_diff, _, _ = worst_f2f(0.0, "diff", 0.002)
    assert t_same + 1.0 == pytest.approx(5.739, abs=5e-3)
    assert t_diff == pytest.approx(t_same, abs=1e-6)
