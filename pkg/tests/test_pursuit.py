import math

import pytest

from diskevac.cli import random_scenarios
from diskevac.face_to_face import Intent, plan_f2f, pursuit_plans
from diskevac.geometry import point_distance
from diskevac.scenarios import CommModel


def test_arrivals_strictly_increase_at_unit_speed():
    checked = 0
    for scn in random_scenarios(seed=31, samples=300):
        if scn.model is not CommModel.FACE_TO_FACE:
            continue
        out = plan_f2f(scn)
        for plan in pursuit_plans(out):
            prev_t, prev_p = 0.0, None
            for wp in plan.waypoints:
                if prev_p is not None:
                    assert wp.planned_arrival > prev_t
                    hop = point_distance(prev_p, wp.point)
                    assert hop == pytest.approx(
                        wp.planned_arrival - prev_t, abs=1e-9)
                prev_t, prev_p = wp.planned_arrival, wp.point
            assert plan.waypoints[-1].intent is Intent.EXIT_HERE
            checked += 1
    assert checked > 200


def test_catch_waypoints_sit_on_the_circle():
    for scn in random_scenarios(seed=32, samples=200):
        if scn.model is not CommModel.FACE_TO_FACE:
            continue
        out = plan_f2f(scn)
        for plan in pursuit_plans(out):
            for wp in plan.waypoints:
                if wp.intent is Intent.CATCH_ON_CIRCLE:
                    assert math.hypot(*wp.point) == pytest.approx(1.0, abs=1e-9)
                if wp.intent is Intent.MEET_ON_CHORD:
                    assert math.hypot(*wp.point) < 1.0 + 1e-9
