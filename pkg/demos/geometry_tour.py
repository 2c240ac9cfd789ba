"""A tour of the target-relative geometry.

Walks through the coordinates every other capability builds on: range and
line-of-sight angle of a pursuer, the bearing angle that splits closing from
orbiting, the (d, psi) coordinates of a pursuer pair, the four sign-plane
regions, and the critical look angle at which the pair's angular spacing
stops closing.

Run from the repository root:  python demos/geometry_tour.py
"""

import math

from encircle import (
    AgentState,
    RelativeState,
    SpeedParams,
    TargetState,
    critical_look_angle,
    pair_geometry,
    pair_rates,
    relative_rates,
    relative_state,
)

target = TargetState(0.0, 0.0)
speed = SpeedParams(40.0)

print("== one pursuer ==")
for label, agent in [
    ("heading straight at the target", AgentState(100.0, 0.0, math.pi)),
    ("orbiting clockwise", AgentState(100.0, 0.0, -math.pi / 2)),
    ("north of the target, heading east", AgentState(0.0, 50.0, 0.0)),
]:
    rel = relative_state(agent, target)
    r_dot, theta_dot = relative_rates(rel, speed)
    print(
        f"{label}: r = {rel.r:6.1f} m, theta = {rel.theta:+.3f} rad, "
        f"sigma = {rel.sigma:+.3f} rad -> r_dot = {r_dot:+7.2f} m/s, "
        f"theta_dot = {theta_dot:+.4f} rad/s"
    )
print("bearing in (0, pi) means theta_dot < 0: clockwise revolution.\n")

print("== a pursuer pair in (d, psi) coordinates ==")
rel_i = relative_state(AgentState(-44.0, 168.0, -2.2), target)
rel_j = relative_state(AgentState(31.0, 140.0, -1.9), target)
pair = pair_geometry(rel_i, rel_j)
print(
    f"d = {pair.d:+.2f} m (loiter-radius difference), psi = {pair.psi:+.3f} rad "
    f"(angular spacing), separation = {pair.r:.2f} m, region {pair.region.value}"
)
d_dot, psi_dot = pair_rates(rel_i, rel_j, speed)
print(f"rates: d_dot = {d_dot:+.2f} m/s, psi_dot = {psi_dot:+.4f} rad/s\n")

print("== the four regions, approach phase ==")
print("samples with both bearings in (0, pi/2); collisions can only build in II and IV")
cases = {
    "I  ": (+15.0, +0.4, 0.5, 0.9),
    "II ": (-15.0, +0.4, 0.9, 0.5),
    "III": (-15.0, -0.4, 0.9, 0.5),
    "IV ": (+15.0, -0.4, 0.5, 0.9),
}
for name, (d, psi, sig_i, sig_j) in cases.items():
    r_j = 180.0
    rel_i = RelativeState(r=r_j + d, theta=psi, sigma=sig_i)
    rel_j = RelativeState(r=r_j, theta=0.0, sigma=sig_j)
    d_dot, psi_dot = pair_rates(rel_i, rel_j, speed)
    closing = "-> (d, psi) -> (0, 0): collision course" if d_dot * d < 0 and psi_dot * psi < 0 else ""
    print(
        f"region {name} (d = {d:+.0f}, psi = {psi:+.1f}): "
        f"d_dot = {d_dot:+6.2f}, psi_dot = {psi_dot:+.4f} {closing}"
    )

print("\n== critical look angle ==")
rel_j = RelativeState(r=200.0, theta=0.4, sigma=math.pi / 6)
for r_i in (150.0, 250.0, 420.0):
    rel_i = RelativeState(r=r_i, theta=0.0, sigma=0.0)
    star = critical_look_angle(rel_i, rel_j)
    if star is None:
        print(f"r_i = {r_i:5.1f}: no bearing of pursuer i can stop the spacing drift")
    else:
        lo = RelativeState(r=r_i, theta=0.0, sigma=star - 1e-3)
        hi = RelativeState(r=r_i, theta=0.0, sigma=star + 1e-3)
        print(
            f"r_i = {r_i:5.1f}: spacing rate flips sign at sigma = {star:.4f} rad "
            f"({pair_rates(lo, rel_j, speed)[1]:+.2e} vs {pair_rates(hi, rel_j, speed)[1]:+.2e})"
        )
