"""Photon savings from letting multiplexed photons span two qudits.

A 7-qudit packet normally needs 7 photons (3 qubits each).  Six photons
suffice when three degree-4 photons each carry one qudit plus a share of a
seventh, provided the shared photons ride the better channel.  The price: the
better channel must clear ~0.95 before the other channel can relax below the
single-channel threshold.  The same trick encodes 11 qudits with 15 photons
instead of 22.
"""

from qnetagg import (
    QrsCode,
    shared7_configuration,
    grid_points,
    ps6,
    solve_p1,
    success_probability,
    sweep_curve,
)
from qnetagg.planner import (
    shared_photon_7_scenario,
    shared_photon_11_scenario,
    single_channel_scenario,
)

print("6 photons / 7 qudits (vs 7 photons single channel)")
ref7 = solve_p1(single_channel_scenario(QrsCode(7, 4), 3), 1.0)
print(f"  7-photon single-channel threshold: {ref7:.4f}")
config = shared7_configuration(0.882, 0.95)
print(f"  engine on the 6-photon layout at (0.882, 0.95): "
      f"{success_probability(config):.5f}  (polynomial: {ps6(0.882, 0.95):.5f})")
curve = sweep_curve(shared_photon_7_scenario(), grid_points(0.9, 1.0, 0.002))
drop = min(p2 for p2, p1 in curve.points if p1 < ref7)
print(f"  the 6-photon curve beats the reference only once p2 > {drop:.3f}\n")

print("15 photons / 11 qudits (vs 22 photons single channel)")
ref11 = solve_p1(single_channel_scenario(QrsCode(11, 6), 2), 1.0)
print(f"  22-photon single-channel threshold: {ref11:.4f}")
curve = sweep_curve(shared_photon_11_scenario(), grid_points(0.85, 1.0, 0.002))
crossing = next(p2 for p2, p1 in curve.points if p1 < ref11)
print(f"  the 15-photon curve crosses that reference near p2 = {crossing:.3f}")
print(f"  beyond it, 7 fewer photons carry the same packet")
