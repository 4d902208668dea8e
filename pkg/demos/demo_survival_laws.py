"""Survival probability under repeated projective measurement.

Three regimes on display:
  * excited state in vacuum: the fitted decay rate converges to the free
    decay rate gamma as the measurement spacing shrinks;
  * frozen state in a squeezed bath: the first-order rate vanishes and
    the residual decay follows the second-order law, linear in dt;
  * a seeded Monte Carlo unraveling reproduces the exact curve.
"""

import numpy as np

from squeezed_zeno import (
    BathParams,
    MeasurementSchedule,
    monte_carlo_survival,
    repeated_measurement_survival,
    second_order_rate,
    survival_rate,
    zeno_states,
)

EXCITED = np.array([1.0, 0.0], dtype=complex)

print("--- excited state, vacuum bath: continuous-monitoring limit ---")
vacuum = BathParams(gamma=1.0, n=0.0, m=0.0)
print(f"first-order rate: {survival_rate(vacuum, EXCITED):+.6f}  (free decay = -1)")
for dt in (0.1, 0.01, 0.001):
    curve = repeated_measurement_survival(vacuum, EXCITED, MeasurementSchedule(dt, int(1 / dt)))
    fitted = np.log(curve.probabilities[-1]) / curve.times[-1]
    print(f"  dt = {dt:6.3f}: fitted rate {fitted:+.6f}")

print("\n--- frozen state, squeezed bath N=1: second-order law ---")
bath = BathParams.maximal(gamma=1.0, n=1.0, psi=0.0)
frozen, _ = zeno_states(bath)
print(f"first-order rate: {survival_rate(bath, frozen):+.2e}  (vanishes)")
for dt in (0.01, 0.005, 0.0025):
    curve = repeated_measurement_survival(bath, frozen, MeasurementSchedule(dt, 200))
    fitted = np.log(curve.probabilities[-1]) / curve.times[-1]
    predicted = second_order_rate(bath, frozen, dt)
    print(f"  dt = {dt:7.4f}: fitted {fitted:+.3e}  second-order {predicted:+.3e}")

print("\n--- Monte Carlo oracle vs exact curve ---")
sched = MeasurementSchedule(0.05, 40)
exact = repeated_measurement_survival(bath, EXCITED, sched)
mc = monte_carlo_survival(bath, EXCITED, sched, n_traj=50000, seed=2024)
print(f"{'t':>5} {'exact':>8} {'mc':>8} {'sigma':>8}")
for k in range(0, 41, 8):
    print(
        f"{exact.times[k]:5.2f} {exact.probabilities[k]:8.4f}"
        f" {mc.probabilities[k]:8.4f} {mc.stderr[k]:8.4f}"
    )
