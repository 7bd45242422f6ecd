"""적응 스텝 적분, 감쇠 지표, 격자 스윕"""

from steadycert.simulate.integrator import DormandPrince45, Trajectory, integrate, integrate_field
from steadycert.simulate.metrics import DampingMetrics, damping_metrics, oscillation_claim, pairwise_decay_check
from steadycert.simulate.sweep import InitialStatePolicy, SweepResult, sweep

__all__ = [
    "DampingMetrics",
    "DormandPrince45",
    "InitialStatePolicy",
    "SweepResult",
    "Trajectory",
    "damping_metrics",
    "integrate",
    "integrate_field",
    "oscillation_claim",
    "pairwise_decay_check",
    "sweep",
]
