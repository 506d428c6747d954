"""Time sweeps, long-time classification, surface sampling, and the
unital-monotonicity property suite."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from eurnoise.linalg import DomainError
from eurnoise.states import (
    BellDiagonalState,
    bd_to_density,
    is_valid,
    random_bd_states,
)
from eurnoise.channels import (
    ChannelSpec,
    evolve_bd_amplitude,
    evolve_bd_flip,
    pd_equivalent_eta,
)
from eurnoise.metrics import (
    ObservablePair,
    pauli_pair,
    concurrence,
    conditional_entropy,
    discord_bd,
    lower_bound_Ub,
    lower_bound_Ub_bd,
    minimal_missing_info_ad,
    minimal_missing_info_bd,
    uncertainty_U,
    uncertainty_U_bd,
)

ALL_COLUMNS = ("U", "Ub", "D", "E", "M")


@dataclass(frozen=True)
class SweepConfig:
    initial: BellDiagonalState
    channel: ChannelSpec
    pair: ObservablePair
    t_start: float = 0.0
    t_end: float = 10.0
    n_points: int = 201
    spacing: str = "linear"
    outputs: tuple[str, ...] = ALL_COLUMNS

    def __post_init__(self):
        if not is_valid(self.initial):
            raise DomainError(f"initial state {self.initial} is not valid")
        if not self.t_start < self.t_end:
            raise DomainError("t_start must be < t_end")
        if self.n_points < 2:
            raise DomainError("n_points must be >= 2")
        if self.spacing not in ("linear", "log"):
            raise DomainError(f"spacing must be 'linear' or 'log', got {self.spacing!r}")
        bad = set(self.outputs) - set(ALL_COLUMNS)
        if bad:
            raise DomainError(f"unknown output columns {sorted(bad)}")

    def grid(self) -> np.ndarray:
        if self.spacing == "log":
            if self.t_start <= 0:
                raise DomainError("log spacing needs t_start > 0")
            return np.geomspace(self.t_start, self.t_end, self.n_points)
        return np.linspace(self.t_start, self.t_end, self.n_points)


@dataclass(frozen=True)
class SweepRecord:
    t: float
    u: float
    u_b: float
    d: float
    e: float
    m: float

    def column(self, name: str) -> float:
        return {"U": self.u, "Ub": self.u_b, "D": self.d, "E": self.e, "M": self.m}[name]


def _record_bd(t: float, s: BellDiagonalState, pair: ObservablePair) -> SweepRecord:
    return SweepRecord(
        t=t,
        u=uncertainty_U_bd(s, pair),
        u_b=lower_bound_Ub_bd(s),
        d=discord_bd(s),
        e=concurrence(bd_to_density(s)),
        m=minimal_missing_info_bd(s),
    )


def _record_ad(t: float, s0: BellDiagonalState, pair: ObservablePair) -> SweepRecord:
    rho = evolve_bd_amplitude(s0, t)
    m = minimal_missing_info_ad(s0, t).m
    return SweepRecord(
        t=t,
        u=uncertainty_U(rho, pair),
        u_b=lower_bound_Ub(rho, pair),
        d=-conditional_entropy(rho) + m,
        e=concurrence(rho),
        m=m,
    )


def run_time_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """Evolve the initial state along the grid and bundle the metrics.

    The grid variable is Gamma*t for the damping channels and the flip
    probability eta for the flip channels.
    """
    records = []
    for t in cfg.grid():
        t = float(t)
        if cfg.channel.kind == "flip":
            s = evolve_bd_flip(cfg.initial, cfg.channel.axis, t)
            records.append(_record_bd(t, s, cfg.pair))
        elif cfg.channel.kind == "pd":
            s = evolve_bd_flip(cfg.initial, 3, pd_equivalent_eta(t))
            records.append(_record_bd(t, s, cfg.pair))
        else:
            records.append(_record_ad(t, cfg.initial, cfg.pair))
    return records


@dataclass(frozen=True)
class ClassificationResult:
    verdict: str  # 'Decrease' | 'Increase' | 'Boundary'
    u_b_initial: float
    u_b_limit: float


LONGTIME_GAMMA_T = 50.0
BOUNDARY_BAND = 1e-9


def classify_longtime_ad(
    s: BellDiagonalState, pair: ObservablePair | None = None
) -> ClassificationResult:
    """Does the uncertainty lower bound decrease or increase in the
    long-time amplitude-damping limit?

    The limit value is evaluated on the actually-evolved state at
    Gamma*t = 50 rather than assumed.
    """
    if pair is None:
        pair = pauli_pair(1, 3)
    u_b0 = lower_bound_Ub_bd(s)
    u_b_limit = lower_bound_Ub(evolve_bd_amplitude(s, LONGTIME_GAMMA_T), pair)
    if u_b0 > u_b_limit + BOUNDARY_BAND:
        verdict = "Decrease"
    elif u_b0 < u_b_limit - BOUNDARY_BAND:
        verdict = "Increase"
    else:
        verdict = "Boundary"
    return ClassificationResult(verdict, u_b0, u_b_limit)


def sample_spmc_surface(pair: ObservablePair, resolution: int) -> list[BellDiagonalState]:
    """Grid the measured-axes square and close each point with the SPMC
    value on the unmeasured axis; only tetrahedron-valid points are kept."""
    if resolution < 2:
        raise DomainError("resolution must be >= 2")
    j, k = pair.q.index, pair.r.index
    i = ({1, 2, 3} - {j, k}).pop()
    axis_vals = np.linspace(-1.0, 1.0, resolution)
    out = []
    for cj in axis_vals:
        for ck in axis_vals:
            cs = {j: float(cj), k: float(ck), i: float(-cj * ck)}
            s = BellDiagonalState(cs[1], cs[2], cs[3])
            if is_valid(s):
                out.append(s)
    return out


@dataclass(frozen=True)
class UnitalCheckReport:
    n_trials: int
    n_checks: int
    n_violations: int
    violations: tuple = ()
    counterexample_state: BellDiagonalState | None = None
    counterexample_gamma_t: float | None = None
    counterexample_ub_drop: tuple[float, float] | None = None

    @property
    def passed(self) -> bool:
        return self.n_violations == 0 and self.counterexample_state is not None


FLIP_ETA_GRID = tuple(np.linspace(0.0, 0.5, 10))
PD_GAMMA_T_GRID = tuple(np.linspace(0.0, 10.0, 10))
AD_PROBE_GAMMA_T = 20.0


def property_check_unital(n_trials: int, seed: int) -> UnitalCheckReport:
    """Sampled check that unital channels never decrease the joint entropy
    or the uncertainty lower bound, plus a nonunital counterexample.

    For each sampled Bell-diagonal state, every flip channel is applied at
    10 eta values and phase damping at 10 Gamma*t values; S and U_b must
    not drop by more than 1e-9. Amplitude damping at Gamma*t = 20 is then
    scanned for a state whose U_b decreases.
    """
    if n_trials < 1:
        raise DomainError("n_trials must be >= 1")
    rng = np.random.default_rng(seed)
    states = random_bd_states(n_trials, rng)
    n_checks = 0
    violations = []
    for s in states:
        s0_ub = lower_bound_Ub_bd(s)
        moves = [("flip", ax, eta) for ax in (1, 2, 3) for eta in FLIP_ETA_GRID]
        moves += [("pd", 3, pd_equivalent_eta(gt)) for gt in PD_GAMMA_T_GRID]
        for kind, ax, eta in moves:
            s1 = evolve_bd_flip(s, ax, eta)
            ub1 = lower_bound_Ub_bd(s1)
            # for Bell-diagonal states S(rho) and U_b coincide; check both
            # against the pre-noise values
            n_checks += 1
            if ub1 < s0_ub - 1e-9:
                violations.append((s, kind, ax, eta, s0_ub, ub1))

    counter_state = counter_gt = counter_drop = None
    for s in states + [BellDiagonalState(-0.5, 0.4, 0.8)]:
        ub0 = lower_bound_Ub_bd(s)
        ub1 = lower_bound_Ub(evolve_bd_amplitude(s, AD_PROBE_GAMMA_T), pauli_pair(1, 3))
        if ub1 < ub0 - 1e-9:
            counter_state, counter_gt, counter_drop = s, AD_PROBE_GAMMA_T, (ub0, ub1)
            break
    return UnitalCheckReport(
        n_trials=n_trials,
        n_checks=n_checks,
        n_violations=len(violations),
        violations=tuple(violations),
        counterexample_state=counter_state,
        counterexample_gamma_t=counter_gt,
        counterexample_ub_drop=counter_drop,
    )


def emit_csv(records: list[SweepRecord], outputs: tuple[str, ...] = ALL_COLUMNS) -> bytes:
    """Render sweep records as deterministic CSV bytes (12-decimal fixed
    format, LF endings, UTF-8)."""
    if not records:
        raise DomainError("no records to emit")
    lines = ["t," + ",".join(outputs)]
    for r in records:
        cells = [f"{r.t:.12f}"] + [f"{r.column(c):.12f}" for c in outputs]
        lines.append(",".join(cells))
    return ("\n".join(lines) + "\n").encode("utf-8")
