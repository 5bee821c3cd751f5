"""Seeded Monte Carlo walker used as a statistical cross-check of exact results."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParamsError

RNG_METADATA = {
    "algorithm": "numpy PCG64",
    "streams": "default_rng([seed, trial_index]) per trial; default_rng([seed]) for trajectories",
}


@dataclass(frozen=True)
class SimConfig:
    seed: int
    trials: int = 100_000
    max_steps: int = 1_000_000
    burn_in: int = 1000

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParamsError(f"trials must be >= 1, got {self.trials}")
        if self.max_steps < 1:
            raise InvalidParamsError(f"max_steps must be >= 1, got {self.max_steps}")
        if self.burn_in < 0:
            raise InvalidParamsError("burn_in must be >= 0")


@dataclass(frozen=True, eq=False)
class SimResult:
    mode: str
    estimates: np.ndarray = field(repr=False)
    standard_errors: np.ndarray = field(repr=False)
    truncated: int = 0
    samples: int = 0
    truncated_fraction: float = 0.0
    estimate_excluding_truncated: float = float("nan")
    estimate_cap_bound: float = float("nan")
    rng: dict = field(default_factory=lambda: dict(RNG_METADATA))


def _row_cdfs(p):
    cdf = np.cumsum(p, axis=1)
    cdf[:, -1] = 1.0  # kill rounding so draws can never fall out of range
    return cdf


def simulate_stationary(p, cfg, start=0):
    """Visit frequencies along one long trajectory after burn-in.

    Standard errors come from batch means over sqrt(trials) batches.
    """
    mat = p.p
    n = mat.shape[0]
    cdf = _row_cdfs(mat)
    rng = np.random.default_rng([cfg.seed])
    draws = rng.random(cfg.burn_in + cfg.max_steps)
    node = start
    for t in range(cfg.burn_in):
        node = int(np.searchsorted(cdf[node], draws[t]))
    n_batches = max(2, int(np.sqrt(cfg.trials)))
    batch_len = cfg.max_steps // n_batches
    if batch_len < 1:
        raise InvalidParamsError("max_steps too small for batch-means error estimate")
    batch_freq = np.zeros((n_batches, n))
    pos = cfg.burn_in
    for b in range(n_batches):
        counts = np.zeros(n)
        for _ in range(batch_len):
            node = int(np.searchsorted(cdf[node], draws[pos]))
            counts[node] += 1
            pos += 1
        batch_freq[b] = counts / batch_len
    estimates = batch_freq.mean(axis=0)
    se = batch_freq.std(axis=0, ddof=1) / np.sqrt(n_batches)
    return SimResult(
        mode="stationary",
        estimates=estimates,
        standard_errors=se,
        samples=n_batches * batch_len,
    )


def simulate_hitting(p, source, target, cfg):
    """Mean first-arrival step over independent trials with per-trial RNG streams.

    Trials hitting the step cap are reported separately; if more than 0.1% are
    truncated the point estimate is withheld (NaN) and only the exclusion and
    cap-substitution bounds are reported.
    """
    mat = p.p
    n = mat.shape[0]
    if source == target:
        raise InvalidParamsError("source and target must differ")
    if not (0 <= source < n and 0 <= target < n):
        raise InvalidParamsError("source/target out of range")
    cdf = _row_cdfs(mat)
    steps = np.empty(cfg.trials)
    truncated = 0
    block = 64
    for trial in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, trial])
        node = source
        step = 0
        hit = False
        while step < cfg.max_steps and not hit:
            draws = rng.random(min(block, cfg.max_steps - step))
            for u in draws:
                node = int(np.searchsorted(cdf[node], u))
                step += 1
                if node == target:
                    hit = True
                    break
        if hit:
            steps[trial] = step
        else:
            steps[trial] = np.nan
            truncated += 1
    done = steps[~np.isnan(steps)]
    frac = truncated / cfg.trials
    mean_excl = float(done.mean()) if done.size else float("nan")
    cap_sub = steps.copy()
    cap_sub[np.isnan(cap_sub)] = cfg.max_steps
    mean_cap = float(cap_sub.mean())
    if frac > 0.001 or done.size == 0:
        estimate = float("nan")
        se = float("nan")
    else:
        estimate = mean_excl
        se = float(done.std(ddof=1) / np.sqrt(done.size)) if done.size > 1 else float("nan")
    return SimResult(
        mode="hitting",
        estimates=np.array([estimate]),
        standard_errors=np.array([se]),
        truncated=truncated,
        samples=int(done.size),
        truncated_fraction=frac,
        estimate_excluding_truncated=mean_excl,
        estimate_cap_bound=mean_cap,
    )
