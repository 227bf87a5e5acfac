"""Experiment configuration: TOML schema, validation, factories.

A config file has four tables. ``[experiment]`` fixes the sweep shape
(t ladder, observation fractions u, replicate count, master seed);
``[law]`` and ``[response]`` pick the model; ``[verdicts]`` optionally
overrides the pass thresholds. Example:

    [experiment]
    t_ladder = [100.0, 1000.0]
    u_points = [0.5, 1.0]
    replicates = 512
    seed = 42

    [law]
    family = "pareto"
    alpha = 1.5
    xm = 1.0

    [response]
    kind = "power"
    beta = 1.0
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

from .renewal import Deterministic, Exponential, GammaLaw, Pareto, ParetoLog
from .response import (
    BoundedLimitResponse,
    Constant,
    ExpTail,
    LogPower,
    PowerResponse,
    PowerTail,
    SmoothedResponse,
    StepCdfResponse,
    TwoSidedResponse,
)

__all__ = ["ConfigError", "VerdictThresholds", "ExperimentConfig"]

_CASES = ("a1", "a2", "a3", "a4", "a5")
_FAMILIES = ("exponential", "deterministic", "gamma", "pareto", "pareto_log")
_KINDS = ("power", "bounded", "step_cdf")


class ConfigError(ValueError):
    """Raised for a structurally or semantically invalid configuration."""


@dataclass(frozen=True)
class VerdictThresholds:
    ks_max: float = 0.03
    ecf_max_se: float = 5.0
    moment_max_se: float = 4.0
    ks_p_min: float = 0.01

    def __post_init__(self):
        for name in ("ks_max", "ecf_max_se", "moment_max_se", "ks_p_min"):
            if getattr(self, name) <= 0.0:
                raise ConfigError(f"verdicts.{name} must be positive")


@dataclass
class ExperimentConfig:
    t_ladder: tuple
    u_points: tuple
    replicates: int
    seed: int
    law_table: dict
    response_table: dict
    case: str | None = None
    grid_points: int = 257
    threads: int = 1
    verdicts: VerdictThresholds = field(default_factory=VerdictThresholds)
    output_dir: str = "."
    output_formats: tuple = ("json", "csv")

    def __post_init__(self):
        self.t_ladder = tuple(float(t) for t in self.t_ladder)
        self.u_points = tuple(float(u) for u in self.u_points)
        if not self.t_ladder or any(t <= 0.0 for t in self.t_ladder):
            raise ConfigError("experiment.t_ladder must be nonempty and positive")
        if list(self.t_ladder) != sorted(self.t_ladder):
            raise ConfigError("experiment.t_ladder must be ascending")
        if not self.u_points or any(u <= 0.0 for u in self.u_points):
            raise ConfigError("experiment.u_points must be nonempty and positive")
        if list(self.u_points) != sorted(set(self.u_points)):
            raise ConfigError("experiment.u_points must be strictly ascending")
        if self.replicates < 8:
            raise ConfigError("experiment.replicates must be at least 8")
        if not (0 <= int(self.seed) < 2**64):
            raise ConfigError("experiment.seed must fit in 64 bits")
        if self.grid_points < 2:
            raise ConfigError("experiment.grid_points must be at least 2")
        if self.threads < 1:
            raise ConfigError("experiment.threads must be at least 1")
        if self.case is not None and self.case not in _CASES:
            raise ConfigError(f"experiment.case must be one of {_CASES}")
        if self.law_table.get("family") not in _FAMILIES:
            raise ConfigError(f"law.family must be one of {_FAMILIES}")
        if self.response_table.get("kind") not in _KINDS:
            raise ConfigError(f"response.kind must be one of {_KINDS}")
        for fmt in self.output_formats:
            if fmt not in ("json", "csv", "svg"):
                raise ConfigError(f"unknown output format {fmt!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        try:
            exp = dict(data["experiment"])
            law = dict(data["law"])
            response = dict(data["response"])
        except (KeyError, TypeError) as err:
            raise ConfigError(f"missing config table: {err}") from None
        try:
            verdicts = VerdictThresholds(**data.get("verdicts", {}))
        except TypeError as err:
            raise ConfigError(f"bad verdicts table: {err}") from None
        out = data.get("output", {})
        try:
            return cls(
                t_ladder=tuple(exp["t_ladder"]),
                u_points=tuple(exp["u_points"]),
                replicates=int(exp["replicates"]),
                seed=int(exp["seed"]),
                law_table=law,
                response_table=response,
                case=exp.get("case"),
                grid_points=int(exp.get("grid_points", 257)),
                threads=int(exp.get("threads", 1)),
                verdicts=verdicts,
                output_dir=str(out.get("directory", ".")),
                output_formats=tuple(out.get("formats", ("json", "csv"))),
            )
        except KeyError as err:
            raise ConfigError(f"missing experiment key: {err}") from None
        except TypeError as err:
            raise ConfigError(f"bad config value: {err}") from None

    @classmethod
    def from_toml(cls, path: str) -> "ExperimentConfig":
        try:
            with open(path, "rb") as fh:
                data = _toml.load(fh)
        except OSError as err:
            raise ConfigError(f"cannot read config file: {err}") from None
        except _toml.TOMLDecodeError as err:
            raise ConfigError(f"malformed TOML: {err}") from None
        return cls.from_dict(data)

    def law(self):
        """Instantiate the inter-arrival law described by [law]."""
        t = self.law_table
        family = t["family"]
        try:
            if family == "exponential":
                return Exponential(rate=float(t.get("rate", 1.0)))
            if family == "deterministic":
                return Deterministic(a=float(t.get("a", 1.0)))
            if family == "gamma":
                return GammaLaw(shape=float(t.get("shape", 2.0)),
                                rate=float(t.get("rate", 1.0)))
            if family == "pareto":
                return Pareto(alpha=float(t.get("alpha", 1.5)),
                              xm=float(t.get("xm", 1.0)))
            return ParetoLog(alpha=float(t.get("alpha", 1.5)),
                             xm=float(t.get("xm", 1.0)),
                             p=float(t.get("p", 0.5)))
        except ValueError as err:
            raise ConfigError(f"law: {err}") from None

    def response(self):
        """Instantiate the response function described by [response]."""
        t = self.response_table
        kind = t["kind"]
        try:
            if kind == "power":
                sv_name = t.get("slowly_varying", "constant")
                if sv_name == "constant":
                    sv = Constant(c=float(t.get("c", 1.0)))
                elif sv_name == "log_power":
                    sv = LogPower(c=float(t.get("c", 1.0)), p=float(t.get("p", 1.0)))
                else:
                    raise ConfigError(f"unknown slowly_varying {sv_name!r}")
                base = PowerResponse(beta=float(t.get("beta", 1.0)), slowly_varying=sv)
            elif kind == "bounded":
                base = BoundedLimitResponse(limit=float(t.get("limit", 1.0)),
                                            rate=float(t.get("rate", 1.0)))
            else:
                atoms = tuple(float(a) for a in t["atoms"])
                weights = tuple(float(w) for w in t["weights"])
                base = StepCdfResponse(atoms=atoms, weights=weights)
            if t.get("smoothed", False):
                base = SmoothedResponse(base)
            if t.get("two_sided", False):
                left_kind = t.get("left_kind", "exp_tail")
                if left_kind == "exp_tail":
                    left = ExpTail(rate=float(t.get("left_rate", 1.0)),
                                   amp=float(t.get("left_amp", 1.0)))
                elif left_kind == "power_tail":
                    left = PowerTail(exponent=float(t.get("left_exponent", 2.0)),
                                     amp=float(t.get("left_amp", 1.0)))
                else:
                    raise ConfigError(f"unknown left_kind {left_kind!r}")
                base = TwoSidedResponse(base=base, left=left)
            return base
        except KeyError as err:
            raise ConfigError(f"response needs key {err}") from None
        except ValueError as err:
            raise ConfigError(f"response: {err}") from None

    def resolved(self) -> dict:
        """Fully defaulted plain-dict view, embedded in every output.

        Only experiment identity goes in: execution details (worker
        count, output destinations) are omitted so reruns of the same
        experiment produce identical reports.
        """
        v = self.verdicts
        return {
            "experiment": {
                "case": self.case,
                "t_ladder": list(self.t_ladder),
                "u_points": list(self.u_points),
                "replicates": self.replicates,
                "seed": self.seed,
                "grid_points": self.grid_points,
            },
            "law": {k: self.law_table[k] for k in sorted(self.law_table)},
            "response": {k: self.response_table[k] for k in sorted(self.response_table)},
            "verdicts": {
                "ks_max": v.ks_max,
                "ecf_max_se": v.ecf_max_se,
                "moment_max_se": v.moment_max_se,
                "ks_p_min": v.ks_p_min,
            },
        }
