"""Upper bounds on downlink throughput of 802.11ac/ax with two-level aggregation."""

from .airtime import CycleTiming, cycle_timing, resolve, t_back, t_data_ax_mu, t_data_su_mu_ac, tx_time
from .config import EvalConfig, FlavorKind, UlMode
from .errors import (
    DomainError,
    Infeasible,
    InfeasiblePlan,
    InvalidValue,
    MissingEntry,
    ModelError,
    MpduTooLarge,
    MsduTooLarge,
    OracleLimit,
    TableInconsistent,
    TableParseError,
    Unavailable,
)
from .frames import AmpduPlan, MsduProfile, Window, expected_goodput_bits, msdu_profile
from .montecarlo import TrialSpec, simulate_goodput
from .optimizer import (
    ClosedFormEstimate,
    OptimizerResult,
    brute_force_composition_oracle,
    closed_form,
    closed_form_for,
    cross_validate,
    optimize_exhaustive,
)
from .params import Link, Mode, ParameterSet, Standard, default_parameters, load_tables
from .planner import Flavor, PlanReport, best_overall, best_per_flavor, enumerate_flavors
from .throughput import ThroughputResult, eval_mu_ac, eval_mu_ax, eval_su, evaluate

__version__ = "0.1.0"
