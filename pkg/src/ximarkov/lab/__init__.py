"""Experiment runner, emitters and CLI for the dependence-measure library."""

from .emit import PlotSpec, SeriesSpec, emit
from .experiments import (EXPERIMENTS, ExperimentConfig, ExperimentResult,
                          run_4d_t, run_additive_error, run_dirac_limit,
                          run_equicorrelated, run_markov_diagnostics,
                          run_shuffle_counterexample, run_si_convergence)
from .io import read_csv_dataset

__all__ = [
    "EXPERIMENTS", "ExperimentConfig", "ExperimentResult", "PlotSpec",
    "SeriesSpec", "emit", "read_csv_dataset",
    "run_4d_t", "run_additive_error", "run_dirac_limit", "run_equicorrelated",
    "run_markov_diagnostics", "run_shuffle_counterexample", "run_si_convergence",
]
