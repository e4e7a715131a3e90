"""Approximate baselines behind the common method interface."""

from exactmix.baselines.em import em_max_likelihood
from exactmix.baselines.gibbs import gibbs_sample
from exactmix.baselines.variational import variational_bayes
from exactmix.inference.results import InferenceResult
from exactmix.model.types import Model, ObservationSeq

from .base import InferenceMethod


class MaximumLikelihoodMethod(InferenceMethod):
    """EM point estimate of theta (no prior)."""

    name = "ml"

    def run(self, model: Model, obs: ObservationSeq) -> InferenceResult:
        state = em_max_likelihood(
            model, obs, max_iters=self.config.get("max_iters"), tol=self.config.get("tol")
        )
        return InferenceResult(
            method=self.name,
            theta_mean=state.theta,
            diagnostics={
                "iterations": state.iterations,
                "log_likelihood": state.log_likelihood[-1] if state.log_likelihood else 0.0,
                "tol": self.config.get("tol"),
            },
        )


class VariationalBayesMethod(InferenceMethod):
    """Mean of the variational Dirichlet surrogate."""

    name = "vb"

    def run(self, model: Model, obs: ObservationSeq) -> InferenceResult:
        state, mean = variational_bayes(
            model, obs, max_iters=self.config.get("max_iters"), tol=self.config.get("tol")
        )
        return InferenceResult(
            method=self.name,
            theta_mean=mean,
            diagnostics={
                "iterations": state.iterations,
                "gamma": state.gamma.tolist(),
                "tol": self.config.get("tol"),
            },
        )


class GibbsMethod(InferenceMethod):
    """Post-burn-in average of a seeded Gibbs chain."""

    name = "gibbs"

    def run(self, model: Model, obs: ObservationSeq) -> InferenceResult:
        iterations = self.config.get("gibbs_iterations")
        burn_in = self.config.get("burn_in")
        if burn_in is None and iterations:
            burn_in = int(iterations * self.config.get("burn_in_fraction", 0.1))
        run = gibbs_sample(
            model,
            obs,
            iterations=iterations,
            burn_in=burn_in,
            seed=self.config.get("seed"),
            batches=self.config.get("gibbs_batches"),
        )
        return InferenceResult(
            method=self.name,
            theta_mean=run.theta_mean,
            diagnostics={
                "iterations": run.iterations,
                "burn_in": run.burn_in,
                "seed": run.state.rng_seed,
                "batches": run.batches,
                "stderr": run.stderr.tolist(),
            },
        )
