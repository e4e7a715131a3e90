"""exactmix: exact Bayesian inference for Dirichlet-prior mixtures."""

__version__ = "0.1.0"
