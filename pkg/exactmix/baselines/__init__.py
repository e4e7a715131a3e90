"""Approximate baselines: maximum likelihood, variational Bayes, Gibbs sampling."""

from .states import EMState, GibbsRun, GibbsState, VBState
from .em import em_max_likelihood
from .variational import variational_bayes
from .gibbs import gibbs_sample

__all__ = [
    'EMState', 'GibbsRun', 'GibbsState', 'VBState',
    'em_max_likelihood', 'variational_bayes', 'gibbs_sample',
]
