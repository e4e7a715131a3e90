"""p~ as the product over causes of their own generating functions."""

import numpy as np

from exactmix.algebra.masks import full_mask
from exactmix.algebra.poly import TruncatedPoly, poly_mul, poly_one
from exactmix.model.moments import cause_subset_products
from exactmix.model.types import Model, ObservationSeq
from exactmix.oracles.enumeration import pochhammer_table


def factor_product_ptilde(model: Model, obs: ObservationSeq, cap: int | None = None) -> float:
    """Coefficient of X^W in prod_z sum_I (alpha_z)_{|I|} beta_I(z) X^I.

    Each factor is the truncated Taylor expansion of (1 - sum_i beta(w_i|z) X_i)^(-alpha_z).
    O(m 3^n).
    """
    n = obs.n
    product = poly_one(n, cap)
    sizes = np.array([bin(mask).count("1") for mask in range(1 << n)], dtype=np.int64)
    moments = pochhammer_table(model.alpha, n)
    for z in range(model.m):
        factor = moments[z, sizes] * cause_subset_products(model, obs, z, cap)
        product = poly_mul(product, TruncatedPoly(n, factor))
    return float(product.coeff[full_mask(n)])
