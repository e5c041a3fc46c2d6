from __future__ import annotations

import pytest

from wright_radii import WrightParams

# The parameter grid used throughout: every (rho, beta) pair with
# rho in {1/2, 1, 2} and beta in {1/2, 1, 3/2, 2}.
GRID_RHOS = (0.5, 1.0, 2.0)
GRID_BETAS = (0.5, 1.0, 1.5, 2.0)


@pytest.fixture(scope="session")
def grid_params() -> list[WrightParams]:
    return [WrightParams(r, b) for r in GRID_RHOS for b in GRID_BETAS]


@pytest.fixture(scope="session")
def bessel_params() -> WrightParams:
    # rho = beta = 1 reduces the base function to J0(2r).
    return WrightParams(1.0, 1.0)
