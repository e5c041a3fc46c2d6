"""Certified Wright evaluation against the classical Bessel reduction.

For rho = beta = 1 the Wright series collapses to W(1,1; -r^2) = J0(2r),
which makes every claim of the kernel externally checkable: values carry a
truncation bound, and the located zeros must land on halves of J0's zeros.
"""
from __future__ import annotations

import math

from wright_radii import WrightParams, positive_zeros, wright_eval


def j0_series(x: float) -> float:
    # independent check: direct Taylor sum
    x2 = 0.25 * x * x
    t, terms = 1.0, []
    for n in range(1, 60):
        terms.append(t)
        t = -t * x2 / (n * n)
    return math.fsum(terms)


def main() -> None:
    p = WrightParams(1.0, 1.0)

    print("value and certified bound along the negative axis")
    print(f"{'r':>5} {'W(1,1;-r^2)':>20} {'J0(2r)':>20} {'|diff|':>10} {'bound':>10} {'terms':>6}")
    for r in (0.5, 1.0, 2.0, 3.5, 5.0):
        res = wright_eval(p, -(r * r))
        ref = j0_series(2.0 * r)
        print(f"{r:5.2f} {res.value.real:20.15f} {ref:20.15f} "
              f"{abs(res.value.real - ref):10.2e} {res.abs_error_bound:10.2e} "
              f"{res.terms_used:6d}")

    print()
    print("first zeros of r -> Gamma(1) W(1,1; -r^2), versus j_{0,k}/2")
    table = positive_zeros(p, "minus_z_squared", 5)
    j0_halves = (1.2024127788478864, 2.7600390551431553, 4.3268639564555061,
                 5.8957672195071408, 7.4654588542438930)
    for k, (got, want) in enumerate(zip(table.zeros, j0_halves), start=1):
        print(f"  lambda_{k} = {got:.13f}   reference {want:.13f}   "
              f"diff {abs(got - want):.2e}")


if __name__ == "__main__":
    main()
