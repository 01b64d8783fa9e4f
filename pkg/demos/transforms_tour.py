"""Fourier transforms of closed-form measures, checked on Gauss-Hermite functions.

Run:  python demos/transforms_tour.py
"""

from radonfourier import dirac, dirac_comb, fourier_transform, verify_pairing
from radonfourier.densities import Tent, indicator
from radonfourier.descriptors import dump_measure
from radonfourier.measure import Measure


def show(name, mu):
    hat = fourier_transform(mu)
    rep = verify_pairing(mu, hat)
    print(f"{name}")
    print(f"  transform   : {dump_measure(hat)}")
    print(f"  pairing test: max |<mu, g> - <mu^, g_check>| = {rep.max_residual:.2e} "
          f"over {len(rep.rows)} functions -> {'ok' if rep.passed else 'FAILED'}")


if __name__ == "__main__":
    show("point mass at 1/2", dirac(0.5))
    show("comb of spacing 1/2 (Poisson summation)", dirac_comb(0.5))
    show("indicator of [-1, 1]", Measure(ac=(indicator(-1.0, 1.0),)))
    show("tent of half-width 1", Measure(ac=(Tent(0.0, 1.0),)))
