"""Autocorrelation of the Fibonacci chain and of the integer lattice.

Prints the two gap lengths of the chain, the central weights of the
autocorrelation approximants gamma_n and the Cauchy evidence along a
doubling schedule.

Run:  python demos/fibonacci_diffraction.py
"""

import numpy as np

from radonfourier.diffraction import (autocorrelation, autocorrelation_trend,
                                      fibonacci_point_comb, lattice_comb, norm_discontinuity_demo)
from radonfourier.measure import CompactInterval

if __name__ == "__main__":
    omega = fibonacci_point_comb()
    x, _ = omega.atoms(CompactInterval(0.0, 1000.0))
    gaps = np.unique(np.round(np.diff(x), 9))
    print(f"Fibonacci chain on [0, 1000]: {x.size} points, gap lengths {gaps}, "
          f"density {x.size / 1000:.4f}")
    for n in (8, 32, 128):
        g = autocorrelation(omega, n)
        near = [(round(p, 6), round(w.real, 5)) for p, w in g.table() if 0 <= p <= 3.3]
        print(f"gamma_{n} on [0, 3.3]: {near}")
    rep = autocorrelation_trend(omega, (8, 16, 32, 64, 128))
    print(rep.summary())

    print("\nInteger lattice: gamma_2 =", [(p, w.real) for p, w in autocorrelation(lattice_comb(), 2).table()])
    print("Diffraction approximants vs the pure-point limit (||.||_[0,1]):")
    for n, d, a, lim in norm_discontinuity_demo().rows:
        print(f"  n={n:3d}: ||gamma_n^ - delta_Z|| = {d:.6g} = {a:.6g} + {lim:.6g}")
