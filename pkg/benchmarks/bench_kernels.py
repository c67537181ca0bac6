"""Time the numba kernels against their numpy twins.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import math
import timeit

import numpy as np

from mocktheta import _kernels as K


def cases():
    rng = np.random.default_rng(0)
    taus = 0.1 + 1j * rng.uniform(0.3, 2.0, 2000)
    ws = rng.uniform(-0.5, 0.5, 2000) + 0j
    tau, u, v = 0.3 + 0.8j, 0.2 + 0.1j, -0.1 + 0.25j
    pi = math.pi
    n = 200_000
    x1, x2 = rng.normal(size=n) * 2, rng.normal(size=n) * 2
    indef = (rng.uniform(0, 6, n), rng.uniform(-1, 1, n), x1, np.sign(x1), x2, np.sign(x2), True, True, 0.1 + 1.2j)
    return {
        "theta_sum": ((0.5, -12, 12, taus, ws, 1), K.theta_sum_nb, K.theta_sum_np),
        "r_sum": ((0.5, 1.0, -40, 40, -1, 0.0, 0.3, math.sqrt(2.0), 1.0, 0.2 + 1j, 0.1 + 0.3j), K.r_sum_nb, K.r_sum_np),
        "appell_sum": ((-40, 40, 1j * pi * tau, 1j * pi * tau + 2j * pi * v + 1j * pi, 2j * pi * tau, 2j * pi * u),
                       K.appell_sum_nb, K.appell_sum_np),
        "indef_sum": (indef, K.indef_sum_nb, K.indef_sum_np),
    }


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args()
    if not K.USE_NUMBA:
        print("numba path disabled (MOCKTHETA_NO_NUMBA or numba missing); timing numpy only")
    print(f"{'kernel':<12}{'numba [ms]':>12}{'numpy [ms]':>12}{'ratio':>8}{'max |diff|':>12}")
    for name, (a, nb, npf) in cases().items():
        t_np = min(timeit.repeat(lambda: npf(*a), number=1, repeat=args.repeat)) * 1e3
        if nb is None:
            print(f"{name:<12}{'-':>12}{t_np:12.3f}")
            continue
        nb(*a)  # compile
        t_nb = min(timeit.repeat(lambda: nb(*a), number=1, repeat=args.repeat)) * 1e3
        diff = float(np.max(np.abs(np.asarray(nb(*a)) - np.asarray(npf(*a)))))
        print(f"{name:<12}{t_nb:12.3f}{t_np:12.3f}{t_np / t_nb:8.1f}{diff:12.1e}")


if __name__ == "__main__":
    main()
