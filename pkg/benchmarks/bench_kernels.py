"""Time the compiled search kernels against the numpy reference.

    python benchmarks/bench_kernels.py --repeats 20
"""

import argparse
import time

import numpy as np

from unsenn.kernels import MODE_LINEAR, MODE_LOGIT, get_backend
from unsenn.nn import DenseNet


def _best(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def cases(C, M, hidden, seed):
    rng = np.random.default_rng(seed)
    head = DenseNet.initialize([C, hidden, M], "relu", seed)
    params, dims, acts = head.packed()
    centre = rng.uniform(0.05, 0.95, C)
    target = int(np.argmin(head.forward(np.log(centre) - np.log1p(-centre))))
    ones = np.ones(C)
    v = rng.normal(size=C)
    return {
        "project_l1": lambda k: k.project_l1(v, 1.0, None),
        "project_l1 (weighted)": lambda k: k.project_l1(v, 1.0, ones * 0.5),
        # an unreachable target so every call runs the full step budget
        "pgd_search logit": lambda k: k.pgd_search(
            params, dims, acts, centre, 1e-3, ones, target, 200, 5e-5, 0.01,
            MODE_LOGIT, 1e-6, 1 - 1e-6, np.zeros(C)),
        "pgd_search linear": lambda k: k.pgd_search(
            params, dims, acts, centre * 5, 1e-3, ones, target, 200, 5e-5, 0.01,
            MODE_LINEAR, 0.0, np.inf, np.zeros(C)),
        "descend_loss": lambda k: k.descend_loss(
            params, dims, acts, centre * 5, target, 1e-12, 1e-3, 200),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--concepts", type=int, default=10)
    parser.add_argument("--classes", type=int, default=5)
    parser.add_argument("--hidden", type=int, default=16)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    py = get_backend("python")
    try:
        cy = get_backend("cython")
    except ImportError:
        print("compiled extension not built; only the python backend is available")
        cy = None

    print(f"C={args.concepts} M={args.classes} hidden={args.hidden}, best of {args.repeats}")
    print(f"{'kernel':<24}{'python (us)':>14}{'cython (us)':>14}{'speed-up':>10}")
    for name, call in cases(args.concepts, args.classes, args.hidden, args.seed).items():
        t_py = _best(lambda: call(py), args.repeats) * 1e6
        if cy is None:
            print(f"{name:<24}{t_py:>14.1f}{'-':>14}{'-':>10}")
            continue
        t_cy = _best(lambda: call(cy), args.repeats) * 1e6
        print(f"{name:<24}{t_py:>14.1f}{t_cy:>14.1f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
