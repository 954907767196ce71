"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Also checks that the two backends agree on every input used.
"""

import argparse
import random
import time

from hyperform import _kernels_py

try:
    from hyperform import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None


def _phi_inputs(rng, count):
    out = []
    for _ in range(count):
        ps = [rng.uniform(-3, 3) for _ in range(6)]
        qs = [-abs(rng.uniform(0.1, 2)) for _ in range(6)]
        out.append((ps, qs, rng.uniform(-1, 1), rng.uniform(0.5, 2.0), 6.0))
    return out


def _box_inputs(rng, count):
    s5 = 5 ** 0.5
    s1, s2 = (-1 + s5) / 2, (-1 - s5) / 2
    out = []
    for _ in range(count):
        y1, y2 = rng.uniform(0.02, 0.2), rng.uniform(0.02, 0.2)
        r1, r2 = 1 / y2, 1 / y1
        out.append((1.0, 1.0, rng.uniform(-0.5, 0.5), y1, rng.uniform(-0.5, 0.5), y2,
                    s1, s2, r1, r2))
    return out


def _time(fn, inputs, repeat):
    best = float("inf")
    results = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        results = [fn(*args) for args in inputs]
        best = min(best, time.perf_counter() - t0)
    return best, results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    cases = [
        ("phi_grad_hess", _phi_inputs(rng, 20000)),
        ("box_scan", _box_inputs(rng, 200)),
    ]
    print(f"{'kernel':<16}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, inputs in cases:
        tp, rp = _time(getattr(_kernels_py, name), inputs, args.repeat)
        if _compiled is None:
            print(f"{name:<16}{tp:>12.4f}{'n/a':>12}{'':>10}")
            continue
        tc, rc = _time(getattr(_compiled, name), inputs, args.repeat)
        if name == "box_scan":
            same = all(a[1] == b[1] and (a[0] is None) == (b[0] is None)
                       and (a[0] is None or a[0][1:] == b[0][1:]) for a, b in zip(rp, rc))
        else:
            same = all(max(abs(x - y) for x, y in zip(a, b)) < 1e-9 for a, b in zip(rp, rc))
        flag = "" if same else "  MISMATCH"
        print(f"{name:<16}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x{flag}")


if __name__ == "__main__":
    main()
