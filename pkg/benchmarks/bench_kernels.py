"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from milnorlab import _kernels_py
from milnorlab.oracle import truncated_quotient_dimension
from milnorlab.theorem_lab import gen_extremal

try:
    from milnorlab import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def workloads():
    curve = gen_extremal(10).product
    fx, fy = curve.partial("x").integer_terms(), curve.partial("y").integer_terms()
    bound = (curve.degree - 1) ** 2
    dense = {(i, j): (i * 7 + j * 3) % 11 - 5 for i in range(12) for j in range(12) if (i * 7 + j * 3) % 11 != 5}
    g = gen_extremal(6).product
    rows = []

    # capture the rows the oracle builds for one truncation level
    def capture(r):
        rows.extend(r)
        return 0

    import milnorlab.oracle as oracle

    saved = oracle.sparse_rank
    oracle.sparse_rank = capture
    try:
        truncated_quotient_dimension(g.partial("x"), g.partial("y"), 24)
    finally:
        oracle.sparse_rank = saved
    return {
        "fulton (mu of extremal d=10)": lambda k: k.fulton(dict(fx), dict(fy), bound),
        "poly_mul (12x12 dense)": lambda k: k.poly_mul(dense, dense),
        f"sparse_rank ({len(rows)} rows)": lambda k: k.sparse_rank(rows),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [("python", _kernels_py)]
    if _kernels_c is not None:
        impls.append(("cython", _kernels_c))
    else:
        print("compiled extension not built; timing the fallback only")
    print(f"{'kernel':<34}" + "".join(f"{name:>12}" for name, _ in impls) + ("     speedup" if len(impls) == 2 else ""))
    for label, fn in workloads().items():
        results = {name: fn(k) for name, k in impls}
        assert len(set(map(repr, results.values()))) == 1, f"backends disagree on {label}"
        times = [min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)) for _, k in impls]
        line = f"{label:<34}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.2f}x"
        print(line)


if __name__ == "__main__":
    main()
