"""Time the compiled kernels against the plain-Python fallback.

    python3 benchmarks/compare_backends.py [--n 400] [--delta 6] [--latin 6] [--reps 5]
"""

import argparse

from rainbowmatch.bench import compare_backends


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=400)
    ap.add_argument("--delta", type=int, default=6)
    ap.add_argument("--latin", type=int, default=6)
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()
    rows = compare_backends(args.n, args.delta, args.latin, args.reps)
    times = {(r["kernel"], r["backend"]): r["median_ns"] for r in rows}
    print(f"{'kernel':8s}{'backend':9s}{'median ms':>12s}")
    for (kernel, backend), ns in times.items():
        print(f"{kernel:8s}{backend:9s}{ns / 1e6:12.3f}")
    for kernel in ("greedy", "oracle"):
        if (kernel, "numba") in times:
            speedup = times[kernel, "python"] / times[kernel, "numba"]
            print(f"{kernel} speedup: {speedup:.1f}x")


if __name__ == "__main__":
    main()
