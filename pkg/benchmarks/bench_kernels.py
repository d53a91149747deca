"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeats N]
"""
import argparse

from attnmil.autodiff.bench import format_table, run_benchmark


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=20)
    args = parser.parse_args()
    print(format_table(run_benchmark(repeats=args.repeats)))


if __name__ == "__main__":
    main()
