"""Time the compiled enumeration kernel against the pure-Python one.

    python3 benchmarks/bench_kernel.py --n 9 --repeat 3
"""

import argparse
import timeit

from prefixavoid import kernel
from prefixavoid.core import PrefixQuery

CASES = [
    ("123", ()),
    ("231", (3,)),
    ("3412 3421", ()),
    ("1-32", (2,)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--no-prune", action="store_true", help="time the naive full-word check")
    args = ap.parse_args(argv)

    impls = [("python", kernel.python_count_completions)]
    if kernel.compiled_count_completions is not None:
        impls.append(("cython", kernel.compiled_count_completions))
    else:
        print("compiled kernel not built; timing the Python kernel only")

    print(f"{'patterns':<12} {'prefix':<8} {'count':>10} " + " ".join(f"{name:>10}" for name, _ in impls)
          + ("   speedup" if len(impls) == 2 else ""))
    for pats, prefix in CASES:
        q = PrefixQuery.make(args.n, prefix, pats.split())
        packed = kernel.pack(q.patterns)
        call_args = (args.n, q.prefix.entries, packed, False, 0, not args.no_prune)
        times, counts = [], set()
        for _, fn in impls:
            counts.add(fn(*call_args)[0])
            times.append(min(timeit.repeat(lambda: fn(*call_args), number=1, repeat=args.repeat)))
        assert len(counts) == 1, f"kernels disagree on {pats}: {counts}"
        row = f"{pats:<12} {str(q.prefix) or '-':<8} {counts.pop():>10} "
        row += " ".join(f"{t * 1000:>8.1f}ms" for t in times)
        if len(times) == 2:
            row += f"   {times[0] / times[1]:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
