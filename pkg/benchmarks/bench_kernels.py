"""Time the compiled and numpy kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--sizes 64 128 256]
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from mvkit import kernels
from mvkit.chains import make_chain
from mvkit.structure import chain_product


def workloads(sizes):
    for n in sizes:
        a = make_chain(n)
        yield f"assoc chain {n}", lambda k, a=a: k.assoc_witness(a.oplus)
        yield f"lukasiewicz chain {n}", lambda k, a=a: k.lukasiewicz_witness(a.oplus, a.neg)
    for shape in ([2] * 6, [4, 4, 4], [8, 16]):
        a = chain_product(shape)
        cap = a.n * a.n + 3
        yield f"fib_table {shape}", lambda k, a=a, cap=cap: k.fib_table(a.oplus, cap)
    a = chain_product([4, 8])
    ident = np.arange(a.n, dtype=np.intc)
    yield "hom identity [4, 8]", lambda k, a=a, f=ident: k.hom_witness(a.oplus, a.oplus, f)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    args = parser.parse_args()

    backends = kernels.available_backends()
    names = sorted(backends)
    print(f"{'workload':28}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads(args.sizes):
        times = {}
        for name in names:
            module = backends[name]
            times[name] = min(timeit.repeat(lambda: fn(module), number=1, repeat=args.repeat))
        row = f"{label:28}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
