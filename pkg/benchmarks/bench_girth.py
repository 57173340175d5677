"""Compare the girth backends on the parts of construct(n).

    python benchmarks/bench_girth.py --n 10 20 40 --repeat 5
"""

import argparse
import statistics
import time

from girththick import _kernels
from girththick.construct import construct
from girththick.metrics import girth


def time_backend(graphs, backend, repeat):
    for g in graphs:  # warm-up, includes numba compilation
        girth(g, backend)
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        values = [girth(g, backend) for g in graphs]
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), values


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[10, 20, 40, 60])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = ["numba", "numpy", "python"] if _kernels.NUMBA_AVAILABLE else ["numpy", "python"]
    print(f"{'n':>4} {'parts':>5} {'edges':>6} " + " ".join(f"{b:>10}" for b in backends))
    for n in args.n:
        d = construct(n)
        graphs = [d.part_graph(i) for i in range(d.n_parts)]
        row, reference = [], None
        for b in backends:
            seconds, values = time_backend(graphs, b, args.repeat)
            if reference is None:
                reference = values
            assert values == reference, f"{b} disagrees at n={n}"
            row.append(f"{seconds * 1e3:8.2f}ms")
        edges = sum(g.n_edges for g in graphs)
        print(f"{n:>4} {len(graphs):>5} {edges:>6} " + " ".join(f"{r:>10}" for r in row))


if __name__ == "__main__":
    main()
