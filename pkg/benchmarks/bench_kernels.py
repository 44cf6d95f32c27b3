#!/usr/bin/env python3
"""Time the numba and numpy routes of the STM / RTDM kernels.

Builds all page pairs of a generated corpus, checks both routes agree, then
reports the best-of-N wall time for a full pass over the pairs.

    python benchmarks/bench_kernels.py --n 12 --repeat 3
"""
import argparse
import itertools
import tempfile
import time

from corex import _jit
from corex.corpus import generate_corpus
from corex.dom import parse_file
from corex.treedist import UNIT, TreeEncoder, project_sim
from corex.treedist.kernels import rtdm_score, stm_score


def load_pairs(seed, n, scale):
    with tempfile.TemporaryDirectory() as d:
        pages = generate_corpus(seed, n, d)
        trees = [project_sim(parse_file(p.html_path)) for p in pages]
    if scale > 1:
        # widen every page by repeating its body, to stress the alignment rows
        trees = [t.__class__(t.label, t.children * scale) for t in trees]
    enc = TreeEncoder()
    flat = [enc.encode(t) for t in trees]
    return list(itertools.combinations(flat, 2))


def run_pass(pairs, algo, use_numba):
    out = []
    for fa, fb in pairs:
        if algo == "stm":
            out.append(stm_score(fa, fb, use_numba))
        else:
            del_w = UNIT.node_weights(fa.nodes, UNIT.delete)
            ins_w = UNIT.node_weights(fb.nodes, UNIT.insert)
            rep = UNIT.replace_matrix(fa, fb)
            out.append(rtdm_score(fa, fb, del_w, ins_w, rep, UNIT.epsilon, use_numba))
    return out


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--n", type=int, default=12, help="pages; all pairs are compared")
    ap.add_argument("--scale", type=int, default=1, help="repeat each page body this many times")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    pairs = load_pairs(args.seed, args.n, args.scale)
    sizes = [int(f.sizes[0]) for f in {id(p[0]): p[0] for p in pairs}.values()]
    print(f"{len(pairs)} pairs, tree sizes {min(sizes)}..{max(sizes)} nodes, numba available: {_jit.HAVE_NUMBA}")
    print(f"{'kernel':<8}{'numba (s)':>12}{'numpy (s)':>12}{'speedup':>10}")
    for algo in ("stm", "rtdm"):
        routes = [False] + ([True] if _jit.HAVE_NUMBA else [])
        results = {r: run_pass(pairs, algo, r) for r in routes}  # also warms the JIT
        if len(results) == 2 and results[True] != results[False]:
            raise SystemExit(f"{algo}: numba and numpy routes disagree")
        t_np = best_time(lambda: run_pass(pairs, algo, False), args.repeat)
        if _jit.HAVE_NUMBA:
            t_nb = best_time(lambda: run_pass(pairs, algo, True), args.repeat)
            print(f"{algo:<8}{t_nb:>12.4f}{t_np:>12.4f}{t_np / t_nb:>9.1f}x")
        else:
            print(f"{algo:<8}{'n/a':>12}{t_np:>12.4f}{'':>10}")


if __name__ == "__main__":
    main()
