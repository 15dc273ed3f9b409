"""Compare the compiled and pure-Python kernel backends.

Two views:

* micro-kernels, in-process: both backend modules are imported side by
  side and timed on identical inputs (word comparison, lex comparison,
  ALSW predicate, comparison-key sorting);
* end-to-end, via subprocesses: the same CLI invocations run once with
  the compiled backend and once with ``LSGSB_PURE=1``, so the numbers
  include enumeration, rewriting and composition checking as a user
  sees them.

Run with ``python3 benchmarks/bench_backends.py``.
"""

from __future__ import annotations

import functools
import os
import subprocess
import sys
import time

from lsgsb import _pure, words
from lsgsb._backend import BACKEND

try:
    from lsgsb import _speedups
except ImportError:
    _speedups = None


def _bench(fn, repeat=5):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def micro_benchmarks():
    alphabet = words.Alphabet(("x", "y"))
    pool = [w for ws in words.all_words(alphabet, 7).values() for w in ws]
    pairs = list(zip(pool, pool[1:] + pool[:1]))
    print(f"word pool: {len(pool)} operated words of degree <= 7 over x,y\n")

    backends = [("pure", _pure)]
    if _speedups is not None:
        backends.insert(0, ("compiled", _speedups))

    cases = {
        "is_alsw_dl over pool": lambda k: [k.is_alsw_dl(w) for w in pool],
        "is_alsw_dt over pool": lambda k: [k.is_alsw_dt(w) for w in pool],
        "cmp_dl over pairs": lambda k: [k.cmp_dl(u, v) for u, v in pairs],
        "lex_cmp_dl over pairs": lambda k: [k.lex_cmp_dl(u, v) for u, v in pairs],
        "sort pool by cmp_dl": lambda k: sorted(
            pool, key=functools.cmp_to_key(k.cmp_dl)
        ),
    }

    rows = []
    for label, case in cases.items():
        timings = {name: _bench(lambda k=kern: case(k)) for name, kern in backends}
        rows.append((label, timings))

    width = max(len(label) for label, _ in rows)
    header = f"{'micro-kernel':<{width}}  " + "  ".join(
        f"{name:>10}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for label, timings in rows:
        line = f"{label:<{width}}  " + "  ".join(
            f"{timings[name] * 1e3:9.2f}ms" for name, _ in backends
        )
        if len(backends) == 2:
            line += f"  {timings['pure'] / timings['compiled']:7.1f}x"
        print(line)
    print()


def _run_cli(args, pure):
    env = dict(os.environ)
    env.pop("LSGSB_PURE", None)
    if pure:
        env["LSGSB_PURE"] = "1"
    t0 = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "lsgsb", *args],
        check=True,
        env=env,
        stdout=subprocess.DEVNULL,
    )
    return time.perf_counter() - t0


def end_to_end():
    scenarios = [
        ("lyndon list x,y bound 8", ["lyndon", "list", "--alphabet", "x,y", "--bound", "8", "--count"]),
        ("gsb-check derivation bound 6", ["gsb-check", "--system", "derivation:lam=1", "--bound", "6"]),
        ("gsb-check rb-weight bound 7", ["gsb-check", "--system", "rb-weight:lam=1", "--bound", "7"]),
    ]
    print(f"{'end-to-end (one process each)':<32}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for label, args in scenarios:
        tc = _run_cli(args, pure=False)
        tp = _run_cli(args, pure=True)
        print(f"{label:<32}  {tc:9.2f}s  {tp:9.2f}s  {tp / tc:7.1f}x")
    print()


def main():
    print(f"active backend in this process: {BACKEND}")
    if _speedups is None:
        print("compiled backend not built; timing the pure backend only\n")
    micro_benchmarks()
    end_to_end()


if __name__ == "__main__":
    main()
