"""Time the HLR tilted-density HMC transitions with and without numba.

Usage::

    python benchmarks/bench_kernels.py            # both paths, via subprocesses
    python benchmarks/bench_kernels.py --single   # current process only

The numpy path is selected by setting ``STOCHEP_DISABLE_NUMBA=1`` before
``stochep`` is imported, which is why each path runs in its own process.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def measure(n_transitions=2000, leapfrog_steps=5, repeats=3):
    import numpy as np

    from stochep import _kernels
    from stochep.ep import init_state, tilted_params
    from stochep.sampling import HmcKernel, init_chain, run_transitions
    from stochep.targets import HlrConfig, hlr_generate_data

    data = hlr_generate_data(HlrConfig(), seed=0)
    fam = data.config.family()
    state = init_state(fam, data.config.prior_natural(fam), data.config.m)
    dens = tilted_params(state, 0, data.sites()[0])
    kernel = HmcKernel(leapfrog_steps)
    chain = init_chain(dens, state.approx_natural(), seed=0, site=0, step_size=0.05)
    run_transitions(dens, chain, 10, kernel)  # compile / warm caches
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        run_transitions(dens, chain, n_transitions, kernel)
        best = min(best, time.perf_counter() - t0)
    evals = n_transitions * leapfrog_steps
    return dict(numba=_kernels.USE_NUMBA, seconds=best, us_per_gradient=1e6 * best / evals,
                transitions=n_transitions, leapfrog_steps=leapfrog_steps)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--single", action="store_true", help="measure the current process only")
    p.add_argument("--transitions", type=int, default=2000)
    args = p.parse_args(argv)
    if args.single:
        print(json.dumps(measure(args.transitions)))
        return 0
    rows = []
    for flag in ("0", "1"):
        env = dict(os.environ, STOCHEP_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, __file__, "--single", "--transitions", str(args.transitions)],
                             env=env, capture_output=True, text=True, check=True)
        rows.append(json.loads(out.stdout.strip().splitlines()[-1]))
    for r in rows:
        print(f"{'numba' if r['numba'] else 'numpy':>6}: {r['seconds']:.3f}s for {r['transitions']} transitions "
              f"({r['us_per_gradient']:.1f} us per gradient)")
    if rows[0]["numba"] and not rows[1]["numba"]:
        print(f"speed-up {rows[1]['seconds'] / rows[0]['seconds']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
