"""Growth-axiom pass rates for increasing, identity and decreasing automorphisms."""

import argparse

from hahnexp import sampling as smp
from hahnexp.chain import AutomorphismSpec
from hahnexp.explog import LogContext, check_ga


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", type=int, default=6)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    base = AutomorphismSpec(args.beta, {0, 2})
    for label, spec in (("tau_S", base), ("identity", base.identity()),
                        ("tau_S^-1", base.inverse()), ("tau_S^3", base.iterate(3))):
        ctx = LogContext(spec, strict=False)
        rng = smp.stream(args.seed, "ga-controls")
        pool = smp.chain_pool(rng, args.beta, 3)
        ok = sum(check_ga(ctx, smp.random_hahn(rng, pool, sign=-1)) for _ in range(args.samples))
        print(f"{label:<10} {ok}/{args.samples} satisfy the growth axiom")


if __name__ == "__main__":
    main()
