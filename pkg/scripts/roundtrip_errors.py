"""How far below the truncation threshold do round-trip errors start?

For each Taylor order N, sample inputs as the roundtrip suite does and
record the largest k with v(error) > k v(eps) (capped at 3N), or
"exact" when the error vanishes.  The contract asks for k >= N.  With
pruning on, every term at or past (N+1) v(eps) is dropped and the
round trips come out exact; --no-prune keeps the full truncated sums
so the first surviving error term becomes visible.
"""

import argparse
from collections import Counter

from hahnexp import checks
from hahnexp import sampling as smp
from hahnexp.chain import StageOverflowError
from hahnexp.config import Config


def depth(err, eps, cap):
    """Largest k <= cap with v(err) > k v(eps)."""
    if err.is_zero():
        return "exact"
    v, unit = err.min_support(), eps.min_support()
    k = 0
    while k < cap and v > (k + 1) * unit:
        k += 1
    return k


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--orders", default="1,2,4,8,12")
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--scalar", choices=("rational", "decimal"), default="rational")
    ap.add_argument("--no-prune", action="store_true")
    args = ap.parse_args()

    for N in (int(x) for x in args.orders.split(",")):
        cfg = Config(taylor_order=N, samples=args.samples, seed=args.seed, S={0, 3},
                     scalar=args.scalar)
        ctx = cfg.log_context(prune=not args.no_prune)
        rng = smp.stream(cfg.seed, "roundtrip")
        pool = smp.chain_pool(rng, cfg.beta, cfg.sample_stage)
        le, el = Counter(), Counter()
        with ctx.backend.scope():
            for _ in range(cfg.samples):
                additive, positive, h, g, eps = checks._roundtrip_inputs(rng, cfg, pool, ctx.backend)
                try:
                    b, d = checks._roundtrip_errors(ctx, additive, positive)
                except StageOverflowError:
                    continue
                le[depth(b, eps, 3 * N)] += 1
                el[depth(checks.shift_back(d, g), eps, 3 * N)] += 1
        depths = [k for k in list(le) + list(el) if k != "exact"]
        worst = min(depths) if depths else "exact"
        print(f"N={N:<3} log(exp a)-a  depth histogram {dict(le)}")
        print(f"      exp(log a)-a  depth histogram {dict(el)}  "
              f"min={worst} (contract: >= {N})")


if __name__ == "__main__":
    main()
