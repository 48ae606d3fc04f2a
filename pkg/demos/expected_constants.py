"""Compute the edge-density constants and compare them with simulation.

    python3 demos/expected_constants.py --n 1000 --trials 5
"""
import argparse

from hodt.expectation import IntegralConfig, compute_d1, expected_count_bound, integrate_dk, monte_carlo_uk


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    cfg = IntegralConfig(tolerance=1e-10)
    d1 = compute_d1(config=cfg)
    print(f"c1 = {d1.c1:.8f}, c2 = {d1.c2:.8f}, d1 = {d1.d:.8f} (+- {d1.errors['d']:.1e})")
    d2 = integrate_dk(2, cfg)
    for k, c in ((1, d1), (2, d2)):
        b = expected_count_bound(k, c.d, c.errors["d"])
        print(f"k={k}: d = {c.d:.6f}, {b.statement}")
        mc = monte_carlo_uk(args.n, k, args.trials, args.seed, target=c.d)
        print(f"  simulated U_{k}/n at n={args.n}: {mc.mean_density:.4f} "
              f"(95% CI {mc.ci_low:.4f}..{mc.ci_high:.4f})")


if __name__ == "__main__":
    main()
