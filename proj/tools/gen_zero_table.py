#!/usr/bin/env python3
"""Generate a table of the first N ordinates of zeros of zeta on the critical line.

The Hardy Z-function is evaluated with the Riemann-Siegel formula (main sum
plus the C0..C4 remainder terms) in double precision, vectorized with numpy.
Sign changes on a fine grid bracket the zeros, which are then refined by
vectorized Illinois iterations. Completeness is checked block by block
between good Gram points (Rosser's rule); short blocks are rescanned on a
finer grid until the count matches.

Usage: gen_zero_table.py --count 100000 --out data/zeros_100k.txt
"""
import argparse
import math
import sys

import mpmath
import numpy as np

TWO_PI = 2.0 * math.pi


def remainder_coefficients(degree=60):
    """Taylor coefficients (in z = p - 1/2) of the Riemann-Siegel C0..C4."""
    mpmath.mp.dps = 60

    def psi(p):
        return mpmath.cos(2 * mpmath.pi * (p * p - p - mpmath.mpf(1) / 16)) / mpmath.cos(2 * mpmath.pi * p)

    # Psi is entire; expand well past the degree we keep so derivatives up
    # to order 12 remain accurate.
    taylor = mpmath.taylor(psi, mpmath.mpf(1) / 2, degree + 12)
    base = np.polynomial.Polynomial([float(c) for c in taylor])
    base_mp = taylor

    def deriv(k):
        coeffs = list(base_mp)
        for _ in range(k):
            coeffs = [coeffs[i] * i for i in range(1, len(coeffs))]
        return coeffs

    pi = mpmath.pi
    d = {k: deriv(k) for k in range(13)}

    def combo(terms):
        out = [mpmath.mpf(0)] * (degree + 1)
        for weight, k in terms:
            for i in range(degree + 1):
                if i < len(d[k]):
                    out[i] += weight * d[k][i]
        return [float(v) for v in out]

    c0 = combo([(1, 0)])
    c1 = combo([(-1 / (96 * pi**2), 3)])
    c2 = combo([(1 / (64 * pi**2), 2), (1 / (18432 * pi**4), 6)])
    c3 = combo([(-1 / (64 * pi**2), 1), (-1 / (3840 * pi**4), 5), (-1 / (5308416 * pi**6), 9)])
    c4 = combo([(1 / (128 * pi**2), 0), (19 / (24576 * pi**4), 4),
                (11 / (5898240 * pi**6), 8), (1 / (2038431744 * pi**8), 12)])
    del base
    return [np.array(c[::-1]) for c in (c0, c1, c2, c3, c4)]


COEFFS = None
POLISH_BELOW = 400.0


def theta(t):
    t = np.asarray(t, dtype=np.float64)
    return (t / 2.0) * np.log(t / TWO_PI) - t / 2.0 - math.pi / 8.0 \
        + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t**3) + 31.0 / (80640.0 * t**5)


def hardy_z(t):
    """Riemann-Siegel Z(t) for t >= 10, vectorized over a 1-d array."""
    t = np.asarray(t, dtype=np.float64)
    tau = np.sqrt(t / TWO_PI)
    n_terms = np.floor(tau).astype(np.int64)
    p = tau - n_terms
    th = theta(t)
    total = np.zeros_like(t)
    max_n = int(n_terms.max()) if t.size else 0
    for n in range(1, max_n + 1):
        mask = n_terms >= n
        if not mask.any():
            break
        total[mask] += np.cos(th[mask] - t[mask] * math.log(n)) / math.sqrt(n)
    total *= 2.0
    z = p - 0.5
    a = 1.0 / tau
    corr = np.zeros_like(t)
    for k in reversed(range(5)):
        corr = corr * a + np.polyval(COEFFS[k], z)
    sign = np.where(n_terms % 2 == 1, 1.0, -1.0)
    return total + sign * corr / np.sqrt(tau)


def gram_point(n):
    """Solve theta(g) = n*pi by Newton iteration (scalar, n >= 0)."""
    g = TWO_PI * math.exp(1.0 + mpmath.lambertw((8 * n + 1) / (8 * math.e)).real)
    for _ in range(50):
        f = float(theta(np.array([g]))[0]) - n * math.pi
        step = f / (0.5 * math.log(g / TWO_PI))
        g -= step
        if abs(step) < 1e-13 * g:
            break
    return g


def scan(lo, hi, steps_per_gap):
    """Brackets of sign changes of Z on [lo, hi]."""
    brackets = []
    t = lo
    chunk = []
    while t < hi:
        gap = TWO_PI / math.log(t / TWO_PI)
        h = gap / steps_per_gap
        end = min(hi, t + 2000 * h)
        pts = np.arange(t, end, h)
        chunk.append(pts)
        t = end
    pts = np.concatenate(chunk + [np.array([hi])])
    vals = hardy_z(pts)
    idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
    for i in idx:
        brackets.append((pts[i], pts[i + 1], vals[i], vals[i + 1]))
    return brackets


def refine(brackets):
    a = np.array([b[0] for b in brackets])
    b = np.array([b[1] for b in brackets])
    fa = np.array([b_[2] for b_ in brackets])
    fb = np.array([b_[3] for b_ in brackets])
    for _ in range(80):
        c = b - fb * (b - a) / (fb - fa)
        c = np.where((c <= np.minimum(a, b)) | (c >= np.maximum(a, b)), 0.5 * (a + b), c)
        fc = hardy_z(c)
        same = np.sign(fc) == np.sign(fb)
        # Illinois modification keeps the retained endpoint from stalling.
        fa = np.where(same, fa * 0.5, fb)
        a = np.where(same, a, b)
        b, fb = c, fc
        if np.all(np.abs(b - a) < 1e-12 * b):
            break
    return b


def main():
    global COEFFS
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--check", type=int, default=20,
                    help="number of zeros cross-checked against mpmath.zetazero")
    args = ap.parse_args()
    COEFFS = remainder_coefficients()

    # Last Gram index comfortably past the requested count.
    last = args.count + 50
    gram = [gram_point(n) for n in range(-1, last + 1)]
    gram_arr = np.array(gram)
    zgram = hardy_z(gram_arr)
    good = [i for i in range(len(gram)) if (-1) ** (i - 1) * zgram[i] > 0]
    zeros = []
    for j, k in zip(good[:-1], good[1:]):
        expected = k - j
        steps = 16
        while True:
            found = scan(gram[j], gram[k], steps)
            if len(found) == expected:
                break
            if steps > 20000:
                sys.exit(f"block [{gram[j]}, {gram[k]}) yields {len(found)} of {expected} zeros")
            steps *= 8
        zeros.extend(found)
    roots = refine(zeros)
    roots.sort()
    roots = roots[: args.count]
    # The asymptotic remainder is only good to ~1e-6 near the bottom of the
    # range; polish low zeros with mpmath's Z-function.
    mpmath.mp.dps = 25
    for i, r in enumerate(roots):
        if r >= POLISH_BELOW:
            break
        roots[i] = float(mpmath.findroot(mpmath.siegelz, (r - 1e-4, r + 1e-4), solver="secant"))
    if len(roots) < args.count:
        sys.exit(f"only {len(roots)} zeros found")

    mpmath.mp.dps = 25
    rng = np.random.default_rng(12345)
    picks = sorted(set([1, 2, args.count] + list(rng.integers(1, args.count, size=args.check))))
    worst = 0.0
    for n in picks:
        ref = float(mpmath.zetazero(int(n)).imag)
        worst = max(worst, abs(ref - roots[n - 1]))
    print(f"checked {len(picks)} zeros against mpmath, max abs error {worst:.3e}", file=sys.stderr)
    if worst > 1e-8:
        sys.exit("cross-check against mpmath failed")

    with open(args.out, "w") as fh:
        fh.write(f"# first {args.count} ordinates of nontrivial zeros of zeta(s), one per line\n")
        fh.write("# Riemann-Siegel evaluation with C0..C4 remainder, block-verified by Rosser's rule\n")
        for r in roots:
            fh.write(f"{r:.12f}\n")


if __name__ == "__main__":
    main()
