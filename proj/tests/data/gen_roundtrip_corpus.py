#!/usr/bin/env python3
"""Regenerates roundtrip_corpus.json: products of distinct irreducible
bivariate integer polynomials with known factors (irreducibility checked by
sympy)."""

import json
import random
import sys
from pathlib import Path

import sympy as sp

x, y = sp.symbols("x y")

SEED = 20240607
CASES = 200


def to_expr(poly):
    terms = sorted(sp.Poly(poly, x, y).terms(), reverse=True)
    parts = []
    for (i, j), c in terms:
        mono = [str(abs(c))] if abs(c) != 1 or (i == 0 and j == 0) else []
        if i:
            mono.append("x" if i == 1 else f"x^{i}")
        if j:
            mono.append("y" if j == 1 else f"y^{j}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, "*".join(mono)))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        out += sign + mono
    return out


def canonical(poly):
    p = sp.Poly(poly, x, y)
    _, p = p.primitive()
    if p.LC(order="lex") < 0:
        p = -p
    return p


def random_factor(rng):
    while True:
        deg = rng.randint(1, 4)
        monos = [(i, j) for i in range(deg + 1) for j in range(deg + 1 - i)]
        chosen = rng.sample(monos, rng.randint(2, min(6, len(monos))))
        expr = sum(rng.choice([c for c in range(-10, 11) if c]) * x**i * y**j for i, j in chosen)
        p = sp.Poly(expr, x, y)
        if p.degree(x) < 1 or p.degree(y) < 1:
            continue
        p = canonical(p)
        _, facs = sp.factor_list(p.as_expr(), x, y)
        if len(facs) == 1 and facs[0][1] == 1:
            return p


def main():
    rng = random.Random(SEED)
    cases = []
    while len(cases) < CASES:
        count = rng.randint(1, 4)
        factors = []
        while len(factors) < count:
            f = random_factor(rng)
            if all(f != g for g in factors):
                factors.append(f)
        product = sp.Poly(1, x, y)
        for f in factors:
            product = product * f
        cases.append({
            "input": to_expr(product.as_expr()),
            "factors": sorted(to_expr(f.as_expr()) for f in factors),
        })
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).with_name("roundtrip_corpus.json")
    out.write_text(json.dumps({"seed": SEED, "cases": cases}, indent=1) + "\n")


if __name__ == "__main__":
    main()
