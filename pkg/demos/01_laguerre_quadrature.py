"""Generalized Laguerre basics: basis values, Gauss rules, interpolation.

Run from the repository root:

    python3 demos/01_laguerre_quadrature.py

Writes demo_output/quadrature_nodes.csv with the N=10 rule for two
parameter pairs.
"""

import csv
import math
import pathlib

import numpy as np

from lagfrac import LaguerreParams, eval_basis, gauss_rule, interpolate, eval_interpolant

OUT_DIR = pathlib.Path("demo_output")


def main():
    OUT_DIR.mkdir(exist_ok=True)

    params = LaguerreParams(theta=2.0, beta=6.0)
    x = np.linspace(0.0, 2.0, 5)
    table = eval_basis(params, 4, x)
    print("basis values L_0..L_4 at", x.tolist())
    for i, row in enumerate(table):
        print(f"  degree {i}:", np.array2string(row, precision=6))

    # a Gauss rule with N+1 points integrates polynomials of degree
    # 2N+1 against the weight x^theta * exp(-beta x) exactly
    rows = []
    for theta, beta in ((2.0, 6.0), (0.0, 1.0)):
        rule = gauss_rule(LaguerreParams(theta, beta), 10)
        moment = float(rule.weights @ rule.nodes ** 3)
        exact = math.gamma(theta + 4.0) / beta ** (theta + 4.0)
        print(f"theta={theta:g} beta={beta:g}: cubic moment "
              f"{moment:.15g} vs exact {exact:.15g}")
        for node, weight in zip(rule.nodes, rule.weights):
            rows.append([theta, beta, node, weight])

    path = OUT_DIR / "quadrature_nodes.csv"
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["theta", "beta", "node", "weight"])
        writer.writerows(rows)
    print("wrote", path)

    # interpolation at the rule nodes reproduces smooth functions on [0, L]
    rule = gauss_rule(params, 20)
    coeffs = interpolate(rule, np.exp(rule.nodes))
    xs = np.linspace(0.0, 1.0, 7)
    err = np.abs(eval_interpolant(coeffs, xs) - np.exp(xs))
    print("exp interpolant error on [0,1]:", np.array2string(err, precision=3))


if __name__ == "__main__":
    main()
