"""The expression mini-language and the command line driver.

Run from the repository root:

    python3 demos/05_expressions_cli.py

Builds a JSON config, runs the `solve` subcommand through the public
entry point, and reads the report back out of the CSV it wrote.
"""

import csv
import json
import pathlib

from lagfrac import exprs
from lagfrac.cli import main as cli_main

OUT_DIR = pathlib.Path("demo_output")


def show(text, x):
    node = exprs.parse(text)
    value = exprs.evaluate(node, x)
    print(f"  {text!r} at x={x:g} -> {value:.12g}   (printed back: "
          f"{exprs.to_text(node)!r})")


def main():
    OUT_DIR.mkdir(exist_ok=True)

    print("expression round trips:")
    show("(9 + sin(x))/10", 0.7)
    show("gamma(4)/gamma(3.5) * x^2.5", 1.3)
    show("1 + 0.5*abs(sin(x))", 2.0)

    # a config solving u'' + D^rho u + u = f with exact solution sin(x);
    # the builtin forcing is the Caputo derivative of sin for the given rho
    config = {
        "mode": "solve",
        "theta": 3.0,
        "beta": 6.0,
        "N": [10, 20],
        "order": "3/2",
        "a": "1",
        "b": "1",
        "c": "1",
        "f": "builtin:caputo_sin",
        "u0": 0.0,
        "v0": 1.0,
        "exact": "sin(x)",
        "length": 1.0,
        "grid": 1001,
        "out": str(OUT_DIR / "oscillator.csv"),
    }
    config_path = OUT_DIR / "oscillator.json"
    config_path.write_text(json.dumps(config, indent=2) + "\n")
    print("\nrunning: lagfrac solve --config", config_path)
    rc = cli_main(["solve", "--config", str(config_path)])
    print("exit code:", rc)

    for N in (10, 20):
        path = OUT_DIR / f"oscillator_N{N}.csv"
        with open(path, newline="") as handle:
            rows = list(csv.reader(handle))
        header = rows.index(["N", "theta", "beta", "order",
                             "max_abs_error", "grid_size", "domain_length"])
        report = dict(zip(rows[header], rows[header + 1]))
        print(f"  N={N}: max_abs_error={report['max_abs_error']}")


if __name__ == "__main__":
    main()
