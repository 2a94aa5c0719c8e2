# -*- coding: utf-8 -*-
"""

*** Description ***

    Runs the randomised counterexample search on weighted combs, then
    once more with shrunken base weights, which must be caught. Pass the
    number of trials as the first argument.
"""

import logging
import sys

from steklov.theorems.fuzz import FuzzConfig, fuzz


def summary(report):
    return "%s: %d violations, %d converse instances" % (
        report.verdict,
        report.data["violations"],
        report.data["converse_instances"],
    )


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    trials = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    print(summary(fuzz(FuzzConfig(trials=trials, mix="comb", weighted=True))))
    print(summary(fuzz(FuzzConfig(trials=trials, mix="tree", max_vertices=8, planted_bug=True))))
