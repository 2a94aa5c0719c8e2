# -*- coding: utf-8 -*-
"""

*** Description ***

    Grows the teeth of a regular comb one vertex at a time and checks
    after every step that no Steklov eigenvalue went up. The monotonicity
    report of each step is printed as JSON.
"""

from steklov.core.families import make_regular_comb
from steklov.extra.graph_json import dumps
from steklov.theorems.monotonicity import verify_monotonicity

R = 3
MAX_TOOTH = 5


if __name__ == "__main__":
    base = make_regular_comb(R, 1)
    for l in range(2, MAX_TOOTH + 1):
        ambient = make_regular_comb(R, l)
        report = verify_monotonicity(ambient, base)
        print("Comb(%d; %d) over Comb(%d; %d): %s" % (R, l, R, l - 1, report.verdict))
        print(dumps(report.data["sigma_ambient"]))
        base = ambient
