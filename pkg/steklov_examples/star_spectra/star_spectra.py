# -*- coding: utf-8 -*-
"""

*** Description ***

    Prints the Steklov spectrum of a few stars twice: once from the
    roots of the star polynomial and once from the eigensolver, together
    with the interior vertices where every harmonic function with mean
    zero boundary values vanishes.

    Change ARMS to try other stars.
"""

from steklov.core.families import make_star, star_char_polynomial, star_spectrum, star_Z
from steklov.core.spectral import steklov_spectrum, zero_set_Z

ARMS = [[1, 2], [1, 1, 4], [1, 2, 3], [2, 2, 2, 2], [1, 1, 1, 7]]


def describe(arms):
    graph = make_star(arms)
    closed = star_spectrum(arms).sigma
    computed = steklov_spectrum(graph).eigenvalues
    expected_Z, d = star_Z(arms)
    print("St%s  P = %s" % (tuple(arms), star_char_polynomial(arms)))
    for (a, b) in zip(closed, computed):
        print("    %.12f  %.12f" % (a, b))
    print("    Z = %s (expected %s, d = %s)" % (sorted(zero_set_Z(graph)), sorted(expected_Z), d))


if __name__ == "__main__":
    for arms in ARMS:
        describe(arms)
