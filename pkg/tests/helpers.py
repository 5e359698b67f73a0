"""Shared helpers for the test suite."""
from fractions import Fraction

from repgeom.cli import parse_rep
from repgeom.matrep import build_action
from repgeom.rootsys import SimpleType


def act(text):
    """Build the real orthogonal action of a CLI representation string."""
    return build_action(parse_rep(text))


def st(family, rank):
    return SimpleType(family, rank)


def frac_mat(rows):
    """List-of-lists of ints/strings -> list-of-lists of Fractions."""
    return [[Fraction(x) for x in row] for row in rows]
