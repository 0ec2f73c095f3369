"""Small named families used in the docs, tests and data files."""

from .core import SetFamily


def _fam(*sets):
    return SetFamily.from_sets([s.split() if s else [] for s in sets])


def covert_example():
    """Element 3 is covert: {3} is missing, yet A ∪ {3} is always a member."""
    return _fam("1 2 3 4", "1 2 4", "2 3 4", "1 2", "2 4", "1 2 3")


def dim_two_example():
    """Separating, dimension two; 2 and 3 optimal, 1 abundant but not optimal."""
    return _fam("1 2 3 4", "1 2 3", "2 3 4", "1 2", "2 3", "3 4")


def optimal_not_abundant_example():
    """Dimension three; 1 is optimal but lies in only 3 of 7 members."""
    return _fam("1 2 3", "1 2", "2 3", "1 3", "2", "3", "")


def no_cover_example():
    """Dimension three on [5]; every element optimal and abundant, yet each
    has a member of F_x^c with no x-cover (for x = 1, the set {3,4})."""
    return _fam(
        "1 2 3 4 5",
        "1 2 3 5", "1 2 3 4", "2 3 4 5", "1 3 4 5", "1 2 4 5",
        "1 2 3", "1 2 5", "1 4 5", "3 4 5", "2 3 4",
        "1 2", "1 5", "3 4", "2 3", "4 5",
    )


def tent_example():
    """``(F, T)``: F = {∅, {1,3}, {2,4}} dominating the 2-tent {1}, {2}, {1,2}."""
    return _fam("", "1 3", "2 4"), _fam("1", "2", "1 2")


def named():
    F, T = tent_example()
    return {
        "covert": covert_example(),
        "dim-two": dim_two_example(),
        "optimal-not-abundant": optimal_not_abundant_example(),
        "no-cover": no_cover_example(),
        "tent-F": F,
        "tent-T": T,
    }
