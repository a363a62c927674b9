"""Shared builders for the test suite.

The instance registry drives the three-way equivalence tests: every entry
is a verified J-space together with its expected dominance verdict, spanning
levels 0 through 3, commutative and matrix examples, tensor powers, and
deliberately non-dominant controls.
"""

from fractions import Fraction as Q

import pytest

from tkkwb import (JSpaceRep, matrix_jordan, newton_rep, regular_rep,
                   spin_factor, truncated_poly, zero_rep)
from tkkwb.jspace import doubled_regular_rep, matrix_defining_rep, tensor_rep
from tkkwb.linalg import LabeledSpace, Matrix


def one_gen_rep(n, T, name):
    """rho(1) = n id, rho(t) = T over the trivially graded dual numbers.

    A J-space for every matrix T: the image lies in the commutative span
    of id and T, and all inner derivations of the algebra vanish.
    """
    J = truncated_poly(1, graded=False)
    m = T.rows
    module = LabeledSpace(tuple(f"v{i}" for i in range(m)), (0,) * m)
    return JSpaceRep(J, module, [Matrix.identity(m).scale(Q(n)), T], name=name)


def projection_matrix():
    return Matrix.from_rows([[Q(1), Q(0)], [Q(0), Q(0)]])


def nilpotent_matrix():
    return Matrix.from_rows([[Q(0), Q(1)], [Q(0), Q(0)]])


def jordan_block_3():
    return Matrix.from_rows([[Q(0), Q(1), Q(0)],
                             [Q(0), Q(0), Q(1)],
                             [Q(0), Q(0), Q(0)]])


def equivalence_instances():
    """(name, rep, expected_dominant) covering levels 0-3, dims <= 30."""
    dr2 = matrix_defining_rep(2)
    t2 = tensor_rep(dr2, dr2, name="defining-rep tensor square")
    t3 = tensor_rep(t2, dr2, name="defining-rep tensor cube")
    out = [
        ("zero rep, truncated poly", zero_rep(truncated_poly(2)), True),
        ("zero rep, matrix algebra", zero_rep(matrix_jordan(2)), True),
        ("zero rep, spin factor",
         zero_rep(spin_factor([[Q(1), Q(0)], [Q(0), Q(1)]])), True),
        ("level-0 projection control", one_gen_rep(0, projection_matrix(),
                                                   "level-0 control"), False),
        ("regular rep D=1", regular_rep(truncated_poly(1)), True),
        ("regular rep D=2", regular_rep(truncated_poly(2)), True),
        ("regular rep D=3", regular_rep(truncated_poly(3)), True),
        ("regular rep D=4", regular_rep(truncated_poly(4)), True),
        ("regular rep D=5", regular_rep(truncated_poly(5)), True),
        ("defining rep M2", dr2, True),
        ("defining rep M3", matrix_defining_rep(3), True),
        ("level-1 projection control", one_gen_rep(1, projection_matrix(),
                                                   "level-1 control"), False),
        ("level-1 nilpotent", one_gen_rep(1, nilpotent_matrix(),
                                          "level-1 nilpotent"), True),
        ("newton rep (2,2)", newton_rep(2, 2), True),
        ("newton rep (2,3)", newton_rep(2, 3), True),
        ("newton rep (2,4)", newton_rep(2, 4), True),
        ("tensor square of defining rep", t2, True),
        ("doubled regular over matrix algebra",
         doubled_regular_rep(matrix_jordan(2)), True),
        ("doubled regular over spin factor",
         doubled_regular_rep(spin_factor([[Q(1), Q(0)], [Q(0), Q(1)]])), True),
        ("level-2 projection control", one_gen_rep(2, projection_matrix(),
                                                   "level-2 control"), False),
        ("level-2 jordan block", one_gen_rep(2, jordan_block_3(),
                                             "level-2 jordan block"), True),
        ("newton rep (3,2)", newton_rep(3, 2), True),
        ("newton rep (3,3)", newton_rep(3, 3), True),
        ("tensor cube of defining rep", t3, True),
        ("level-3 projection control", one_gen_rep(3, projection_matrix(),
                                                   "level-3 control"), False),
    ]
    return out


@pytest.fixture(scope="session")
def instances():
    return equivalence_instances()
