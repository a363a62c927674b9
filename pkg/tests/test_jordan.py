import json
import random
from fractions import Fraction as Q

import pytest

from tkkwb.jordan import (InputError, JordanAlgebra, algebra_from_dict,
                          algebra_to_dict, builtin, inner_derivation, jmul,
                          jpower, L_op, matrix_jordan, spin_factor,
                          special_from_associative, truncated_poly, validate)
from tkkwb.linalg import Matrix, random_vector, zero_vector


def basis(n, i):
    v = zero_vector(n)
    v[i] = Q(1)
    return v


def all_builtins():
    return [truncated_poly(3), matrix_jordan(2),
            spin_factor([[Q(1), Q(0)], [Q(0), Q(1)]])]


def test_truncated_poly_validates():
    assert validate(truncated_poly(3)).ok
    assert validate(truncated_poly(0)).ok
    assert truncated_poly(0).dim == 1


def test_matrix_jordan_validates():
    J = matrix_jordan(2)
    assert J.dim == 4
    assert validate(J).ok
    # unit acts as identity
    for i in range(4):
        assert jmul(J, J.unit, basis(4, i)) == basis(4, i)


def test_spin_factor_validates():
    J = spin_factor([[Q(1), Q(0)], [Q(0), Q(1)]])
    assert validate(J).ok
    # v * v = <v,v> 1 for a unit vector
    v = basis(J.dim, 1)
    assert jmul(J, v, v) == list(J.unit)


def test_spin_factor_rejects_asymmetric_gram():
    with pytest.raises(InputError):
        spin_factor([[Q(0), Q(1)], [Q(2), Q(0)]])


def test_corrupted_table_invalid():
    J = truncated_poly(2)
    table = [[dict(J.table[i][j]) for j in range(3)] for i in range(3)]
    table[1][1] = {1: Q(1)}  # t*t := t, breaking degree additivity
    bad = JordanAlgebra(J.space, J.unit, table, name="corrupted")
    rep = validate(bad)
    assert not rep.ok
    assert rep.first_failure() is not None


def test_jmul_examples():
    J = truncated_poly(3)
    t, t2, t3 = basis(4, 1), basis(4, 2), basis(4, 3)
    assert jmul(J, t, t2) == t3
    assert jmul(J, t2, t2) == zero_vector(4)  # degree overflow
    assert jmul(J, J.unit, t2) == t2


def test_jpower_examples():
    J = truncated_poly(5)
    t = basis(6, 1)
    assert jpower(J, t, 0) == list(J.unit)
    assert jpower(J, t, 2) == basis(6, 2)
    J2 = truncated_poly(2)
    one_plus_t = [Q(1), Q(1), Q(0)]
    assert jpower(J2, one_plus_t, 2) == [Q(1), Q(2), Q(1)]


def test_L_op_examples():
    J = truncated_poly(2)
    assert L_op(J, J.unit) == Matrix.identity(3)
    t = basis(3, 1)
    lt = L_op(J, t)
    # shift: 1 -> t -> t^2 -> 0
    assert lt.apply(basis(3, 0)) == basis(3, 1)
    assert lt.apply(basis(3, 1)) == basis(3, 2)
    assert lt.apply(basis(3, 2)) == zero_vector(3)
    assert L_op(J, [Q(0), Q(2), Q(0)]) == lt.scale(Q(2))


def test_inner_derivation_basic():
    J = matrix_jordan(2)
    a = random_vector(random.Random(0), 4)
    assert inner_derivation(J, a, a).is_zero()
    b = random_vector(random.Random(1), 4)
    assert inner_derivation(J, list(J.unit), b).is_zero()
    # commutative associative: all derivations vanish
    Jt = truncated_poly(4)
    x = random_vector(random.Random(2), 5)
    y = random_vector(random.Random(3), 5)
    assert inner_derivation(Jt, x, y).is_zero()


def test_inner_derivation_leibniz():
    for J in all_builtins():
        d = J.dim
        for i in range(d):
            for j in range(d):
                der = inner_derivation(J, basis(d, i), basis(d, j))
                for u in range(d):
                    for v in range(d):
                        uv = jmul(J, basis(d, u), basis(d, v))
                        lhs = der.apply(uv)
                        rhs = [x + y for x, y in zip(
                            jmul(J, der.apply(basis(d, u)), basis(d, v)),
                            jmul(J, basis(d, u), der.apply(basis(d, v))))]
                        assert lhs == rhs


def test_power_associativity_samples():
    rng = random.Random(9)
    for J in all_builtins():
        d = J.dim
        elems = [basis(d, i) for i in range(d)]
        elems += [random_vector(rng, d) for _ in range(5)]
        for a in elems:
            pows = {k: jpower(J, a, k) for k in range(7)}
            for i in range(7):
                for j in range(7 - i):
                    assert jmul(J, pows[i], pows[j]) == pows[i + j]


def test_multiplication_operators_of_powers_commute():
    rng = random.Random(11)
    for J in all_builtins():
        a = random_vector(rng, J.dim)
        ops = [L_op(J, jpower(J, a, k)) for k in range(5)]
        for i in range(5):
            for j in range(5):
                assert ops[i].commutator(ops[j]).is_zero()


def test_special_from_associative_rejects_nonassociative():
    # u unit, x*x = u, but u*x corrupted to u: (x*x)*x = u while x*(x*x) = x
    labels = ["u", "x"]
    unit = [Q(1), Q(0)]
    table = [[{0: Q(1)}, {0: Q(1)}], [{1: Q(1)}, {0: Q(1)}]]
    with pytest.raises(InputError):
        special_from_associative(labels, unit, table)


def test_builtin_lookup():
    assert builtin("truncated-poly", degree=2).dim == 3
    assert builtin("matrix", size=2).dim == 4
    assert builtin("spin-factor", dim=3).dim == 4
    with pytest.raises(InputError):
        builtin("nonesuch")


def test_json_roundtrip(tmp_path):
    for J in all_builtins():
        data = algebra_to_dict(J)
        text = json.dumps(data)
        back = algebra_from_dict(json.loads(text), name=J.name)
        assert back.space.labels == J.space.labels
        assert back.space.degrees == J.space.degrees
        assert back.unit == J.unit
        for i in range(J.dim):
            for j in range(J.dim):
                assert back.table[i][j] == J.table[i][j]
        assert validate(back).ok


def test_json_asymmetric_entries_caught_by_validation():
    # explicit (i,j) and (j,i) entries that disagree survive loading but
    # fail the commutativity axiom with a witness
    data = {
        "labels": ["1", "x"],
        "degrees": [0, 0],
        "unit": ["1", "0"],
        "mult": [
            {"i": 0, "j": 0, "coords": ["1", "0"]},
            {"i": 0, "j": 1, "coords": ["0", "1"]},
            {"i": 1, "j": 0, "coords": ["1", "0"]},
            {"i": 1, "j": 1, "coords": ["0", "0"]},
        ],
    }
    J = algebra_from_dict(data)
    rep = validate(J)
    assert not rep.ok
    assert "commutativity" in rep.first_failure().name


def test_json_bad_input():
    with pytest.raises(InputError):
        algebra_from_dict({"labels": ["a"], "degrees": [0]})
    with pytest.raises(InputError):
        algebra_from_dict({"labels": ["a"], "degrees": [0], "unit": ["1"],
                           "mult": [{"i": 5, "j": 0, "coords": ["1"]}]})
