from hypothesis import given, strategies as st

from gbdq.chains import DescentSet, enumerate_interval_chains
from gbdq.perm import Permutation
from gbdq.qsym import (
    NotSymmetric,
    QSymFunction,
    SchurExpansion,
    expand_in_schur,
    expand_monomials,
    fundamental_monomials,
    is_symmetric_polynomial,
    k_of,
    omega_q,
    rho_q,
    schur_in_q,
    schur_to_q,
)
from gbdq.tableaux import Partition, partitions, schur_polynomial


def Q(n, *sets):
    return QSymFunction.from_descents(n, sets)


def test_schur_functions_in_fundamentals():
    assert schur_in_q(Partition.of(3, 2)) == Q(5, {3}, {2, 4}, {1, 4}, {1, 3}, {2})
    assert schur_in_q(Partition.of(3, 1, 1)) == Q(5, {3, 4}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2})
    assert schur_in_q(Partition.of(4)) == Q(4, set())
    assert schur_in_q(Partition.of(1, 1, 1, 1)) == Q(4, {1, 2, 3})


def test_eleven_chain_function():
    chains = enumerate_interval_chains(Permutation.parse("(1,4,5,3,2,6)"))
    f = k_of((c.descents for c in chains), 5)
    expected = QSymFunction.from_counts(5, {
        DescentSet.of(5, s): k for s, k in [
            ({3, 4}, 1), ({2, 4}, 2), ({2, 3}, 1), ({1, 4}, 2), ({3}, 1), ({1, 3}, 2), ({1, 2}, 1), ({2}, 1)
        ]
    })
    assert f == expected
    e = expand_in_schur(f)
    assert e.as_dict() == {Partition.of(3, 2): 1, Partition.of(3, 1, 1): 1}
    assert str(e) == "s[3,2] + s[3,1,1]"


def test_empty_and_printing():
    assert k_of([], 4).is_zero()
    assert str(Q(5, {2, 4}, {2, 4}, {3})) == "Q{3} + 2*Q{2,4}"
    assert str(expand_in_schur(QSymFunction(3))) == "0"


def test_not_symmetric():
    r = expand_in_schur(Q(3, {1}))
    assert isinstance(r, NotSymmetric)
    assert not r.is_schur_positive()
    assert not r.residual.is_zero()


def test_signed_expansion_is_reported():
    f = schur_in_q(Partition.of(3, 1)) - schur_in_q(Partition.of(2, 2))
    e = expand_in_schur(f)
    assert isinstance(e, SchurExpansion) and not e.is_schur_positive()
    assert e.as_dict() == {Partition.of(3, 1): 1, Partition.of(2, 2): -1}


def test_round_trips():
    for n in range(1, 8):
        for lam in partitions(n):
            assert expand_in_schur(schur_in_q(lam)).as_dict() == {lam: 1}
            assert omega_q(schur_in_q(lam)) == schur_in_q(lam.conjugate())
            assert rho_q(schur_in_q(lam)) == schur_in_q(lam)


def test_fundamental_monomials():
    assert fundamental_monomials(0, 2, 2) == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert fundamental_monomials(1, 2, 2) == {(1, 1): 1}


def test_schur_matches_tableau_sum():
    lam = Partition.of(2, 1)
    assert expand_monomials(schur_in_q(lam), 3) == schur_polynomial(lam, 3)
    assert is_symmetric_polynomial(expand_monomials(schur_in_q(Partition.of(3, 2)), 3))
    assert not is_symmetric_polynomial(expand_monomials(Q(3, {1}), 3))


coefficients = st.dictionaries(
    st.sampled_from(list(partitions(5))), st.integers(-3, 3), max_size=4
)


@given(coefficients)
def test_expansion_inverts_schur_to_q(coeffs):
    e = SchurExpansion(5, tuple(sorted(((l, c) for l, c in coeffs.items() if c), reverse=True)))
    assert expand_in_schur(schur_to_q(e)).as_dict() == e.as_dict()


@given(coefficients)
def test_omega_rho_commute_and_are_involutions(coeffs):
    f = QSymFunction(5)
    for lam, c in coeffs.items():
        f = f + schur_in_q(lam).scale(c)
    g = f + Q(5, {1}, {1, 3})
    assert omega_q(omega_q(g)) == g and rho_q(rho_q(g)) == g
    assert omega_q(rho_q(g)) == rho_q(omega_q(g))
