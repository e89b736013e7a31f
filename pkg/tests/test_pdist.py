import galois
import pytest

from ppdim.exceptions import FieldException, InvalidModuleException
from ppdim.kmod import Invariants
from ppdim.pdist import (
    chain_diagram,
    closed_form_size,
    group_ppdim,
    predecessor,
    size_int,
    size_module,
    size_table
)


def test_size_table_p5():
    assert size_table(5).as_dict() == {1: 0, 2: 2, 3: 3, 4: 1, 5: 0}


def test_size_examples():
    assert size_int(7, 4) == 5
    assert size_int(7, 3) == 4
    assert size_int(2, 2) == 0
    assert size_int(3, 2) == 1


def test_size_module():
    assert size_module(Invariants.of(5, 3, 4)) == 3
    assert size_module(Invariants.of(5, 5, 1)) == 0
    assert size_module(Invariants.of(5)) == 0


@pytest.mark.parametrize("p", list(galois.primes(60)))
def test_closed_form_matches_table(p):
    table = size_table(p)
    for x in range(1, p + 1):
        assert table[x] == closed_form_size(p, x)


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 31])
def test_group_ppdim(p):
    assert group_ppdim(p) == (0 if p == 2 else p - 2)


def test_size_is_bounded_and_attained():
    for p in (5, 7, 11):
        table = size_table(p)
        assert all(0 <= table[x] <= p - 2 for x in range(1, p + 1))
        assert sorted(table.values[1:p - 1]) == list(range(1, p - 1))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_predecessor_lowers_size(p):
    for x in range(2, p):
        x_prime, epsilon = predecessor(p, x)
        assert x_prime in (p - x, p - x + 1)
        assert epsilon in (0, 1)
        assert x == p + epsilon - x_prime
        assert size_int(p, x_prime) == size_int(p, x) - 1


def test_predecessor_examples():
    assert predecessor(5, 3) == (2, 0)
    assert predecessor(5, 2) == (4, 1)
    assert predecessor(5, 4) == (1, 0)
    with pytest.raises(InvalidModuleException):
        predecessor(5, 1)
    with pytest.raises(InvalidModuleException):
        predecessor(5, 5)


def test_out_of_range():
    with pytest.raises(InvalidModuleException):
        size_int(5, 0)
    with pytest.raises(InvalidModuleException):
        size_int(5, 6)
    with pytest.raises(FieldException):
        size_table(9)


def test_chain_diagram():
    chain = chain_diagram(5)
    assert chain.entries == (1, 4, 2, 3)
    assert chain.to_text() == "1 - 4 - 2 - 3"
    dot = chain.to_dot()
    assert dot.startswith("graph size_chain_p5 {")
    assert "x1 -- x4;" in dot
    assert 'x3 [label="3 (size 3)"];' in dot


@pytest.mark.parametrize("p", [3, 7, 13])
def test_chain_positions_are_sizes(p):
    chain = chain_diagram(p)
    assert len(chain) == p - 1
    for position, x in enumerate(chain.entries):
        assert size_int(p, x) == position
    assert chain_diagram(2).entries == (1,)
