import numpy as np
import pytest

from ppdim.exactlin import Matrix, as_ints, enumerate_vectors, inverse, rank
from ppdim.exceptions import (
    InputException,
    InvalidModuleException,
    NotCyclicException,
    NotEquivariantException,
    NotInvertibleException,
    NotPermutationException,
    ZeroElementException
)
from ppdim.kmod import (
    BULK_INFINITE_DEPTH,
    INFINITY,
    EquivariantMap,
    Invariants,
    ModuleRep,
    TruncatedPoly,
    canonical_model,
    criteria_agree,
    decompose,
    depth,
    depth_profile,
    direct_sum,
    equivariant_basis,
    from_invariants,
    generates_summand,
    generates_summand_perm,
    hom_basis,
    index_profile,
    intertwiner_basis,
    invert_truncated,
    is_canonical,
    jordan_basis,
    kernel_module,
    layered_depths,
    module_from_json,
    module_to_json,
    nilpotency_index,
    perm_summand_profile,
    split_projection,
    splits_by_invariants,
    summand_profile,
    tensor
)


def all_nonzero(M):
    return [v for v in enumerate_vectors(M.p, M.dim).columns()[1:]]


# ---- 不变量与规范模型 ----

def test_invariants_sorted_and_validated():
    inv = Invariants.of(5, 1, 3, 2, 3)
    assert inv.as_list() == [3, 3, 2, 1]
    assert inv.dim == 9
    assert inv.multiplicity(3) == 2
    assert str(Invariants.of(5, 2, 3)) == "{3,2}"
    assert Invariants.of(5).dim == 0
    with pytest.raises(InvalidModuleException):
        Invariants.of(3, 4)
    with pytest.raises(InvalidModuleException):
        Invariants.of(3, 0)


def test_permutation_and_cyclic_flags():
    assert Invariants.of(3, 3, 1, 1).is_permutation()
    assert not Invariants.of(3, 2).is_permutation()
    assert Invariants.of(3).is_permutation()
    assert Invariants.of(5, 4).is_cyclic()
    assert not Invariants.of(5, 4, 1).is_cyclic()


def test_from_invariants_shape():
    M = from_invariants(Invariants.of(3, 2, 1))
    assert M.N.to_lists() == [[0, 0, 0], [1, 0, 0], [0, 0, 0]]
    assert M.is_valid()


@pytest.mark.parametrize("p,parts", [
    (2, (2, 1)),
    (3, (3, 2, 2, 1)),
    (5, (4, 4, 1)),
    (7, (7, 5, 3)),
    (3, ())
])
def test_decompose_is_basis_independent(p, parts, rng, conjugate):
    inv = Invariants(p, parts)
    M = from_invariants(inv)
    assert decompose(M) == inv
    for _ in range(5):
        assert decompose(conjugate(M, rng)) == inv


def test_decompose_rejects_non_nilpotent():
    M = ModuleRep.from_rows(3, [[1, 0], [0, 0]], check=False)
    with pytest.raises(InvalidModuleException, match="not a k\\[T\\]/T\\^p module"):
        decompose(M)
    with pytest.raises(InvalidModuleException):
        ModuleRep.from_rows(3, [[1, 1], [0, 1]])


def test_zero_module():
    Z = ModuleRep.zero(5)
    assert decompose(Z).as_list() == []
    assert is_canonical(Z)
    assert direct_sum(Z, ModuleRep.cyclic(5, 2)) == ModuleRep.cyclic(5, 2)


def test_direct_sum_invariants(module_of):
    M = direct_sum(module_of(5, 2), module_of(5, 4, 1))
    assert decompose(M) == Invariants.of(5, 4, 2, 1)
    with pytest.raises(InvalidModuleException):
        direct_sum(module_of(3, 1), module_of(5, 1))


def random_invariants(p, rng, max_dim=5):
    parts = []
    remaining = int(rng.integers(1, max_dim + 1))
    while remaining:
        x = int(rng.integers(1, min(p, remaining) + 1))
        parts.append(x)
        remaining -= x
    return Invariants(p, tuple(parts))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_from_invariants_then_decompose(p, rng):
    for _ in range(20):
        inv = random_invariants(p, rng, max_dim=8)
        assert decompose(from_invariants(inv)) == inv


@pytest.mark.parametrize("p", [2, 3, 5])
def test_direct_sum_and_tensor_of_random_pairs(p, rng, conjugate):
    for _ in range(8):
        A, B = random_invariants(p, rng), random_invariants(p, rng)
        M, N = conjugate(from_invariants(A), rng), conjugate(from_invariants(B), rng)
        assert decompose(direct_sum(M, N)) == A.union(B)
        product = tensor(M, N)
        assert product.dim == M.dim * N.dim
        assert product.is_valid()


def test_tensor_examples(module_of):
    assert decompose(tensor(module_of(3, 2), module_of(3, 2))) == Invariants.of(3, 3, 1)
    assert decompose(tensor(module_of(2, 2), module_of(2, 2))) == Invariants.of(2, 2, 2)
    # M_p 与任意模的张量积为自由模
    assert decompose(tensor(module_of(5, 5), module_of(5, 3))) == Invariants.of(5, 5, 5, 5)
    assert decompose(tensor(module_of(5, 1), module_of(5, 4, 2))) == Invariants.of(5, 4, 2)


# ---- 元素判别 ----

def test_depth_examples(module_of):
    M = module_of(3, 2, 1)
    assert depth(M, [0, 1, 1]) == 0
    assert depth(M, [0, 1, 0]) == 1
    assert depth(M, [1, 0, 0]) == 0
    assert depth(M, [0, 0, 0]) is INFINITY
    assert INFINITY > 100


def test_nilpotency_index(module_of):
    M = module_of(5, 4)
    assert nilpotency_index(M, [1, 0, 0, 0]) == 4
    assert nilpotency_index(M, [0, 0, 3, 0]) == 2
    assert nilpotency_index(M, [0, 0, 0, 0]) == 0


@pytest.mark.parametrize("p,parts", [(3, (3, 2, 1)), (5, (4, 2)), (5, (5, 3, 3)), (7, (6, 1))])
def test_action_of_t_on_depth_and_index(p, parts, rng, module_of, conjugate):
    M = conjugate(module_of(p, *parts), rng)
    N = M.N.to_numpy()
    for _ in range(30):
        m = rng.integers(0, p, size=M.dim)
        if not m.any():
            continue
        tm = (N @ m) % p
        assert depth(M, tm) >= depth(M, m) + 1
        assert nilpotency_index(M, tm) == max(0, nilpotency_index(M, m) - 1)


def test_generates_summand_examples(module_of):
    M = module_of(3, 2, 1)
    assert generates_summand(M, [0, 1, 1])
    assert not generates_summand(M, [0, 1, 0])
    assert generates_summand(M, [2, 1, 1])
    with pytest.raises(ZeroElementException):
        generates_summand(M, [0, 0, 0])


def test_generates_summand_perm_examples(module_of):
    P = module_of(3, 3, 1)
    assert generates_summand_perm(P, [0, 0, 0, 1])
    assert not generates_summand_perm(P, [0, 1, 0, 0])
    assert generates_summand_perm(P, [1, 0, 0, 2])
    with pytest.raises(NotPermutationException):
        generates_summand_perm(module_of(3, 2), [1, 0])
    with pytest.raises(ZeroElementException):
        generates_summand_perm(P, [0, 0, 0, 0])


@pytest.mark.parametrize("p,parts", [(2, (2, 1, 1)), (3, (3, 1)), (3, (3, 3)), (3, (3, 1, 1))])
def test_perm_criterion_matches_general(p, parts, module_of):
    P = module_of(p, *parts)
    for v in all_nonzero(P):
        assert generates_summand_perm(P, v) == generates_summand(P, v)


@pytest.mark.parametrize("p,parts", [(2, (2, 1)), (3, (2, 1)), (3, (3, 2)), (3, (2, 2, 1)), (5, (2, 1))])
def test_summand_criteria_agree(p, parts, module_of):
    M = module_of(p, *parts)
    for v in all_nonzero(M):
        projection, layered, top = criteria_agree(M, v)
        assert projection == layered == top
        assert splits_by_invariants(M, v) == top


def test_criteria_agree_in_random_basis(rng, module_of, conjugate):
    M = conjugate(module_of(5, 3, 2, 1), rng)
    E = enumerate_vectors(5, M.dim)
    for j in rng.choice(np.arange(1, E.cols), size=40, replace=False):
        v = E.column(int(j))
        projection, layered, top = criteria_agree(M, v)
        assert projection == layered == top


def test_split_projection_is_retraction(module_of):
    M = module_of(5, 3, 3, 1)
    m = [1, 2, 0, 4, 0, 0, 3]
    pi = split_projection(M, m)
    assert pi is not None
    assert pi.A @ pi.A == pi.A
    assert pi.rank() == 3
    assert as_ints(pi.A @ Matrix.from_rows(5, [[x] for x in m]).column(0)).tolist() == m
    assert split_projection(M, [0, 1, 0, 0, 0, 0, 0]) is None


def test_layered_depths(module_of):
    M = module_of(3, 3, 1)
    assert layered_depths(M, [1, 0, 0, 0])
    assert not layered_depths(M, [0, 1, 0, 0])


# ---- 批量 profile ----

@pytest.mark.parametrize("p,parts", [(2, (2, 1, 1)), (3, (3, 2, 1)), (5, (3, 1))])
def test_profiles_match_scalar(p, parts, rng, module_of, conjugate):
    M = conjugate(module_of(p, *parts), rng)
    E = enumerate_vectors(p, M.dim)
    indices = index_profile(M, E)
    depths = depth_profile(M, E)
    summands = summand_profile(M, E)
    assert depths[0] == BULK_INFINITE_DEPTH
    assert indices[0] == 0 and not summands[0]
    for j in range(1, E.cols):
        v = E.column(j)
        assert indices[j] == nilpotency_index(M, v)
        assert depths[j] == depth(M, v)
        assert summands[j] == generates_summand(M, v)


def test_perm_profile(module_of):
    P = module_of(3, 3, 1, 1)
    E = enumerate_vectors(3, P.dim)
    profile = perm_summand_profile(P, E)
    assert not profile[0]
    for j in range(1, E.cols):
        assert profile[j] == generates_summand_perm(P, E.column(j))


# ---- 截断多项式 ----

def test_truncated_inverse():
    f = TruncatedPoly.of(5, [2, 3, 1], 3)
    g = invert_truncated(f)
    assert (f * g).is_one()
    with pytest.raises(NotInvertibleException):
        invert_truncated(TruncatedPoly.of(5, [0, 1], 2))


@pytest.mark.parametrize("p, coefficients, alpha, expected", [
    (3, [1, 1], 3, [1, 2, 1]),
    (3, [2], 1, [2]),
    (5, [1, 1], 2, [1, 4]),
    (7, [3], 4, [5, 0, 0, 0]),
])
def test_truncated_inverse_examples(p, coefficients, alpha, expected):
    assert invert_truncated(TruncatedPoly.of(p, coefficients, alpha)).to_list() == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_truncated_inverse_of_random_units(p, rng):
    for _ in range(20):
        alpha = int(rng.integers(1, p + 1))
        coefficients = [int(rng.integers(1, p))] + [int(c) for c in rng.integers(0, p, size=alpha - 1)]
        f = TruncatedPoly.of(p, coefficients, alpha)
        g = invert_truncated(f)
        assert (f * g).is_one() and (g * f).is_one()
        assert invert_truncated(g) == f


# ---- 等变映射 ----

def test_equivariant_map_checks(module_of):
    M3 = module_of(3, 3)
    with pytest.raises(NotEquivariantException):
        EquivariantMap(M3, M3, Matrix.from_rows(3, [[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    identity = EquivariantMap.identity(M3)
    assert identity.is_injective() and identity.is_surjective()


def test_hom_basis_examples(module_of):
    (f,) = hom_basis(module_of(3, 1), module_of(3, 3))
    assert f.A.to_lists() == [[0], [0], [1]]
    (g,) = hom_basis(module_of(3, 3), module_of(3, 1))
    assert g.A.to_lists() == [[1, 0, 0]]
    assert len(hom_basis(module_of(5, 4), module_of(5, 3))) == 3
    with pytest.raises(NotCyclicException):
        hom_basis(module_of(3, 2, 1), module_of(3, 1))


@pytest.mark.parametrize("left,right", [((3, 1), (2,)), ((2, 2), (3, 1)), ((3,), (3, 2, 1))])
def test_equivariant_basis_dimension(left, right, rng, module_of, conjugate):
    A = conjugate(module_of(3, *left), rng)
    B = conjugate(module_of(3, *right), rng)
    expected = sum(min(a, b) for a in left for b in right)
    basis = equivariant_basis(A, B)
    assert len(basis) == expected
    assert len(intertwiner_basis(A, B)) == expected
    stacked = Matrix.from_columns(3, [f.A.to_numpy().reshape(-1) for f in basis], A.dim * B.dim)
    assert stacked.cols == expected
    assert rank(stacked) == expected


def test_jordan_basis_of_canonical_is_identity(module_of):
    M = module_of(5, 3)
    assert jordan_basis(M) == Matrix.identity(5, 3)


def test_canonical_model(rng, module_of, conjugate):
    M = conjugate(module_of(5, 4, 2, 2), rng)
    C, iso = canonical_model(M)
    assert is_canonical(C)
    assert decompose(C) == Invariants.of(5, 4, 2, 2)
    assert iso.source == C and iso.target == M
    assert iso.is_injective() and iso.is_surjective()
    assert inverse(iso.A) @ M.N @ iso.A == C.N

    C2, iso2 = canonical_model(C)
    assert C2 == C and iso2.A == Matrix.identity(5, C.dim)


def test_kernel_module(module_of):
    (f,) = [h for h in hom_basis(module_of(3, 3), module_of(3, 2)) if h.is_surjective()]
    K, g = kernel_module(f)
    assert decompose(K) == Invariants.of(3, 1)
    assert f.compose(g).is_zero()
    assert g.is_injective()

    K0, g0 = kernel_module(EquivariantMap.identity(module_of(3, 2)))
    assert K0.dim == 0 and g0.A.shape == (2, 0)


# ---- JSON ----

def test_module_json(module_of):
    M = module_of(5, 3, 1)
    doc = module_to_json(M)
    assert doc["invariants"] == [3, 1]
    assert module_from_json(doc) == M
    assert module_from_json('{"p": 3, "invariants": [2, 1]}') == module_of(3, 2, 1)
    with pytest.raises(InputException):
        module_from_json('{"p": 3')
    with pytest.raises(InputException):
        module_from_json({"p": 3})
