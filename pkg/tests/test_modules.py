import numpy as np
import pytest

from quiverhom.algebra import BoundQuiverAlgebra, Quiver, nakayama_algebra
from quiverhom.modules import (
    IsomorphismUndecided,
    ModuleMap,
    QuiverModule,
    UnsupportedOperation,
    cokernel,
    decompose_serial,
    direct_sum,
    find_isomorphism,
    hom_basis,
    is_isomorphic,
    is_projective,
    kernel,
    projective,
    projective_cover,
    serial_summands,
    simple,
    top_dims,
    uniserial,
    zero_module,
)


@pytest.fixture(scope="module")
def a32():
    return nakayama_algebra(3, 2)


def test_simple_dimension_vectors(a32):
    assert simple(a32, 1).dims == (1, 0, 0)
    a21 = nakayama_algebra(2, 1)
    assert simple(a21, 2).dims == (0, 1)
    with pytest.raises(ValueError):
        simple(a32, 4)


def test_simple_has_zero_radical(a32):
    for i in range(1, 4):
        assert top_dims(simple(a32, i)) == simple(a32, i).dims


def test_projective_dims_and_series(a32):
    p1 = projective(a32, 1)
    assert p1.total_dim == 3
    assert p1.dims == (1, 1, 1)
    # Composition series top-to-socle: S_1, S_2, S_3 (radical layers).
    layers = []
    m = p1
    while not m.is_zero:
        layers.append(top_dims(m))
        cover = projective_cover(m)
        m, _ = kernel(cover.surjection)
    assert layers[0] == (1, 0, 0)
    assert decompose_serial(p1) == [(1, 3)]


def test_projective_wraps_vertices():
    a = nakayama_algebra(2, 2)
    assert projective(a, 1).dims == (2, 1)


def test_top_of_projective_is_simple(a32):
    for i in range(1, 4):
        want = tuple(1 if v == i else 0 for v in range(1, 4))
        assert top_dims(projective(a32, i)) == want


def test_hom_projective_to_simple_is_pairing(a32):
    for i in range(1, 4):
        for j in range(1, 4):
            assert len(hom_basis(projective(a32, i), simple(a32, j))) == (1 if i == j else 0)


def test_hom_simple_endomorphisms(a32):
    for i in range(1, 4):
        assert len(hom_basis(simple(a32, i), simple(a32, i))) == 1


def test_hom_projective_endomorphisms(a32):
    assert len(hom_basis(projective(a32, 1), projective(a32, 1))) == 1


def test_projectivity_pairing_dimension(a32):
    # dim Hom(P_i, M) equals the vertex-i dimension of M.
    mods = [simple(a32, 2), projective(a32, 3), uniserial(a32, 1, 2)]
    for m in mods:
        for i in range(1, 4):
            assert len(hom_basis(projective(a32, i), m)) == m.dims[i - 1]


def test_hom_requires_same_algebra(a32):
    other = nakayama_algebra(3, 2)
    with pytest.raises(ValueError):
        hom_basis(simple(a32, 1), simple(other, 1))


def test_kernel_of_identity_is_zero(a32):
    m = projective(a32, 1)
    k, _ = kernel(ModuleMap.identity(m))
    assert k.is_zero


def test_kernel_of_zero_map_is_source(a32):
    m = projective(a32, 2)
    k, incl = kernel(ModuleMap.zero(m, simple(a32, 1)))
    assert k.dims == m.dims
    assert all(incl.source.field.is_invertible(b) for b in incl.blocks)


def test_kernel_of_cover_is_radical(a32):
    cover = projective_cover(simple(a32, 1))
    k, _ = kernel(cover.surjection)
    assert k.dims == (0, 1, 1)
    assert decompose_serial(k) == [(2, 2)]


def test_kernel_cokernel_rank_nullity(a32):
    maps = hom_basis(projective(a32, 1), uniserial(a32, 1, 2))
    for f in maps:
        k, _ = kernel(f)
        c, _ = cokernel(f)
        for v in range(3):
            rank = f.source.field.rank(f.blocks[v])
            assert k.dims[v] + rank == f.source.dims[v]
            assert c.dims[v] + rank == f.target.dims[v]


def test_cokernel_projection_surjective(a32):
    f = hom_basis(simple(a32, 3), projective(a32, 1))[0]
    c, proj = cokernel(f)
    assert proj.is_surjective()
    assert c.total_dim == projective(a32, 1).total_dim - 1


def test_projective_cover_of_simple(a32):
    cover = projective_cover(simple(a32, 2))
    assert cover.P.summands == (2,)
    assert cover.surjection.is_surjective()


def test_projective_cover_of_projective_is_identity_sized(a32):
    p = projective(a32, 3)
    cover = projective_cover(p)
    assert cover.module.dims == p.dims
    assert cover.surjection.is_invertible()


def test_projective_cover_additivity(a32):
    s, _, _ = direct_sum([simple(a32, 1), simple(a32, 2)])
    cover = projective_cover(s)
    assert sorted(cover.P.summands) == [1, 2]


def test_projective_cover_top_isomorphism(a32):
    for m in [simple(a32, 1), uniserial(a32, 2, 2), projective(a32, 1)]:
        cover = projective_cover(m)
        assert top_dims(cover.module) == top_dims(m)


def test_cover_kernel_lies_in_radical(a32):
    # Minimality: the kernel of the cover surjection sits inside rad P.
    from quiverhom.modules import radical_matrix

    f = a32.field
    for m in [simple(a32, 1), uniserial(a32, 2, 2), projective(a32, 3)]:
        cover = projective_cover(m)
        k, incl = kernel(cover.surjection)
        for v in range(1, 4):
            rad = radical_matrix(cover.module, v)
            blk = incl.block(v)
            if blk.shape[1] == 0:
                continue
            assert f.rank(np.hstack([rad, blk])) == f.rank(rad)


def test_serial_reconstruction_via_generic_search(a32):
    # The named uniserials reassemble to the module, certified by the
    # generic hom-space search rather than the serial fast path.
    from quiverhom.modules import _generic_isomorphism

    cover = projective_cover(simple(a32, 1))
    m, _ = kernel(cover.surjection)  # rad P_1
    rebuilt, _, _ = direct_sum([uniserial(a32, top, length) for top, length in decompose_serial(m)])
    iso = _generic_isomorphism(m, rebuilt)
    assert iso is not None and iso.is_invertible()


def test_cover_of_zero_module(a32):
    z = zero_module(a32)
    cover = projective_cover(z)
    assert cover.module.is_zero


def test_is_projective(a32):
    assert is_projective(projective(a32, 1))
    assert is_projective(zero_module(a32))
    assert not is_projective(simple(a32, 1))
    assert not is_projective(uniserial(a32, 1, 2))


def test_decompose_serial_examples(a32):
    assert decompose_serial(projective(a32, 1)) == [(1, 3)]
    s, _, _ = direct_sum([simple(a32, 1), simple(a32, 1)])
    assert decompose_serial(s) == [(1, 1), (1, 1)]
    assert decompose_serial(zero_module(a32)) == []


def test_decompose_serial_mixed_sum(a32):
    mods = [uniserial(a32, 2, 2), projective(a32, 1), simple(a32, 2)]
    s, _, _ = direct_sum(mods)
    assert decompose_serial(s) == [(1, 3), (2, 1), (2, 2)]


def test_serial_chain_vectors_span(a32):
    m, _, _ = direct_sum([uniserial(a32, 1, 2), uniserial(a32, 1, 2), simple(a32, 2)])
    summands = serial_summands(m)
    assert sorted((s.top, s.length) for s in summands) == [(1, 2), (1, 2), (2, 1)]


def test_rank_count_matches_chain_count():
    # Cross-check the chain algorithm against the rank-difference formula.
    a = nakayama_algebra(4, 4)
    mods = [uniserial(a, 2, 3), projective(a, 1), simple(a, 4), uniserial(a, 3, 5)]
    m, _, _ = direct_sum(mods)
    f = a.field

    def rho(v, d):
        if d > a.n:
            return 0
        return f.rank(m.path_action(a.unique_path(v, d)))

    def depth_count(v, d):
        return rho(v, d) - rho(v, d + 1)

    counts = {}
    for j in range(1, 5):
        for l in range(1, a.n + 2):
            c = depth_count(j, l - 1) - depth_count(a.wrap(j - 1), l)
            if c:
                counts[(j, l)] = c
    from collections import Counter

    assert counts == dict(Counter(decompose_serial(m)))


def test_decompose_serial_unsupported_off_family():
    q = Quiver(2, [(1, 2)])
    alg = BoundQuiverAlgebra(q, nilpotency=2)
    with pytest.raises(UnsupportedOperation):
        decompose_serial(simple(alg, 1))


def test_is_isomorphic_reflexive_and_negative(a32):
    m = uniserial(a32, 1, 2)
    assert is_isomorphic(m, m)
    assert not is_isomorphic(simple(a32, 1), simple(a32, 2))


def test_find_isomorphism_is_explicit(a32):
    m = uniserial(a32, 2, 2)
    cover = projective_cover(simple(a32, 1))
    k, _ = kernel(cover.surjection)  # rad P_1, same serial type (2,2)
    f = find_isomorphism(k, m)
    assert f is not None
    assert f.is_invertible()


def test_generic_isomorphism_search_off_family():
    q = Quiver(2, [(1, 2)])
    alg = BoundQuiverAlgebra(q, nilpotency=2)
    p1 = QuiverModule(alg, (1, 1), [np.array([[1]])], name="P1")
    s1s2 = QuiverModule(alg, (1, 1), [np.array([[0]])], name="S1+S2")
    assert is_isomorphic(p1, p1)
    # Same dimension vector, genuinely non-isomorphic: the random search
    # cannot certify absence and must surface "undecided".
    with pytest.raises(IsomorphismUndecided):
        is_isomorphic(p1, s1s2)


def test_module_validation_rejects_broken_relations(a32):
    # An arrow loop that survives length n+1 composites violates J^{n+1} = 0.
    with pytest.raises(ValueError):
        QuiverModule(a32, (1, 1, 1), [np.array([[1]])] * 3)


def test_module_map_validation(a32):
    # P_1 -> S_2 hitting the second radical layer is not a module map.
    m = projective(a32, 1)
    with pytest.raises(ValueError):
        ModuleMap(m, simple(a32, 2), [np.zeros((0, 1)), np.array([[1]]), np.zeros((0, 1))])


def test_direct_sum_inclusion_projection(a32):
    mods = [simple(a32, 1), projective(a32, 2)]
    total, incls, projs = direct_sum(mods)
    assert total.total_dim == 4
    for inc, pr, m in zip(incls, projs, mods):
        assert pr.compose(inc).is_invertible()
