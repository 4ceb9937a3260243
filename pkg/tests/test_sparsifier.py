import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from colorkernel.field import FieldMismatch, Matrix, PrimeField, row_reduce
from colorkernel.palette import construct_palette
from colorkernel.polyring import Poly, VarId, build_f, build_h
from colorkernel.sparsifier import (
    ConstraintTag,
    EchelonBasis,
    Kind,
    basis_insert,
    basis_members,
    monomial_space_bound,
)

GF3, GF5 = PrimeField(3), PrimeField(5)


def span_rank(field, polys):
    """Rank of the coefficient matrix of ``polys`` (independent of EchelonBasis)."""
    monos = sorted({m for p in polys for m in p.terms})
    if not polys or not monos:
        return 0
    rows = [[p.coefficient(m) for m in monos] for p in polys]
    return row_reduce(Matrix.from_rows(field, rows))[0]


def random_poly(rng, field, n_vars=6, max_deg=3, n_terms=4):
    variables = [VarId(v, 2) for v in range(n_vars)]
    terms = {}
    for _ in range(n_terms):
        factors = {}
        for _ in range(rng.randint(0, max_deg)):
            var = rng.choice(variables)
            factors[var] = factors.get(var, 0) + 1
        terms[tuple(sorted(factors.items()))] = rng.randrange(field.p)
    return Poly(field, terms)


def tag(i):
    return ConstraintTag.type1(i, (0, 1, 2))


def check_invariants(B):
    rows = B.rows()
    pivots = [pivot for _, pivot, _ in rows]
    assert len(set(pivots)) == len(pivots)
    for poly, pivot, _ in rows:
        assert poly.coefficient(pivot) == 1
        for other in pivots:
            if other != pivot:
                assert poly.coefficient(other) == 0


class TestInsert:
    def test_duplicate_dependent(self):
        B = EchelonBasis(GF3)
        p = Poly.variable(GF3, 0, 2) * Poly.variable(GF3, 1, 2) + 1
        assert basis_insert(B, p, tag(0))
        assert not basis_insert(B, p, tag(1))

    def test_scalar_multiple_dependent(self):
        B = EchelonBasis(GF3)
        p = Poly.variable(GF3, 0, 2) + Poly.variable(GF3, 1, 3)
        assert basis_insert(B, p, tag(0))
        assert not basis_insert(B, p.scale(2), tag(1))

    def test_zero_polynomial_dependent(self):
        B = EchelonBasis(GF3)
        assert not B.insert(Poly.zero(GF3), tag(0))
        assert basis_members(B) == []

    def test_field_mismatch(self):
        B = EchelonBasis(GF3)
        with pytest.raises(FieldMismatch):
            B.insert(Poly.variable(GF5, 0, 2), tag(0))

    def test_members_in_order(self):
        B = EchelonBasis(GF3)
        x, y = Poly.variable(GF3, 0, 2), Poly.variable(GF3, 1, 2)
        B.insert(x, tag(0))
        B.insert(y, tag(1))
        B.insert(x + y, tag(2))
        assert basis_members(B) == [tag(0), tag(1)]

    def test_empty(self):
        assert basis_members(EchelonBasis(GF3)) == []


@pytest.mark.parametrize("seed", range(15))
def test_span_preserved_random(seed):
    rng = random.Random(seed)
    field = rng.choice([GF3, GF5, PrimeField(2)])
    polys = [random_poly(rng, field) for _ in range(rng.randint(1, 20))]
    # add explicit combinations so dependencies actually occur
    for _ in range(5):
        a, b = rng.sample(polys, 2) if len(polys) > 1 else (polys[0], polys[0])
        polys.append(a.combine(b, rng.randrange(field.p)))
    B = EchelonBasis(field)
    kept = []
    for i, p in enumerate(polys):
        if B.insert(p, tag(i)):
            kept.append(p)
    check_invariants(B)
    assert [t.payload[0] for t in B.members()] == [i for i, p in enumerate(polys) if any(p is k for k in kept)]
    r = span_rank(field, kept)
    assert r == len(kept) == len(B)
    for p in polys:
        assert span_rank(field, kept + [p]) == r
        assert B.contains(p)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2**32), min_size=1, max_size=20))
def test_rank_matches_dense_elimination(seeds):
    polys = [random_poly(random.Random(s), GF3, n_terms=3) for s in seeds]
    B = EchelonBasis(GF3)
    for i, p in enumerate(polys):
        B.insert(p, tag(i))
    assert len(B) == span_rank(GF3, polys)
    check_invariants(B)


def test_deterministic():
    rng = random.Random(3)
    polys = [random_poly(rng, GF3) for _ in range(20)]
    runs = []
    for _ in range(2):
        B = EchelonBasis(GF3)
        for i, p in enumerate(polys):
            B.insert(p, tag(i))
        runs.append((B.members(), [str(p) for p, _, _ in B.rows()]))
    assert runs[0] == runs[1]


@pytest.mark.parametrize("q,k", [(3, 3), (3, 5), (3, 6), (4, 4), (4, 6)])
def test_type1_dimension_bound(q, k):
    P = construct_palette(q, GF3)
    B = EchelonBasis(GF3)
    subsets = list(combinations(range(k), q))
    for S in subsets:
        B.insert(build_f(q, P, S), ConstraintTag.type1(100, S))
    assert len(B) <= monomial_space_bound(q, k, q - 1)
    # f_S on disjoint variable sets are never multiples of each other; for q-subsets they are independent
    assert len(B) == span_rank(GF3, [build_f(q, P, S) for S in subsets])


def test_type2_dimension_bound():
    q, k = 3, 4
    P = construct_palette(q, GF3)
    B = EchelonBasis(GF3)
    polys = []
    for S1 in combinations(range(k), q - 1):
        for S2 in combinations(range(k), q - 1):
            h = build_h(q, P, S1, S2)
            polys.append(h)
            B.insert(h, ConstraintTag.type2(90, 91, S1, S2))
    assert len(B) <= monomial_space_bound(q, k, 2 * q - 3)
    assert len(B) == span_rank(GF3, polys)


def test_tag_gadgets():
    t1 = ConstraintTag.type1(9, (3, 1, 2))
    assert t1.payload == (9, (1, 2, 3))
    assert t1.gadget_edges() == [(9, 1), (9, 2), (9, 3)]
    t2 = ConstraintTag.type2(7, 8, (1, 2), (2, 0))
    assert t2.kind is Kind.TYPE2
    assert t2.outside_vertices == (7, 8)
    assert t2.gadget_edges() == [(7, 8), (7, 1), (7, 2), (8, 0), (8, 2)]
