import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bour4.minkowski import (ETA1, ETA2, ETA4, XI3, XI4, Bivector6,
                             CausalClass, Vec4, causal_character,
                             from_null_basis, inner4, inner6, wedge)

coord = st.floats(min_value=-50, max_value=50, allow_nan=False)
vec = st.builds(Vec4, coord, coord, coord, coord)


def test_inner4_examples():
    assert inner4(ETA1, ETA1) == 1.0
    assert inner4(ETA4, ETA4) == -1.0
    assert inner4(Vec4(1, 2, 3, 4), Vec4(4, 3, 2, 1)) == 12.0


@given(vec, vec)
def test_inner4_symmetric(x, y):
    assert inner4(x, y) == inner4(y, x)


def test_causal_character():
    assert causal_character(Vec4(1, 0, 0, 0)) is CausalClass.SPACELIKE
    assert causal_character(Vec4(0, 0, 0, 1)) is CausalClass.TIMELIKE
    assert causal_character(Vec4(0, 0, 1, 1)) is CausalClass.LIGHTLIKE
    assert causal_character(Vec4(0, 0, 0, 0)) is CausalClass.SPACELIKE
    # relative tolerance keeps large nearly-null vectors classifiable
    big = 1e8
    assert causal_character(Vec4(0, 0, big, big * (1 + 1e-15))) \
        is CausalClass.LIGHTLIKE


def test_wedge_examples():
    assert wedge(ETA1, ETA2) == Bivector6(1, 0, 0, 0, 0, 0)
    x = Vec4(1, 1, 0, 0)
    assert wedge(x, x) == Bivector6(0, 0, 0, 0, 0, 0)
    b = wedge(Vec4(1, 1, 0, 0), Vec4(0, 0, 1, 1))
    assert b == Bivector6(0, 1, 1, 1, 1, 0)


@given(vec, vec)
def test_wedge_antisymmetric(x, y):
    s = wedge(x, y) + wedge(y, x)
    assert all(c == 0.0 for c in s.components())


@given(vec, vec, vec, st.floats(min_value=-5, max_value=5, allow_nan=False))
def test_wedge_bilinear(x, y, z, s):
    left = wedge(x + s * z, y)
    right = wedge(x, y) + s * wedge(z, y)
    assert max(abs(a - b) for a, b in
               zip(left.components(), right.components())) < 1e-9 * (
                   1 + max(abs(c) for c in left.components()))


def test_inner6_basis_signs():
    e12 = Bivector6(1, 0, 0, 0, 0, 0)
    e34 = Bivector6(0, 0, 0, 0, 0, 1)
    assert inner6(e12, e12) == 1.0
    assert inner6(e34, e34) == -1.0
    assert inner6(e12, e34) == 0.0
    signs = []
    for i in range(6):
        c = [0.0] * 6
        c[i] = 1.0
        b = Bivector6(*c)
        signs.append(inner6(b, b))
    assert signs == [1.0, 1.0, -1.0, 1.0, -1.0, -1.0]


def test_lagrange_identity_seeded():
    rng = np.random.default_rng(6)
    for _ in range(1000):
        x, y, z, w = (Vec4(*rng.uniform(-2, 2, size=4)) for _ in range(4))
        lhs = inner6(wedge(x, y), wedge(z, w))
        rhs = inner4(x, z) * inner4(y, w) - inner4(x, w) * inner4(y, z)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(rhs))


def test_null_basis():
    assert abs(inner4(XI3, XI3)) < 1e-15
    assert abs(inner4(XI4, XI4)) < 1e-15
    # the defining combinations (eta4 -+ eta3)/sqrt2 force the cross product
    # to -1 in this signature
    assert abs(inner4(XI3, XI4) + 1.0) < 1e-15


def test_from_null_basis():
    s = 1 / math.sqrt(2)
    assert from_null_basis(0, 0, 1, 0) == Vec4(0, 0, -s, s)
    v = from_null_basis(0, 0, 0, 1)
    assert max(abs(a - b) for a, b in
               zip(v.components(), (0, 0, s, s))) < 1e-15
    v = from_null_basis(0, 0, 1, 1)
    assert max(abs(a - b) for a, b in
               zip(v.components(), (0, 0, 0, math.sqrt(2)))) < 1e-15
