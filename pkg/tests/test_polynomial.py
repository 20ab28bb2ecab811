import random
from fractions import Fraction

import numpy as np
import pytest

from morsesnakes.polynomial import (
    IsolatedRoot,
    Poly,
    cauchy_bound,
    count_real_roots,
    discriminant,
    gcd,
    isolate_real_roots,
    refine_root,
    resultant,
    sign_at_root,
    squarefree_decomposition,
    to_fraction,
)


def test_eval_horner():
    p = Poly([1, 0, 1])  # x^2 + 1
    assert p(0) == 1
    assert p(2) == 5
    assert p(Fraction(1, 2)) == Fraction(5, 4)


def test_eval_factored_cubic():
    # x(x+1)(x+2) = x^3 + 3x^2 + 2x, i.e. b=2, c=0 in the shifted family
    p = Poly([0, 2, 3, 1])
    assert p(-1) == 0
    assert p(-2) == 0
    assert p(0) == 0


def test_derivative_and_integral():
    p = Poly([0, 0, 0, 0, 0, 1])  # x^5
    assert p.derivative() == Poly([0, 0, 0, 0, 5])
    assert Poly([7]).derivative().is_zero()
    q = Poly([0, 0, 0, 0, 5])
    assert q.integral() == Poly([0, 0, 0, 0, 0, 1])
    assert Poly().integral().is_zero()


def test_derivative_of_integral_roundtrip():
    rng = random.Random(7)
    for _ in range(25):
        p = Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                  for _ in range(rng.randint(1, 8))])
        assert p.integral().derivative() == p


def test_integral_vanishes_at_zero():
    p = Poly([3, -2, 5])
    assert p.integral()(0) == 0


def test_compose_affine():
    p = Poly([1, 2, 3])  # 3x^2 + 2x + 1
    q = p.compose_affine(2, -1)  # p(2x - 1)
    for x in (-2, 0, Fraction(3, 7)):
        assert q(x) == p(2 * to_fraction(x) - 1)


def test_divmod_and_gcd():
    a = Poly.from_roots([1, 2, 3])
    b = Poly.from_roots([2, 3, 5])
    g = gcd(a, b)
    assert g == Poly.from_roots([2, 3])


def test_squarefree_decomposition():
    p = Poly.from_roots([1, 1, 2, 2, 2, 5])
    parts = dict((m, f) for f, m in squarefree_decomposition(p))
    assert parts[1] == Poly.from_roots([5])
    assert parts[2] == Poly.from_roots([1])
    assert parts[3] == Poly.from_roots([2])


def test_isolate_no_real_roots():
    assert isolate_real_roots(Poly([1, 0, 1])) == []


def test_isolate_simple_roots():
    p = Poly([0, 2, 3, 1])  # x(x+1)(x+2)
    roots = isolate_real_roots(p)
    assert len(roots) == 3
    for r, want in zip(roots, (-2, -1, 0)):
        assert r.lower <= want <= r.upper
        assert r.multiplicity == 1


def test_isolate_with_multiplicities():
    p = Poly.from_roots([0, 0, 3, 3, 3, -1])
    roots = isolate_real_roots(p)
    assert [r.multiplicity for r in roots] == [1, 2, 3]


def test_isolate_random_integer_roots():
    rng = random.Random(123)
    for _ in range(60):
        n = rng.randint(1, 8)
        roots = sorted(rng.sample(range(-6, 7), n))
        p = Poly.from_roots(roots)
        got = isolate_real_roots(p)
        assert len(got) == n
        for r, want in zip(got, roots):
            assert r.lower <= want <= r.upper
    # intervals pairwise disjoint
    for r1, r2 in zip(got, got[1:]):
        assert r1.upper <= r2.lower or (r1.upper < r2.lower or not r1.is_point())


def test_sturm_count_against_numpy():
    rng = random.Random(99)
    for _ in range(1000):
        deg = rng.randint(1, 6)
        coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
        p = Poly(coeffs)
        eig = np.roots(list(reversed([float(c) for c in p.coeffs])))
        reals = [z.real for z in eig if abs(z.imag) < 1e-9]
        # cluster close eigenvalues: they approximate one distinct root
        reals.sort()
        distinct = 0
        prev = None
        for x in reals:
            if prev is None or x - prev > 1e-5:
                distinct += 1
            prev = x
        if any(abs(z.imag) < 1e-6 and abs(z.imag) > 1e-12 for z in eig):
            continue  # borderline conjugate pair, oracle unreliable
        assert count_real_roots(p) == distinct, (coeffs, eig)


def test_count_real_roots_interval():
    p = Poly.from_roots([1, 2, 3])
    assert count_real_roots(p, Fraction(3, 2), Fraction(5, 2)) == 1
    assert count_real_roots(p, 0, 4) == 3


def test_refine_root():
    p = Poly([-2, 0, 1])  # x^2 - 2
    r = IsolatedRoot(Fraction(1), Fraction(2))
    fine = refine_root(p, r, Fraction(1, 1000))
    assert fine.width() <= Fraction(1, 1000)
    assert fine.lower <= Fraction(1414214, 1000000) <= fine.upper * Fraction(1000001, 1000000)
    # still contains sqrt(2)
    assert float(fine.lower) <= 2 ** 0.5 <= float(fine.upper)


def test_refine_root_exact_hit():
    p = Poly([0, 1, 1])  # x(x+1)
    r = IsolatedRoot(Fraction(-1, 2), Fraction(1, 2))
    fine = refine_root(p, r, Fraction(1, 10))
    assert fine.lower <= 0 <= fine.upper


def test_refine_root_matches_eigenvalue_oracle():
    # middle root of x^3 + 3x^2 + 2x + 1/5 (inside the three-root region)
    p = Poly([Fraction(1, 5), 2, 3, 1])
    roots = isolate_real_roots(p)
    assert len(roots) == 3
    mid = refine_root(p, roots[1], Fraction(1, 10**12))
    eig = sorted(z.real for z in np.roots([1, 3, 2, 0.2]) if abs(z.imag) < 1e-12)
    assert abs(float(mid.midpoint()) - eig[1]) < 1e-11


def test_resultant_linear():
    a, b = Fraction(2), Fraction(5)
    res = resultant(Poly([-a, 1]), Poly([-b, 1]))
    assert res == a - b  # Sylvester determinant convention


def test_resultant_shared_root():
    p = Poly.from_roots([1, 2])
    q = Poly.from_roots([2, 7])
    assert resultant(p, q) == 0
    assert resultant(p, p.derivative()) != 0
    assert resultant(Poly.from_roots([3, 3]), Poly.from_roots([3, 3]).derivative()) == 0


def test_discriminant_quadratic():
    rng = random.Random(5)
    for _ in range(10):
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        assert discriminant(Poly([c, b, 1])) == b * b - 4 * c


def test_discriminant_degree_error():
    with pytest.raises(ValueError):
        discriminant(Poly([1, 2]))


def test_cauchy_bound_contains_roots():
    p = Poly.from_roots([-11, 2, 9])
    bound = cauchy_bound(p)
    assert bound > 11


def test_sign_at_root():
    q = Poly.from_roots([-2, -1, 3])
    p = Poly([1, 1])  # x + 1: negative at -2, zero at -1, positive at 3
    roots = isolate_real_roots(q)
    assert sign_at_root(p, q, roots[0]) == -1
    assert sign_at_root(p, q, roots[2]) == 1
