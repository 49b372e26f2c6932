import json
import math
import random

import pytest

from char2kit.gf2m import (
    Field,
    FieldError,
    PRIMITIVE_POLY,
    decimation_exponent,
    get_field,
    load_reduction_config,
)

from oracles import NaiveField


def test_add_examples():
    f = get_field(3)
    for x in f.elements():
        assert f.add(0, x) == x
        assert f.add(x, x) == 0
    assert f.add(0b010, 0b011) == 1


def test_mul_examples():
    f = get_field(3)  # reduction x^3 + x + 1
    for x in f.elements():
        assert f.mul(1, x) == x
    assert f.mul(0b010, 0b100) == 0b011  # alpha * alpha^2 = alpha + 1
    for x in f.nonzero():
        assert f.mul(x, f.inv(x)) == 1


def test_pow_examples():
    f = get_field(3)
    for a in f.nonzero():
        assert f.pow(a, 1) == a
        assert f.pow(a, f.order) == 1
    assert f.pow(0b010, 3) == 0b011
    assert f.pow(0, 0) == 1  # empty product convention
    assert f.pow(0, 5) == 0


def test_inv_examples():
    f = get_field(3)
    assert f.inv(1) == 1
    # exhaustive: inv(alpha) is the unique y with alpha * y = 1
    alpha = 0b010
    expected = next(y for y in f.nonzero() if f.mul(alpha, y) == 1)
    assert f.inv(alpha) == expected
    for a in f.nonzero():
        assert f.inv(f.inv(a)) == a
    with pytest.raises(FieldError):
        f.inv(0)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 8, 11])
def test_trace_examples(m):
    f = get_field(m)
    assert f.trace(0) == 0
    assert f.trace(1) == m % 2
    assert sum(f.trace(a) == 0 for a in f.elements()) == f.size // 2


def test_generator_power():
    f = get_field(3)
    assert f.generator_power(0) == 1
    assert f.generator_power(3) == 0b011
    assert len({f.generator_power(t) for t in range(f.order)}) == f.order
    with pytest.raises(FieldError):
        f.generator_power(f.order)


@pytest.mark.parametrize("m,k,expected", [(5, 1, 12), (7, 1, 44), (7, 3, 106)])
def test_decimation_exponent_examples(m, k, expected):
    # oracle: extended Euclid via the builtin modular inverse
    n = 2**m - 1
    assert decimation_exponent(m, k) == (2 ** (2 * k) + 1) * pow(2**k + 1, -1, n) % n == expected


def test_decimation_exponent_congruence():
    for m in range(2, 20):
        for k in range(1, 6):
            n = 2**m - 1
            if math.gcd(2**k + 1, n) != 1:
                with pytest.raises(FieldError):
                    decimation_exponent(m, k)
                continue
            d = decimation_exponent(m, k)
            assert d * (2**k + 1) % n == (2 ** (2 * k) + 1) % n
            assert math.gcd(d, n) == 1


@pytest.mark.parametrize("m", sorted(PRIMITIVE_POLY))
def test_field_axioms_random_triples(m):
    f = get_field(m)
    rng = random.Random(1000 + m)
    for _ in range(30):
        a, b, c = (rng.randrange(f.size) for _ in range(3))
        assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
        if a:
            assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("m", sorted(PRIMITIVE_POLY))
def test_frobenius_is_automorphism(m):
    f = get_field(m)
    rng = random.Random(2000 + m)
    for _ in range(20):
        a, b = rng.randrange(f.size), rng.randrange(f.size)
        assert f.sqr(a ^ b) == f.sqr(a) ^ f.sqr(b)
        assert f.sqr(f.mul(a, b)) == f.mul(f.sqr(a), f.sqr(b))
        assert f.trace(f.sqr(a)) == f.trace(a)


@pytest.mark.parametrize("m", range(1, 13))
def test_trace_of_square_exhaustive(m):
    f = get_field(m)
    for a in f.elements():
        assert f.trace(f.sqr(a)) == f.trace(a)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7, 8])
def test_agrees_with_naive_field(m):
    f = get_field(m)
    nf = NaiveField(m, f.reduction)
    for a in f.elements():
        assert f.trace(a) == nf.trace(a)
        for b in f.elements():
            assert f.mul(a, b) == nf.mul(a, b)


def test_table_and_carryless_paths_agree():
    # same reduction polynomial, one instance with tables and one without
    f = get_field(12)
    g = Field(12, validate=False)
    g._exp = g._log = None  # force the carryless path
    rng = random.Random(7)
    for _ in range(200):
        a, b = rng.randrange(f.size), rng.randrange(f.size)
        assert f.mul(a, b) == g.mul(a, b)
    for _ in range(50):
        a = rng.randrange(1, f.size)
        e = rng.randrange(20_000)
        assert f.pow(a, e) == g.pow(a, e)


def test_validation_rejects_bad_polynomials():
    with pytest.raises(FieldError):
        Field(4, 0b11111)  # x^4+x^3+x^2+x+1 is irreducible but not primitive
    with pytest.raises(FieldError):
        Field(4, 0b10101)  # (x^2+x+1)^2 is reducible
    with pytest.raises(FieldError):
        Field(4, 0b1011)  # wrong degree
    with pytest.raises(FieldError):
        Field(0)
    with pytest.raises(FieldError):
        Field(25)


def test_reduction_override_config(tmp_path):
    # x^3 + x^2 + 1 is the other primitive cubic
    cfg = tmp_path / "fields.json"
    cfg.write_text(json.dumps({"3": "0xD"}))
    overrides = load_reduction_config(str(cfg))
    assert overrides == {3: 0b1101}
    f = Field(3, overrides[3])
    assert f.mul(0b010, 0b100) == 0b101  # x^3 = x^2 + 1 under this reduction


def test_pow_table_matches_scalar():
    f = get_field(9)
    for e in (0, 1, 2, 3, 5, 9, 65, f.order, f.order + 1):
        t = f.pow_table(e)
        for v in (0, 1, 2, 100, f.size - 1):
            assert t[v] == f.pow(v, e)


def test_vec_mul_and_inv_match_scalar():
    import numpy as np

    f = get_field(8)
    rng = random.Random(3)
    a = np.array([rng.randrange(f.size) for _ in range(64)])
    b = np.array([rng.randrange(f.size) for _ in range(64)])
    prod = f.vec_mul(a, b)
    for i in range(64):
        assert prod[i] == f.mul(int(a[i]), int(b[i]))
    nz = a[a != 0]
    inv = f.vec_inv(nz)
    for i in range(len(nz)):
        assert f.mul(int(nz[i]), int(inv[i])) == 1
