"""Independent brute-force oracles for the tests.

Everything here is deliberately naive: field arithmetic is shift-XOR
carryless multiplication with direct reduction (no log/antilog tables),
sums and counts are plain Python loops.  Only usable for small m, which is
the point: the fast library paths are checked against these.
"""

from __future__ import annotations


def clmul(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def reduce_mod(a: int, f: int) -> int:
    df = f.bit_length() - 1
    while a.bit_length() - 1 >= df and a:
        a ^= f << (a.bit_length() - 1 - df)
    return a


class NaiveField:
    def __init__(self, m: int, reduction: int):
        self.m = m
        self.reduction = reduction
        self.size = 1 << m
        self.order = self.size - 1

    def mul(self, a, b):
        return reduce_mod(clmul(a, b), self.reduction)

    def pow(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        for b in range(1, self.size):
            if self.mul(a, b) == 1:
                return b
        raise ValueError("no inverse")

    def trace(self, a):
        acc = 0
        t = a
        for _ in range(self.m):
            acc ^= t
            t = self.mul(t, t)
        assert acc in (0, 1)
        return acc


def naive_kloosterman(F: NaiveField) -> int:
    return sum((-1) ** F.trace(x ^ F.inv(x)) for x in range(1, F.size))


def naive_c_sum(F: NaiveField, k: int) -> int:
    return sum((-1) ** F.trace(F.pow(x, 2**k + 1) ^ x) for x in range(F.size))


def naive_g_sum(F: NaiveField, k: int) -> int:
    return sum((-1) ** F.trace(F.pow(x, 2**k + 1) ^ F.inv(x)) for x in range(1, F.size))


def naive_k_prime(F: NaiveField, k: int) -> int:
    total = 0
    for v in range(1, F.size):
        if v == 1:
            total += 1
            continue
        q = F.pow(v, 2**k)
        den = q ^ v
        if den == 0:
            total -= 1  # pole: f(v) is not of the form y^2 + y
            continue
        fv = F.mul(F.mul(q ^ 1, q), F.inv(F.pow(den, 2**k + 1)))
        total += (-1) ** F.trace(fv)
    return total


def naive_cross_correlation(F: NaiveField, d: int, tau: int, alpha: int = 0b10) -> int:
    a = F.pow(alpha, tau)
    return sum((-1) ** F.trace(F.mul(a, x) ^ F.pow(x, d)) for x in range(1, F.size))


def naive_a1(F: NaiveField, k: int) -> int:
    e1, e2 = 2**k + 1, 2 ** (2 * k) + 1
    p1 = [F.pow(v, e1) for v in range(F.size)]
    p2 = [F.pow(v, e2) for v in range(F.size)]
    total = 0
    for x in range(F.size):
        for y in range(F.size):
            for z in range(F.size):
                u = 1 ^ x ^ y ^ z
                if p1[x] ^ p1[y] ^ p1[z] ^ p1[u] == 0 and p2[x] ^ p2[y] ^ p2[z] ^ p2[u] == 0:
                    total += 1
    return total


def naive_weight_distribution(F: NaiveField, k: int, alpha: int = 0b10) -> dict[int, int]:
    e1, e2 = 2**k + 1, 2 ** (2 * k) + 1
    g1 = [F.pow(alpha, (e1 * t) % F.order) for t in range(F.order)]
    g2 = [F.pow(alpha, (e2 * t) % F.order) for t in range(F.order)]
    out: dict[int, int] = {}
    for a in range(F.size):
        for b in range(F.size):
            w = sum(F.trace(F.mul(a, g2[t]) ^ F.mul(b, g1[t])) for t in range(F.order))
            out[w] = out.get(w, 0) + 1
    return out


def naive_projective_count(poly_monomials, F: NaiveField) -> int:
    """Count projective zeros by enumerating all nonzero triples and dividing
    by the number of representatives per point (2^s - 1)."""
    hits = 0
    for x in range(F.size):
        for y in range(F.size):
            for z in range(F.size):
                if x == y == z == 0:
                    continue
                acc = 0
                for a, b, c in poly_monomials:
                    acc ^= F.mul(F.mul(F.pow(x, a), F.pow(y, b)), F.pow(z, c))
                if acc == 0:
                    hits += 1
    assert hits % F.order == 0
    return hits // F.order


def naive_power_sums(coeffs: list[int], s_max: int) -> list[float]:
    """Power sums of the reciprocal roots via numpy root extraction."""
    import numpy as np

    roots = np.roots(list(reversed(coeffs)))
    recip = 1.0 / roots
    return [complex(np.sum(recip**j)).real for j in range(1, s_max + 1)]
