#!/usr/bin/env python3
"""Independent reference computations used to freeze expected values in the C++ tests.

Everything here is plain Python (fractions + sympy expansion) and shares no code
with the library. Run: python3 tests/oracles/oracle.py
"""
import itertools
from fractions import Fraction
from math import comb

import sympy as sp


def binom_half(k):
    """binom(-1/2, k) from the falling-factorial definition."""
    num = Fraction(1)
    for i in range(k):
        num *= Fraction(-1, 2) - i
    for i in range(1, k + 1):
        num /= i
    return num


def taylor_L(g, k):
    s = sum(k)
    scalar = (-1) ** g * binom_half(s + g)
    for ki in k:
        scalar *= binom_half(ki)
    vec = [1, -2 * s - 2 * g] + [2 * ki + 1 for ki in k]
    return [scalar * v for v in vec]


def mod_p(x, p):
    x = Fraction(x)
    return (x.numerator * pow(x.denominator, -1, p)) % p


def L_mod(g, p, k):
    return tuple(mod_p(v, p) for v in taylor_L(g, k))


def sym_cm(g, p):
    """Cartier-Manin entries by symbolic coefficient extraction."""
    x = sp.Symbol('x')
    lam = sp.symbols(' '.join(f'l{i}' for i in range(3, 2 * g + 2)))
    lam = lam if isinstance(lam, tuple) else (lam,)
    f = x * (x - 1)
    for l in lam:
        f *= (x - l)
    h = (p - 1) // 2
    base = sp.Poly(sp.expand(f ** h), x)
    out = {}
    for s in range(g):
        q = sp.Poly(sp.expand(x ** (g - s - 1) * base.as_expr()), x)
        for r in range(g):
            c = q.coeff_monomial(x ** ((g - r) * p - 1))
            out[(r, s)] = sp.Poly(c, *lam, modulus=p) if c != 0 else sp.Poly(0, *lam, modulus=p)
    return lam, out


def delta(g, p, r, s):
    h = (p - 1) // 2
    return [l for l in itertools.product(range(h + 1), repeat=2 * g - 1)
            if 0 <= sum(l) + s - r * p <= h]


def K_terms(g, p, m):
    h = (p - 1) // 2
    out = {}
    for l in delta(g, p, m, g):
        S = sum(l)
        c = (-1) ** (h + m * p - g) * comb(h, S + g - m * p)
        for li in l:
            c *= comb(h, li)
        vec = [1, -2 * S - 2 * g] + [2 * li + 1 for li in l]
        out[l] = tuple((c * v) % p for v in vec)
    return out


def C_terms(g, p, r, s):
    h = (p - 1) // 2
    out = {}
    for l in delta(g, p, r, s):
        S = sum(l)
        c = (-1) ** (h + r * p - s) * comb(h, S + s - r * p)
        for li in l:
            c *= comb(h, li)
        out[l] = c % p
    return out


def blocks(g, p, a_max):
    """K_vec as dict monomial -> vector, top Cartier factor without its constant term."""
    res = {}
    for a in range(a_max + 1):
        for tail in itertools.product(range(g), repeat=a + 1):
            mv = (g,) + tail
            sign = (-1) ** (a * (p - 1) // 2) * comb(2 * mv[-1], mv[-1])
            poly = {tuple([0] * (2 * g - 1)): sign % p}
            for j in range(1, a + 1):
                ct = C_terms(g, p, mv[j + 1], mv[j])
                new = {}
                for e, c in poly.items():
                    for l, cc in ct.items():
                        if j == a and not any(l):
                            continue
                        e2 = tuple(ei + p ** j * li for ei, li in zip(e, l))
                        new[e2] = (new.get(e2, 0) + c * cc) % p
                poly = new
            kt = K_terms(g, p, mv[1])
            blk = {}
            for e, c in poly.items():
                for l, vec in kt.items():
                    e2 = tuple(ei + li for ei, li in zip(e, l))
                    old = blk.get(e2, (0,) * (2 * g + 1))
                    blk[e2] = tuple((o + c * v) % p for o, v in zip(old, vec))
            # Per-block constant (-1)^((p-1)/2) * 4^(-m_top); without it the
            # block disagrees with L mod p (e.g. g=1, p=7, k=0).
            eps = (-1) ** ((p - 1) // 2) * pow(4, -mv[-1], p)
            res[mv] = {e: tuple((eps * x) % p for x in v) for e, v in blk.items() if any(v)}
    return res


def I_terms(g, p):
    """Term counts of the first coordinate of I^m = coefficient of t^((g-m)p-1) in Phi/(t-z1)."""
    h = (p - 1) // 2
    t = sp.Symbol('t')
    z = sp.symbols(' '.join(f'z{i}' for i in range(1, 2 * g + 2)))
    P1 = (t - z[0]) ** (h - 1)
    for zi in z[1:]:
        P1 *= (t - zi) ** h
    P1 = sp.Poly(sp.expand(P1), t, *z, modulus=p)
    out = []
    for m in range(g):
        d = (g - m) * p - 1
        out.append(sum(1 for mono, c in P1.terms() if mono[0] == d))
    return out


def check_cor(g, p, a_max):
    bl = blocks(g, p, a_max)
    seen = {}
    for mv, blk in bl.items():
        for e in blk:
            assert e not in seen, (mv, seen.get(e), e)
            seen[e] = mv
    B = p ** (a_max + 1)
    total = {}
    for blk in bl.values():
        total.update(blk)
    bad = 0
    for k in itertools.product(range(B), repeat=2 * g - 1):
        lhs = L_mod(g, p, k)
        rhs = total.get(k, (0,) * (2 * g + 1))
        if lhs != rhs:
            bad += 1
    return len(bl), bad


if __name__ == '__main__':
    print('binom(16,8) =', comb(16, 8))
    print('L g=1 k=0', taylor_L(1, (0,)))
    print('L g=2 k=0', taylor_L(2, (0, 0, 0)))
    print('L g=1 k=2', taylor_L(1, (2,)))
    print('L g=1 k=1', taylor_L(1, (1,)))
    print('L g=1 k=6 mod 5', L_mod(1, 5, (6,)))
    print('L g=1 k=7 mod 5', L_mod(1, 5, (7,)))
    print('K^0 g=1 p=5', K_terms(1, 5, 0))
    t, z1, z2, z3 = sp.symbols('t z1 z2 z3')
    P1 = sp.expand((t - z1) * (t - z2) ** 2 * (t - z3) ** 2)
    print('t^4 coeff of P1 (g=1,p=5):', sp.Poly(P1, t).coeff_monomial(t ** 4))
    for (g, p) in [(1, 3), (1, 5), (2, 5)]:
        lam, cm = sym_cm(g, p)
        print(f'CM symbolic g={g} p={p}:', {k: v.as_expr() for k, v in cm.items()})
    lam, cm = sym_cm(2, 5)
    print('CM numeric g=2 p=5 at (1,2,3):',
          [[int(cm[(r, s)].eval(dict(zip(lam, (1, 2, 3))))) % 5 for s in range(2)] for r in range(2)])
    print('|Delta| g=2 p=5 (r,s)=(1,2):', len(delta(2, 5, 1, 2)))
    print('|Delta| g=1 p=5 (0,1),(0,0):', delta(1, 5, 0, 1), delta(1, 5, 0, 0))
    for (g, p) in [(2, 5), (3, 7)]:
        lam, cm = sym_cm(g, p)
        print(f'CM canonical g={g} p={p}:',
              {k: sorted(((m, int(c) % p) for m, c in v.terms()), key=lambda t: (sum(t[0]), t[0])) for k, v in cm.items()})
    print('P-vector g=2 p=5 I^0 coordinate 1 terms / I^1 coordinate 1 terms:', I_terms(2, 5))
    for (g, p, a) in [(1, 5, 0), (1, 5, 1), (2, 5, 0), (2, 5, 1), (1, 7, 1), (1, 7, 0)]:
        print(f'Decomposition check g={g} p={p} a_max={a}: (blocks, mismatches) =', check_cor(g, p, a))
