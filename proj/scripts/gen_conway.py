#!/usr/bin/env python3
"""Generate a Conway polynomial table.

Computes Conway polynomials C_{p,n} from the standard definition: the
minimal monic primitive polynomial of degree n over F_p, under the
Conway ordering, that is norm-compatible with C_{p,m} for every proper
divisor m of n.

Ordering: identify f = x^n + a_{n-1} x^{n-1} + ... + a_0 with the word
(c_{n-1}, ..., c_0), c_i = (-1)^(n-i) a_i mapped to {0..p-1}; words are
compared lexicographically, most significant first.

Output format (one record per line): p degree c_0 c_1 ... c_d
with ascending coefficients including the leading 1.
"""

import sys
from itertools import product
from sympy.polys.galoistools import (
    gf_gcd, gf_irreducible_p, gf_pow_mod, gf_rem, gf_mul, gf_add, gf_sub,
)
from sympy.polys.domains import ZZ
from sympy import primefactors, divisors, isprime


def smallest_primitive_root(p):
    if p == 2:
        return 1
    fac = primefactors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in fac):
            return g
    raise RuntimeError


def is_primitive_poly(f, p, n, prime_facs):
    # f irreducible already; check ord(x) = p^n - 1 in F_p[x]/(f)
    order = p ** n - 1
    x = [ZZ(1), ZZ(0)]
    for r in prime_facs:
        y = gf_pow_mod(x, order // r, f, p, ZZ)
        if y == [ZZ(1)]:
            return False
    return True


def poly_eval_mod(cpoly, y, f, p):
    """Evaluate cpoly (dup over F_p) at y (dup) modulo f."""
    acc = [ZZ(0)]
    for coeff in cpoly:
        acc = gf_rem(gf_add(gf_mul(acc, y, p, ZZ), [ZZ(coeff)], p, ZZ), f, p, ZZ)
    return acc


def conway(p, n, cache):
    if (p, n) in cache:
        return cache[(p, n)]
    r = smallest_primitive_root(p)
    order = p ** n - 1
    prime_facs = primefactors(order)
    proper = [m for m in divisors(n) if m < n]
    subs = {m: conway(p, m, cache) for m in proper if m >= 1}

    # constant term forced by norm compatibility with C_{p,1}:
    # (-1)^n a_0 = r
    a0 = (r if n % 2 == 0 else (-r) % p) % p
    c0 = a0 if n % 2 == 0 else (-a0) % p  # c_0 = (-1)^n a_0 = r always
    assert c0 == r % p

    # enumerate words (c_{n-1}, ..., c_1), most significant first
    for word in product(range(p), repeat=n - 1):
        a = [ZZ(1)]  # dup: descending powers x^n .. x^0
        for idx, c in enumerate(word):
            i = n - 1 - idx  # power of x this coefficient belongs to
            ai = c if (n - i) % 2 == 0 else (-c) % p
            a.append(ZZ(ai))
        a.append(ZZ(a0))
        f = a
        # no roots in F_p (quick filter, degree >= 2 only)
        if n >= 2:
            has_root = False
            for v in range(p):
                acc = 0
                for coeff in f:
                    acc = (acc * v + int(coeff)) % p
                if acc == 0:
                    has_root = True
                    break
            if has_root:
                continue
        if not gf_irreducible_p(f, p, ZZ):
            continue
        if not is_primitive_poly(f, p, n, prime_facs):
            continue
        ok = True
        for m in proper:
            if m == 1:
                continue  # already enforced via a0
            e = order // (p ** m - 1)
            y = gf_pow_mod([ZZ(1), ZZ(0)], e, f, p, ZZ)
            if poly_eval_mod(subs[m], y, f, p) != []:
                ok = False
                break
        if ok:
            cache[(p, n)] = f
            return f
    raise RuntimeError(f"no Conway polynomial found for p={p} n={n}")


def main():
    want = []
    want += [(2, d) for d in range(1, 21)]
    want += [(3, d) for d in range(1, 17)]
    want += [(5, d) for d in range(1, 9)]
    want += [(7, d) for d in range(1, 7)]
    cache = {}
    lines = []
    for p, d in want:
        f = conway(p, d, cache)
        asc = [int(c) % p for c in reversed(f)]  # c_0 .. c_d ascending
        lines.append(f"{p} {d} " + " ".join(str(c) for c in asc))
        print(lines[-1], flush=True)
    with open(sys.argv[1] if len(sys.argv) > 1 else "conway_polynomials.txt", "w") as fh:
        fh.write("# Conway polynomial table: p degree c_0 c_1 ... c_d (ascending, monic)\n")
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
