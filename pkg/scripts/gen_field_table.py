"""Regenerate the primitive-polynomial table embedded in blockdesigns.grouplib.

For every prime power q = p^f <= QMAX with f >= 2 this finds the monic degree-f
polynomial over GF(p) with the smallest coefficient vector (a0, a1, ..., a_{f-1}
read as a base-p integer) whose root x is a generator of GF(q)*. Primitivity of
x forces irreducibility, so one search covers both requirements. The choice of
polynomial only affects element labeling, never the isomorphism type of the
groups built on top, but it must stay fixed so runs are reproducible.

Usage: python scripts/gen_field_table.py  (prints the table as Python source)
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blockdesigns.numth import factorize, prime_powers_upto

QMAX = 1024


def polymulmod(a, b, mod, p):
    # a, b, mod: coefficient tuples, low degree first; mod monic of degree f
    f = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    for i in range(len(out) - 1, f - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(f + 1):
                out[i - f + j] = (out[i - f + j] - c * mod[j]) % p
    out = out[:f]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def polypowmod(base, e, mod, p):
    result = (1,)
    while e:
        if e & 1:
            result = polymulmod(result, base, mod, p)
        base = polymulmod(base, base, mod, p)
        e >>= 1
    return result


def x_is_primitive(mod, p, f):
    q = p**f
    x = (0, 1)
    if polypowmod(x, q - 1, mod, p) != (1,):
        return False
    for r in factorize(q - 1):
        if polypowmod(x, (q - 1) // r, mod, p) == (1,):
            return False
    return True


def smallest_primitive_poly(p, f):
    # monic x^f + a_{f-1} x^{f-1} + ... + a0; scan a-vectors in base-p order
    for code in range(p**f):
        a = []
        c = code
        for _ in range(f):
            a.append(c % p)
            c //= p
        if a[0] == 0:
            continue
        mod = tuple(a) + (1,)
        if x_is_primitive(mod, p, f):
            return tuple(a)
    raise AssertionError(f"no primitive polynomial found for GF({p}^{f})")


def main():
    from blockdesigns.numth import prime_power

    rows = []
    for q in prime_powers_upto(4, QMAX):
        p, f = prime_power(q)
        if f < 2:
            continue
        a = smallest_primitive_poly(p, f)
        rows.append(((p, f), a))
    print("# generated by scripts/gen_field_table.py; do not edit by hand")
    print("PRIMITIVE_POLY = {")
    for (p, f), a in rows:
        print(f"    ({p}, {f}): {a!r},")
    print("}")


if __name__ == "__main__":
    main()
