"""Independent reference implementations used to derive expected values.

The cohomology ring is modelled as a truncated polynomial ring: on C x S it
is Q[e, h] / (e^2, h^3) with f_1 = h, f_2 = h^2 / 2d and the top class
e h^2 / 2d; on C x T it is Q[e, t] / (e^2, t^2).  Nothing here imports the
package's ring code.
"""

from fractions import Fraction
from itertools import product


def to_poly(entries, kind, d=1):
    """Row-major entries -> {(i, j): coeff} over monomials e^i h^j."""
    ncols = 3 if kind == "threefold" else 2
    out = {}
    for idx, c in enumerate(entries):
        i, j = divmod(idx, ncols)
        if c:
            scale = Fraction(1, 2 * d) if (kind == "threefold" and j == 2) else 1
            out[(i, j)] = out.get((i, j), 0) + Fraction(c) * scale
    return out


def from_poly(p, kind, d=1):
    ncols = 3 if kind == "threefold" else 2
    out = [Fraction(0)] * (2 * ncols)
    for (i, j), c in p.items():
        scale = 2 * d if (kind == "threefold" and j == 2) else 1
        out[i * ncols + j] += c * scale
    return out


def poly_mul(p, q, kind):
    hmax = 2 if kind == "threefold" else 1
    out = {}
    for (i1, j1), a in p.items():
        for (i2, j2), b in q.items():
            i, j = i1 + i2, j1 + j2
            if i <= 1 and j <= hmax:
                out[(i, j)] = out.get((i, j), 0) + a * b
    return out


def cup(u, v, kind, d=1):
    return from_poly(poly_mul(to_poly(u, kind, d), to_poly(v, kind, d), kind), kind, d)


def integrate(entries, kind):
    return Fraction(entries[-1])


def intersect(kind, d, *classes):
    acc = classes[0]
    for c in classes[1:]:
        acc = cup(acc, c, kind, d)
    return integrate(acc, kind)


def basis(kind, i, j):
    ncols = 3 if kind == "threefold" else 2
    v = [0] * (2 * ncols)
    v[i * ncols + j] = 1
    return v


def c1_part(entries, kind):
    ncols = 3 if kind == "threefold" else 2
    return [c if (idx // ncols + idx % ncols) == 1 else 0 for idx, c in enumerate(entries)]


def mu_H_oracle(entries, alpha, beta, d):
    w = [0, alpha, 0, beta, 0, 0]
    a00 = entries[0]
    if a00 == 0:
        return None
    return intersect("threefold", d, c1_part(entries, "threefold"), w, w) / a00


def chi_threefold(entries):
    """GRR with td = 1 + 2[pt_S]: chi = a12 + 2 a10."""
    return entries[5] + 2 * entries[3]


def hilbert_coeffs_threefold(entries, alpha, beta, d):
    """[m^0, m^1, m^2, m^3] of chi(E(mw)), expanded directly from the ring model."""
    td = [1, 0, 2, 0, 0, 0]
    w = [0, alpha, 0, beta, 0, 0]
    term = cup(entries, td, "threefold", d)
    out = []
    fact = 1
    for k in range(4):
        out.append(integrate(term, "threefold") / fact)
        term = cup(term, w, "threefold", d)
        fact *= k + 1
    return out


def positivity_ok(t):
    """Brute-force reading of the eight sign cases on a raw entry tuple."""
    a00, a01, a02, a10, a11, a12 = t
    if a00 != 0:
        return True
    ok = a01 >= 0 and a10 >= 0
    if a01 == 0:
        ok = ok and a02 >= 0
    if a10 == 0:
        ok = ok and a01 >= 0
    if a01 == 0 and a10 == 0:
        ok = ok and a02 >= 0 and a11 >= 0
    if a01 == a10 == a11 == 0:
        ok = ok and a02 >= 0
    if a01 == a02 == a10 == a11 == 0:
        ok = ok and a12 >= 0
    return ok


def brute_subcharacters(ch, bound):
    if ch[0] < 0:
        return []
    out = []
    for t in product(range(-bound, bound + 1), repeat=6):
        rest = tuple(a - b for a, b in zip(ch, t))
        if ch[0] > 0 and not 0 <= t[0] <= ch[0]:
            continue
        if ch[0] == 0 and t[0] != 0:
            continue
        if positivity_ok(t) and positivity_ok(rest):
            out.append(t)
    return out


def reduced_vector(coeffs):
    """Highest-first coefficients divided by the leading one."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    lead = Fraction(cs[-1])
    return tuple(Fraction(c) / lead for c in reversed(cs))


def lex(a, b):
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0
