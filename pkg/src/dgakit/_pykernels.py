"""Pure-Python hot kernels.

Same call signatures as the compiled ``_ckernels`` module; ``dgakit.kernels``
picks one of the two at import time.
"""
from fractions import Fraction
from math import gcd


def mul_terms(a, b, odd):
    """Product of two term maps ``{exponent tuple: Fraction}``.

    ``odd`` flags the odd-degree generators.  Koszul signs are the parity of
    the pairs (i in a, j in b) of odd generators with i > j.
    """
    out = {}
    n = len(odd)
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            parity = 0
            later = 0
            dead = False
            for i in range(n - 1, -1, -1):
                if odd[i]:
                    if m2[i]:
                        if m1[i]:
                            dead = True
                            break
                        parity += later
                    if m1[i]:
                        later += 1
            if dead:
                continue
            m = tuple(x + y for x, y in zip(m1, m2))
            c = c1 * c2
            if parity & 1:
                c = -c
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
    return out


def _primitive_int_row(row):
    den = 1
    for x in row:
        if x:
            den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in row]


def rref_rows(rows, ncols):
    """Reduced row echelon form of a dense rational matrix.

    Elimination runs on integer rows (fraction-free, gcd-normalized) and
    only the final normalization goes back to ``Fraction``.  The pivot is the
    first remaining row, in input order, with a nonzero entry in the
    leftmost available column.

    Returns ``(rows, pivots)`` with only the nonzero rows kept.
    """
    work = [_primitive_int_row(r) for r in rows]
    work = [r for r in work if any(r)]
    pivots = []
    top = 0
    for col in range(ncols):
        if top >= len(work):
            break
        piv = None
        for r in range(top, len(work)):
            if work[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != top:
            work.insert(top, work.pop(piv))
        prow = work[top]
        pv = prow[col]
        for r in range(len(work)):
            if r == top:
                continue
            row = work[r]
            rv = row[col]
            if not rv:
                continue
            g = gcd(pv, rv)
            f1 = pv // g
            f2 = rv // g
            new = [f1 * x - f2 * y for x, y in zip(row, prow)]
            h = 0
            for x in new:
                if x:
                    h = gcd(h, x)
                    if h == 1:
                        break
            if h > 1:
                new = [x // h for x in new]
            work[r] = new
        pivots.append(col)
        top += 1
    out = []
    for row, col in zip(work, pivots):
        pv = row[col]
        out.append([Fraction(x, pv) for x in row])
    return out, pivots
