"""Independent reference implementations used only by the tests.

Nothing here imports the normal-ordering code under test.
"""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

XS, GS = sp.symbols("x g", positive=True)


# --- single-swap word rewriting -------------------------------------------
# A word is a tuple of letters "x"/"p"; a combination is {word: complex Fraction pair}.


def _cadd(acc, word, c):
    re, im = acc.get(word, (Fraction(0), Fraction(0)))
    re, im = re + c[0], im + c[1]
    if re or im:
        acc[word] = (re, im)
    else:
        acc.pop(word, None)


def word_normal_order(word, coeff=(Fraction(1), Fraction(0))):
    """Normal-order a word by repeatedly replacing 'p x' with 'x p - i'."""
    pending = {tuple(word): coeff}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        for k in range(len(w) - 1):
            if w[k] == "p" and w[k + 1] == "x":
                _cadd(pending, w[:k] + ("x", "p") + w[k + 2 :], c)
                # -i * c
                _cadd(pending, w[:k] + w[k + 2 :], (c[1], -c[0]))
                break
        else:
            _cadd(done, w, c)
    out = {}
    for w, c in done.items():
        out[(w.count("x"), w.count("p"))] = c
    return out


# --- sympy differential-operator action -----------------------------------


def coeff_to_sympy(coeff):
    total = 0
    for k, c in coeff.items():
        total += (sp.Rational(c.re.numerator, c.re.denominator) + sp.I * sp.Rational(c.im.numerator, c.im.denominator)) * GS**k
    return total


def apply_operator(A, f):
    """Act with sum c x^a p^b on an expression f(x), where p = -i d/dx."""
    total = 0
    for (a, b), c in A.items():
        total += coeff_to_sympy(c) * XS**a * (-sp.I) ** b * sp.diff(f, XS, b)
    return sp.simplify(total)


def xfunction_to_sympy(F):
    total = sum(coeff_to_sympy(c) * XS**k for k, c in F.laurent.items())
    if F.logcoeff:
        total += coeff_to_sympy(F.logcoeff) * sp.log(XS)
    return total


TEST_FUNCTION = sp.exp(-(XS**2)) * (1 + XS + XS**3)
