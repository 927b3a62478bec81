"""Brute-force reference implementations; slow but independent of the package."""

from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod


def ctype(w):
    seen, parts = set(), []
    for i in range(len(w)):
        if i in seen:
            continue
        j, c = i, 0
        while j not in seen:
            seen.add(j)
            j = w[j]
            c += 1
        parts.append(c)
    return tuple(sorted(parts, reverse=True))


def sign(w):
    return (-1) ** (len(w) - len(ctype(w)))


def immanant(theta_of_type, A):
    n = len(A)
    return sum(
        (Fraction(theta_of_type(ctype(w))) * prod((Fraction(A[i][w[i]]) for i in range(n)), start=Fraction(1))
         for w in permutations(range(n))),
        Fraction(0),
    )


def young_permutation_character(alpha, mu):
    """Fixed points of a mu-type permutation on alpha-compositions of [n]: cycles distributed to blocks."""
    alpha = [a for a in alpha if a]
    count = 0
    for assignment in product(range(len(alpha)), repeat=len(mu)):
        sizes = [0] * len(alpha)
        for part, b in zip(mu, assignment):
            sizes[b] += part
        if sizes == list(alpha):
            count += 1
    # identical cycles are distinguishable, so no correction
    return count


def character_jacobi_trudi(lam, mu):
    """chi^lam(mu) = sum_sigma sgn(sigma) eta^{lam + delta - sigma(delta)}(mu)."""
    ell = len(lam)
    total = 0
    for s in permutations(range(ell)):
        alpha = [lam[i] - i + s[i] for i in range(ell)]
        if any(a < 0 for a in alpha):
            continue
        total += sign(s) * young_permutation_character(alpha, mu)
    return total


def partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def kostka(lam, mu):
    """Count SSYT by filling cells with all weakly increasing row words."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    letters = [v for v, m in enumerate(mu, start=1) for _ in range(m)]
    count = 0
    for filling in set(permutations(letters)):
        T = dict(zip(cells, filling))
        ok = all(T[(i, j)] <= T[(i, j + 1)] for (i, j) in cells if (i, j + 1) in T)
        ok = ok and all(T[(i, j)] < T[(i + 1, j)] for (i, j) in cells if (i + 1, j) in T)
        count += ok
    return count


def colorings_of_type(n, edges, lam):
    """Proper colorings with color class sizes lam (colors 1..len(lam) used lam_i times)."""
    count = 0
    for col in product(range(len(lam)), repeat=n):
        if any(col[u - 1] == col[v - 1] for u, v in edges):
            continue
        if sorted(Counter(col).values(), reverse=True) == list(lam) and all(
            Counter(col)[c] == lam[c] for c in range(len(lam))
        ):
            count += 1
    return count


def det_laplace(A):
    n = len(A)
    return sum((sign(w) * prod((Fraction(A[i][w[i]]) for i in range(n)), start=Fraction(1))
                for w in permutations(range(n))), Fraction(0))


def all_minors(A):
    n = len(A)
    for k in range(1, n + 1):
        for r in combinations(range(n), k):
            for c in combinations(range(n), k):
                yield det_laplace([[A[i][j] for j in c] for i in r])


def inversions(w):
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bruhat_below(w):
    """Everything below w by repeatedly swapping inverted values."""
    seen, stack = {tuple(w)}, [tuple(w)]
    while stack:
        u = stack.pop()
        for i in range(len(u)):
            for j in range(i + 1, len(u)):
                if u[i] > u[j]:
                    v = list(u)
                    v[i], v[j] = v[j], v[i]
                    v = tuple(v)
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
    return seen


def lmw_brute(lam, A, per_like):
    """Sum over ordered set partitions (I_1,...,I_r) of [n] with |I_i| = lam_i of prod det/per."""
    n = len(A)
    f = (lambda M: immanant(lambda t: 1, M)) if per_like else det_laplace
    total = Fraction(0)

    def rec(rem, i, acc):
        nonlocal total
        if i == len(lam):
            total += acc
            return
        for I in combinations(sorted(rem), lam[i]):
            rec(rem - set(I), i + 1, acc * f([[A[a][b] for b in I] for a in I]))

    rec(set(range(n)), 0, Fraction(1))
    return total


def catalan(n):
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))
