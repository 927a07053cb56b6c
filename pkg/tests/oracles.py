"""Independent brute-force oracles.

These enumerate whole function spaces and filter by the homomorphism law; they
share no code with the library's backtracking or maximal-subgroup routes.
"""

from itertools import product
from math import lcm

import numpy as np

from monoid_duality.circle import Turn, Zero


def table_power(S, x, k):
    y = S.unit
    for _ in range(k):
        y = S.table[y][x]
    return y


def brute_group_exponent(G):
    """lcm of element orders, by iterating powers directly."""
    out = 1
    for x in range(len(G)):
        k, y = 1, x
        while y != G.unit:
            y = G.table[y][x]
            k += 1
        out = lcm(out, k)
    return out


def exhaustive_characters(G):
    """All functions G -> mu_m (m = exponent) satisfying the hom law, as sorted value tuples.

    Vectorised with numpy and filtered pair by pair; rows are encoded as
    exponents k meaning k/m.
    """
    n, m = len(G), brute_group_exponent(G)
    head = min(n, 2)
    tail = n - head
    rest = np.indices((m,) * tail, dtype=np.int16).reshape(tail, -1).T if tail else np.zeros((1, 0), np.int16)
    pairs = [(i, j, G.table[i][j]) for i in range(n) for j in range(n)]
    found = []
    for prefix in product(range(m), repeat=head):
        V = np.hstack([np.tile(np.array(prefix, np.int16), (len(rest), 1)), rest])
        for i, j, k in pairs:
            V = V[(V[:, i] + V[:, j]) % m == V[:, k]]
            if not len(V):
                break
        found.extend(tuple(Turn(int(v), m) for v in row) for row in V)
    return sorted(found, key=lambda vec: tuple(z.sort_key() for z in vec))


def exhaustive_01_homs(E):
    """All {0,1}-valued functions on E satisfying the monoid hom law."""
    out = []
    one = Turn(0, 1)
    for bits in product((0, 1), repeat=len(E)):
        if bits[E.unit] != 1:
            continue
        if all(bits[E.table[i][j]] == bits[i] * bits[j] for i in range(len(E)) for j in range(len(E))):
            out.append(tuple(one if b else Zero for b in bits))
    return sorted(out, key=lambda vec: tuple(z.sort_key() for z in vec))


def exhaustive_homs(S, N=None):
    """All monoid homs S -> Ṫ, searching Zero plus the N-th roots of unity for every element.

    By default N = lcm(1..n): any hom value on x is 0 or a root of unity whose
    order divides the period of x, which is at most n. Only feasible for tiny S.
    """
    n = len(S)
    if N is None:
        N = lcm(*range(1, n + 1))
    values = [Zero] + [Turn(k, N) for k in range(N)]
    out = []
    for vec in product(values, repeat=n):
        if vec[S.unit] != Turn(0, 1):
            continue
        if all(vec[S.table[i][j]] == vec[i] * vec[j] for i in range(n) for j in range(n)):
            out.append(vec)
    return sorted(out, key=lambda v: tuple(z.sort_key() for z in v))


def brute_is_associative(table):
    n = len(table)
    return all(
        table[table[i][j]][k] == table[i][table[j][k]] for i in range(n) for j in range(n) for k in range(n)
    )
