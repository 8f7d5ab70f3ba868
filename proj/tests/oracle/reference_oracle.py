#!/usr/bin/env python3
"""Independent reference implementation used to freeze expected values.

Written directly from the formulas with Python fractions, sharing no code with
the C++ library.  Running it regenerates tests/fixtures/reference.json; with
--check it compares against the committed file instead and exits non-zero on
any difference.
"""

import argparse
import json
import random
import sys
from fractions import Fraction as F
from pathlib import Path


class Rationals:
    one = F(1)

    @staticmethod
    def const(n):
        return F(n)

    @staticmethod
    def add(xs):
        total = F(0)
        for x in xs:
            total += x
        return total

    @staticmethod
    def mul(xs):
        out = F(1)
        for x in xs:
            out *= x
        return out

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def pow(a, e):
        return a ** e


class MaxPlus:
    one = 0

    @staticmethod
    def const(n):
        return 0

    @staticmethod
    def add(xs):
        return max(xs)

    @staticmethod
    def mul(xs):
        return sum(xs)

    @staticmethod
    def div(a, b):
        return a - b

    @staticmethod
    def pow(a, e):
        return a * e


def det(m):
    m = [[F(v) for v in row] for row in m]
    n = len(m)
    sign = 1
    out = F(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return F(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return sign * out


class Seed:
    def __init__(self, cartan, word):
        self.a = cartan
        self.r = len(cartan)
        self.w = list(word)
        self.n = len(word)
        self.I = list(range(-self.r, 0)) + list(range(1, self.n + 1))
        self.history = []
        self.B = self._exchange()
        self.M = self._frozen_block()

    def letter(self, k):
        return -k if k < 0 else self.w[k - 1]

    def plus(self, k):
        for l in range(1, self.n + 1):
            if l > k and self.letter(l) == self.letter(k):
                return l
        return self.n + 1

    def minus(self, k):
        best = None
        for l in self.I:
            if l < k and self.letter(l) == self.letter(k):
                best = l
        return best

    def unfrozen(self):
        return [k for k in self.I if k > 0 and self.plus(k) <= self.n]

    def half(self, j, k):
        return F(self.a[self.letter(k) - 1][self.letter(j) - 1], 2)

    def _exchange(self):
        n = self.n
        B = {}
        for j in self.I:
            for k in self.I:
                jp, kp = self.plus(j), self.plus(k)
                v = (-(j == kp) + (jp == k) - (k < j < kp and j > 0) + (k < jp < kp and jp <= n)
                     + (j < k < jp and k > 0) - (j < kp < jp and kp <= n))
                B[j, k] = self.half(j, k) * v
        return B

    def _frozen_block(self):
        n = self.n
        return {(j, k): self.half(j, k) * ((self.plus(j) > n and self.plus(k) > n) + (j < 0 and k < 0))
                for j in self.I for k in self.I}

    def b_tilde(self, j, k):
        v = self.B[j, k] + self.M[j, k]
        assert v.denominator == 1
        return int(v)

    def mutate(self, k):
        out = Seed.__new__(Seed)
        out.__dict__.update(self.__dict__)
        out.history = self.history + [k]
        B = {}
        for i in self.I:
            for j in self.I:
                if i == k or j == k:
                    B[i, j] = -self.B[i, j]
                else:
                    bik, bkj = self.B[i, k], self.B[k, j]
                    B[i, j] = self.B[i, j] + (abs(bik) * bkj + bik * abs(bkj)) / 2
        out.B = B
        return out


def mutate_a(sf, seed, k, A):
    pos = [sf.pow(A[j], int(seed.B[k, j])) for j in seed.I if seed.B[k, j] > 0]
    neg = [sf.pow(A[j], int(-seed.B[k, j])) for j in seed.I if seed.B[k, j] < 0]
    out = dict(A)
    out[k] = sf.div(sf.add([sf.mul(pos), sf.mul(neg)]), A[k])
    return out


def mutate_x(sf, seed, k, X):
    out = {}
    for i in seed.I:
        if i == k:
            out[i] = sf.div(sf.one, X[k])
            continue
        b = seed.B[i, k]
        assert b.denominator == 1
        b = int(b)
        factor = sf.pow(X[k], max(b, 0))
        out[i] = sf.mul([X[i], factor, sf.pow(sf.add([sf.one, X[k]]), -b)])
    return out


def ensemble(sf, seed, A):
    return {i: sf.mul([sf.pow(A[j], seed.b_tilde(i, j)) for j in seed.I]) for i in seed.I}


def occurrences(seed, j):
    return [k for k in range(1, seed.n + 1) if seed.w[k - 1] == j]


def act_x(sf, seed, j, c, X):
    K = occurrences(seed, j)
    l = len(K)
    S = [None]
    for m in range(1, l + 1):
        S.append(sf.mul([X[K[t - 1]] for t in range(m, l)]))

    def N(q):
        low = [S[m] for m in range(1, min(q, l) + 1)]
        high = [S[m] for m in range(q + 1, l + 1)]
        terms = ([sf.mul([c, sf.add(low)])] if low else []) + high
        return sf.add(terms)

    out = dict(X)
    for p in range(1, l + 1):
        out[K[p - 1]] = sf.mul([X[K[p - 1]], sf.div(N(p + 1), N(p - 1))])
    for k in range(1, seed.n + 1):
        if seed.w[k - 1] == j:
            continue
        between = [t for t in K if k < t < seed.plus(k)]
        if not between:
            continue
        g = K.index(between[0]) + 1
        s = len(between)
        out[k] = sf.mul([X[k], sf.pow(sf.div(N(g + s - 1), N(g - 1)), seed.a[j - 1][seed.w[k - 1] - 1])])
    for i in range(1, seed.r + 1):
        factors = [X[-i], sf.pow(c, seed.a[j - 1][i - 1])]
        for t in occurrences(seed, i):
            factors.append(sf.div(X[t], out[t]))
        out[-i] = sf.mul(factors)
    return out


def gamma_x(sf, seed, j, X):
    return sf.mul([X[-j]] + [X[k] for k in occurrences(seed, j)])


def epsilon_x(sf, seed, j, X):
    K = occurrences(seed, j)
    l = len(K)
    terms = [sf.mul([X[K[t - 1]] for t in range(p + 1, l + 1)]) for p in range(l)]
    return sf.div(sf.one, sf.add(terms))


def b_minor(seed, rows, cols):
    if not rows:
        return 1
    v = det([[seed.b_tilde(r, c) for c in cols] for r in rows])
    assert v.denominator == 1
    return int(v)


def act_a(sf, seed, j, c, A):
    P = ensemble(sf, seed, A)
    Xbar = act_x(sf, seed, j, c, P)
    n = seed.n
    jmax = occurrences(seed, j)[-1]
    out = {}
    for k in range(1, n + 1):
        km = seed.minus(k)
        e = b_minor(seed, list(range(k, n + 1)), [seed.minus(t) for t in range(k + 1, n + 1)] + [jmax])
        factors = [A[km], sf.pow(c, e)]
        for t in range(k, n + 1):
            ex = b_minor(seed, list(range(k, t)), [seed.minus(q) for q in range(k + 1, t + 1)])
            factors.append(sf.pow(sf.div(P[t], Xbar[t]), ex))
        assert km not in out
        out[km] = sf.mul(factors)
    for letter in range(1, seed.r + 1):
        occ = occurrences(seed, letter)
        if occ:
            assert occ[-1] not in out
            out[occ[-1]] = sf.mul([A[occ[-1]], c]) if letter == j else A[occ[-1]]
        else:
            out[-letter] = A[-letter]
    assert set(out) == set(seed.I)
    return out


# Matrix realization of SL_{r+1}, 1-based letters.

def eye(n):
    return [[F(int(i == j)) for j in range(n)] for i in range(n)]


def mul(a, b):
    return [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def y_mat(n, i, t):
    m = eye(n)
    m[i][i - 1] = F(t)
    return m


def x_mat(n, i, t):
    m = eye(n)
    m[i - 1][i] = F(t)
    return m


def coweight(n, i, t):
    return [[F(t) if (a == b and a < i) else F(int(a == b)) for b in range(n)] for a in range(n)]


def minor(m, rows, cols):
    return det([[m[r - 1][c - 1] for c in cols] for r in rows]) if rows else F(1)


def lead(m, i):
    return minor(m, list(range(1, i + 1)), list(range(1, i + 1)))


def s_bar_inv(n, i):
    return mul(mul(x_mat(n, i, 1), y_mat(n, i, -1)), x_mat(n, i, 1))


def w_bar_inv(n, word):
    m = eye(n)
    for i in reversed(word):
        m = mul(m, s_bar_inv(n, i))
    return m


def generalized_minor(prefix, i, g):
    return lead(mul(w_bar_inv(len(g), prefix), g), i)


def embed_x(seed, X):
    n = seed.r + 1
    m = eye(n)
    for i in range(seed.r, 0, -1):
        m = mul(m, coweight(n, i, X[-i]))
    for k in range(1, seed.n + 1):
        m = mul(mul(m, y_mat(n, seed.w[k - 1], 1)), coweight(n, seed.w[k - 1], X[k]))
    return m


def twist(seed, g):
    n = seed.r + 1
    h = mul(w_bar_inv(n, seed.w), g)
    d = [lead(h, i) / lead(h, i - 1) for i in range(1, n + 1)]
    du = eye(n)
    for j in range(1, n + 1):
        du[j - 1][j - 1] = d[j - 1]
        for i in range(j + 1, n + 1):
            du[j - 1][i - 1] = d[j - 1] * minor(h, list(range(1, j + 1)), list(range(1, j)) + [i]) / lead(h, j)
    return [list(row) for row in zip(*du)]


def minors_a(seed, g):
    return {k: generalized_minor([] if k < 0 else seed.w[:k], seed.letter(k), g) for k in seed.I}


# Fixture generation.

def rnd(rng):
    return F(rng.randint(1, 9), rng.randint(1, 9))


def cartan_a(r):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)] for i in range(r)]


CASES = [
    ("A1", cartan_a(1), [1]),
    ("A2", cartan_a(2), [1, 2, 1]),
    ("A2", cartan_a(2), [2, 1, 2]),
    ("A2", cartan_a(2), [1, 2]),
    ("A3", cartan_a(3), [1, 2, 3, 1, 2, 1]),
    ("A3", cartan_a(3), [2, 1, 3, 2]),
    ("A4", cartan_a(4), [1, 2, 3, 4, 1, 2, 3, 1, 2, 1]),
    ("B2", [[2, -1], [-2, 2]], [1, 2, 1, 2]),
    ("G2", [[2, -1], [-3, 2]], [1, 2, 1, 2, 1, 2]),
]


def fmt(q):
    q = F(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def point(values):
    return {str(k): fmt(v) for k, v in sorted(values.items())}


def int_point(values):
    return {str(k): int(v) for k, v in sorted(values.items())}


def transported(sf, fresh, path, p, act):
    """e_j on the chart reached by `path`, by conjugating with mutations."""
    seeds = [fresh]
    for k in path:
        seeds.append(seeds[-1].mutate(k))
    for step in reversed(range(len(path))):
        p = act_mut(sf, seeds[step + 1], path[step], p, act)
    p = act(p)
    for step, k in enumerate(path):
        p = act_mut(sf, seeds[step], k, p, act)
    return p


def act_mut(sf, seed, k, p, act):
    return mutate_x(sf, seed, k, p) if act.structure == "x" else mutate_a(sf, seed, k, p)


class Acting:
    def __init__(self, structure, fn):
        self.structure = structure
        self.fn = fn

    def __call__(self, p):
        return self.fn(p)


def build_case(label, cartan, word, rng):
    seed = Seed(cartan, word)
    letters = sorted(set(word))
    case = {"label": label, "cartan": cartan, "word": word}
    case["b_tilde"] = [[seed.b_tilde(j, k) for k in seed.I] for j in seed.I]

    A = {k: rnd(rng) for k in seed.I}
    X = {k: rnd(rng) for k in seed.I}
    c = F(3, 2)
    Q = Rationals
    case["c"] = fmt(c)
    case["a_point"] = point(A)
    case["x_point"] = point(X)
    case["ensemble"] = point(ensemble(Q, seed, A))
    case["actions"] = []
    for j in letters:
        P = ensemble(Q, seed, A)
        case["actions"].append({
            "j": j,
            "act_x": point(act_x(Q, seed, j, c, X)),
            "gamma_x": fmt(gamma_x(Q, seed, j, X)),
            "epsilon_x": fmt(epsilon_x(Q, seed, j, X)),
            "act_a": point(act_a(Q, seed, j, c, A)),
            "gamma_a": fmt(gamma_x(Q, seed, j, P)),
            "epsilon_a": fmt(epsilon_x(Q, seed, j, P)),
        })
    case["mutations"] = []
    for k in seed.unfrozen():
        mutated = seed.mutate(k)
        case["mutations"].append({
            "k": k,
            "b": [[fmt(mutated.B[i, j]) for j in seed.I] for i in seed.I],
            "a": point(mutate_a(Q, seed, k, A)),
            "x": point(mutate_x(Q, seed, k, X)),
        })

    T = MaxPlus
    b = {k: rng.randint(-6, 6) for k in seed.I}
    case["trop_point"] = int_point(b)
    case["trop"] = []
    for j in letters:
        for n in (1, -1, 3):
            case["trop"].append({
                "j": j,
                "n": n,
                "x": int_point(act_x(T, seed, j, n, b)),
                "a": int_point(act_a(T, seed, j, n, b)),
            })
        case["trop"][-1]["wt_x"] = gamma_x(T, seed, j, b)
        case["trop"][-1]["epsilon_x"] = epsilon_x(T, seed, j, b)
        case["trop"][-1]["wt_a"] = gamma_x(T, seed, j, ensemble(T, seed, b))
        case["trop"][-1]["epsilon_a"] = epsilon_x(T, seed, j, ensemble(T, seed, b))

    unfrozen = seed.unfrozen()
    if unfrozen:
        path = [unfrozen[0]] + ([unfrozen[-1]] if len(unfrozen) > 1 else [])
        charts = []
        for j in letters:
            entry = {"j": j}
            for structure in ("x", "a"):
                fn = act_x if structure == "x" else act_a
                acting = Acting(structure, lambda p, fn=fn, j=j: fn(T, seed, j, 1, p))
                entry[structure] = int_point(transported(T, seed, path, b, acting))
            charts.append(entry)
        case["trop_chart"] = {"path": path, "actions": charts}

    if label.startswith("A"):
        n = seed.r + 1
        d = [rnd(rng) for _ in range(seed.r)]
        prod = F(1)
        for v in d:
            prod *= v
        d.append(1 / prod)
        g = [[d[i] if i == j else F(0) for j in range(n)] for i in range(n)]
        for i in word:
            g = mul(g, y_mat(n, i, rnd(rng)))
        case["matrix"] = {
            "cell": [[fmt(v) for v in row] for row in g],
            "minors_a": point(minors_a(seed, g)),
            "twist": [[fmt(v) for v in row] for row in twist(seed, g)],
            "embed_x": [[fmt(v) for v in row] for row in embed_x(seed, X)],
        }
    return case


def build():
    rng = random.Random(20240611)
    return {"cases": [build_case(label, cartan, word, rng) for label, cartan, word in CASES]}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    default = Path(__file__).resolve().parent.parent / "fixtures" / "reference.json"
    parser.add_argument("--out", type=Path, default=default)
    parser.add_argument("--check", action="store_true", help="compare with the existing file")
    args = parser.parse_args()
    text = json.dumps(build(), indent=1) + "\n"
    if args.check:
        if args.out.read_text() != text:
            print(f"{args.out} is stale; rerun without --check", file=sys.stderr)
            return 1
        print("reference fixture up to date")
        return 0
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
