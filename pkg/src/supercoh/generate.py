"""Seeded random nilpotent Lie superalgebras and central ideals.

Brackets are drawn "strictly upper triangular" with respect to a random
ordering of the basis: ``[b_i, b_j]`` may only involve basis elements that
come after both ``b_i`` and ``b_j`` in that ordering, which makes every
candidate nilpotent.  Candidates failing super Jacobi are rejected and
redrawn.
"""

from __future__ import annotations

import random
from typing import Optional

from .field import Field
from .superalg import GradedSubspace, SuperAlgebra, center, validate


class GenerationError(RuntimeError):
    pass


def admits_brackets(m: int, q: int) -> bool:
    """Whether some nilpotent ``(m|q)`` superalgebra is non-abelian."""
    return m >= 3 or (m >= 1 and q >= 1)


def random_nilpotent(field: Field, m: int, q: int, rng: random.Random, density: float = 0.5,
                     max_tries: int = 10_000, name: Optional[str] = None,
                     nonabelian: bool = True) -> SuperAlgebra:
    """A random nilpotent ``(m|q)`` superalgebra; deterministic for a seeded ``rng``.

    With ``nonabelian`` set, abelian draws are rejected whenever the
    shape admits a nonzero bracket.
    """
    n = m + q
    want_brackets = nonabelian and admits_brackets(m, q)
    even = [f"e{i + 1}" for i in range(m)]
    odd = [f"f{i + 1}" for i in range(q)]
    parity = [0] * m + [1] * q
    for _ in range(max_tries):
        order = list(range(n))
        rng.shuffle(order)
        level = {b: k for k, b in enumerate(order)}
        structure = {}
        for i in range(n):
            for j in range(i, n):
                if i == j and parity[i] == 0:
                    continue
                target_parity = (parity[i] + parity[j]) % 2
                top = max(level[i], level[j])
                vec = [0] * n
                for k in range(n):
                    if parity[k] == target_parity and level[k] > top and rng.random() < density:
                        vec[k] = field.random(rng, nonzero=True)
                if any(vec):
                    structure[(i, j)] = vec
        if want_brackets and not structure:
            continue
        A = SuperAlgebra(name or f"nil_{m}_{q}", field, even, odd, structure)
        if validate(A).ok:
            return A
    raise GenerationError(f"no valid ({m}|{q}) algebra after {max_tries} draws")


def random_central_ideal(A: SuperAlgebra, rng: random.Random) -> GradedSubspace:
    """A random graded subspace of the center (random size per parity, random combinations)."""
    Z = center(A)
    F = A.field
    parts = []
    for sub in (Z.even_part, Z.odd_part):
        k = rng.randint(0, sub.dim)
        vecs = []
        for _ in range(k):
            v = [F.zero] * sub.ambient_dim
            for b in sub.vectors:
                c = F.random(rng)
                v = [x + c * y for x, y in zip(v, b)]
            vecs.append(v)
        parts.append(vecs)
    return GradedSubspace.from_parts(A, parts[0], parts[1])


def random_superalgebra_sample(field: Field, count: int, seed: int, max_even: int = 3,
                               max_odd: int = 2) -> list:
    """``count`` random nilpotent algebras of dimension at most ``(max_even|max_odd)``.

    Three draws in four use a shape that admits a nonzero bracket.
    """
    rng = random.Random(seed)
    shapes = [(m, q) for m in range(max_even + 1) for q in range(max_odd + 1)]
    rich = [s for s in shapes if admits_brackets(*s)] or shapes
    out = []
    for k in range(count):
        m, q = rng.choice(rich if rng.random() < 0.75 else shapes)
        out.append(random_nilpotent(field, m, q, rng, name=f"rand{seed}_{k}"))
    return out
