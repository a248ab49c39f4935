"""Regenerate the shipped example corpus under src/supercoh/corpus/."""

import random
from pathlib import Path

from supercoh.field import QQ
from supercoh.generate import random_nilpotent
from supercoh.io import serialize_algebra
from supercoh.superalg import SuperAlgebra, abelian, direct_sum

NIL22_SEED = 6

out = Path(__file__).resolve().parent.parent / "src" / "supercoh" / "corpus"
out.mkdir(exist_ok=True)


def write(A, header=""):
    (out / f"{A.name}.alg").write_text(header + serialize_algebra(A))


for m in range(4):
    for q in range(4):
        write(abelian(QQ, m, q))

h3 = SuperAlgebra.from_brackets("h3", QQ, ["x", "y", "z"], [], {("x", "y"): {"z": 1}})
sh11 = SuperAlgebra.from_brackets("sh11", QQ, ["z"], ["f"], {("f", "f"): {"z": 1}})
write(h3, "# Heisenberg algebra\n")
write(sh11, "# (1|1) with [f, f] = z\n")
write(direct_sum(h3, abelian(QQ, 0, 1), name="h3_plus_ab01"), "# h3 (+) abelian (0|1)\n")
write(random_nilpotent(QQ, 2, 2, random.Random(NIL22_SEED), name="nil22"),
      f"# random_nilpotent(Q, 2, 2, random.Random({NIL22_SEED}))\n")
