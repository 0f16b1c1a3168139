import random

from galekit.exactla import ExactMatrix


def rand_matrix(rng: random.Random, field, rows: int, cols: int, lo=-9, hi=9) -> ExactMatrix:
    if field.kind == "prime":
        return ExactMatrix.from_rows(
            field, [[rng.randrange(field.p) for _ in range(cols)] for _ in range(rows)]
        )
    return ExactMatrix.from_rows(
        field, [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]
    )


def rng_for(name: str) -> random.Random:
    return random.Random(f"galekit-tests-{name}")
