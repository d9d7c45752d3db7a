"""
Run Configuration

Randomized identity checks draw their sample vectors from the active RunConfig. The active configuration is kept in a
context variable so that a CLI invocation or a test can select a seed for everything it calls.
"""


import random
from contextvars import ContextVar
from dataclasses import dataclass, replace
from fractions import Fraction


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    samples: int = 100
    coefficient_range: int = 5

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def with_seed(self, seed: int) -> "RunConfig":
        return replace(self, seed=seed)


active_config: ContextVar[RunConfig] = ContextVar("active_config", default=RunConfig())


class UseConfig:
    def __init__(self, config: RunConfig):
        self.config = config
        self._previous_context_token = None

    def __enter__(self) -> RunConfig:
        self._previous_context_token = active_config.set(self.config)
        return self.config

    def __exit__(self, *_):
        active_config.reset(self._previous_context_token)


def use_config(config: RunConfig) -> UseConfig:
    return UseConfig(config)


def get_config() -> RunConfig:
    return active_config.get()


def random_rational_vector(rng: random.Random, dim: int, config: RunConfig | None = None) -> tuple[Fraction, ...]:
    """Vector of small random rationals with denominators in 1..3."""
    bound = (config or get_config()).coefficient_range
    return tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(dim))
