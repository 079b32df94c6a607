"""Number series driven by cyclic navigation rules.

A rule is a list of steps applied in turn: ``Split`` turns a Dec/Hex string into
its OILU stack (doubling the length), ``Merge`` pairs the digits back up, and
``Facet`` reads the stack after a quarter turn.  OILU digit values are re-read
as decimal digits between steps, so the text passes through unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import OiluError, StepDomainError
from .numbers import facet, format_number, parse_number
from .sevenseg import Strategy, merge_number, parse_digits, split_number

DEFAULT_MAX_LENGTH = 4096


@dataclass(frozen=True)
class Split:
    strategy: Strategy = Strategy.A

    def __str__(self):
        return f"split:{self.strategy.value}"


@dataclass(frozen=True)
class Merge:
    strategy: Strategy = Strategy.A

    def __str__(self):
        return f"merge:{self.strategy.value}"


@dataclass(frozen=True)
class Facet:
    k: int = 1

    def __post_init__(self):
        if not isinstance(self.k, int) or not 0 <= self.k <= 3:
            raise ValueError(f"facet step needs k in [0, 3], got {self.k!r}")

    def __str__(self):
        return f"facet:{self.k}"


Step = Split | Merge | Facet


@dataclass(frozen=True)
class NavRule:
    steps: tuple

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise ValueError("a navigation rule needs at least one step")

    @classmethod
    def parse(cls, text: str) -> "NavRule":
        """Parse ``split:a,facet:1,merge:a`` style rule text."""
        steps = []
        for token in text.split(","):
            token = token.strip()
            name, _, arg = token.partition(":")
            name = name.lower()
            if name == "split":
                steps.append(Split(Strategy.parse(arg)))
            elif name == "merge":
                steps.append(Merge(Strategy.parse(arg)))
            elif name == "facet":
                try:
                    k = int(arg)
                except ValueError:
                    raise ValueError(f"bad facet index in {token!r}") from None
                steps.append(Facet(k))
            else:
                raise ValueError(f"unknown rule step {token!r}")
        return cls(tuple(steps))

    def __str__(self):
        return ",".join(str(s) for s in self.steps)


@dataclass(frozen=True)
class SeriesConfig:
    seed: str
    rule: NavRule
    iterations: int
    base: int = 10
    max_length: int = DEFAULT_MAX_LENGTH

    def __post_init__(self):
        if self.base not in (10, 16):
            raise ValueError(f"base must be 10 or 16, got {self.base!r}")
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.max_length < len(self.seed):
            raise ValueError("max_length is shorter than the seed")
        parse_digits(self.seed, self.base)


@dataclass
class Series:
    values: list = field(default_factory=list)
    stop_reason: str | None = None
    error: StepDomainError | None = None


def apply_step(t: str, step: Step, base: int = 10) -> str:
    try:
        if isinstance(step, Split):
            return format_number(split_number(t, step.strategy, base))
        if isinstance(step, Merge):
            return merge_number(parse_number(t), step.strategy, base)
        if isinstance(step, Facet):
            return format_number(facet(parse_number(t), step.k))
    except OiluError as exc:
        raise StepDomainError(f"{step}: {exc}", step=step, position=exc.position) from exc
    raise TypeError(f"not a series step: {step!r}")


def generate(cfg: SeriesConfig) -> Series:
    """Run ``cfg.iterations`` steps from the seed.

    Generation stops early, keeping the values produced so far, when a step
    fails on its input or the next value would exceed ``cfg.max_length``.
    """
    out = Series([cfg.seed])
    steps = cfg.rule.steps
    current = cfg.seed
    for i in range(cfg.iterations):
        step = steps[i % len(steps)]
        try:
            current = apply_step(current, step, cfg.base)
        except StepDomainError as exc:
            exc.iteration = i
            out.stop_reason = f"iteration {i}: {exc}"
            out.error = exc
            return out
        if len(current) > cfg.max_length:
            out.stop_reason = f"iteration {i}: length {len(current)} exceeds max_length {cfg.max_length}"
            return out
        out.values.append(current)
    return out
