"""The linformctl run configuration."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .const import DEFAULT_MAX_RADIUS
from .exception import ConfigError

SUBCOMMANDS = ("construct", "repfn", "sidon", "gadic", "density", "explain-t")

# subcommands working with the fundamental lemma need a binary form
BINARY_SUBCOMMANDS = ("construct", "explain-t")


def parse_coefficients(text: str) -> tuple[int, ...]:
    """Parse `u1,u2[,...]`."""
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as ex:
        raise ConfigError(f"malformed form `{text}`; use comma separated integers") from ex


@dataclass
class RunConfig:
    """Options of one linformctl invocation."""

    subcommand: str
    form: tuple[int, ...] = ()
    target: str | None = None
    radius: int = 0
    rounds: int = 1
    search_radius: int = DEFAULT_MAX_RADIUS
    output: Path | None = None
    explain: bool = False

    def validate(self) -> RunConfig:
        """Check that the options fit together."""
        if self.subcommand not in SUBCOMMANDS:
            raise ConfigError(f"unknown subcommand `{self.subcommand}`")
        if self.subcommand == "gadic" and self.form:
            raise ConfigError("gadic builds its own form; --form is not accepted")
        if self.subcommand in BINARY_SUBCOMMANDS and len(self.form) != 2:
            raise ConfigError(f"{self.subcommand} needs a binary form u1,u2")
        if self.subcommand in ("repfn", "sidon") and len(self.form) < 2:
            raise ConfigError(f"{self.subcommand} needs at least two coefficients")
        if self.target is not None and self.subcommand != "construct":
            raise ConfigError("--target only applies to construct")
        if self.radius < 0 or self.rounds < 1 or self.search_radius < 1:
            raise ConfigError("need window >= 0, rounds >= 1 and search radius >= 1")
        return self
