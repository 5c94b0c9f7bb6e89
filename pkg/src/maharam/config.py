"""Run configuration: one ``key = value`` per line, ``#`` starts a comment.

Lists are comma separated.  Unknown keys and malformed values are errors.

=============  ===========  ==================================================
key            default      meaning
=============  ===========  ==================================================
resolution     3            truncation level n (1..6)
p              1            depth of the construction
a              0,...        a_0..a_{p-1}, rationals in [0, 1)
M              3,...        M_0..M_{p-1}, positive integers
norm           card         ``card`` or ``schreier:<ordinal expression>``
mode           exact        ``exact`` (resolution <= 3) or ``bounded``
beam           256          candidate cap in bounded mode
seed           0            seed for every randomized step
measure        table        ``table`` (nu_{0,p}) or ``additive:<weight>``
epsilon        1/2          threshold for ``rank``
delta          1/2          delta for the G and H games
m              0            atom level for the G game, level for H
N              1            N for the E game
game_epsilon   1/4          epsilon for the E game
M_N            5            norm threshold M_N for the E game (card norm)
runs           1            adversarial matches for ``rank game``
max_rounds     50           round cap per match
=============  ===========  ==================================================
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import MAX_RESOLUTION
from .norms import Norm
from .ordinal import OrdinalError, evaluate

__all__ = ["ConfigError", "RunConfig", "parse_config", "load_config", "parse_norm"]


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    resolution: int = 3
    p: int = 1
    a: Optional[list] = None
    M: Optional[list] = None
    norm: str = "card"
    mode: str = "exact"
    beam: int = 256
    seed: int = 0
    measure: str = "table"
    epsilon: Fraction = Fraction(1, 2)
    delta: Fraction = Fraction(1, 2)
    m: int = 0
    N: int = 1
    game_epsilon: Fraction = Fraction(1, 4)
    M_N: int = 5
    runs: int = 1
    max_rounds: int = 50
    source: str = field(default="<defaults>", compare=False)

    def __post_init__(self):
        if self.a is None:
            self.a = [Fraction(0)] * self.p
        if self.M is None:
            self.M = [3] * self.p
        self.validate()

    def validate(self):
        if not 1 <= self.resolution <= MAX_RESOLUTION:
            raise ConfigError(f"resolution must be between 1 and {MAX_RESOLUTION}, got {self.resolution}")
        if self.p < 0:
            raise ConfigError("p must be a natural number")
        if len(self.a) != self.p or len(self.M) != self.p:
            raise ConfigError(f"a and M need exactly p = {self.p} entries each")
        if any(not 0 <= x < 1 for x in self.a):
            raise ConfigError("every a_k must lie in [0, 1)")
        if any(x < 1 for x in self.M):
            raise ConfigError("every M_k must be a positive integer")
        if self.mode not in ("exact", "bounded"):
            raise ConfigError(f"mode must be exact or bounded, got {self.mode!r}")
        if self.mode == "exact" and self.resolution > 3:
            raise ConfigError("exact mode needs resolution <= 3; use mode = bounded")
        parse_norm(self.norm)
        self.additive_weight()
        for name in ("epsilon", "delta", "game_epsilon"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if self.M_N < 2:
            raise ConfigError("M_N must be at least 2")
        if self.runs < 1 or self.max_rounds < 1 or self.beam < 1:
            raise ConfigError("runs, max_rounds and beam must be positive")
        if self.m < 0 or self.N < 0:
            raise ConfigError("m and N must be natural numbers")

    def additive_weight(self) -> Optional[Fraction]:
        if self.measure == "table":
            return None
        head, _, body = self.measure.partition(":")
        if head != "additive" or not body:
            raise ConfigError(f"measure must be 'table' or 'additive:<weight>', got {self.measure!r}")
        w = _fraction("measure", body)
        if w <= 0:
            raise ConfigError("additive weight must be positive")
        return w

    def params(self):
        from .submeasure import Params

        return Params(
            resolution=self.resolution,
            p=self.p,
            a=list(self.a),
            M=list(self.M),
            norm=parse_norm(self.norm),
            mode=self.mode,
            beam=self.beam,
            norm_spec=self.norm,
        )

    def measure_fn(self):
        """The submeasure the rank commands run on."""
        from .algebra import Space
        from .submeasure import FamilyMeasure, build

        w = self.additive_weight()
        if w is not None:
            return FamilyMeasure.additive(Space(self.resolution), w)
        return build(self.params())[0]

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            if f.name == "source":
                continue
            v = getattr(self, f.name)
            if isinstance(v, list):
                v = [str(x) for x in v]
            elif isinstance(v, Fraction):
                v = str(v)
            out[f.name] = v
        return out


def parse_norm(spec: str) -> Norm:
    if spec == "card":
        return Norm.card()
    head, _, body = spec.partition(":")
    if head != "schreier" or not body.strip():
        raise ConfigError(f"norm must be 'card' or 'schreier:<ordinal>', got {spec!r}")
    try:
        alpha = evaluate(body)
    except OrdinalError as exc:
        raise ConfigError(f"norm ordinal: {exc}") from None
    if alpha.is_zero():
        raise ConfigError("schreier norm needs a positive ordinal")
    return Norm.schreier(alpha)


def _int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {text!r}") from None


def _fraction(key: str, text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{key}: expected a rational, got {text!r}") from None


def _list(key: str, text: str, conv) -> list:
    items = [x.strip() for x in text.split(",")]
    if text.strip() == "":
        return []
    if any(not x for x in items):
        raise ConfigError(f"{key}: empty list item")
    return [conv(key, x) for x in items]


_CONVERTERS = {
    "resolution": _int,
    "p": _int,
    "a": lambda k, v: _list(k, v, _fraction),
    "M": lambda k, v: _list(k, v, _int),
    "norm": lambda k, v: v,
    "mode": lambda k, v: v,
    "beam": _int,
    "seed": _int,
    "measure": lambda k, v: v,
    "epsilon": _fraction,
    "delta": _fraction,
    "m": _int,
    "N": _int,
    "game_epsilon": _fraction,
    "M_N": _int,
    "runs": _int,
    "max_rounds": _int,
}


def parse_config(text: str, source: str = "<string>", overrides: Optional[dict] = None) -> RunConfig:
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not eq or not key:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value'")
        if key not in _CONVERTERS:
            raise ConfigError(f"{source}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        values[key] = _CONVERTERS[key](key, value)
    values.update(overrides or {})
    return RunConfig(source=source, **values)


def load_config(path, overrides: Optional[dict] = None) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return parse_config(text, str(path), overrides)
