"""Voting structures and the weighted game container.

A voting structure is an exact probability distribution over how many votes
a player casts for a motion.  The constructors here cover the standard
cases: fifty-fifty all-or-nothing voting, deterministic voting, all-or-
nothing with an arbitrary probability, a free-form distribution, and
leader-led teams whose members follow the leader's wish independently with
some probability.

Games are loaded from a small JSON schema.  Probabilities in documents must
be strings ("0.94" or "47/50") so they stay exact; ordinary JSON numbers
would round.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence, Union

from .errors import GameValidationError, InputError
from .poly import ONE, RationalPoly

ProbabilityLike = Union[Fraction, int, str]


def as_probability(value: ProbabilityLike, where: str = "probability") -> Fraction:
    """Coerce a string ("0.94" or "47/50"), int, or Fraction to an exact
    probability in [0, 1]."""
    if isinstance(value, float):
        raise InputError(
            f"{where}: floats are not exact; write the value as a string"
        )
    try:
        p = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: cannot parse {value!r} as a rational number") from exc
    if not 0 <= p <= 1:
        raise InputError(f"{where}: {p} is outside [0, 1]")
    return p


def _check_weight(votes: int, where: str = "votes") -> None:
    if not isinstance(votes, int) or votes < 1:
        raise GameValidationError(f"{where} must be a positive integer, got {votes!r}")


@dataclass(frozen=True)
class VoteDistribution:
    """A normalized distribution over the number of votes cast.

    The coefficient of x^j in ``pmf`` is the probability of casting exactly
    j votes.  Construction checks exact normalization: coefficients must be
    non-negative and sum to one.
    """

    pmf: RationalPoly

    def __post_init__(self) -> None:
        for degree, coeff in self.pmf.items():
            if coeff < 0:
                raise GameValidationError(
                    f"negative probability {coeff} for {degree} votes"
                )
        total = self.pmf(1)
        if total != 1:
            raise GameValidationError(f"probabilities sum to {total}, not 1")

    @property
    def max_votes(self) -> int:
        return self.pmf.degree

    def support(self) -> tuple[int, ...]:
        """Vote counts with nonzero probability, ascending."""
        return self.pmf.support()

    def prob_exactly(self, votes: int) -> Fraction:
        return self.pmf.coeff(votes)

    def prob_at_least(self, votes: int) -> Fraction:
        """Probability of casting at least ``votes`` votes."""
        return sum((c for d, c in self.pmf.items() if d >= votes), Fraction(0))


def random_structure(votes: int) -> VoteDistribution:
    """Equally likely to cast all ``votes`` votes or none."""
    _check_weight(votes)
    half = Fraction(1, 2)
    return VoteDistribution(RationalPoly({0: half, votes: half}))


def bernoulli_structure(votes: int, p: ProbabilityLike) -> VoteDistribution:
    """Casts all ``votes`` votes with probability p, none otherwise."""
    _check_weight(votes)
    p = as_probability(p, "p")
    return VoteDistribution(RationalPoly({0: 1 - p, votes: p}))


def deterministic_structure(votes: int) -> VoteDistribution:
    """Always casts all ``votes`` votes (bernoulli with p = 1)."""
    return bernoulli_structure(votes, 1)


def pmf_structure(entries: Iterable[tuple[int, ProbabilityLike]]) -> VoteDistribution:
    """Free-form distribution from (votes, probability) pairs."""
    coeffs: dict[int, Fraction] = {}
    for votes, raw in entries:
        if not isinstance(votes, int) or votes < 0:
            raise GameValidationError(
                f"vote counts must be non-negative integers, got {votes!r}"
            )
        if votes in coeffs:
            raise GameValidationError(f"duplicate entry for {votes} votes")
        coeffs[votes] = as_probability(raw, f"probability of {votes} votes")
    return VoteDistribution(RationalPoly(coeffs))


def team_structure(
    weights: Sequence[int], p: ProbabilityLike, L: ProbabilityLike
) -> VoteDistribution:
    """Leader-led team over members with the given vote weights.

    The leader wants every member to cast their votes with probability L.
    Each member independently follows the leader's wish with probability p,
    and does the exact opposite otherwise.
    """
    weights = tuple(weights)
    if not weights:
        raise GameValidationError("a team needs at least one member")
    for w in weights:
        _check_weight(w, "member weight")
    p = as_probability(p, "p")
    L = as_probability(L, "L")
    follow = prod((RationalPoly({0: 1 - p, w: p}) for w in weights), start=ONE)
    defy = prod((RationalPoly({0: p, w: 1 - p}) for w in weights), start=ONE)
    return VoteDistribution(L * follow + (1 - L) * defy)


def uniform_team_structure(
    n: int, p: ProbabilityLike, L: ProbabilityLike
) -> VoteDistribution:
    """Team of ``n`` members holding one vote each."""
    if not isinstance(n, int) or n < 1:
        raise GameValidationError(f"team size must be a positive integer, got {n!r}")
    p = as_probability(p, "p")
    L = as_probability(L, "L")
    follow = RationalPoly({0: 1 - p, 1: p}) ** n
    defy = RationalPoly({0: p, 1: 1 - p}) ** n
    return VoteDistribution(L * follow + (1 - L) * defy)


# Tunable fields each structure kind exposes (for sweeps and sensitivities).
_PARAM_FIELDS = {
    "random": (),
    "deterministic": (),
    "bernoulli": ("p",),
    "pmf": (),
    "team": ("p", "L"),
    "uniform_team": ("p", "L"),
}

KINDS = tuple(_PARAM_FIELDS)


@dataclass(frozen=True)
class StructureSpec:
    """Declarative description of a voting structure.

    Mirrors the JSON game schema one field to one, which keeps loading,
    serialization, and parameter substitution for sweeps trivial.
    """

    kind: str
    votes: int | None = None
    p: Fraction | None = None
    L: Fraction | None = None
    weights: tuple[int, ...] | None = None
    n: int | None = None
    entries: tuple[tuple[int, Fraction], ...] | None = None

    def build(self) -> VoteDistribution:
        if self.kind == "random":
            return random_structure(self.votes)
        if self.kind == "deterministic":
            return deterministic_structure(self.votes)
        if self.kind == "bernoulli":
            return bernoulli_structure(self.votes, self.p)
        if self.kind == "pmf":
            return pmf_structure(self.entries)
        if self.kind == "team":
            return team_structure(self.weights, self.p, self.L)
        if self.kind == "uniform_team":
            return uniform_team_structure(self.n, self.p, self.L)
        raise GameValidationError(f"unknown structure kind {self.kind!r}")

    def parameters(self) -> tuple[str, ...]:
        """Names of the tunable fields this structure kind exposes."""
        return _PARAM_FIELDS.get(self.kind, ())

    def with_parameter(self, field: str, value: ProbabilityLike) -> StructureSpec:
        if field not in self.parameters():
            raise InputError(
                f"structure kind {self.kind!r} has no parameter {field!r}"
            )
        return replace(self, **{field: as_probability(value, field)})

    def to_json(self) -> dict:
        if self.kind in ("random", "deterministic"):
            return {"kind": self.kind, "votes": self.votes}
        if self.kind == "bernoulli":
            return {"kind": self.kind, "votes": self.votes, "p": str(self.p)}
        if self.kind == "pmf":
            return {"kind": self.kind, "entries": [[v, str(q)] for v, q in self.entries]}
        if self.kind == "team":
            return {
                "kind": self.kind,
                "weights": list(self.weights),
                "p": str(self.p),
                "L": str(self.L),
            }
        if self.kind == "uniform_team":
            return {"kind": self.kind, "n": self.n, "p": str(self.p), "L": str(self.L)}
        raise GameValidationError(f"unknown structure kind {self.kind!r}")


@dataclass(frozen=True)
class Player:
    """A named participant with a voting structure."""

    name: str
    spec: StructureSpec
    structure: VoteDistribution

    @classmethod
    def from_spec(cls, name: str, spec: StructureSpec) -> Player:
        if not name or not isinstance(name, str):
            raise GameValidationError("player name must be a nonempty string")
        return cls(name, spec, spec.build())


@dataclass(frozen=True)
class Game:
    """A quota plus an ordered list of players."""

    quota: int
    players: tuple[Player, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.quota, int) or self.quota < 1:
            raise GameValidationError(
                f"quota must be a positive integer, got {self.quota!r}"
            )
        if not self.players:
            raise GameValidationError("a game needs at least one player")
        names = [p.name for p in self.players]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise GameValidationError(f"duplicate player names: {dupes}")

    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.players)

    @property
    def total_max_votes(self) -> int:
        return sum(p.structure.max_votes for p in self.players)

    @property
    def is_proper(self) -> bool:
        """True when the quota exceeds half the total votes in play."""
        return 2 * self.quota > self.total_max_votes

    def player(self, name: str) -> Player:
        for p in self.players:
            if p.name == name:
                return p
        raise InputError(f"unknown player {name!r}")

    def with_parameter(self, name: str, field: str, value: ProbabilityLike) -> Game:
        """A copy of the game with one player's p or L replaced."""
        target = self.player(name)
        rebuilt = Player.from_spec(name, target.spec.with_parameter(field, value))
        return Game(
            self.quota,
            tuple(rebuilt if p.name == name else p for p in self.players),
        )

    def to_doc(self) -> dict:
        """Serialize back to the JSON document schema."""
        return {
            "quota": self.quota,
            "players": [
                {"name": p.name, "structure": p.spec.to_json()} for p in self.players
            ],
        }


_REQUIRED_FIELDS = {
    "random": ("votes",),
    "deterministic": ("votes",),
    "bernoulli": ("votes", "p"),
    "pmf": ("entries",),
    "team": ("weights", "p", "L"),
    "uniform_team": ("n", "p", "L"),
}


def _json_int(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise GameValidationError(f"{where}: expected an integer, got {value!r}")
    return value


def _json_probability(value, where: str) -> Fraction:
    if not isinstance(value, str):
        raise GameValidationError(
            f'{where}: probabilities must be strings like "0.94" or "47/50", '
            f"got {value!r}"
        )
    try:
        return as_probability(value, where)
    except InputError as exc:
        raise GameValidationError(str(exc)) from exc


def _spec_from_json(obj, where: str) -> StructureSpec:
    if not isinstance(obj, dict):
        raise GameValidationError(f"{where}: expected an object")
    kind = obj.get("kind")
    if kind not in _REQUIRED_FIELDS:
        raise GameValidationError(
            f"{where}.kind: unknown structure kind {kind!r} (expected one of {list(KINDS)})"
        )
    required = _REQUIRED_FIELDS[kind]
    missing = [f for f in required if f not in obj]
    if missing:
        raise GameValidationError(f"{where}: missing fields {missing} for kind {kind!r}")
    extras = sorted(set(obj) - {"kind", *required})
    if extras:
        raise GameValidationError(f"{where}: unexpected fields {extras} for kind {kind!r}")

    fields: dict = {"kind": kind}
    if "votes" in required:
        fields["votes"] = _json_int(obj["votes"], f"{where}.votes")
    if "n" in required:
        fields["n"] = _json_int(obj["n"], f"{where}.n")
    if "p" in required:
        fields["p"] = _json_probability(obj["p"], f"{where}.p")
    if "L" in required:
        fields["L"] = _json_probability(obj["L"], f"{where}.L")
    if "weights" in required:
        raw = obj["weights"]
        if not isinstance(raw, list) or not raw:
            raise GameValidationError(f"{where}.weights: expected a non-empty array")
        fields["weights"] = tuple(
            _json_int(w, f"{where}.weights[{i}]") for i, w in enumerate(raw)
        )
    if "entries" in required:
        raw = obj["entries"]
        if not isinstance(raw, list) or not raw:
            raise GameValidationError(f"{where}.entries: expected a non-empty array")
        entries = []
        for i, item in enumerate(raw):
            spot = f"{where}.entries[{i}]"
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise GameValidationError(f"{spot}: expected a [votes, probability] pair")
            entries.append(
                (_json_int(item[0], f"{spot}[0]"), _json_probability(item[1], f"{spot}[1]"))
            )
        fields["entries"] = tuple(entries)
    return StructureSpec(**fields)


def load_game(doc) -> Game:
    """Validate a game description document and build the Game.

    Errors name the offending player and field path.
    """
    if not isinstance(doc, dict):
        raise GameValidationError("game document must be a JSON object")
    extras = sorted(set(doc) - {"quota", "players"})
    if extras:
        raise GameValidationError(f"unexpected top-level fields {extras}")
    quota = doc.get("quota")
    if not isinstance(quota, int) or isinstance(quota, bool) or quota < 1:
        raise GameValidationError("quota: must be a positive integer")
    raw_players = doc.get("players")
    if not isinstance(raw_players, list) or not raw_players:
        raise GameValidationError("players: must be a non-empty array")

    players = []
    for i, entry in enumerate(raw_players):
        where = f"players[{i}]"
        if not isinstance(entry, dict):
            raise GameValidationError(f"{where}: expected an object")
        extras = sorted(set(entry) - {"name", "structure"})
        if extras:
            raise GameValidationError(f"{where}: unexpected fields {extras}")
        name = entry.get("name")
        if not isinstance(name, str) or not name:
            raise GameValidationError(f"{where}.name: must be a nonempty string")
        where = f"{where} ({name})"
        spec = _spec_from_json(entry.get("structure"), f"{where}.structure")
        try:
            players.append(Player.from_spec(name, spec))
        except GameValidationError as exc:
            raise GameValidationError(f"{where}: {exc}") from exc
    return Game(quota, tuple(players))
