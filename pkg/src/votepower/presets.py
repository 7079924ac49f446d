"""Bundled example games.

Each preset returns a game description document (the JSON schema of
``model.load_game``), so presets and user files flow through the same
validation.  The senate preset exposes the leaders' wishes and the two
party cohesion values as options.
"""

from __future__ import annotations

from .errors import InputError
from .model import Game, load_game

# The 112th-Congress party-line voting averages were 94% and 84%.  The two
# assignments below put the 94% figure on the Democrats or the Republicans
# respectively; see the README for which one reproduces the reference power
# values bundled with this library.
COHESION_ASSIGNMENTS = {
    "paper-text": {"pD": "0.94", "pR": "0.84"},
    "paper-figure": {"pD": "0.84", "pR": "0.94"},
}
DEFAULT_COHESION = "paper-figure"


def _random(name: str, votes: int) -> dict:
    return {"name": name, "structure": {"kind": "random", "votes": votes}}


def _bernoulli(name: str, votes: int, p: str) -> dict:
    return {"name": name, "structure": {"kind": "bernoulli", "votes": votes, "p": p}}


def _game_6_4321(first_player: dict | None = None) -> dict:
    players = [first_player or _random("A", 4), _random("B", 3), _random("C", 2), _random("D", 1)]
    return {"quota": 6, "players": players}


def paper_6_4321_random() -> dict:
    """The [6; 4, 3, 2, 1] game with every player voting fifty-fifty."""
    return _game_6_4321()


def paper_sec32() -> dict:
    """[6; 4, 3, 2, 1] where player A spreads votes non-uniformly."""
    structure = {
        "kind": "pmf",
        "entries": [[0, "1/10"], [2, "4/10"], [3, "3/10"], [4, "2/10"]],
    }
    return _game_6_4321({"name": "A", "structure": structure})


def paper_eq25(p: str = "1/2") -> dict:
    """[6; 4, 3, 2, 1] with A all-or-nothing at probability p."""
    return _game_6_4321(_bernoulli("A", 4, p))


def paper_eq26(p: str = "1/2") -> dict:
    """[6; 4, 3, 2, 1] with B all-or-nothing at probability p."""
    doc = _game_6_4321()
    doc["players"][1] = _bernoulli("B", 3, p)
    return doc


def paper_eq27(p: str = "1/2") -> dict:
    """[6; 4, 3, 2, 1] with C all-or-nothing at probability p."""
    doc = _game_6_4321()
    doc["players"][2] = _bernoulli("C", 2, p)
    return doc


def paper_eq28(p: str = "1/2") -> dict:
    """[6; 4, 3, 2, 1] with D all-or-nothing at probability p."""
    doc = _game_6_4321()
    doc["players"][3] = _bernoulli("D", 1, p)
    return doc


def paper_eq31(p: str = "1/2", L: str = "1/2") -> dict:
    """[6; 4, 3, 2, 1] with A replaced by a led team of weights {2, 1, 1}."""
    team = {"kind": "team", "weights": [2, 1, 1], "p": p, "L": L}
    return _game_6_4321({"name": "A", "structure": team})


def paper_eq32(p: str = "1/2", L: str = "1/2") -> dict:
    """[6; 4, 3, 2, 1] with A replaced by a led team of four single votes."""
    team = {"kind": "uniform_team", "n": 4, "p": p, "L": L}
    return _game_6_4321({"name": "A", "structure": team})


def senate_113(
    LD: str = "1",
    LR: str = "0",
    pD: str | None = None,
    pR: str | None = None,
    cohesion: str = DEFAULT_COHESION,
) -> dict:
    """The [60; 53, 45, 2] cloture game: two led parties and two independents.

    ``cohesion`` picks which party gets the historical 94% follow-the-leader
    value; explicit pD/pR override it.
    """
    if cohesion not in COHESION_ASSIGNMENTS:
        raise InputError(
            f"unknown cohesion assignment {cohesion!r} "
            f"(expected one of {sorted(COHESION_ASSIGNMENTS)})"
        )
    defaults = COHESION_ASSIGNMENTS[cohesion]
    return {
        "quota": 60,
        "players": [
            {
                "name": "Dem",
                "structure": {
                    "kind": "uniform_team",
                    "n": 53,
                    "p": pD if pD is not None else defaults["pD"],
                    "L": LD,
                },
            },
            {
                "name": "Rep",
                "structure": {
                    "kind": "uniform_team",
                    "n": 45,
                    "p": pR if pR is not None else defaults["pR"],
                    "L": LR,
                },
            },
            _random("Ind", 2),
        ],
    }


_BUILDERS = {
    "paper-6-4321-random": paper_6_4321_random,
    "paper-sec32": paper_sec32,
    "paper-eq25": paper_eq25,
    "paper-eq26": paper_eq26,
    "paper-eq27": paper_eq27,
    "paper-eq28": paper_eq28,
    "paper-eq31": paper_eq31,
    "paper-eq32": paper_eq32,
    "senate-113": senate_113,
}

PRESETS = tuple(_BUILDERS)


def preset_doc(name: str, **options) -> dict:
    """Game description document for a named preset.

    Options (p, L, LD, LR, pD, pR, cohesion) are passed to the preset
    builder; options the preset does not take are rejected.
    """
    builder = _BUILDERS.get(name)
    if builder is None:
        raise InputError(f"unknown preset {name!r} (available: {', '.join(PRESETS)})")
    supplied = {k: v for k, v in options.items() if v is not None}
    allowed = set(builder.__code__.co_varnames[: builder.__code__.co_argcount])
    rejected = sorted(set(supplied) - allowed)
    if rejected:
        raise InputError(f"preset {name!r} does not take options {rejected}")
    return builder(**supplied)


def preset_game(name: str, **options) -> Game:
    """Load a named preset as a validated Game."""
    return load_game(preset_doc(name, **options))
