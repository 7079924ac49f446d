"""Power engines: coalition enumeration and the generating-function route.

``classic_banzhaf`` counts marginal players over all 2^n coalitions of an
all-or-nothing weighted game.  The generating-function route
(``losing_tail``, ``influence_polynomial``, ``generalized_banzhaf``) handles
arbitrary voting structures and reduces exactly to the classic index when
every player votes all-or-nothing with probability one half.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import CapacityError, DegenerateGameError, InputError
from .model import Game, VoteDistribution
from .poly import ONE, RationalPoly

# Above this many players the 2^n coalition walk stops being desk-scale.
ENUMERATION_CAP = 24


@dataclass(frozen=True)
class BanzhafReport:
    """Marginality counts and normalized powers, in player order."""

    marginal_counts: tuple[int, ...]
    powers: tuple[Fraction, ...]


def classic_banzhaf(
    quota: int, weights: Sequence[int], cap: int = ENUMERATION_CAP
) -> BanzhafReport:
    """Count, over all 2^n coalitions, how often each player is marginal.

    A player is marginal for a coalition when entering or leaving it changes
    whether the coalition meets the quota.  Powers are the counts normalized
    by their total (all zero if nobody is ever marginal).
    """
    weights = tuple(weights)
    if not weights:
        raise InputError("at least one weight is required")
    if not isinstance(quota, int) or quota < 1:
        raise InputError(f"quota must be a positive integer, got {quota!r}")
    for w in weights:
        if not isinstance(w, int) or w < 1:
            raise InputError(f"weights must be positive integers, got {w!r}")
    n = len(weights)
    if n > cap:
        raise CapacityError(
            f"{n} players exceeds the enumeration cap of {cap}; "
            "use the generating-function route for larger games"
        )

    counts = [0] * n
    for mask in range(1 << n):
        total = 0
        m = mask
        while m:
            low = m & -m
            total += weights[low.bit_length() - 1]
            m ^= low
        for i, w in enumerate(weights):
            if mask >> i & 1:
                if total >= quota and total - w < quota:
                    counts[i] += 1
            elif total < quota and total + w >= quota:
                counts[i] += 1

    grand = sum(counts)
    if grand:
        powers = tuple(Fraction(c, grand) for c in counts)
    else:
        powers = tuple(Fraction(0) for _ in counts)
    return BanzhafReport(tuple(counts), powers)


def losing_tail(game: Game, excluded: str) -> RationalPoly:
    """Distribution of the other players' vote total, truncated below quota.

    The coefficient of x^Z is the probability that the players other than
    ``excluded`` jointly cast Z votes, kept only for Z < quota: the
    coalitions the excluded player could still tip.
    """
    game.player(excluded)  # raises InputError for unknown names
    joint = prod(
        (p.structure.pmf for p in game.players if p.name != excluded), start=ONE
    )
    return joint.extract(0, game.quota - 1)


def influence_polynomial(
    dist: VoteDistribution, quota: int, strict: bool = False
) -> RationalPoly:
    """Per-threshold undecided fractions of one voting structure.

    Against a coalition already holding Z votes, v_Z is the probability this
    player casts enough votes (at least quota - Z) to lift it to winning.
    The coefficient of x^Z is min(v_Z, 1 - v_Z): how far the player is from
    a foregone conclusion at that threshold, which is exactly what the other
    players still have to negotiate over.

    By default v_Z sums the structure's full support and the Z = 0 term is
    included, so a player whose own weight reaches the quota keeps the
    influence the coalition count gives them.  ``strict=True`` restricts the
    support to vote counts below the quota and starts at Z = 1, which
    assigns zero influence to such a player.
    """
    if not isinstance(quota, int) or quota < 1:
        raise InputError(f"quota must be a positive integer, got {quota!r}")
    coeffs: dict[int, Fraction] = {}
    start = 1 if strict else 0
    for z in range(start, quota):
        need = quota - z
        if strict:
            v = sum(
                (c for d, c in dist.pmf.items() if need <= d <= quota - 1), Fraction(0)
            )
        else:
            v = dist.prob_at_least(need)
        gamma = min(v, 1 - v)
        if gamma:
            coeffs[z] = gamma
    return RationalPoly(coeffs)


def influence(game: Game, who: str, strict: bool = False) -> Fraction:
    """Expected decisiveness of one player: the influence polynomial dotted
    with everyone else's losing-tail distribution."""
    player = game.player(who)
    ipoly = influence_polynomial(player.structure, game.quota, strict=strict)
    return ipoly.dot(losing_tail(game, who))


@dataclass(frozen=True)
class PowerReport:
    """Raw influences and normalized powers, keyed by player name."""

    influences: dict[str, Fraction]
    powers: dict[str, Fraction]
    proper_game: bool


def generalized_banzhaf(game: Game, strict: bool = False) -> PowerReport:
    """Influence of every player, normalized to a power vector summing to 1."""
    influences = {p.name: influence(game, p.name, strict=strict) for p in game.players}
    total = sum(influences.values(), Fraction(0))
    if not total:
        raise DegenerateGameError(
            "every player has zero influence; powers are undefined"
        )
    powers = {name: value / total for name, value in influences.items()}
    return PowerReport(influences, powers, game.is_proper)
