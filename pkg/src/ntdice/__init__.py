"""Construction and verification of non-transitive dice."""

from .cycle import base_triple, build_cycle_set, extend_cycle
from .dice import (
    DiceSet,
    Die,
    RealizationReport,
    VictoryMatrix,
    is_balanced,
    is_non_transitive,
    normalize,
    probability,
    realizes,
    victories,
    victory_matrix,
)
from .errors import (
    ConstructionError,
    CostGuardError,
    InvalidInputError,
    NotStrongError,
    ParseError,
    UnsupportedBaseError,
)
from .graphs import (
    Condensation,
    Digraph,
    Tournament,
    hamilton_cycle,
    is_strong,
    is_strongly_connectable,
    random_strong_tournament,
    random_tournament,
    strong_components,
)
from .tournament import (
    TournamentDice,
    add_chord,
    blow_up,
    build_strong_tournament_dice,
    build_tournament_dice,
    shift_labels,
)

__version__ = "0.1.0"
