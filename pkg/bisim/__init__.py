from .calculus import Calculus, KIND_OF
from .call_by_name import CallByName
from .call_by_value import CallByValue
from .checks import (
    RoundResult,
    match_round,
    forward_cbn,
    backward_cbn,
    forward_cbv,
    backward_cbv,
)
from .game import BisimGame, bisim_game, mode_mapping
from .reports import StepMatch, SimulationReport, GameReport
