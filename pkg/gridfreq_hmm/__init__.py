# -*- coding: utf-8 -*-

"""Top-level package for gridfreq_hmm."""

from .detector import __all__ as all_detector
from .detector import *  # noqa: F401,F403
from .exceptions import GridHmmError
from .hmm import __all__ as all_hmm
from .hmm import *  # noqa: F401,F403
from .numerics import __all__ as all_numerics
from .numerics import *  # noqa: F401,F403
from .prediction import __all__ as all_prediction
from .prediction import *  # noqa: F401,F403
from .simulation import __all__ as all_simulation
from .simulation import *  # noqa: F401,F403
from .version import VERSION, VERSION_SHORT
from .viterbi import __all__ as all_viterbi
from .viterbi import *  # noqa: F401,F403

__all__ = [
    "VERSION",
    "VERSION_SHORT",
    "GridHmmError",
    *all_numerics,
    *all_detector,
    *all_hmm,
    *all_viterbi,
    *all_simulation,
    *all_prediction,
]
