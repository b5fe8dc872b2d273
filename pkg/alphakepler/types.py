from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import TYPE_CHECKING, TypeAlias

import numpy as np
import numpy.typing as npt

if TYPE_CHECKING:
    from alphakepler.campaign import Campaign
    from alphakepler.conformable import Jet
    from alphakepler.report import VerificationReport

FloatArray: TypeAlias = npt.NDArray[np.float64]

Num: TypeAlias = "float | Jet"

ScalarField: TypeAlias = Callable[[Sequence["float | Jet"]], "float | Jet"]
VectorField: TypeAlias = Callable[[FloatArray], FloatArray]
TensorField: TypeAlias = Callable[[FloatArray], FloatArray]

Check: TypeAlias = Callable[["Campaign", list["VerificationReport"]], None]
