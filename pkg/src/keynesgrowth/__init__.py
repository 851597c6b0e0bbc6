"""Growth with an exogenous capital path and Keynesian unemployment.

Simulate the full-employment baseline (:mod:`keynesgrowth.solow`), the
exogenous-capital model (:mod:`keynesgrowth.keynes`), and estimate the
unemployment-growth equation from annual data (:mod:`keynesgrowth.dataproc`,
:mod:`keynesgrowth.estimate`).
"""

from .dataproc import (
    ColumnMapping,
    DerivedSeries,
    MacroSeries,
    build_derived,
    first_difference,
    growth_rate,
    load_csv,
    load_derived_csv,
)
from .errors import (
    AlignmentError,
    DomainError,
    IntegrationError,
    LoadError,
    ModelError,
    NoSolutionError,
    NoSteadyStateError,
    NumericError,
    SignWarning,
    SingularDesignError,
    SingularityError,
    UndefinedProductError,
    ValidationError,
)
from .estimate import (
    RegressionResult,
    TechPath,
    fit_linear,
    fit_quadratic,
    ols_fit,
    predict_unemployment_growth,
    structural_product,
)
from .keynes import (
    CapitalGrowthPath,
    KeynesPath,
    kd_growth,
    reconstruct_unemployment,
    solve_kd,
    unemployment_growth,
    unemployment_growth_share_form,
)
from .model_core import (
    CobbDouglas,
    IntensiveState,
    ModelParams,
    ProductionFunction,
    intensive_output,
    intensive_rental,
    intensive_wage,
)
from .solow import SolowPath, simulate_solow, solow_rhs, steady_state

__version__ = "0.1.0"
