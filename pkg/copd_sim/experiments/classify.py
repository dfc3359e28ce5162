"""COPD Simulator Module"""

# first-party
from copd_sim.model.fraction_model import FractionsModel
from copd_sim.model.run_result_model import RunResultModel

# fractions at or below this are treated as extinct
COEXISTENCE_THRESHOLD = 0.01


def classify_fractions(fractions: FractionsModel, threshold: float = COEXISTENCE_THRESHOLD) -> str:
    """Label the strategies whose fraction exceeds threshold (CD, CA, DA, CDA or X-dominant)."""
    values = fractions.as_tuple()
    present = ''.join(code for code, rho in zip('CDA', values) if rho > threshold)
    if not present:
        # nothing clears the threshold: the largest share dominates
        present = 'CDA'[values.index(max(values))]
    if len(present) == 1:
        return f'{present}-dominant'
    return present


def classify_outcome(result: RunResultModel, threshold: float = COEXISTENCE_THRESHOLD) -> str:
    """Label a run by the strategies present in its tail-averaged fractions."""
    return classify_fractions(result.final_fractions, threshold)
