import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
import statsmodels.api as sm


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    r_squared: float
    points: int = 0


def rank_frequency_series(h):
    """Frequencies in descending order against rank 1..n, with natural-log columns for plotting."""
    frequencies = sorted(h.counts.values(), reverse=True)
    series_df = pd.DataFrame({
        'rank': np.arange(1, len(frequencies) + 1),
        'frequency': np.asarray(frequencies, dtype='int64'),
    })
    series_df['log_rank'] = np.log(series_df['rank'])
    series_df['log_frequency'] = np.log(series_df['frequency'])
    return series_df


def fit_power_law(h):
    """Least-squares line through (log rank, log frequency); the exponent is the negated slope."""
    if h.unique_tags < 2:
        raise ValueError(f"A power-law fit needs at least 2 unique tags, got {h.unique_tags}")
    series_df = rank_frequency_series(h)
    if series_df['frequency'].nunique() == 1:
        return PowerLawFit(0.0, 1.0, len(series_df))

    X = sm.add_constant(series_df[['log_rank']])
    model = sm.OLS(series_df['log_frequency'], X).fit()
    fit = PowerLawFit(float(-model.params['log_rank']), float(min(max(model.rsquared, 0.0), 1.0)), len(series_df))
    logging.info(f"Power-law fit over {fit.points} ranks: exponent {fit.exponent:.3f}, r^2 {fit.r_squared:.3f}")
    return fit
