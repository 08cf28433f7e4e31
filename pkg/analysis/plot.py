import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import scienceplots  # registers the 'science' styles

plt.style.use(['science', 'ieee', 'no-latex'])


def plot_rank_frequency(series_df, file_path, fit=None):
    """Log-log rank-frequency scatter, with the fitted line when a PowerLawFit is given."""
    os.makedirs(os.path.dirname(os.path.abspath(file_path)), exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(series_df['rank'], series_df['frequency'], marker='.', linestyle='none', markersize=2, label='Tags')
    if fit is not None and len(series_df):
        top = series_df['frequency'].iloc[0]
        ax.loglog(series_df['rank'], top * series_df['rank'] ** -fit.exponent, linestyle='--',
                  label=f"slope -{fit.exponent:.2f} ($R^2$={fit.r_squared:.2f})")
    ax.set_xlabel('Rank')
    ax.set_ylabel('Frequency')
    ax.set_title('Tag Rank-Frequency Distribution')
    ax.legend()
    fig.tight_layout()
    fig.savefig(file_path)
    plt.close(fig)
    return file_path
