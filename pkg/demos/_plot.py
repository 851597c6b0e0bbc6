"""Optional plotting for the demos; a no-op when matplotlib is absent."""

import sys


def maybe_plot(series, title, xlabel, filename):
    """Plot ``{label: (x, y)}`` to ``filename`` if ``--plot`` was passed."""
    if "--plot" not in sys.argv:
        return
    try:
        import matplotlib

        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping plot")
        return
    fig, ax = plt.subplots(figsize=(7, 4))
    for label, (x, y) in series.items():
        ax.plot(x, y, label=label)
    ax.set_title(title)
    ax.set_xlabel(xlabel)
    ax.legend()
    fig.tight_layout()
    fig.savefig(filename, dpi=120)
    print(f"wrote {filename}")
