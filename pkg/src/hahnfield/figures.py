"""Figure rendering for verification reports."""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_report_figure(reports, path):
    """A pass/fail bar chart, one bar pair per suite, written to path."""
    names = [r.suite for r in reports]
    passes = [r.summary["pass"] for r in reports]
    fails = [r.summary["fail"] for r in reports]
    pos = range(len(names))

    fig, ax = plt.subplots(figsize=(max(6, len(names) * 1.1), 4))
    ax.bar(pos, passes, width=0.6, color="#2a7d4f", label="pass")
    ax.bar(pos, fails, width=0.6, bottom=passes, color="#b23a3a", label="fail")
    ax.set_xticks(list(pos))
    ax.set_xticklabels(names, rotation=30, ha="right")
    ax.set_ylabel("cases")
    ax.set_title("verification suites")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
