"""Lattice diagrams of the subquotient regions in (k, l) coordinates.

Text mode prints an ASCII density map; SVG mode renders a matplotlib figure
to a self-contained file.  Shading follows the chamber tables: darkest for
the finite-dimensional or holomorphic/antiholomorphic piece, medium for the
Q pieces, lightest for the quaternionic piece.
"""

from __future__ import annotations

from fractions import Fraction

from . import decomposition as dec

_DARK = (dec.V_FIN, dec.V_DISC_P, dec.V_DISC_M)
_MEDIUM = (dec.Q_P, dec.Q_M)
_CHARS = {0: "#", 1: "+", 2: "."}
_GRAYS = {0: "0.25", 1: "0.55", 2: "0.85"}


def _shade(tag: str) -> int:
    if tag in _DARK:
        return 0
    if tag in _MEDIUM:
        return 1
    return 2


def _fmt_frac(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _legend(delta: int, lam: int) -> list:
    table = dec.lowest_ktype_table(delta, lam)
    order = [t for t in (dec.V_FIN, dec.V_DISC_P, dec.V_DISC_M, dec.Q_P, dec.Q_M, dec.V_H)
             if t in table]
    lines = []
    for tag in order:
        j, n = table[tag]
        lines.append(f"{_CHARS[_shade(tag)]}  {tag:7s} lowest (j, n) = "
                     f"({_fmt_frac(j)}, {_fmt_frac(n)})")
    return lines


def render_text(delta: int, lam: int, kmax: int = 12) -> str:
    """ASCII lattice map; bare lattice with a warning when unclassified."""
    chamber = dec.chamber_classify(delta, lam)
    lines = []
    if chamber is None:
        lines.append(f"WARNING: character (delta, lambda) = ({delta}, {lam}) "
                     "is unclassified (wall or parity failure); bare lattice")
        point = {kl: "o" for kl in dec.lattice_points(kmax)}
    else:
        lines.append(f"chamber {chamber} at (delta, lambda) = ({delta}, {lam})")
        lines.extend(_legend(delta, lam))
        point = {kl: _CHARS[_shade(dec.region_of(delta, lam, *kl))]
                 for kl in dec.lattice_points(kmax)}
    lines.append("")
    for l in range(kmax, -kmax - 1, -1):
        row = [f"l={l:+3d} " if l else "l=  0 "]
        for k in range(kmax + 1):
            row.append(point.get((k, l), " ") + " ")
        lines.append("".join(row).rstrip())
    lines.append("      " + "".join(f"{k%10} " for k in range(kmax + 1)))
    lines.append("      k axis (labels mod 10)")
    return "\n".join(lines)


def render_svg(delta: int, lam: int, kmax: int, path: str) -> str:
    """Render the shaded lattice with matplotlib and save a self-contained
    SVG; returns the path."""
    import matplotlib
    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    chamber = dec.chamber_classify(delta, lam)
    fig, ax = plt.subplots(figsize=(7.2, 6.0))
    if chamber is None:
        xs = [k for k, _ in dec.lattice_points(kmax)]
        ys = [l for _, l in dec.lattice_points(kmax)]
        ax.scatter(xs, ys, marker="s", s=42, color="0.6")
        ax.set_title(f"unclassified character (delta, lambda) = ({delta}, {lam})")
    else:
        groups: dict = {}
        for kl in dec.lattice_points(kmax):
            groups.setdefault(dec.region_of(delta, lam, *kl), []).append(kl)
        order = [t for t in (dec.V_H, dec.Q_P, dec.Q_M,
                             dec.V_FIN, dec.V_DISC_P, dec.V_DISC_M) if t in groups]
        for tag in order:
            pts = groups[tag]
            ax.scatter([k for k, _ in pts], [l for _, l in pts], marker="s", s=46,
                       color=_GRAYS[_shade(tag)], edgecolors="0.15", linewidths=0.4,
                       label=tag)
        for j, n in dec.lowest_ktype_table(delta, lam).values():
            k, l = 2 * j, Fraction(2, 3) * (n + delta)
            ax.annotate(f"({_fmt_frac(j)}, {_fmt_frac(n)})",
                        (float(k), float(l)), textcoords="offset points",
                        xytext=(6, 6), fontsize=8)
        _draw_walls(ax, chamber, delta, lam, kmax)
        ax.legend(loc="upper left", fontsize=8, framealpha=0.9)
        ax.set_title(f"chamber {chamber}: (delta, lambda) = ({delta}, {lam})")
    ax.set_xlabel("k")
    ax.set_ylabel("l")
    ax.set_xlim(-0.8, kmax + 0.8)
    ax.set_ylim(-kmax - 0.8, kmax + 0.8)
    ax.set_aspect("equal")
    ax.grid(True, linewidth=0.3, alpha=0.5)
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
    return path


def _draw_walls(ax, chamber: str, delta: int, lam: int, kmax: int):
    """Boundary lines of the subquotient regions."""
    import numpy as np

    ks = np.array([-1.0, kmax + 1.0])
    cuts = []
    if chamber == "I1":
        cuts = [("sum", lam + delta), ("diff", lam - delta)]
    elif chamber == "I2":
        cuts = [("sum", -lam + delta), ("diff", -lam - delta)]
    elif chamber in ("II1", "II2"):
        cuts = [("sum", delta - lam), ("sum", delta + lam)]
    else:
        cuts = [("diff", -lam - delta), ("diff", lam - delta)]
    for kind, c in cuts:
        if kind == "sum":  # k + l = c
            ax.plot(ks, c - ks, linewidth=0.9, color="0.3", linestyle="--")
        else:  # k - l = c
            ax.plot(ks, ks - c, linewidth=0.9, color="0.3", linestyle="--")
