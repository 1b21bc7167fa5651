"""NumPy implementation of the batch kernel (fallback for the Cython module)."""
import numpy as np

from ._fields import FIELDS

ENTROPY_CLAMP = 1e-9
PHYSICAL_EPS = 1e-12


def entropy_f(x):
    x = np.asarray(x, dtype=float)
    bad = ~(x >= 1.0 - ENTROPY_CLAMP)
    h = 0.5 * (np.maximum(x, 1.0) - 1.0)
    pos = h > 0.0
    safe_h = np.where(pos, h, 1.0)
    out = np.where(pos, np.log1p(h) + h * np.log1p(1.0 / safe_h), 0.0)
    return np.where(bad, np.nan, out)


def _gsym(n, m, c):
    s = np.hypot(n - m, 2.0 * c)
    upper = (n - m + s) / (2.0 * c)
    lower = 2.0 * c / (m - n + s)
    g = np.where(n >= m, upper, lower)
    return np.where(c == 0.0, np.nan, g)


def _gain_form(n, m, c, g):
    return (n - 2.0 * g * c + g * g * m) / (1.0 + g * g)


def evaluate_sts(n, m, c, out):
    """Fill ``out[:, k]`` with field ``FIELDS[k]`` for every ``(n, m, c)``."""
    with np.errstate(all="ignore"):
        det_block = n * m - c * c
        ent_ppt = det_block * det_block + 1.0 - (n * n + m * m + 2.0 * c * c)
        duan = 0.5 * (n + m - 2.0 * c)
        e_ab = n - c * c / m
        e_ba = m - c * c / n
        g_sym_ab = _gsym(n, m, c)
        g_sym_ba = _gsym(m, n, c)
        product = c == 0.0
        gain_ab = np.where(product, np.minimum(n, m), _gain_form(n, m, c, g_sym_ab))
        gain_ba = np.where(product, np.minimum(n, m), _gain_form(m, n, c, g_sym_ba))

        gap = np.abs(n - m)
        prod = (n + m - 2.0 * c) * (n + m + 2.0 * c)
        s = np.sqrt(prod)
        d_plus = np.where(product, np.maximum(n, m), 0.5 * (s + gap))
        d_minus = np.where(product, np.minimum(n, m), 0.5 * np.abs(s - gap))
        delta_pt = n * n + m * m + 2.0 * c * c
        root_pt = (n + m) * np.sqrt((n - m) * (n - m) + 4.0 * c * c)
        d_minus_pt = np.sqrt(np.maximum(0.0, 0.5 * (delta_pt - np.abs(root_pt))))

        f_plus = entropy_f(d_plus)
        f_minus = entropy_f(d_minus)
        f_n = entropy_f(n)
        f_m = entropy_f(m)
        z_ab = (n + m * n - c * c) / (m + 1.0)
        z_ba = (m + n * m - c * c) / (n + 1.0)
        # product states: both conditional entropies equal the local one
        s_ab = np.where(product, f_n, f_plus + f_minus - f_m)
        h_ab = np.where(product, f_n, entropy_f(z_ab))
        s_ba = np.where(product, f_m, f_plus + f_minus - f_n)
        h_ba = np.where(product, f_m, entropy_f(z_ba))

        physical = (n > 0.0) & (m > 0.0) & (det_block > 0.0) & (d_minus >= 1.0 - PHYSICAL_EPS)

        columns = {
            "ent_ppt": ent_ppt,
            "duan": duan,
            "e_ab": e_ab,
            "e_ba": e_ba,
            "g_ab_opt": c / m,
            "g_ba_opt": c / n,
            "g_sym_ab": g_sym_ab,
            "g_sym_ba": g_sym_ba,
            "ent_gain_sym_ab": gain_ab,
            "ent_gain_sym_ba": gain_ba,
            "d_plus": d_plus,
            "d_minus": d_minus,
            "d_minus_pt": d_minus_pt,
            "s_cond_ab": s_ab,
            "h_cond_ab": h_ab,
            "d_ab": h_ab - s_ab,
            "s_cond_ba": s_ba,
            "h_cond_ba": h_ba,
            "d_ba": h_ba - s_ba,
            "physical": physical.astype(float),
        }
        for k, name in enumerate(FIELDS):
            out[:, k] = columns[name]
