# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled batch kernel; mirrors ``_kernels_py.evaluate_sts`` field for field."""
from libc.math cimport NAN, fabs, hypot, isnan, log1p, sqrt

cdef double ENTROPY_CLAMP = 1e-9
cdef double PHYSICAL_EPS = 1e-12


cdef inline double entropy_f(double x) noexcept nogil:
    cdef double h
    if isnan(x) or x < 1.0 - ENTROPY_CLAMP:
        return NAN
    if x <= 1.0:
        return 0.0
    h = 0.5 * (x - 1.0)
    return log1p(h) + h * log1p(1.0 / h)


cdef inline double gsym(double n, double m, double c) noexcept nogil:
    cdef double s
    if c == 0.0:
        return NAN
    s = hypot(n - m, 2.0 * c)
    if n >= m:
        return (n - m + s) / (2.0 * c)
    return 2.0 * c / (m - n + s)


cdef inline double gain_form(double n, double m, double c, double g) noexcept nogil:
    return (n - 2.0 * g * c + g * g * m) / (1.0 + g * g)


def evaluate_sts(const double[::1] n_arr, const double[::1] m_arr,
                 const double[::1] c_arr, double[:, ::1] out):
    """Fill ``out[i, :]`` with the measures of state ``i`` (layout: ``_fields.FIELDS``)."""
    cdef Py_ssize_t i, size = n_arr.shape[0]
    cdef double n, m, c, det_block, gab, gba, gap, prod, s, dp, dm, delta_pt, root_pt
    cdef double fp, fm, z_ab, z_ba, s_ab, h_ab, s_ba, h_ba, tmp
    if m_arr.shape[0] != size or c_arr.shape[0] != size or out.shape[0] != size:
        raise ValueError("input and output lengths differ")
    if out.shape[1] < 20:
        raise ValueError("output needs 20 columns")
    with nogil:
        for i in range(size):
            n = n_arr[i]
            m = m_arr[i]
            c = c_arr[i]
            det_block = n * m - c * c
            out[i, 0] = det_block * det_block + 1.0 - (n * n + m * m + 2.0 * c * c)
            out[i, 1] = 0.5 * (n + m - 2.0 * c)
            out[i, 2] = n - c * c / m
            out[i, 3] = m - c * c / n
            out[i, 4] = c / m
            out[i, 5] = c / n
            gab = gsym(n, m, c)
            gba = gsym(m, n, c)
            out[i, 6] = gab
            out[i, 7] = gba
            if c == 0.0:
                tmp = n if n < m else m
                out[i, 8] = tmp
                out[i, 9] = tmp
            else:
                out[i, 8] = gain_form(n, m, c, gab)
                out[i, 9] = gain_form(m, n, c, gba)

            gap = fabs(n - m)
            prod = (n + m - 2.0 * c) * (n + m + 2.0 * c)
            s = sqrt(prod)
            if c == 0.0:
                dp = n if n > m else m
                dm = m if n > m else n
            else:
                dp = 0.5 * (s + gap)
                dm = 0.5 * fabs(s - gap)
            out[i, 10] = dp
            out[i, 11] = dm
            delta_pt = n * n + m * m + 2.0 * c * c
            root_pt = (n + m) * sqrt((n - m) * (n - m) + 4.0 * c * c)
            tmp = 0.5 * (delta_pt - fabs(root_pt))
            out[i, 12] = sqrt(tmp) if tmp > 0.0 else 0.0

            fp = entropy_f(dp)
            fm = entropy_f(dm)
            if c == 0.0:
                # product states: both conditional entropies equal the local one
                s_ab = entropy_f(n)
                h_ab = s_ab
                s_ba = entropy_f(m)
                h_ba = s_ba
            else:
                z_ab = (n + m * n - c * c) / (m + 1.0)
                z_ba = (m + n * m - c * c) / (n + 1.0)
                s_ab = fp + fm - entropy_f(m)
                h_ab = entropy_f(z_ab)
                s_ba = fp + fm - entropy_f(n)
                h_ba = entropy_f(z_ba)
            out[i, 13] = s_ab
            out[i, 14] = h_ab
            out[i, 15] = h_ab - s_ab
            out[i, 16] = s_ba
            out[i, 17] = h_ba
            out[i, 18] = h_ba - s_ba

            if n > 0.0 and m > 0.0 and det_block > 0.0 and dm >= 1.0 - PHYSICAL_EPS:
                out[i, 19] = 1.0
            else:
                out[i, 19] = 0.0
