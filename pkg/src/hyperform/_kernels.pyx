# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the numeric kernels; same contracts as _kernels_py."""

from libc.math cimport log, ceil, floor


def phi_grad_hess(ps, qs, double x, double y, double n_total):
    cdef Py_ssize_t i, k = len(ps)
    cdef double phi = -n_total * log(y)
    cdef double gx = 0.0, gy = -n_total / y
    cdef double hxx = 0.0, hxy = 0.0, hyy = n_total / (y * y)
    cdef double p, q, dx, dy, D, D2
    for i in range(k):
        p = ps[i]
        q = qs[i]
        dx = x - p
        dy = y - q
        D = dx * dx + dy * dy
        phi += log(D)
        gx += 2.0 * dx / D
        gy += 2.0 * dy / D
        D2 = D * D
        hxx += 2.0 / D - 4.0 * dx * dx / D2
        hxy -= 4.0 * dx * dy / D2
        hyy += 2.0 / D - 4.0 * dy * dy / D2
    return phi, gx, gy, hxx, hxy, hyy


def box_scan(double c1, double c2, double x1, double y1, double x2, double y2,
             double s1, double s2, double r1, double r2):
    cdef double m1 = -c1 * x1, m2 = -c2 * x2
    cdef double w1 = (c1 * y1) * (c1 * y1), w2 = (c2 * y2) * (c2 * y2)
    cdef double ds = s1 - s2
    cdef double lo = (m1 - r1) - (m2 + r2), hi = (m1 + r1) - (m2 - r2)
    if ds < 0:
        lo, hi = hi, lo
    cdef long vlo = <long>ceil(lo / ds)
    cdef long vhi = <long>floor(hi / ds)
    cdef long u, v, ulo_i, uhi_i, bu = 0, bv = 0
    cdef long long count = 0
    cdef double ulo, uhi, e1, e2, val, bval = 2.0
    cdef bint found = False
    for v in range(vlo, vhi + 1):
        ulo = max(m1 - r1 - v * s1, m2 - r2 - v * s2)
        uhi = min(m1 + r1 - v * s1, m2 + r2 - v * s2)
        ulo_i = <long>ceil(ulo)
        uhi_i = <long>floor(uhi)
        for u in range(ulo_i, uhi_i + 1):
            count += 1
            e1 = u + v * s1 - m1
            e2 = u + v * s2 - m2
            val = (e1 * e1 + w1) * (e2 * e2 + w2)
            if val < 1.0:
                if (not found) or val < bval or (val == bval and (u < bu or (u == bu and v < bv))):
                    bval = val
                    bu = u
                    bv = v
                    found = True
    if not found:
        return None, count
    return (bval, bu, bv), count
