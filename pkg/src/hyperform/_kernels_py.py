"""Pure-Python versions of the numeric kernels (reference and fallback)."""

from math import ceil, floor, log


def phi_grad_hess(ps, qs, x, y, n_total):
    """Value, gradient and Hessian of sum log|z - alpha|^2 - n log y at z = x + iy."""
    phi = -n_total * log(y)
    gx = 0.0
    gy = -n_total / y
    hxx = 0.0
    hxy = 0.0
    hyy = n_total / (y * y)
    for p, q in zip(ps, qs):
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


def box_scan(c1, c2, x1, y1, x2, y2, s1, s2, r1, r2):
    """Best d = u + v*a with N(|cz + d|)^2 < 1 inside the box, or None.

    (s1, s2) are the embeddings of a, (r1, r2) the half-widths of the box
    around -c_m x_m.  Returns ((value, u, v) or None, count) where value is
    the squared norm and ties go to the smaller (u, v).
    """
    m1 = -c1 * x1
    m2 = -c2 * x2
    w1 = c1 * y1
    w2 = c2 * y2
    w1 *= w1
    w2 *= w2
    ds = s1 - s2
    lo = (m1 - r1) - (m2 + r2)
    hi = (m1 + r1) - (m2 - r2)
    if ds < 0:
        lo, hi = hi, lo
    vlo = int(ceil(lo / ds))
    vhi = int(floor(hi / ds))
    best = None
    count = 0
    for v in range(vlo, vhi + 1):
        ulo = max(m1 - r1 - v * s1, m2 - r2 - v * s2)
        uhi = min(m1 + r1 - v * s1, m2 + r2 - v * s2)
        for u in range(int(ceil(ulo)), int(floor(uhi)) + 1):
            count += 1
            e1 = u + v * s1 - m1
            e2 = u + v * s2 - m2
            val = (e1 * e1 + w1) * (e2 * e2 + w2)
            if val < 1.0 and (best is None or (val, u, v) < best[:3]):
                best = (val, u, v)
    if best is None:
        return None, count
    return best, count
