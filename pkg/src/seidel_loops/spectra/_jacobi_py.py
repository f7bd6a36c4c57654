"""Pure-Python cyclic Jacobi kernel (fallback for the compiled extension).

Operates on nested lists, which beats per-element numpy indexing for the
small orders the exhaustive scans use.
"""
from math import sqrt


def _off_norm(a, n):
    s = 0.0
    for p in range(n - 1):
        row = a[p]
        for q in range(p + 1, n):
            s += row[q] * row[q]
    return sqrt(2.0 * s)


def jacobi_kernel(m, v, tol, max_sweeps):
    """Diagonalize the symmetric float64 array ``m`` in place.

    ``v`` is either ``None`` or an identity array that accumulates the
    rotations (``m_in = v @ diag(m_out) @ v.T``).  Sweeps stop once the
    off-diagonal Frobenius norm is ``<= tol``.  Returns the number of sweeps
    performed, or -1 if ``max_sweeps`` was exhausted.
    """
    n = m.shape[0]
    a = m.tolist()
    vv = v.tolist() if v is not None else None
    done = -1
    for sweep in range(max_sweeps + 1):
        if _off_norm(a, n) <= tol:
            done = sweep
            break
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p][p] -= t * apq
                a[q][q] += t * apq
                a[p][q] = 0.0
                a[q][p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp = a[r][p]
                    arq = a[r][q]
                    nrp = arp - s * (arq + tau * arp)
                    nrq = arq + s * (arp - tau * arq)
                    a[r][p] = nrp
                    a[p][r] = nrp
                    a[r][q] = nrq
                    a[q][r] = nrq
                if vv is not None:
                    for r in range(n):
                        row = vv[r]
                        vrp = row[p]
                        vrq = row[q]
                        row[p] = vrp - s * (vrq + tau * vrp)
                        row[q] = vrq + s * (vrp - tau * vrq)
    m[:, :] = a
    if v is not None:
        v[:, :] = vv
    return done
