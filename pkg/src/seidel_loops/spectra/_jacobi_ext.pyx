# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi kernel; same contract as ``_jacobi_py.jacobi_kernel``."""
from libc.math cimport sqrt, fabs


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) nogil:
    cdef Py_ssize_t p, q
    cdef double s = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            s += a[p, q] * a[p, q]
    return sqrt(2.0 * s)


cdef int _sweeps(double[:, ::1] a, double[:, ::1] v, bint want_v,
                 double tol, int max_sweeps) nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, r
    cdef int sweep
    cdef double apq, theta, t, c, s, tau, arp, arq, vrp, vrq
    for sweep in range(max_sweeps + 1):
        if _off_norm(a, n) <= tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp = a[r, p]
                    arq = a[r, q]
                    a[r, p] = arp - s * (arq + tau * arp)
                    a[p, r] = a[r, p]
                    a[r, q] = arq + s * (arp - tau * arq)
                    a[q, r] = a[r, q]
                if want_v:
                    for r in range(n):
                        vrp = v[r, p]
                        vrq = v[r, q]
                        v[r, p] = vrp - s * (vrq + tau * vrp)
                        v[r, q] = vrq + s * (vrp - tau * vrq)
    return -1


def jacobi_kernel(double[:, ::1] m, v, double tol, int max_sweeps):
    cdef double[:, ::1] vv
    cdef int done
    if v is None:
        vv = m  # placeholder, never touched
        with nogil:
            done = _sweeps(m, vv, False, tol, max_sweeps)
    else:
        vv = v
        with nogil:
            done = _sweeps(m, vv, True, tol, max_sweeps)
    return done
