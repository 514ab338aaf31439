# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled drive kernels: closed-form 2x2 segment propagators.

Same math as _kernels_py (which documents it), with the per-momentum
loop in C.  Complex cosh/sinh/sqrt are expanded into real libm calls;
the glibc complex functions cost several times more than the expansion.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, exp, sqrt

cdef extern from "math.h" nogil:
    void sincos(double x, double *sin_out, double *cos_out)

cnp.import_array()

BACKEND = "cython"

ctypedef struct Segment:
    double a_re, a_im      # A-row coupling t_left + v e^{-ik}
    double b_re, b_im      # B-row coupling t_right + v e^{+ik}
    double c_re, c_im      # cosh(mu)
    double s_re, s_im      # sinh(mu)/mu


cdef inline void _segment(double ck, double sk, double w, double gamma,
                          double v, double t, Segment *out) nogil:
    cdef double a_re = (w + gamma / 2.0) + v * ck
    cdef double a_im = -v * sk
    cdef double b_re = (w - gamma / 2.0) + v * ck
    cdef double b_im = v * sk
    # mu^2 = -a b t^2
    cdef double t2 = t * t
    cdef double m_re = -(a_re * b_re - a_im * b_im) * t2
    cdef double m_im = -(a_re * b_im + a_im * b_re) * t2
    out.a_re = a_re
    out.a_im = a_im
    out.b_re = b_re
    out.b_im = b_im
    cdef double r, p, q, mag2, ep, ch, sh, cq, sq, sh_re, sh_im, inv
    r = sqrt(m_re * m_re + m_im * m_im)  # arguments are O(1), no overflow risk
    if r < 1e-12:
        # sinh(mu)/mu = 1 + mu^2/6 + O(mu^4), cosh(mu) = 1 + mu^2/2
        out.c_re = 1.0 + m_re / 2.0
        out.c_im = m_im / 2.0
        out.s_re = 1.0 + m_re / 6.0
        out.s_im = m_im / 6.0
        return
    # mu = p + i q = sqrt(m), principal branch (either branch works:
    # cosh and sinh(mu)/mu are even in mu)
    p = sqrt((r + m_re) / 2.0)
    q = sqrt((r - m_re) / 2.0)
    if m_im < 0.0:
        q = -q
    ep = exp(p)
    ch = 0.5 * (ep + 1.0 / ep)
    sh = 0.5 * (ep - 1.0 / ep)
    sincos(q, &sq, &cq)
    out.c_re = ch * cq
    out.c_im = sh * sq
    sh_re = sh * cq
    sh_im = ch * sq
    # divide by mu
    mag2 = p * p + q * q
    inv = 1.0 / mag2
    out.s_re = (sh_re * p + sh_im * q) * inv
    out.s_im = (sh_im * p - sh_re * q) * inv


def drive_unitaries(ks, double w, double gamma, double v1, double v2,
                    double t1, double t2):
    """One-period 2x2 evolution operators for an array of momenta."""
    cdef double[::1] kv = np.ascontiguousarray(ks, dtype=np.float64)
    cdef Py_ssize_t n = kv.shape[0]
    out_arr = np.empty((n, 2, 2), dtype=np.complex128)
    cdef double complex[:, :, ::1] out = out_arr
    cdef Py_ssize_t i
    cdef Segment s1, s2
    cdef double ck, sk
    cdef double complex c1, c2, e1_01, e1_10, e2_01, e2_10
    with nogil:
        for i in range(n):
            sincos(kv[i], &sk, &ck)
            _segment(ck, sk, w, gamma, v1, t1, &s1)
            _segment(ck, sk, w, gamma, v2, t2, &s2)
            c1 = s1.c_re + 1j * s1.c_im
            c2 = s2.c_re + 1j * s2.c_im
            # -i t a sinhc etc.
            e1_01 = (t1 * (s1.a_re + 1j * s1.a_im)) * (s1.s_re + 1j * s1.s_im) * (-1j)
            e1_10 = (t1 * (s1.b_re + 1j * s1.b_im)) * (s1.s_re + 1j * s1.s_im) * (-1j)
            e2_01 = (t2 * (s2.a_re + 1j * s2.a_im)) * (s2.s_re + 1j * s2.s_im) * (-1j)
            e2_10 = (t2 * (s2.b_re + 1j * s2.b_im)) * (s2.s_re + 1j * s2.s_im) * (-1j)
            out[i, 0, 0] = c2 * c1 + e2_01 * e1_10
            out[i, 0, 1] = c2 * e1_01 + e2_01 * c1
            out[i, 1, 0] = e2_10 * c1 + c2 * e1_10
            out[i, 1, 1] = e2_10 * e1_01 + c2 * c1
    return out_arr


def drive_det_shift(ks, double w, double gamma, double v1, double v2,
                    double t1, double t2, double zeta):
    """det(U(k) - zeta I) for an array of momenta (det U = 1 exactly).

    det(U - zeta) = 1 + zeta^2 - zeta tr U with
    tr U = 2 c1 c2 - t1 t2 (a2 b1 + a1 b2) s1 s2.
    """
    cdef double[::1] kv = np.ascontiguousarray(ks, dtype=np.float64)
    cdef Py_ssize_t n = kv.shape[0]
    out_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef Py_ssize_t i
    cdef Segment s1, s2
    cdef double ck, sk, shift
    cdef double cross_re, cross_im, ss_re, ss_im, tr_re, tr_im, cc_re, cc_im
    shift = 1.0 + zeta * zeta
    with nogil:
        for i in range(n):
            sincos(kv[i], &sk, &ck)
            _segment(ck, sk, w, gamma, v1, t1, &s1)
            _segment(ck, sk, w, gamma, v2, t2, &s2)
            # a2 b1 + a1 b2
            cross_re = (s2.a_re * s1.b_re - s2.a_im * s1.b_im
                        + s1.a_re * s2.b_re - s1.a_im * s2.b_im)
            cross_im = (s2.a_re * s1.b_im + s2.a_im * s1.b_re
                        + s1.a_re * s2.b_im + s1.a_im * s2.b_re)
            # s1 s2
            ss_re = s1.s_re * s2.s_re - s1.s_im * s2.s_im
            ss_im = s1.s_re * s2.s_im + s1.s_im * s2.s_re
            # 2 c1 c2
            cc_re = 2.0 * (s1.c_re * s2.c_re - s1.c_im * s2.c_im)
            cc_im = 2.0 * (s1.c_re * s2.c_im + s1.c_im * s2.c_re)
            tr_re = cc_re - t1 * t2 * (cross_re * ss_re - cross_im * ss_im)
            tr_im = cc_im - t1 * t2 * (cross_re * ss_im + cross_im * ss_re)
            out[i] = (shift - zeta * tr_re) - 1j * (zeta * tr_im)
    return out_arr
