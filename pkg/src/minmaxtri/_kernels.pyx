# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled geometric kernels.

Same API and same results as _kernels_py: orientation signs are exact
(floating-point filter plus an adaptive-precision exact stage, the classic
expansion arithmetic), angles are double precision via atan2.
"""

from libc.math cimport atan2, fabs

cdef double _epsilon, _splitter
cdef double _ccwerrbound_a, _ccwerrbound_b, _ccwerrbound_c, _resulterrbound

cdef void _init_constants():
    global _epsilon, _splitter
    global _ccwerrbound_a, _ccwerrbound_b, _ccwerrbound_c, _resulterrbound
    cdef double half = 0.5
    cdef double check = 1.0, lastcheck
    cdef bint every_other = True
    _epsilon = 1.0
    _splitter = 1.0
    while True:
        lastcheck = check
        _epsilon *= half
        if every_other:
            _splitter *= 2.0
        every_other = not every_other
        check = 1.0 + _epsilon
        if check == 1.0 or check == lastcheck:
            break
    _splitter += 1.0
    _resulterrbound = (3.0 + 8.0 * _epsilon) * _epsilon
    _ccwerrbound_a = (3.0 + 16.0 * _epsilon) * _epsilon
    _ccwerrbound_b = (2.0 + 12.0 * _epsilon) * _epsilon
    _ccwerrbound_c = (9.0 + 64.0 * _epsilon) * _epsilon * _epsilon

_init_constants()


cdef inline void _two_sum(double a, double b, double* x, double* y):
    cdef double bvirt, avirt, bround, around
    x[0] = a + b
    bvirt = x[0] - a
    avirt = x[0] - bvirt
    bround = b - bvirt
    around = a - avirt
    y[0] = around + bround


cdef inline void _fast_two_sum(double a, double b, double* x, double* y):
    cdef double bvirt
    x[0] = a + b
    bvirt = x[0] - a
    y[0] = b - bvirt


cdef inline void _two_diff(double a, double b, double* x, double* y):
    cdef double bvirt, avirt, bround, around
    x[0] = a - b
    bvirt = a - x[0]
    avirt = x[0] + bvirt
    bround = bvirt - b
    around = a - avirt
    y[0] = around + bround


cdef inline double _two_diff_tail(double a, double b, double x):
    cdef double bvirt = a - x
    cdef double avirt = x + bvirt
    cdef double bround = bvirt - b
    cdef double around = a - avirt
    return around + bround


cdef inline void _split(double a, double* hi, double* lo):
    cdef double c = _splitter * a
    cdef double abig = c - a
    hi[0] = c - abig
    lo[0] = a - hi[0]


cdef inline void _two_product(double a, double b, double* x, double* y):
    cdef double ahi, alo, bhi, blo, err1, err2, err3
    x[0] = a * b
    _split(a, &ahi, &alo)
    _split(b, &bhi, &blo)
    err1 = x[0] - (ahi * bhi)
    err2 = err1 - (alo * bhi)
    err3 = err2 - (ahi * blo)
    y[0] = (alo * blo) - err3


cdef inline void _two_one_diff(double a1, double a0, double b,
                               double* x2, double* x1, double* x0):
    cdef double i
    _two_diff(a0, b, &i, x0)
    _two_sum(a1, i, x2, x1)


cdef inline void _two_two_diff(double a1, double a0, double b1, double b0,
                               double* x3, double* x2, double* x1, double* x0):
    cdef double j, zero
    _two_one_diff(a1, a0, b0, &j, &zero, x0)
    _two_one_diff(j, zero, b1, x3, x2, x1)


cdef int _fast_expansion_sum_zeroelim(int elen, double* e, int flen,
                                      double* f, double* h):
    cdef double Q, Qnew, hh, enow, fnow
    cdef int eindex = 0, findex = 0, hindex = 0
    enow = e[0]
    fnow = f[0]
    if (fnow > enow) == (fnow > -enow):
        Q = enow
        eindex += 1
        enow = e[eindex] if eindex < elen else 0.0
    else:
        Q = fnow
        findex += 1
        fnow = f[findex] if findex < flen else 0.0
    if eindex < elen and findex < flen:
        if (fnow > enow) == (fnow > -enow):
            _fast_two_sum(enow, Q, &Qnew, &hh)
            eindex += 1
            enow = e[eindex] if eindex < elen else 0.0
        else:
            _fast_two_sum(fnow, Q, &Qnew, &hh)
            findex += 1
            fnow = f[findex] if findex < flen else 0.0
        Q = Qnew
        if hh != 0.0:
            h[hindex] = hh
            hindex += 1
        while eindex < elen and findex < flen:
            if (fnow > enow) == (fnow > -enow):
                _two_sum(Q, enow, &Qnew, &hh)
                eindex += 1
                enow = e[eindex] if eindex < elen else 0.0
            else:
                _two_sum(Q, fnow, &Qnew, &hh)
                findex += 1
                fnow = f[findex] if findex < flen else 0.0
            Q = Qnew
            if hh != 0.0:
                h[hindex] = hh
                hindex += 1
    while eindex < elen:
        _two_sum(Q, enow, &Qnew, &hh)
        eindex += 1
        enow = e[eindex] if eindex < elen else 0.0
        Q = Qnew
        if hh != 0.0:
            h[hindex] = hh
            hindex += 1
    while findex < flen:
        _two_sum(Q, fnow, &Qnew, &hh)
        findex += 1
        fnow = f[findex] if findex < flen else 0.0
        Q = Qnew
        if hh != 0.0:
            h[hindex] = hh
            hindex += 1
    if Q != 0.0 or hindex == 0:
        h[hindex] = Q
        hindex += 1
    return hindex


cdef double _orient2d_adapt(double ax, double ay, double bx, double by,
                            double cx, double cy, double detsum):
    cdef double acx = ax - cx
    cdef double bcx = bx - cx
    cdef double acy = ay - cy
    cdef double bcy = by - cy
    cdef double detleft, detlefttail, detright, detrighttail
    cdef double B[4]
    cdef double C1[8]
    cdef double C2[12]
    cdef double D[16]
    cdef double u[4]
    cdef double det, errbound
    cdef double acxtail, acytail, bcxtail, bcytail
    cdef double s1, s0, t1, t0
    cdef int c1len, c2len, dlen

    _two_product(acx, bcy, &detleft, &detlefttail)
    _two_product(acy, bcx, &detright, &detrighttail)
    _two_two_diff(detleft, detlefttail, detright, detrighttail,
                  &B[3], &B[2], &B[1], &B[0])

    det = B[0] + B[1] + B[2] + B[3]
    errbound = _ccwerrbound_b * detsum
    if det >= errbound or -det >= errbound:
        return det

    acxtail = _two_diff_tail(ax, cx, acx)
    bcxtail = _two_diff_tail(bx, cx, bcx)
    acytail = _two_diff_tail(ay, cy, acy)
    bcytail = _two_diff_tail(by, cy, bcy)
    if acxtail == 0.0 and acytail == 0.0 and bcxtail == 0.0 and bcytail == 0.0:
        return det

    errbound = _ccwerrbound_c * detsum + _resulterrbound * fabs(det)
    det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail)
    if det >= errbound or -det >= errbound:
        return det

    _two_product(acxtail, bcy, &s1, &s0)
    _two_product(acytail, bcx, &t1, &t0)
    _two_two_diff(s1, s0, t1, t0, &u[3], &u[2], &u[1], &u[0])
    c1len = _fast_expansion_sum_zeroelim(4, B, 4, u, C1)

    _two_product(acx, bcytail, &s1, &s0)
    _two_product(acy, bcxtail, &t1, &t0)
    _two_two_diff(s1, s0, t1, t0, &u[3], &u[2], &u[1], &u[0])
    c2len = _fast_expansion_sum_zeroelim(c1len, C1, 4, u, C2)

    _two_product(acxtail, bcytail, &s1, &s0)
    _two_product(acytail, bcxtail, &t1, &t0)
    _two_two_diff(s1, s0, t1, t0, &u[3], &u[2], &u[1], &u[0])
    dlen = _fast_expansion_sum_zeroelim(c2len, C2, 4, u, D)

    return D[dlen - 1]


cdef int _orient2d_sign(double ax, double ay, double bx, double by,
                        double cx, double cy):
    cdef double detleft = (ax - cx) * (by - cy)
    cdef double detright = (ay - cy) * (bx - cx)
    cdef double det = detleft - detright
    cdef double detsum, errbound

    if detleft > 0.0:
        if detright <= 0.0:
            return (det > 0.0) - (det < 0.0)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return (det > 0.0) - (det < 0.0)
        detsum = -detleft - detright
    else:
        return (det > 0.0) - (det < 0.0)

    errbound = _ccwerrbound_a * detsum
    if det >= errbound or -det >= errbound:
        return (det > 0.0) - (det < 0.0)

    det = _orient2d_adapt(ax, ay, bx, by, cx, cy, detsum)
    return (det > 0.0) - (det < 0.0)


def orient2d(double ax, double ay, double bx, double by, double cx, double cy):
    """Exact sign of the signed area of triangle (a, b, c): 1, 0 or -1."""
    return _orient2d_sign(ax, ay, bx, by, cx, cy)


def on_open_segment(double ax, double ay, double bx, double by,
                    double px, double py):
    """True iff p lies strictly inside the open segment (a, b)."""
    if _orient2d_sign(ax, ay, bx, by, px, py) != 0:
        return False
    if ax != bx:
        return (ax < px < bx) or (bx < px < ax)
    return (ay < py < by) or (by < py < ay)


def segments_cross(double ax, double ay, double bx, double by,
                   double cx, double cy, double dx, double dy):
    """True iff open segments (a, b) and (c, d) properly cross."""
    cdef int o1 = _orient2d_sign(ax, ay, bx, by, cx, cy)
    cdef int o2 = _orient2d_sign(ax, ay, bx, by, dx, dy)
    if o1 * o2 >= 0:
        return False
    cdef int o3 = _orient2d_sign(cx, cy, dx, dy, ax, ay)
    cdef int o4 = _orient2d_sign(cx, cy, dx, dy, bx, by)
    return o3 * o4 < 0


def strictly_inside_triangle(double px, double py, double ax, double ay,
                             double bx, double by, double cx, double cy):
    """True iff p is strictly interior to triangle (a, b, c)."""
    cdef int s1 = _orient2d_sign(ax, ay, bx, by, px, py)
    cdef int s2 = _orient2d_sign(bx, by, cx, cy, px, py)
    cdef int s3 = _orient2d_sign(cx, cy, ax, ay, px, py)
    return (s1 > 0 and s2 > 0 and s3 > 0) or (s1 < 0 and s2 < 0 and s3 < 0)


cdef inline double _corner_angle(double ux, double uy, double vx, double vy):
    return atan2(fabs(ux * vy - uy * vx), ux * vx + uy * vy)


def triangle_angles(double ax, double ay, double bx, double by,
                    double cx, double cy):
    """Interior angles at a, b, c of a nondegenerate triangle, in radians."""
    cdef double aa = _corner_angle(bx - ax, by - ay, cx - ax, cy - ay)
    cdef double bb = _corner_angle(cx - bx, cy - by, ax - bx, ay - by)
    cdef double cc = _corner_angle(ax - cx, ay - cy, bx - cx, by - cy)
    return (aa, bb, cc)


def triangle_max_angle(double ax, double ay, double bx, double by,
                       double cx, double cy):
    cdef double aa = _corner_angle(bx - ax, by - ay, cx - ax, cy - ay)
    cdef double bb = _corner_angle(cx - bx, cy - by, ax - bx, ay - by)
    cdef double cc = _corner_angle(ax - cx, ay - cy, bx - cx, by - cy)
    cdef double m = aa
    if bb > m:
        m = bb
    if cc > m:
        m = cc
    return m
