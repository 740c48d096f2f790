#pragma once

#include "ratlab/rational.hpp"

namespace ratlab {

/// D_n(z) = 1 + z + ... + z^{n-1}.
RationalFunction dirichlet(int n);

/// b_{-r}' * sum_{k=0}^{n-2} b_{-r}^k with b_{-r}(z) = (-r - z)/(1 + rz).
/// Poles: -1/r with multiplicity n.
RationalFunction testfunc_f(int n, double r);

/// b_{-r}' * (sum_{k=0}^{N} b_{-r}^k)^2 with N = floor((n-2)/2), n >= 4.
/// Poles: -1/r with multiplicity 2N + 2 <= n.
RationalFunction testfunc_g(int n, double r);
int testfunc_g_order(int n);

/// (1 - rz)^{-1} b_r^{n-1}; pole 1/r with multiplicity n.
RationalFunction testfunc_h(int n, double r);

/// (1 + rz)^{-1} sum_{k=0}^{n-1} b_{-r}^k, an orthogonal sum in L^2 with
/// ||f||_2^2 = n/(1 - r^2) and ||f||_inf = f(-1) = n/(1 - r).
RationalFunction nikolskii_family(int n, double r);

}  // namespace ratlab
