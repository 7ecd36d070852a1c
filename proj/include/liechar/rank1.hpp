#pragma once

#include "liechar/dirac.hpp"

namespace liechar {

// Element of Q(sqrt2, i): (a + b*sqrt2) + i*(c + d*sqrt2), all exact.
struct QSqrt2I {
    Rat a, b, c, d;

    QSqrt2I() : a(0), b(0), c(0), d(0) {}
    explicit QSqrt2I(Rat ra) : a(std::move(ra)), b(0), c(0), d(0) {}
    static QSqrt2I sqrt2() {
        QSqrt2I x;
        x.b = 1;
        return x;
    }
    static QSqrt2I i() {
        QSqrt2I x;
        x.c = 1;
        return x;
    }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }
    QSqrt2I conj() const;  // complex conjugate
    QSqrt2I inverse() const;

    friend QSqrt2I operator+(const QSqrt2I& x, const QSqrt2I& y);
    friend QSqrt2I operator-(const QSqrt2I& x, const QSqrt2I& y);
    friend QSqrt2I operator-(const QSqrt2I& x);
    friend QSqrt2I operator*(const QSqrt2I& x, const QSqrt2I& y);
    friend bool operator==(const QSqrt2I& x, const QSqrt2I& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    std::string str() const;
};

// Explicit check of the rank-1 (sl2, Cartan) Dirac operator: assembles the
// (2n+2) x (2n+2) matrix of D = Z1 (x) Z1 + Z2 (x) Z2 on V_n (x) S over
// Q(sqrt2, i), with Z1 = (e+f)/sqrt2, Z2 = i(e-f)/sqrt2, and compares the
// matrix-level D^2 and ker D against the character-level operations.
struct Rank1Report {
    int n = 0;
    int kernel_dimension = 0;
    std::vector<Weight> kernel_weights;       // rank-1 weights, sorted
    bool kernel_weight_homogeneous = false;   // each kernel vector sits in one weight space
    bool d2_weight_block_scalar = false;      // D^2 acts as a scalar on each weight space
    bool d2_matches_spectrum = false;         // multiset {(weight, eigenvalue)} agreement
    bool kernel_matches_kostant = false;
    bool kernel_inside_d2_kernel = false;     // ker D = ker D^2 here

    bool ok() const {
        return kernel_dimension == 2 && kernel_weight_homogeneous && d2_weight_block_scalar &&
               d2_matches_spectrum && kernel_matches_kostant && kernel_inside_d2_kernel;
    }
};

// Requires n <= 50.
Rank1Report rank1_matrix_oracle(int n);

}  // namespace liechar
