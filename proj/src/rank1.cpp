#include "liechar/rank1.hpp"

#include <algorithm>

namespace liechar {

QSqrt2I QSqrt2I::conj() const {
    QSqrt2I x = *this;
    x.c = -x.c;
    x.d = -x.d;
    return x;
}

QSqrt2I operator+(const QSqrt2I& x, const QSqrt2I& y) {
    QSqrt2I z;
    z.a = x.a + y.a;
    z.b = x.b + y.b;
    z.c = x.c + y.c;
    z.d = x.d + y.d;
    return z;
}

QSqrt2I operator-(const QSqrt2I& x, const QSqrt2I& y) {
    QSqrt2I z;
    z.a = x.a - y.a;
    z.b = x.b - y.b;
    z.c = x.c - y.c;
    z.d = x.d - y.d;
    return z;
}

QSqrt2I operator-(const QSqrt2I& x) {
    QSqrt2I z;
    z.a = -x.a;
    z.b = -x.b;
    z.c = -x.c;
    z.d = -x.d;
    return z;
}

QSqrt2I operator*(const QSqrt2I& x, const QSqrt2I& y) {
    // (a1 + b1 r + i(c1 + d1 r)) * (a2 + b2 r + i(c2 + d2 r)), r^2 = 2, i^2 = -1.
    QSqrt2I z;
    z.a = x.a * y.a + 2 * x.b * y.b - x.c * y.c - 2 * x.d * y.d;
    z.b = x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c;
    z.c = x.a * y.c + 2 * x.b * y.d + x.c * y.a + 2 * x.d * y.b;
    z.d = x.a * y.d + x.b * y.c + x.c * y.b + x.d * y.a;
    return z;
}

QSqrt2I QSqrt2I::inverse() const {
    // 1/x = conj(x) / (re^2 + im^2) with the norm taken in Q(sqrt2), then
    // rationalized by the sqrt2-conjugate.
    QSqrt2I num = conj();
    // norm = (a + b r)^2 + (c + d r)^2 = (a^2 + 2b^2 + c^2 + 2d^2) + (2ab + 2cd) r
    Rat u = a * a + 2 * b * b + c * c + 2 * d * d;
    Rat v = 2 * a * b + 2 * c * d;
    Rat disc = u * u - 2 * v * v;
    if (disc == 0) throw internal_error("QSqrt2I: inverse of zero");
    // 1/(u + v r) = (u - v r)/(u^2 - 2 v^2)
    QSqrt2I scale;
    scale.a = u / disc;
    scale.b = -v / disc;
    return num * scale;
}

std::string QSqrt2I::str() const {
    return "(" + format_rational(a) + " + " + format_rational(b) + "*sqrt2 + i*(" +
           format_rational(c) + " + " + format_rational(d) + "*sqrt2))";
}

namespace {

using FMat = std::vector<std::vector<QSqrt2I>>;

FMat zeros(int r, int c) { return FMat(r, std::vector<QSqrt2I>(c)); }

FMat mul(const FMat& x, const FMat& y) {
    const int r = static_cast<int>(x.size());
    const int k = static_cast<int>(y.size());
    const int c = static_cast<int>(y[0].size());
    FMat z = zeros(r, c);
    for (int i = 0; i < r; ++i)
        for (int t = 0; t < k; ++t) {
            if (x[i][t].is_zero()) continue;
            for (int j = 0; j < c; ++j) {
                if (y[t][j].is_zero()) continue;
                z[i][j] = z[i][j] + x[i][t] * y[t][j];
            }
        }
    return z;
}

FMat add(const FMat& x, const FMat& y) {
    FMat z = x;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z[i].size(); ++j) z[i][j] = z[i][j] + y[i][j];
    return z;
}

FMat scale(const QSqrt2I& s, const FMat& x) {
    FMat z = x;
    for (auto& row : z)
        for (auto& e : row) e = s * e;
    return z;
}

FMat kron(const FMat& x, const FMat& y) {
    const int rx = static_cast<int>(x.size()), cx = static_cast<int>(x[0].size());
    const int ry = static_cast<int>(y.size()), cy = static_cast<int>(y[0].size());
    FMat z = zeros(rx * ry, cx * cy);
    for (int i = 0; i < rx; ++i)
        for (int j = 0; j < cx; ++j) {
            if (x[i][j].is_zero()) continue;
            for (int p = 0; p < ry; ++p)
                for (int q = 0; q < cy; ++q) z[i * ry + p][j * cy + q] = x[i][j] * y[p][q];
        }
    return z;
}

// Null space over the field by Gauss-Jordan; returns a basis.
std::vector<std::vector<QSqrt2I>> kernel_basis(FMat m) {
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        QSqrt2I inv = m[r][c].inverse();
        for (int j = 0; j < cols; ++j) m[r][j] = inv * m[r][j];
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            QSqrt2I f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<QSqrt2I>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<QSqrt2I> v(cols);
        v[free] = QSqrt2I(Rat(1));
        for (int p = 0; p < static_cast<int>(pivot_col.size()); ++p)
            v[pivot_col[p]] = -m[p][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Rank1Report rank1_matrix_oracle(int n) {
    if (n < 0 || n > 50) throw validation_error("rank1_matrix_oracle requires 0 <= n <= 50");
    const int dv = n + 1;
    const int dim = 2 * dv;

    // sl2 on V_n: E v_k = k(n+1-k) v_{k-1}, F v_k = v_{k+1}, H v_k = (n-2k) v_k.
    FMat E = zeros(dv, dv), F = zeros(dv, dv), H = zeros(dv, dv);
    for (int k = 0; k < dv; ++k) {
        if (k >= 1) E[k - 1][k] = QSqrt2I(Rat(k) * Rat(n + 1 - k));
        if (k + 1 < dv) F[k + 1][k] = QSqrt2I(Rat(1));
        H[k][k] = QSqrt2I(Rat(n - 2 * k));
    }

    // Clifford module on basis {1, f}: c(e) = -sqrt2 * contraction_e,
    // c(f) = sqrt2 * wedge_f, so that uu' + u'u = -2B(u,u') with B(e,f) = 1.
    const QSqrt2I r2 = QSqrt2I::sqrt2();
    const QSqrt2I im = QSqrt2I::i();
    const QSqrt2I half(Rat(1, 2));
    FMat cE = zeros(2, 2), cF = zeros(2, 2);
    cE[0][1] = -r2;
    cF[1][0] = r2;
    // Clifford relations.
    FMat anti = add(mul(cE, cF), mul(cF, cE));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(anti[i][j] == (i == j ? QSqrt2I(Rat(-2)) : QSqrt2I())))
                throw internal_error("Clifford relation c(e)c(f)+c(f)c(e) = -2 failed");

    // Orthonormal basis Z1 = (e+f)/sqrt2, Z2 = i(e-f)/sqrt2 on both factors.
    const QSqrt2I inv_r2 = half * r2;  // 1/sqrt2
    FMat Z1V = scale(inv_r2, add(E, F));
    FMat Z2V = scale(im * inv_r2, add(E, scale(QSqrt2I(Rat(-1)), F)));
    FMat cZ1 = scale(inv_r2, add(cE, cF));
    FMat cZ2 = scale(im * inv_r2, add(cE, scale(QSqrt2I(Rat(-1)), cF)));
    for (const FMat* cz : {&cZ1, &cZ2}) {
        FMat sq = mul(*cz, *cz);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!(sq[i][j] == (i == j ? QSqrt2I(Rat(-1)) : QSqrt2I())))
                    throw internal_error("Clifford generator does not square to -1");
    }

    FMat D = add(kron(Z1V, cZ1), kron(Z2V, cZ2));
    FMat D2 = mul(D, D);

    // Weights of the basis vectors from H (x) 1 + 1 (x) alpha(H),
    // alpha(H) = -(c(e)c(f) + 1).
    FMat alphaH = zeros(2, 2);
    {
        FMat ef = mul(cE, cF);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                alphaH[i][j] = -ef[i][j];
                if (i == j) alphaH[i][j] = alphaH[i][j] - QSqrt2I(Rat(1));
            }
    }
    FMat id2 = zeros(2, 2), idv = zeros(dv, dv);
    id2[0][0] = id2[1][1] = QSqrt2I(Rat(1));
    for (int k = 0; k < dv; ++k) idv[k][k] = QSqrt2I(Rat(1));
    FMat Htot = add(kron(H, id2), kron(idv, alphaH));
    std::vector<Rat> weight_of(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            if (i != j && !Htot[i][j].is_zero())
                throw internal_error("total Cartan action is not diagonal");
        if (!Htot[i][i].is_rational()) throw internal_error("weight is not rational");
        weight_of[i] = Htot[i][i].a;
    }

    Rank1Report report;
    report.n = n;

    // D^2 must vanish between distinct weights and be a rational scalar on
    // each weight space.
    report.d2_weight_block_scalar = true;
    std::map<Rat, Rat> block_eigenvalue;
    std::map<Rat, long long> block_size;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (i == j) continue;
            if (!D2[i][j].is_zero()) report.d2_weight_block_scalar = false;
        }
        if (!D2[i][i].is_rational()) report.d2_weight_block_scalar = false;
        Rat w = weight_of[i];
        Rat ev = D2[i][i].a;
        auto it = block_eigenvalue.find(w);
        if (it == block_eigenvalue.end())
            block_eigenvalue.emplace(w, ev);
        else if (it->second != ev)
            report.d2_weight_block_scalar = false;
        block_size[w] += 1;
    }

    // Character-level spectrum for comparison.
    RootSystem a1 = build_root_system(CartanType::parse("A1"));
    RootSubsystem torus = validate_subsystem(a1, {});
    Weight lam = Weight::from_ints({n});
    std::vector<SpectrumEntry> spectrum = dsquared_spectrum(a1, torus, lam);
    std::map<Rat, std::pair<long long, Rat>> expected;  // weight -> (mult, eigenvalue)
    for (const auto& e : spectrum) expected[e.mu[0]] = {e.mult, e.eigenvalue};
    report.d2_matches_spectrum = true;
    if (expected.size() != block_eigenvalue.size()) report.d2_matches_spectrum = false;
    for (const auto& [w, ev] : block_eigenvalue) {
        auto it = expected.find(w);
        if (it == expected.end() || it->second.first != block_size[w] || it->second.second != ev)
            report.d2_matches_spectrum = false;
    }

    // Exact kernel of D.
    std::vector<std::vector<QSqrt2I>> basis = kernel_basis(D);
    report.kernel_dimension = static_cast<int>(basis.size());
    report.kernel_weight_homogeneous = true;
    std::set<Rat> kernel_weights;
    for (const auto& v : basis) {
        bool seen_any = false;
        Rat w;
        for (int i = 0; i < dim; ++i) {
            if (v[i].is_zero()) continue;
            if (!seen_any) {
                w = weight_of[i];
                seen_any = true;
            } else if (weight_of[i] != w) {
                report.kernel_weight_homogeneous = false;
            }
        }
        if (seen_any) kernel_weights.insert(w);
    }
    for (const Rat& w : kernel_weights) report.kernel_weights.push_back(Weight({w}));
    std::sort(report.kernel_weights.begin(), report.kernel_weights.end());

    std::set<Weight> kostant_weights;
    for (const auto& comp : kostant_hd(a1, torus, lam)) kostant_weights.insert(comp.mu);
    std::set<Weight> kernel_weight_set(report.kernel_weights.begin(), report.kernel_weights.end());
    report.kernel_matches_kostant = kostant_weights == kernel_weight_set;

    // ker D inside ker D^2, and matching total dimension of the eigenvalue-0
    // weight spaces (so ker D = ker D^2 for this self-adjoint-style model).
    long long zero_dim = 0;
    for (const auto& [w, ev] : block_eigenvalue)
        if (ev == 0) zero_dim += block_size[w];
    report.kernel_inside_d2_kernel = zero_dim == report.kernel_dimension;

    return report;
}

}  // namespace liechar
