#include "liechar/rootsys.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace liechar {

using Mat = std::vector<std::vector<long long>>;

namespace {

Mat identity_mat(int n) {
    Mat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const int n = static_cast<int>(a.size());
    Mat c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const long long aik = a[i][k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
        }
    return c;
}

std::vector<long long> mat_apply(const Mat& m, const std::vector<long long>& v) {
    const int n = static_cast<int>(m.size());
    std::vector<long long> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
    return out;
}

std::vector<long long> row_sums(const Mat& m) {
    std::vector<long long> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long x : m[i]) out[i] += x;
    return out;
}

long long mat_det(const Mat& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long det = 0;
    for (int j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Mat minor(n - 1, std::vector<long long>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        det += (j % 2 == 0 ? 1 : -1) * m[0][j] * mat_det(minor);
    }
    return det;
}

// Exact inverse of a small integer matrix, by Gauss-Jordan over Rat.
std::vector<std::vector<Rat>> invert(const Mat& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw internal_error("singular Cartan matrix");
        std::swap(a[col], a[pivot]);
        const Rat p = a[col][col];
        for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
    return inv;
}

std::string ints_str(const std::vector<long long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

void sort_elements(std::vector<WeylElement>& out) {
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    });
}

// Breadth-first closure of the group generated by the given reflections,
// deduplicated by the image of the ambient rho (the all-ones vector, which
// is regular for the full Weyl group and hence for every subgroup of it).
std::vector<WeylElement> bfs_enumerate(const std::vector<Mat>& gens, int rank, long long cap) {
    for (const Mat& g : gens)
        if (mat_det(g) != -1) throw internal_error("generator is not a reflection");

    std::map<std::vector<long long>, int> seen;
    std::vector<WeylElement> out;
    WeylElement id{identity_mat(rank), {}, 0, 1};
    seen[row_sums(id.mat)] = 0;
    out.push_back(id);
    std::size_t head = 0;
    while (head < out.size()) {
        // Copy, not reference: out may reallocate while we append.
        const WeylElement cur = out[head++];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Mat next = mat_mul(cur.mat, gens[i]);
            std::vector<long long> key = row_sums(next);
            if (seen.count(key)) continue;
            if (static_cast<long long>(out.size()) >= cap)
                throw resource_error("Weyl group order exceeds cap " + std::to_string(cap));
            WeylElement w;
            w.mat = std::move(next);
            w.word = cur.word;
            w.word.push_back(static_cast<int>(i));
            w.length = cur.length + 1;
            w.det = -cur.det;
            seen[std::move(key)] = 1;
            out.push_back(std::move(w));
        }
    }
    sort_elements(out);
    return out;
}

}  // namespace

Weight WeylElement::apply(const Weight& w) const {
    const std::size_t n = mat.size();
    if (w.size() != n) throw internal_error("WeylElement::apply rank mismatch");
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (mat[i][j] != 0) out[i] += Rat(mat[i][j]) * w[j];
    return Weight(std::move(out));
}

std::vector<long long> WeylElement::apply_ints(const std::vector<long long>& v) const {
    return mat_apply(mat, v);
}

bool WeylElement::is_identity() const { return length == 0; }

namespace detail {

struct WeylCache {
    mutable std::mutex mu;
    mutable std::shared_ptr<const std::vector<WeylElement>> elements;
};

struct RootSystemData {
    CartanType type;
    Caps caps;
    int rank = 0;
    Mat cartan;
    std::vector<std::vector<Rat>> cartan_inv;
    std::vector<Rat> dvec;
    std::vector<std::vector<Rat>> gram;
    std::vector<Weight> simple;
    std::vector<std::vector<long long>> simple_ints;
    std::vector<std::vector<long long>> simple_cov;
    std::vector<Mat> simple_refl;
    std::vector<Weight> positive;
    std::vector<std::vector<long long>> positive_rc;
    std::map<Weight, int> pos_index;
    Weight rho;
    Int weyl_order;
    WeylCache cache;
};

struct RootSubsystemData {
    RootSystem ambient;
    std::vector<Weight> simple;
    std::vector<std::vector<long long>> simple_ints;
    std::vector<std::vector<long long>> simple_rc;
    std::vector<std::vector<long long>> simple_cov;
    std::vector<Mat> simple_refl;
    std::vector<Weight> positive;
    std::vector<std::vector<long long>> positive_rc;
    std::set<Weight> pos_set;
    Weight rho_r;
    Int weyl_order;
    bool quadratic = true;
    WeylCache cache;
};

}  // namespace detail

// ---- RootSystem ----

const CartanType& RootSystem::type() const { return d_->type; }
int RootSystem::rank() const { return d_->rank; }
const Caps& RootSystem::caps() const { return d_->caps; }
const Mat& RootSystem::cartan_matrix() const { return d_->cartan; }
const std::vector<Weight>& RootSystem::simple_roots() const { return d_->simple; }
const std::vector<Weight>& RootSystem::positive_roots() const { return d_->positive; }
const std::vector<std::vector<long long>>& RootSystem::positive_roots_rc() const {
    return d_->positive_rc;
}
const std::vector<Rat>& RootSystem::root_lengths() const { return d_->dvec; }
const std::vector<std::vector<Rat>>& RootSystem::gram() const { return d_->gram; }
const Weight& RootSystem::rho() const { return d_->rho; }
Int RootSystem::weyl_order() const { return d_->weyl_order; }

Rat RootSystem::bilinear(const Weight& a, const Weight& b) const {
    const int n = d_->rank;
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw internal_error("bilinear rank mismatch");
    Rat acc = 0;
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n; ++j)
            if (b[j] != 0) row += d_->gram[i][j] * b[j];
        acc += a[i] * row;
    }
    return acc;
}

bool RootSystem::is_root(const Weight& omega) const {
    return d_->pos_index.count(omega) || d_->pos_index.count(-omega);
}

bool RootSystem::is_positive_root(const Weight& omega) const {
    return d_->pos_index.count(omega) != 0;
}

std::vector<long long> RootSystem::root_coords(const Weight& omega) const {
    const int n = d_->rank;
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) {
        Rat x = 0;
        for (int j = 0; j < n; ++j) x += d_->cartan_inv[i][j] * omega[j];
        if (!is_integer(x)) throw internal_error("root_coords: non-integral coordinates");
        out[i] = to_integer(x).convert_to<long long>();
    }
    return out;
}

std::vector<long long> RootSystem::coroot_covector(const Weight& root) const {
    const int n = d_->rank;
    Rat norm = bilinear(root, root);
    if (norm == 0) throw internal_error("coroot of a null vector");
    std::vector<long long> cov(n);
    for (int i = 0; i < n; ++i) {
        Rat gi = 0;
        for (int j = 0; j < n; ++j) gi += d_->gram[i][j] * root[j];
        Rat v = 2 * gi / norm;
        if (!is_integer(v)) throw internal_error("coroot covector not integral");
        cov[i] = to_integer(v).convert_to<long long>();
    }
    return cov;
}

Mat RootSystem::reflection(const Weight& root) const {
    const int n = d_->rank;
    std::vector<long long> cov = coroot_covector(root);
    std::vector<long long> b(n);
    for (int i = 0; i < n; ++i) {
        if (!is_integer(root[i])) throw internal_error("reflection: root has non-integral coords");
        b[i] = to_integer(root[i]).convert_to<long long>();
    }
    Mat m = identity_mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] -= b[i] * cov[j];
    return m;
}

RootSystem build_root_system(const CartanType& type, const Caps& caps) {
    auto d = std::make_shared<detail::RootSystemData>();
    d->type = type;
    d->caps = caps;
    d->rank = type.total_rank();
    if (d->rank > caps.max_rank)
        throw resource_error("total rank " + std::to_string(d->rank) + " exceeds cap " +
                             std::to_string(caps.max_rank));
    const int n = d->rank;
    d->cartan = type.cartan_matrix();
    d->cartan_inv = invert(d->cartan);
    d->dvec = type.root_lengths();

    // Gram matrix of the fundamental-weight basis: G = diag(d) * C^{-1}.
    d->gram.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d->gram[i][j] = d->dvec[i] * d->cartan_inv[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (d->gram[i][j] != d->gram[j][i]) throw internal_error("Gram matrix not symmetric");

    // Positive roots by closure from the simple roots, in root coordinates,
    // using the alpha-string rule q = p - <beta, alpha_i^vee>.
    std::vector<std::vector<long long>> pos_rc;
    std::set<std::vector<long long>> pos_set;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        pos_rc.push_back(e);
        pos_set.insert(std::move(e));
    }
    auto is_root_rc = [&](const std::vector<long long>& v) {
        if (pos_set.count(v)) return true;
        std::vector<long long> neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        return pos_set.count(neg) != 0;
    };
    for (std::size_t head = 0; head < pos_rc.size(); ++head) {
        const std::vector<long long> beta = pos_rc[head];
        for (int i = 0; i < n; ++i) {
            long long pairing = 0;
            for (int j = 0; j < n; ++j) pairing += d->cartan[i][j] * beta[j];
            long long p = 0;
            std::vector<long long> down = beta;
            while (true) {
                down[i] -= 1;
                bool zero = std::all_of(down.begin(), down.end(), [](long long x) { return x == 0; });
                if (zero || !is_root_rc(down)) break;
                ++p;
            }
            if (p - pairing >= 1) {
                std::vector<long long> up = beta;
                up[i] += 1;
                if (!pos_set.count(up)) {
                    pos_rc.push_back(up);
                    pos_set.insert(std::move(up));
                }
            }
        }
    }
    if (static_cast<long long>(pos_rc.size()) != type.positive_root_count())
        throw internal_error("positive root count mismatch for " + type.str());
    std::sort(pos_rc.begin(), pos_rc.end(), [](const auto& a, const auto& b) {
        long long ha = 0, hb = 0;
        for (long long x : a) ha += x;
        for (long long x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });
    d->positive_rc = pos_rc;
    for (std::size_t k = 0; k < pos_rc.size(); ++k) {
        std::vector<Rat> w(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += Rat(d->cartan[i][j]) * pos_rc[k][j];
        Weight omega(std::move(w));
        d->pos_index.emplace(omega, static_cast<int>(k));
        d->positive.push_back(std::move(omega));
    }

    std::vector<Rat> ones(n, Rat(1));
    d->rho = Weight(std::move(ones));
    d->weyl_order = type.weyl_order();

    for (int i = 0; i < n; ++i) {
        std::vector<Rat> w(n);
        for (int j = 0; j < n; ++j) w[j] = d->cartan[j][i];
        d->simple.emplace_back(std::move(w));
    }

    RootSystem rs;
    rs.d_ = d;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> ints(n);
        for (int j = 0; j < n; ++j) ints[j] = d->cartan[j][i];
        d->simple_ints.push_back(std::move(ints));
        std::vector<long long> cov = rs.coroot_covector(d->simple[i]);
        for (int j = 0; j < n; ++j)
            if (cov[j] != (i == j ? 1 : 0))
                throw internal_error("simple coroot covector is not a coordinate vector");
        d->simple_cov.push_back(std::move(cov));
        d->simple_refl.push_back(rs.reflection(d->simple[i]));
    }
    // rho = sum of fundamental weights pairs to 1 against every simple coroot.
    for (int i = 0; i < n; ++i)
        if (dot(d->rho, d->simple_cov[i]) != 1) throw internal_error("rho is not the all-ones vector");
    return rs;
}

// ---- RootSubsystem ----

const RootSystem& RootSubsystem::ambient() const { return d_->ambient; }
const std::vector<Weight>& RootSubsystem::simple_roots() const { return d_->simple; }
const std::vector<std::vector<long long>>& RootSubsystem::simple_roots_rc() const {
    return d_->simple_rc;
}
const std::vector<Weight>& RootSubsystem::positive_roots() const { return d_->positive; }
const std::vector<std::vector<long long>>& RootSubsystem::positive_roots_rc() const {
    return d_->positive_rc;
}
const Weight& RootSubsystem::rho_r() const { return d_->rho_r; }
Int RootSubsystem::weyl_order() const { return d_->weyl_order; }
bool RootSubsystem::is_quadratic() const { return d_->quadratic; }
bool RootSubsystem::is_positive_root(const Weight& omega) const {
    return d_->pos_set.count(omega) != 0;
}

RootSubsystem validate_subsystem(const RootSystem& g,
                                 const std::vector<std::vector<long long>>& simple_rc,
                                 SubsystemKind kind) {
    const int n = g.rank();
    auto d = std::make_shared<detail::RootSubsystemData>();
    d->ambient = g;

    std::vector<Weight> inputs;
    for (const auto& rc : simple_rc) {
        if (static_cast<int>(rc.size()) != n)
            throw validation_error("subsystem root " + ints_str(rc) + " has arity " +
                                   std::to_string(rc.size()) + ", expected " + std::to_string(n));
        std::vector<Rat> w(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += Rat(g.cartan_matrix()[i][j]) * rc[j];
        Weight omega(std::move(w));
        if (!g.is_root(omega))
            throw validation_error("vector " + ints_str(rc) + " is not a root of " + g.type().str());
        if (!g.is_positive_root(omega))
            throw validation_error("vector " + ints_str(rc) + " is not a positive root of " +
                                   g.type().str());
        for (const Weight& prev : inputs)
            if (prev == omega) throw validation_error("repeated root " + ints_str(rc));
        inputs.push_back(std::move(omega));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i)
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            if (i == j) continue;
            if (dot(inputs[j], g.coroot_covector(inputs[i])) > 0)
                throw validation_error("vectors not simple: roots " + ints_str(simple_rc[i]) +
                                       " and " + ints_str(simple_rc[j]) + " have positive pairing");
        }

    // Generate Delta(r) from +-inputs. Quadratic closure adds root sums;
    // reflection closure only orbits under the generated reflections.
    std::set<Weight> all;
    for (const Weight& w : inputs) {
        all.insert(w);
        all.insert(-w);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Weight> cur(all.begin(), all.end());
        if (kind == SubsystemKind::quadratic) {
            for (std::size_t i = 0; i < cur.size(); ++i)
                for (std::size_t j = i + 1; j < cur.size(); ++j) {
                    Weight s = cur[i] + cur[j];
                    if (s.is_zero() || !g.is_root(s) || all.count(s)) continue;
                    all.insert(s);
                    all.insert(-s);
                    grew = true;
                }
        } else {
            for (const Weight& beta : cur) {
                std::vector<long long> cov = g.coroot_covector(beta);
                for (const Weight& gamma : cur) {
                    Weight img = gamma - dot(gamma, cov) * beta;
                    if (!all.count(img)) {
                        all.insert(img);
                        grew = true;
                    }
                }
            }
        }
    }
    // Delta(r) must be stable under its own reflections in either mode.
    for (const Weight& beta : all) {
        std::vector<long long> cov = g.coroot_covector(beta);
        for (const Weight& gamma : all)
            if (!all.count(gamma - dot(gamma, cov) * beta))
                throw internal_error("generated subsystem not reflection-closed");
    }
    d->quadratic = true;
    for (const Weight& a : all) {
        for (const Weight& b : all) {
            Weight s = a + b;
            if (!s.is_zero() && g.is_root(s) && !all.count(s)) {
                d->quadratic = false;
                break;
            }
        }
        if (!d->quadratic) break;
    }
    if (kind == SubsystemKind::quadratic && !d->quadratic)
        throw internal_error("additive closure failed to close");

    std::vector<std::pair<long long, std::vector<long long>>> pos;  // (height, rc)
    for (const Weight& w : all) {
        if (!g.is_positive_root(w)) continue;
        std::vector<long long> rc = g.root_coords(w);
        long long h = 0;
        for (long long x : rc) h += x;
        pos.emplace_back(h, std::move(rc));
    }
    std::sort(pos.begin(), pos.end());

    std::vector<Rat> rho2(n, Rat(0));
    for (const auto& [h, rc] : pos) {
        std::vector<Rat> w(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += Rat(g.cartan_matrix()[i][j]) * rc[j];
        Weight omega(std::move(w));
        for (int i = 0; i < n; ++i) rho2[i] += omega[i];
        d->positive_rc.push_back(rc);
        d->pos_set.insert(omega);
        d->positive.push_back(std::move(omega));
    }
    for (int i = 0; i < n; ++i) rho2[i] /= 2;
    d->rho_r = Weight(std::move(rho2));

    // The claimed simple roots must be exactly the indecomposable elements
    // of Delta+(r).
    std::set<Weight> indec;
    for (const Weight& beta : d->pos_set) {
        bool decomposable = false;
        for (const Weight& a : d->pos_set) {
            Weight rem = beta - a;
            if (!rem.is_zero() && d->pos_set.count(rem)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) indec.insert(beta);
    }
    std::set<Weight> given(inputs.begin(), inputs.end());
    if (indec != given) {
        std::ostringstream os;
        os << "vectors not simple for the generated subsystem; its simple roots are {";
        bool first = true;
        for (const Weight& w : indec) {
            if (!first) os << ", ";
            first = false;
            os << ints_str(g.root_coords(w));
        }
        os << "}";
        throw validation_error(os.str());
    }

    for (const Weight& w : inputs) {
        std::vector<long long> ints(n);
        for (int i = 0; i < n; ++i) ints[i] = to_integer(w[i]).convert_to<long long>();
        d->simple_ints.push_back(std::move(ints));
        d->simple_rc.push_back(g.root_coords(w));
        d->simple_cov.push_back(g.coroot_covector(w));
        d->simple_refl.push_back(g.reflection(w));
        d->simple.push_back(w);
    }

    RootSubsystem sub;
    sub.d_ = d;
    // Eager enumeration pins weyl_order and warms the cache; the cap guards
    // runaway subgroups.
    auto elems = std::make_shared<const std::vector<WeylElement>>(
        bfs_enumerate(d->simple_refl, n, g.caps().max_weyl_order));
    d->weyl_order = static_cast<long long>(elems->size());
    d->cache.elements = std::move(elems);
    return sub;
}

// ---- SystemRef ----

SystemRef::SystemRef(const RootSystem& g) : g_(&g) {}
SystemRef::SystemRef(const RootSubsystem& sub) : g_(&sub.ambient()), sub_(&sub) {}

const RootSystem& SystemRef::ambient() const { return *g_; }

int SystemRef::simple_count() const {
    return sub_ ? static_cast<int>(sub_->simple_roots().size()) : g_->rank();
}

const Weight& SystemRef::simple_root(int i) const {
    return sub_ ? sub_->simple_roots()[i] : g_->simple_roots()[i];
}

const std::vector<long long>& SystemRef::simple_root_ints(int i) const {
    return sub_ ? sub_->d_->simple_ints[i] : g_->d_->simple_ints[i];
}

const std::vector<long long>& SystemRef::simple_covector(int i) const {
    return sub_ ? sub_->d_->simple_cov[i] : g_->d_->simple_cov[i];
}

const Mat& SystemRef::simple_reflection(int i) const {
    return sub_ ? sub_->d_->simple_refl[i] : g_->d_->simple_refl[i];
}

const std::vector<Weight>& SystemRef::positive_roots() const {
    return sub_ ? sub_->positive_roots() : g_->positive_roots();
}

const Weight& SystemRef::rho() const { return sub_ ? sub_->rho_r() : g_->rho(); }

bool SystemRef::is_positive_root(const Weight& omega) const {
    return sub_ ? sub_->is_positive_root(omega) : g_->is_positive_root(omega);
}

Rat SystemRef::bilinear(const Weight& a, const Weight& b) const { return g_->bilinear(a, b); }

Rat SystemRef::pairing(const Weight& w, int simple_index) const {
    return dot(w, simple_covector(simple_index));
}

const Caps& SystemRef::caps() const { return g_->caps(); }

const std::vector<WeylElement>& SystemRef::weyl() const {
    const detail::WeylCache& cache = sub_ ? sub_->d_->cache : g_->d_->cache;
    {
        std::lock_guard<std::mutex> lk(cache.mu);
        if (cache.elements) return *cache.elements;
    }
    if (!sub_ && g_->weyl_order() > g_->caps().max_weyl_order)
        throw resource_error("Weyl group order " + g_->weyl_order().str() + " exceeds cap " +
                             std::to_string(g_->caps().max_weyl_order));
    std::vector<Mat> gens;
    for (int i = 0; i < simple_count(); ++i) gens.push_back(simple_reflection(i));
    auto elems = std::make_shared<const std::vector<WeylElement>>(
        bfs_enumerate(gens, g_->rank(), g_->caps().max_weyl_order));
    std::lock_guard<std::mutex> lk(cache.mu);
    if (!cache.elements) cache.elements = std::move(elems);
    return *cache.elements;
}

Int SystemRef::weyl_order() const { return sub_ ? sub_->weyl_order() : g_->weyl_order(); }

const void* SystemRef::id() const { return sub_ ? static_cast<const void*>(sub_->d_.get()) : static_cast<const void*>(g_->d_.get()); }

// ---- free operations ----

const std::vector<WeylElement>& enumerate_weyl(const SystemRef& sys) { return sys.weyl(); }

std::vector<WeylElement> coset_representatives(const SystemRef& ambient, const RootSubsystem& sub) {
    if (sub.ambient().cartan_matrix() != ambient.ambient().cartan_matrix())
        throw validation_error("subsystem was built for a different root system");
    for (const Weight& beta : sub.positive_roots())
        if (!ambient.is_positive_root(beta))
            throw validation_error("subsystem is not contained in the ambient system");
    std::vector<std::vector<long long>> covs;
    for (const Weight& beta : sub.simple_roots())
        covs.push_back(ambient.ambient().coroot_covector(beta));

    std::vector<WeylElement> out;
    const Weight& rho = ambient.rho();
    for (const WeylElement& w : ambient.weyl()) {
        Weight img = w.apply(rho);
        bool dominant = true;
        for (const auto& cov : covs) {
            Rat p = dot(img, cov);
            if (p == 0)
                throw internal_error("rho of the ambient system is singular for the subsystem");
            if (p < 0) {
                dominant = false;
                break;
            }
        }
        if (dominant) out.push_back(w);
    }
    return out;
}

WeylElement weyl_identity(const SystemRef& sys) {
    return WeylElement{identity_mat(sys.ambient().rank()), {}, 0, 1};
}

WeylElement element_from_matrix(const SystemRef& sys, Mat mat) {
    const int n = sys.ambient().rank();
    const Mat id = identity_mat(n);
    Mat cur = mat;
    std::vector<int> word;
    const std::size_t guard = sys.positive_roots().size() + 1;
    while (cur != id) {
        if (word.size() >= guard) throw internal_error("element_from_matrix: matrix not in group");
        bool found = false;
        for (int i = 0; i < sys.simple_count(); ++i) {
            std::vector<long long> img = mat_apply(cur, sys.simple_root_ints(i));
            std::vector<Rat> neg(n);
            for (int j = 0; j < n; ++j) neg[j] = -img[j];
            if (sys.is_positive_root(Weight(std::move(neg)))) {
                cur = mat_mul(cur, sys.simple_reflection(i));
                word.push_back(i);
                found = true;
                break;
            }
        }
        if (!found) throw internal_error("element_from_matrix: no descent found");
    }
    std::reverse(word.begin(), word.end());
    WeylElement w;
    w.mat = std::move(mat);
    w.length = static_cast<int>(word.size());
    w.det = (w.length % 2 == 0) ? 1 : -1;
    w.word = std::move(word);
    return w;
}

WeylElement weyl_inverse(const SystemRef& sys, const WeylElement& w) {
    Mat inv = identity_mat(sys.ambient().rank());
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
        inv = mat_mul(inv, sys.simple_reflection(*it));
    return element_from_matrix(sys, std::move(inv));
}

std::pair<Weight, WeylElement> dominant_conjugate(const SystemRef& sys, const Weight& mu) {
    const int n = sys.ambient().rank();
    Weight x = mu;
    Mat acc = identity_mat(n);
    long long steps = 0;
    while (true) {
        int idx = -1;
        for (int i = 0; i < sys.simple_count(); ++i) {
            if (dot(x, sys.simple_covector(i)) < 0) {
                idx = i;
                break;
            }
        }
        if (idx < 0) break;
        if (++steps > 10000000LL) throw internal_error("dominant_conjugate did not terminate");
        x = x - dot(x, sys.simple_covector(idx)) * sys.simple_root(idx);
        acc = mat_mul(sys.simple_reflection(idx), acc);
    }
    return {x, element_from_matrix(sys, std::move(acc))};
}

int inversion_count(const SystemRef& sys, const WeylElement& w) {
    int count = 0;
    for (const Weight& alpha : sys.positive_roots()) {
        Weight img = w.apply(alpha);
        if (sys.is_positive_root(-img)) ++count;
    }
    return count;
}

}  // namespace liechar
