#pragma once

#include "liechar/cartan.hpp"
#include "liechar/weight.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

namespace liechar {

// Resource caps. Defaults cover E6 and keep full suites at desk scale.
struct Caps {
    int max_rank = 6;
    long long max_weyl_order = 200000;
    long long max_terms = 1000000;
};

class RootSystem;
class RootSubsystem;
class SystemRef;

// An element of a Weyl group (of the full system or of a subsystem),
// acting on fundamental-weight coordinates of the ambient system.
struct WeylElement {
    std::vector<std::vector<long long>> mat;  // image of basis vector j = column j
    std::vector<int> word;                    // reduced word, 0-based simple indices
    int length = 0;                           // = word.size() = inversion count
    int det = 1;                              // (-1)^length

    Weight apply(const Weight& w) const;
    std::vector<long long> apply_ints(const std::vector<long long>& v) const;
    bool is_identity() const;
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat == b.mat; }
};

namespace detail {
struct RootSystemData;
struct RootSubsystemData;
}  // namespace detail

// Immutable root system for a Cartan type. Copies share state; all queries
// are safe to call concurrently.
class RootSystem {
public:
    const CartanType& type() const;
    int rank() const;
    const Caps& caps() const;
    const std::vector<std::vector<long long>>& cartan_matrix() const;
    const std::vector<Weight>& simple_roots() const;       // omega coords
    const std::vector<Weight>& positive_roots() const;     // omega coords
    const std::vector<std::vector<long long>>& positive_roots_rc() const;  // root coords
    const std::vector<Rat>& root_lengths() const;
    const std::vector<std::vector<Rat>>& gram() const;
    const Weight& rho() const;
    Int weyl_order() const;

    Rat bilinear(const Weight& a, const Weight& b) const;
    bool is_root(const Weight& omega) const;
    bool is_positive_root(const Weight& omega) const;
    // Root coordinates of a root given in omega coordinates.
    std::vector<long long> root_coords(const Weight& omega) const;
    // Integer covector v with v . lambda = <lambda, beta^vee>.
    std::vector<long long> coroot_covector(const Weight& root) const;
    // Reflection in a root of the system, as an integer matrix on omega coords.
    std::vector<std::vector<long long>> reflection(const Weight& root) const;

private:
    friend class SystemRef;
    friend class RootSubsystem;
    friend RootSystem build_root_system(const CartanType&, const Caps&);
    std::shared_ptr<const detail::RootSystemData> d_;
};

// How a subsystem is generated and validated from its simple roots.
//   quadratic:  closed under root addition inside Delta(g) — the root system
//               of an equal-rank quadratic subalgebra (Dirac/spin side).
//   reflection: closed under its own Weyl reflections only — the endoscopic
//               case, where Delta(h) need not be additively closed.
enum class SubsystemKind { quadratic, reflection };

// An equal-rank root subsystem r inside a fixed root system, sharing the
// Cartan. Weights stay in the ambient omega coordinates throughout.
class RootSubsystem {
public:
    const RootSystem& ambient() const;
    const std::vector<Weight>& simple_roots() const;
    const std::vector<std::vector<long long>>& simple_roots_rc() const;
    const std::vector<Weight>& positive_roots() const;
    const std::vector<std::vector<long long>>& positive_roots_rc() const;
    const Weight& rho_r() const;
    Int weyl_order() const;
    bool is_quadratic() const;  // additively closed in Delta(g)
    bool is_positive_root(const Weight& omega) const;

private:
    friend class SystemRef;
    friend RootSubsystem validate_subsystem(const RootSystem&,
                                            const std::vector<std::vector<long long>>&,
                                            SubsystemKind);
    std::shared_ptr<const detail::RootSubsystemData> d_;
};

// Uniform view over "RootSystem | RootSubsystem" arguments.
class SystemRef {
public:
    SystemRef(const RootSystem& g);       // NOLINT: implicit by design
    SystemRef(const RootSubsystem& sub);  // NOLINT: implicit by design

    const RootSystem& ambient() const;
    bool is_full() const { return sub_ == nullptr; }
    const RootSubsystem* subsystem() const { return sub_; }

    int simple_count() const;
    const Weight& simple_root(int i) const;
    const std::vector<long long>& simple_root_ints(int i) const;
    const std::vector<long long>& simple_covector(int i) const;
    const std::vector<std::vector<long long>>& simple_reflection(int i) const;
    const std::vector<Weight>& positive_roots() const;
    const Weight& rho() const;  // rho of g, or rho_r of the subsystem
    bool is_positive_root(const Weight& omega) const;

    Rat bilinear(const Weight& a, const Weight& b) const;
    Rat pairing(const Weight& w, int simple_index) const;
    const Caps& caps() const;

    // Full enumeration of the Weyl group (cached on the underlying object).
    const std::vector<WeylElement>& weyl() const;
    Int weyl_order() const;

    // Cache key identity for memoization.
    const void* id() const;

private:
    const RootSystem* g_ = nullptr;
    const RootSubsystem* sub_ = nullptr;
};

// ---- operations ----

RootSystem build_root_system(const CartanType& type, const Caps& caps = Caps{});

// Exhaustive, duplicate-free enumeration, sorted by (length, word).
// Cached; the returned reference stays valid for the system's lifetime.
const std::vector<WeylElement>& enumerate_weyl(const SystemRef& sys);

// Validates claimed simple roots (in simple-root integer coordinates of g)
// and builds the generated subsystem. Empty input gives the Cartan (torus).
RootSubsystem validate_subsystem(const RootSystem& g,
                                 const std::vector<std::vector<long long>>& simple_rc,
                                 SubsystemKind kind = SubsystemKind::quadratic);

// W^1: minimal coset representatives {w in W_ambient : w(rho_ambient) is
// strictly dominant for sub}. Every w factors uniquely as u*tau with
// u in W_sub, tau in W^1.
std::vector<WeylElement> coset_representatives(const SystemRef& ambient, const RootSubsystem& sub);

// Carries mu to the dominant chamber of the system by simple reflections,
// always reflecting at the lowest-index strictly negative pairing.
// Returns (dominant weight, w) with w(mu) = dominant.
std::pair<Weight, WeylElement> dominant_conjugate(const SystemRef& sys, const Weight& mu);

// Identity element / inverse / canonical reduced word utilities.
WeylElement weyl_identity(const SystemRef& sys);
WeylElement weyl_inverse(const SystemRef& sys, const WeylElement& w);
// Rebuilds the canonical reduced word (smallest descent first) for a matrix
// known to lie in the system's Weyl group.
WeylElement element_from_matrix(const SystemRef& sys, std::vector<std::vector<long long>> mat);

// #{alpha in Delta+(sys) : w(alpha) < 0}; equals w.length for group members.
int inversion_count(const SystemRef& sys, const WeylElement& w);

}  // namespace liechar
