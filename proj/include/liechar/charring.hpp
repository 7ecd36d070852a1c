#pragma once

#include "liechar/rootsys.hpp"

#include <map>

namespace liechar {

// Element of the group ring of the (half-)weight lattice: a finite map from
// weights to nonzero integer multiplicities. Terms iterate in lexicographic
// weight order, which the JSON layer relies on.
class FormalCharacter {
public:
    using Terms = std::map<Weight, long long>;

    FormalCharacter() = default;
    static FormalCharacter exponential(const Weight& mu, long long mult = 1);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    long long multiplicity(const Weight& mu) const;
    Int mass() const;  // sum of multiplicities

    void add_term(const Weight& mu, long long mult);  // prunes zeros
    FormalCharacter& operator+=(const FormalCharacter& o);
    FormalCharacter& operator-=(const FormalCharacter& o);
    FormalCharacter& operator*=(long long scalar);
    friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
    friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
    friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
        return a.terms_ == b.terms_;
    }

    // mu -> -mu on the support.
    FormalCharacter negated_weights() const;

private:
    Terms terms_;
};

// Convolution product: e^mu * e^nu = e^(mu+nu). Throws resource_error when
// the result support exceeds max_terms.
FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b, long long max_terms);

struct VirtualComponent {
    Weight highest_weight;
    long long coefficient = 0;
};

// Integer combination of irreducible characters of a system; highest weights
// are pairwise distinct and dominant for that system.
struct VirtualDecomposition {
    std::vector<VirtualComponent> components;
};

// Character of the irreducible module with highest weight lam, by
// Freudenthal's recursion over dominant weights followed by orbit expansion.
// lam must pair to non-negative integers with the system's simple coroots;
// rational coordinates transverse to the system are carried along unchanged.
FormalCharacter irreducible_character(const SystemRef& sys, const Weight& lam);

// Product formula dimension; exact, asserts integrality.
Int weyl_dimension(const SystemRef& sys, const Weight& lam);

// sum_{w in W} det(w) e^{w lam}; the zero character iff lam is singular.
FormalCharacter weyl_numerator(const SystemRef& sys, const Weight& lam);

// Greedy decomposition into irreducible characters of the system, selecting
// the support weight maximizing B(mu+rho, mu+rho) (lex-largest on ties).
VirtualDecomposition decompose(const FormalCharacter& chi, const SystemRef& sys);

FormalCharacter reconstruct(const SystemRef& sys, const VirtualDecomposition& dec);

}  // namespace liechar
