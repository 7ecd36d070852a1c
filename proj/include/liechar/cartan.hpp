#pragma once

#include "liechar/numeric.hpp"

#include <string>
#include <vector>

namespace liechar {

// One simple factor, e.g. {B, 2}.
struct CartanFactor {
    char series = 0;  // 'A'..'G'
    int rank = 0;
};

// A semisimple Cartan type: an ordered product of simple factors.
// Supported ranks: A n>=1, B n>=2, C n>=2, D n>=3, E n=6, F n=4, G n=2.
class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<CartanFactor> factors);

    // Parses "A1", "G2", "A2xB2", ... Throws usage_error naming the bad factor.
    static CartanType parse(const std::string& text);

    const std::vector<CartanFactor>& factors() const { return factors_; }
    int total_rank() const;
    std::string str() const;

    // Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>; column j is the
    // j-th simple root in fundamental-weight coordinates.
    std::vector<std::vector<long long>> cartan_matrix() const;

    // d_i = B(alpha_i, alpha_i)/2, normalized so long roots of each factor
    // have squared length 2.
    std::vector<Rat> root_lengths() const;

    Int weyl_order() const;
    long long positive_root_count() const;

private:
    std::vector<CartanFactor> factors_;
};

}  // namespace liechar
