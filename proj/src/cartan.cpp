#include "liechar/cartan.hpp"

#include <cctype>
#include <sstream>

namespace liechar {

namespace {

void check_factor(const CartanFactor& f, const std::string& label) {
    auto bad = [&](const std::string& allowed) {
        throw usage_error("unsupported Cartan type '" + label + "': series " +
                          std::string(1, f.series) + " requires rank " + allowed);
    };
    switch (f.series) {
        case 'A':
            if (f.rank < 1) bad(">= 1");
            break;
        case 'B':
            if (f.rank < 2) bad(">= 2");
            break;
        case 'C':
            if (f.rank < 2) bad(">= 2");
            break;
        case 'D':
            if (f.rank < 3) bad(">= 3");
            break;
        case 'E':
            if (f.rank != 6) bad("in {6}");
            break;
        case 'F':
            if (f.rank != 4) bad("= 4");
            break;
        case 'G':
            if (f.rank != 2) bad("= 2");
            break;
        default:
            throw usage_error("unsupported Cartan series '" + std::string(1, f.series) +
                              "' in '" + label + "'");
    }
}

Int factorial(int n) {
    Int v = 1;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

Int pow2(int n) {
    Int v = 1;
    for (int i = 0; i < n; ++i) v *= 2;
    return v;
}

// Fills the n x n block of C for one simple factor, Bourbaki numbering.
// C[i][j] = <alpha_j, alpha_i^vee>.
void fill_block(std::vector<std::vector<long long>>& C, int off, const CartanFactor& f) {
    const int n = f.rank;
    auto at = [&](int i, int j) -> long long& { return C[off + i][off + j]; };
    for (int i = 0; i < n; ++i) at(i, i) = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            at(i, i + 1) = -1;
            at(i + 1, i) = -1;
        }
    };
    switch (f.series) {
        case 'A':
            chain(n);
            break;
        case 'B':  // alpha_n short
            chain(n - 1);
            if (n >= 2) {
                at(n - 2, n - 1) = -1;
                at(n - 1, n - 2) = -2;
            }
            break;
        case 'C':  // alpha_n long
            chain(n - 1);
            if (n >= 2) {
                at(n - 2, n - 1) = -2;
                at(n - 1, n - 2) = -1;
            }
            break;
        case 'D':
            chain(n - 1);
            at(n - 3, n - 1) = -1;
            at(n - 1, n - 3) = -1;
            break;
        case 'E':  // E6: chain 1-3-4-5-6 (0-based 0,2,3,4,5), node 2 on node 4 (0-based 1 on 3)
            at(0, 2) = at(2, 0) = -1;
            at(2, 3) = at(3, 2) = -1;
            at(3, 4) = at(4, 3) = -1;
            at(4, 5) = at(5, 4) = -1;
            at(1, 3) = at(3, 1) = -1;
            break;
        case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            at(0, 1) = at(1, 0) = -1;
            at(1, 2) = -1;
            at(2, 1) = -2;
            at(2, 3) = at(3, 2) = -1;
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            at(0, 1) = -3;
            at(1, 0) = -1;
            break;
        default:
            throw internal_error("fill_block: bad series");
    }
}

}  // namespace

CartanType::CartanType(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw usage_error("empty Cartan type");
    for (const auto& f : factors_) check_factor(f, str());
}

CartanType CartanType::parse(const std::string& text) {
    std::vector<CartanFactor> factors;
    std::size_t i = 0;
    if (text.empty()) throw usage_error("empty Cartan type");
    while (i < text.size()) {
        char series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        ++i;
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits.push_back(text[i++]);
        if (digits.empty() || digits.size() > 2)
            throw usage_error("unsupported Cartan type '" + text + "': bad factor near '" +
                              std::string(1, series) + "'");
        CartanFactor f{series, std::stoi(digits)};
        check_factor(f, text);
        factors.push_back(f);
        if (i < text.size()) {
            char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
            if (sep != 'x') throw usage_error("unsupported Cartan type '" + text + "': expected 'x' between factors");
            ++i;
            if (i == text.size()) throw usage_error("unsupported Cartan type '" + text + "': trailing separator");
        }
    }
    return CartanType(std::move(factors));
}

int CartanType::total_rank() const {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
}

std::string CartanType::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << 'x';
        os << factors_[i].series << factors_[i].rank;
    }
    return os.str();
}

std::vector<std::vector<long long>> CartanType::cartan_matrix() const {
    const int n = total_rank();
    std::vector<std::vector<long long>> C(n, std::vector<long long>(n, 0));
    int off = 0;
    for (const auto& f : factors_) {
        fill_block(C, off, f);
        off += f.rank;
    }
    return C;
}

std::vector<Rat> CartanType::root_lengths() const {
    std::vector<Rat> d;
    for (const auto& f : factors_) {
        const int n = f.rank;
        switch (f.series) {
            case 'A':
            case 'D':
            case 'E':
                for (int i = 0; i < n; ++i) d.emplace_back(1);
                break;
            case 'B':
                for (int i = 0; i < n - 1; ++i) d.emplace_back(1);
                d.emplace_back(Rat(1, 2));
                break;
            case 'C':
                for (int i = 0; i < n - 1; ++i) d.emplace_back(Rat(1, 2));
                d.emplace_back(1);
                break;
            case 'F':
                d.emplace_back(1);
                d.emplace_back(1);
                d.emplace_back(Rat(1, 2));
                d.emplace_back(Rat(1, 2));
                break;
            case 'G':
                d.emplace_back(Rat(1, 3));
                d.emplace_back(1);
                break;
            default:
                throw internal_error("root_lengths: bad series");
        }
    }
    return d;
}

Int CartanType::weyl_order() const {
    Int order = 1;
    for (const auto& f : factors_) {
        switch (f.series) {
            case 'A':
                order *= factorial(f.rank + 1);
                break;
            case 'B':
            case 'C':
                order *= pow2(f.rank) * factorial(f.rank);
                break;
            case 'D':
                order *= pow2(f.rank - 1) * factorial(f.rank);
                break;
            case 'E':
                order *= 51840;
                break;
            case 'F':
                order *= 1152;
                break;
            case 'G':
                order *= 12;
                break;
            default:
                throw internal_error("weyl_order: bad series");
        }
    }
    return order;
}

long long CartanType::positive_root_count() const {
    long long count = 0;
    for (const auto& f : factors_) {
        const long long n = f.rank;
        switch (f.series) {
            case 'A':
                count += n * (n + 1) / 2;
                break;
            case 'B':
            case 'C':
                count += n * n;
                break;
            case 'D':
                count += n * (n - 1);
                break;
            case 'E':
                count += 36;
                break;
            case 'F':
                count += 24;
                break;
            case 'G':
                count += 6;
                break;
            default:
                throw internal_error("positive_root_count: bad series");
        }
    }
    return count;
}

}  // namespace liechar
