#include "liechar/weight.hpp"

#include <sstream>

namespace liechar {

Weight& Weight::operator+=(const Weight& o) {
    if (c_.size() != o.c_.size()) throw internal_error("weight rank mismatch in +");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (c_.size() != o.c_.size()) throw internal_error("weight rank mismatch in -");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight operator-(const Weight& a) {
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c_[i];
    return Weight(std::move(c));
}

Weight operator*(const Rat& s, const Weight& a) {
    std::vector<Rat> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
    return Weight(std::move(c));
}

std::string Weight::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << format_rational(c_[i]);
    }
    os << ']';
    return os.str();
}

Rat dot(const Weight& w, const std::vector<long long>& covector) {
    if (w.size() != covector.size()) throw internal_error("weight rank mismatch in dot");
    Rat acc = 0;
    for (std::size_t i = 0; i < covector.size(); ++i) acc += Rat(covector[i]) * w[i];
    return acc;
}

}  // namespace liechar
