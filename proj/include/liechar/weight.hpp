#pragma once

#include "liechar/numeric.hpp"

#include <cstddef>
#include <vector>

namespace liechar {

// A point of h* in the fundamental-weight basis of the ambient root system.
// Coordinates are exact rationals; the i-th coordinate is the pairing with
// the i-th simple coroot of the ambient system.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : c_(rank) {}
    explicit Weight(std::vector<Rat> coords) : c_(std::move(coords)) {}

    static Weight from_ints(const std::vector<long long>& v) {
        std::vector<Rat> c(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
        return Weight(std::move(c));
    }

    std::size_t size() const { return c_.size(); }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const Rat& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const Rat& x : c_)
            if (!is_integer(x)) return false;
        return true;
    }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(const Weight& a);
    friend Weight operator*(const Rat& s, const Weight& a);

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c_ != b.c_; }
    // Lexicographic coordinate order; FormalCharacter and the JSON layer
    // both rely on this being the serialization order.
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

    std::string str() const;

private:
    std::vector<Rat> c_;
};

// <w, covector> for an integer coroot covector.
Rat dot(const Weight& w, const std::vector<long long>& covector);

}  // namespace liechar
