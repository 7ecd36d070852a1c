#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace liechar {

// Exact scalars. Everything in this library is rational arithmetic;
// there is no floating point anywhere.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Error taxonomy, mirrored by the C API status codes and CLI exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Malformed input: unparseable type strings, weights, flags.
struct usage_error : error {
    using error::error;
};
// Well-formed but semantically invalid input: non-roots, non-closed
// subsystems, non-dominant weights, singular parameters.
struct validation_error : error {
    using error::error;
};
// A configured cap (rank, Weyl order, term count) was exceeded.
struct resource_error : error {
    using error::error;
};
// Violated internal invariant; always a bug, never a user error.
struct internal_error : error {
    using error::error;
};

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int to_integer(const Rat& x) {
    if (!is_integer(x)) throw internal_error("expected integral value, got " + x.str());
    return numerator(x);
}

// Canonical rational rendering: lowest terms, "p" when the denominator is 1.
std::string format_rational(const Rat& x);

// Accepts "p" or "p/q" with optional sign; rejects everything else.
Rat parse_rational(const std::string& text);

// Comma-separated rationals, e.g. "1,1/2,-3".
std::vector<Rat> parse_rational_csv(const std::string& text);

// Semicolon-separated integer vectors, e.g. "1,0;0,1"; "" means none.
std::vector<std::vector<long long>> parse_int_vectors(const std::string& text);

}  // namespace liechar
