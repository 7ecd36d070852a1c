#include "liechar/charring.hpp"

#include <algorithm>
#include <deque>

namespace liechar {

FormalCharacter FormalCharacter::exponential(const Weight& mu, long long mult) {
    FormalCharacter c;
    c.add_term(mu, mult);
    return c;
}

long long FormalCharacter::multiplicity(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
}

Int FormalCharacter::mass() const {
    Int m = 0;
    for (const auto& [w, c] : terms_) m += c;
    return m;
}

void FormalCharacter::add_term(const Weight& mu, long long mult) {
    if (mult == 0) return;
    auto it = terms_.find(mu);
    if (it == terms_.end()) {
        terms_.emplace(mu, mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FormalCharacter& FormalCharacter::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scalar;
    return *this;
}

FormalCharacter FormalCharacter::negated_weights() const {
    FormalCharacter out;
    for (const auto& [w, c] : terms_) out.add_term(-w, c);
    return out;
}

FormalCharacter multiply(const FormalCharacter& a, const FormalCharacter& b, long long max_terms) {
    FormalCharacter out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            out.add_term(wa + wb, ca * cb);
            if (static_cast<long long>(out.support_size()) > max_terms)
                throw resource_error("character product support exceeds cap " +
                                     std::to_string(max_terms));
        }
    return out;
}

namespace {

// Dominance/integrality of lam relative to the system's simple coroots.
void require_dominant_integral(const SystemRef& sys, const Weight& lam, const char* who) {
    for (int i = 0; i < sys.simple_count(); ++i) {
        Rat p = sys.pairing(lam, i);
        if (!is_integer(p) || p < 0)
            throw validation_error(std::string(who) + ": weight " + lam.str() +
                                   " pairs to " + format_rational(p) +
                                   " with simple coroot " + std::to_string(i + 1) +
                                   "; need a non-negative integer");
    }
}

bool is_dominant(const SystemRef& sys, const Weight& mu) {
    for (int i = 0; i < sys.simple_count(); ++i)
        if (sys.pairing(mu, i) < 0) return false;
    return true;
}

}  // namespace

FormalCharacter irreducible_character(const SystemRef& sys, const Weight& lam) {
    require_dominant_integral(sys, lam, "irreducible_character");
    if (sys.simple_count() == 0) return FormalCharacter::exponential(lam);

    const Weight& rho_s = sys.rho();
    const long long max_terms = sys.caps().max_terms;
    const Rat bound = sys.bilinear(lam + rho_s, lam + rho_s);

    // Reachable lattice points lam - sum(simple roots) inside the ball
    // ||mu + rho||^2 <= ||lam + rho||^2; this contains every weight of the
    // module, with non-weights simply computing to multiplicity zero.
    std::map<Weight, long long> depth;
    std::deque<Weight> queue;
    depth.emplace(lam, 0);
    queue.push_back(lam);
    while (!queue.empty()) {
        Weight x = std::move(queue.front());
        queue.pop_front();
        const long long d = depth.at(x);
        for (int i = 0; i < sys.simple_count(); ++i) {
            Weight y = x - sys.simple_root(i);
            if (depth.count(y)) continue;
            if (sys.bilinear(y + rho_s, y + rho_s) > bound) continue;
            if (static_cast<long long>(depth.size()) > max_terms)
                throw resource_error("character support region exceeds cap " +
                                     std::to_string(max_terms));
            depth.emplace(y, d + 1);
            queue.push_back(y);
        }
    }

    std::vector<std::pair<long long, Weight>> dominants;
    for (const auto& [mu, d] : depth)
        if (is_dominant(sys, mu)) dominants.emplace_back(d, mu);
    std::sort(dominants.begin(), dominants.end());

    std::map<Weight, Weight> dom_memo;
    auto dominant_of = [&](const Weight& nu) -> const Weight& {
        auto it = dom_memo.find(nu);
        if (it == dom_memo.end())
            it = dom_memo.emplace(nu, dominant_conjugate(sys, nu).first).first;
        return it->second;
    };

    std::map<Weight, long long> mult;
    mult.emplace(lam, 1);
    for (const auto& [d, mu] : dominants) {
        if (mu == lam) continue;
        Rat acc = 0;
        for (const Weight& alpha : sys.positive_roots()) {
            for (long long k = 1;; ++k) {
                Weight nu = mu + Rat(k) * alpha;
                auto it = depth.find(nu);
                if (it == depth.end()) {
                    // Left the ball for good once the norm is past the bound
                    // and growing; nu is then never again a module weight.
                    Rat norm = sys.bilinear(nu + rho_s, nu + rho_s);
                    if (norm > bound && sys.bilinear(nu + rho_s, alpha) > 0) break;
                    continue;
                }
                auto mit = mult.find(dominant_of(nu));
                if (mit == mult.end() || mit->second == 0) continue;
                acc += Rat(mit->second) * sys.bilinear(nu, alpha);
            }
        }
        const Rat den = bound - sys.bilinear(mu + rho_s, mu + rho_s);
        if (den <= 0) throw internal_error("Freudenthal denominator not positive");
        Rat m = 2 * acc / den;
        if (!is_integer(m) || m < 0) throw internal_error("Freudenthal multiplicity not a natural number");
        if (m != 0) mult.emplace(mu, to_integer(m).convert_to<long long>());
    }

    FormalCharacter out;
    for (const auto& [mu, m] : mult) {
        std::set<Weight> orbit{mu};
        std::deque<Weight> frontier{mu};
        while (!frontier.empty()) {
            Weight x = std::move(frontier.front());
            frontier.pop_front();
            for (int i = 0; i < sys.simple_count(); ++i) {
                Weight y = x - sys.pairing(x, i) * sys.simple_root(i);
                if (orbit.insert(y).second) frontier.push_back(y);
            }
        }
        for (const Weight& w : orbit) {
            out.add_term(w, m);
            if (static_cast<long long>(out.support_size()) > max_terms)
                throw resource_error("character support exceeds cap " + std::to_string(max_terms));
        }
    }
    if (out.multiplicity(lam) != 1) throw internal_error("highest weight multiplicity is not 1");
    return out;
}

Int weyl_dimension(const SystemRef& sys, const Weight& lam) {
    require_dominant_integral(sys, lam, "weyl_dimension");
    const Weight& rho_s = sys.rho();
    Weight top = lam + rho_s;
    Rat num = 1, den = 1;
    for (const Weight& alpha : sys.positive_roots()) {
        num *= sys.bilinear(top, alpha);
        den *= sys.bilinear(rho_s, alpha);
    }
    if (den == 0) throw internal_error("rho of the system is singular");
    Rat dim = num / den;
    if (!is_integer(dim) || dim <= 0)
        throw internal_error("Weyl dimension is not a positive integer: " + format_rational(dim));
    return to_integer(dim);
}

FormalCharacter weyl_numerator(const SystemRef& sys, const Weight& lam) {
    FormalCharacter out;
    for (const WeylElement& w : sys.weyl()) out.add_term(w.apply(lam), w.det);
    return out;
}

VirtualDecomposition decompose(const FormalCharacter& chi, const SystemRef& sys) {
    VirtualDecomposition dec;
    if (chi.empty()) return dec;

    FormalCharacter work = chi;
    const Weight& rho_s = sys.rho();
    Int iter_cap = Int(chi.support_size()) * sys.weyl_order();
    Int iter = 0;
    while (!work.empty()) {
        if (++iter > iter_cap)
            throw validation_error(
                "decompose: iteration cap exceeded; input is not in the character ring of the system");
        const Weight* best = nullptr;
        Rat best_norm;
        for (const auto& [mu, c] : work.terms()) {
            Rat norm = sys.bilinear(mu + rho_s, mu + rho_s);
            // Ties go to the lexicographically largest coordinate vector;
            // the map iterates in increasing order, so >= keeps the later one.
            if (!best || norm > best_norm || (norm == best_norm && *best < mu)) {
                best = &mu;
                best_norm = norm;
            }
        }
        Weight mu = *best;
        if (!is_dominant(sys, mu))
            throw validation_error("decompose: extreme weight " + mu.str() +
                                   " is not dominant for the system");
        long long c = work.multiplicity(mu);
        FormalCharacter irr = irreducible_character(sys, mu);
        irr *= c;
        work -= irr;
        dec.components.push_back({std::move(mu), c});
    }
    return dec;
}

FormalCharacter reconstruct(const SystemRef& sys, const VirtualDecomposition& dec) {
    FormalCharacter out;
    for (const auto& comp : dec.components) {
        FormalCharacter irr = irreducible_character(sys, comp.highest_weight);
        irr *= comp.coefficient;
        out += irr;
    }
    return out;
}

}  // namespace liechar
