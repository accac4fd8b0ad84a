#ifndef HZETA_CONST_COMBO_HPP
#define HZETA_CONST_COMBO_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hzeta/bernoulli.hpp"
#include "hzeta/bigfloat.hpp"
#include "hzeta/errors.hpp"
#include "hzeta/rational.hpp"

namespace hzeta {

/// A monomial over constant atoms: a multiset of atom names, kept sorted.
/// The empty monomial is the unit 1.
using ConstMonomial = std::vector<std::string>;

inline std::string monomial_key(const ConstMonomial& m) {
    if (m.empty()) return "1";
    std::string out = m[0];
    for (std::size_t i = 1; i < m.size(); ++i) out += "*" + m[i];
    return out;
}

inline ConstMonomial monomial_from_key(const std::string& key) {
    if (key == "1" || key.empty()) return {};
    ConstMonomial m;
    std::size_t start = 0;
    while (start <= key.size()) {
        auto pos = key.find('*', start);
        if (pos == std::string::npos) {
            m.push_back(key.substr(start));
            break;
        }
        m.push_back(key.substr(start, pos - start));
        start = pos + 1;
    }
    std::sort(m.begin(), m.end());
    return m;
}

/// Registry of named transcendental atoms with numeric generators.
/// Grow-only and internally synchronized; values are cached per
/// (atom, precision) so repeated evaluations are cheap and deterministic.
class AtomRegistry {
public:
    static AtomRegistry& instance() {
        static AtomRegistry reg;
        return reg;
    }

    void register_atom(const std::string& name, std::function<BigFloat(long)> generator) {
        std::lock_guard<std::mutex> lock(mu_);
        generators_.emplace(name, std::move(generator));
    }

    bool has(const std::string& name) const {
        std::lock_guard<std::mutex> lock(mu_);
        return generators_.count(name) != 0;
    }

    BigFloat value(const std::string& name, long prec) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(name, prec);
        auto hit = cache_.find(key);
        if (hit != cache_.end()) return hit->second;
        auto gen = generators_.find(name);
        if (gen == generators_.end()) throw unknown_atom_error(name);
        BigFloat v = gen->second(prec);
        cache_.emplace(key, v);
        return v;
    }

    std::vector<std::string> names() const {
        std::lock_guard<std::mutex> lock(mu_);
        std::vector<std::string> out;
        for (auto& [k, v] : generators_) out.push_back(k);
        return out;
    }

private:
    AtomRegistry();
    mutable std::mutex mu_;
    std::map<std::string, std::function<BigFloat(long)>> generators_;
    mutable std::map<std::pair<std::string, long>, BigFloat> cache_;
};

/// Finite rational linear combination of constant-atom monomials.
/// Products concatenate monomial multisets, so multiplication is always
/// defined and the ring is commutative; no simplification across atoms is
/// attempted (pi2 and zeta3 are just distinct keys).
class ConstCombo {
public:
    ConstCombo() = default;
    ConstCombo(int c) {
        if (c != 0) terms_[{}] = Rational(c);
    }
    explicit ConstCombo(const Rational& c) {
        if (c != 0) terms_[{}] = c;
    }

    static ConstCombo atom(const std::string& name, const Rational& c = Rational(1)) {
        ConstCombo r;
        if (c != 0) r.terms_[{name}] = c;
        return r;
    }
    static ConstCombo monomial(const ConstMonomial& m, const Rational& c) {
        ConstCombo r;
        if (c != 0) {
            ConstMonomial mm = m;
            std::sort(mm.begin(), mm.end());
            r.terms_[mm] = c;
        }
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<ConstMonomial, Rational>& terms() const { return terms_; }

    /// Coefficient of the empty monomial.
    Rational rational_part() const {
        auto it = terms_.find({});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend ConstCombo operator+(const ConstCombo& a, const ConstCombo& b) {
        ConstCombo r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend ConstCombo operator-(const ConstCombo& a, const ConstCombo& b) {
        ConstCombo r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend ConstCombo operator-(const ConstCombo& a) { return ConstCombo() - a; }
    friend ConstCombo operator*(const ConstCombo& a, const ConstCombo& b) {
        ConstCombo r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                ConstMonomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend ConstCombo operator*(const ConstCombo& a, const Rational& c) {
        ConstCombo r;
        if (c == 0) return r;
        for (auto& [m, coeff] : a.terms_) r.terms_[m] = coeff * c;
        return r;
    }
    friend ConstCombo operator*(const Rational& c, const ConstCombo& a) { return a * c; }
    ConstCombo& operator+=(const ConstCombo& b) {
        for (auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    ConstCombo& operator-=(const ConstCombo& b) {
        for (auto& [m, c] : b.terms_) add_term(m, -c);
        return *this;
    }
    ConstCombo& operator*=(const ConstCombo& b) { *this = *this * b; return *this; }

    friend bool operator==(const ConstCombo& a, const ConstCombo& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ConstCombo& a, const ConstCombo& b) { return !(a == b); }

    /// Numeric value at the requested precision. Atoms are evaluated with
    /// guard bits and the accumulation is rounded once at the end, keeping
    /// the result within a few ulp at `prec` and deterministic for fixed prec.
    BigFloat eval(long prec) const {
        long work = prec + 32;
        BigFloat acc(0L, work);
        for (auto& [m, c] : terms_) {
            BigFloat t(c, work);
            for (auto& name : m) t *= AtomRegistry::instance().value(name, work);
            acc += t;
        }
        return acc.round_to(prec);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += rat_to_string(c);
            if (!m.empty()) out += "*" + monomial_key(m);
        }
        return out;
    }

private:
    void add_term(const ConstMonomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<ConstMonomial, Rational> terms_;
};

/// zeta(k) for integer k >= 2 in the canonical atom basis: even weights
/// become rational multiples of pi2^(k/2) (via zeta(2n) = (-1)^(n+1)
/// B_{2n} (2 pi)^{2n} / (2 (2n)!)), odd weights stay as zeta3, zeta5, ...
inline ConstCombo zeta_combo(unsigned k) {
    if (k < 2) throw std::domain_error("zeta_combo needs k >= 2");
    if (k % 2 == 0) {
        unsigned n = k / 2;
        Rational c = bernoulli(2 * n) * rat_pow(Rational(2), 2 * n) / (Rational(2) * Rational(factorial(2 * n)));
        if (n % 2 == 0) c = -c;
        ConstMonomial m(n, "pi2");
        return ConstCombo::monomial(m, c);
    }
    return ConstCombo::atom("zeta" + std::to_string(k));
}

/// eta(k) = (1 - 2^(1-k)) zeta(k) for k >= 2; eta(1) = log 2.
inline ConstCombo eta_combo(unsigned k) {
    if (k == 1) return ConstCombo::atom("log2");
    return zeta_combo(k) * (Rational(1) - Rational(1, int_pow(Int(2), k - 1)));
}

inline AtomRegistry::AtomRegistry() {
    generators_["log2"] = [](long p) { return const_log2(p); };
    generators_["pi2"] = [](long p) {
        BigFloat pi = const_pi(p + 8);
        return (pi * pi).round_to(p);
    };
    generators_["gammaE"] = [](long p) { return const_euler_gamma(p); };
    for (unsigned k = 3; k <= 13; k += 2) {
        generators_["zeta" + std::to_string(k)] = [k](long p) { return zeta_ui(k, p); };
    }
    generators_["li4half"] = [](long p) {
        // Li_4(1/2) = sum 2^-n / n^4, geometric decay
        long work = p + 16;
        BigFloat acc(0L, work);
        BigFloat half(Rational(1, 2), work);
        BigFloat powh(1L, work);
        for (long n = 1; n < work + 8; ++n) {
            powh *= half;
            acc += powh / BigFloat(Rational(Int(n) * Int(n) * Int(n) * Int(n)), work);
        }
        return acc.round_to(p);
    };
}

} // namespace hzeta

#endif
