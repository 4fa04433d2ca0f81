#pragma once

#include "plbraid/rational.hpp"

#include <map>
#include <string>

namespace plb {

// Integer-coefficient Laurent polynomial in one variable A.
// No zero coefficients are stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return monomial(0, 1); }

    static LaurentPoly monomial(long long exp, Int coeff) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exp] = std::move(coeff);
        return p;
    }

    // delta = -A^2 - A^{-2}
    static LaurentPoly loop_value() {
        LaurentPoly p;
        p.terms_[2] = -1;
        p.terms_[-2] = -1;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, Int>& terms() const { return terms_; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r += o;
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly shifted(long long exp) const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e + exp] = c;
        return r;
    }

    // (-A^3)^k
    static LaurentPoly writhe_factor(long long k) {
        return monomial(3 * k, (k % 2 == 0) ? 1 : -1);
    }

    void add_term(long long exp, const Int& coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Canonical printing: descending exponents, e.g. "-A^-4 + A^-8 - A^-12".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Int c = it->second;
            long long e = it->first;
            bool neg = c < 0;
            Int mag = neg ? Int(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string var;
            if (e == 1)
                var = "A";
            else if (e != 0)
                var = "A^" + std::to_string(e);
            if (var.empty())
                out += mag.str();
            else if (mag == 1)
                out += var;
            else
                out += mag.str() + "*" + var;
        }
        return out;
    }

  private:
    std::map<long long, Int> terms_;
};

} // namespace plb
