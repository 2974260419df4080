#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "qpm/common.hpp"

namespace qpm {

// Dense univariate polynomial with exact integer coefficients.
// Coefficient i is the coefficient of z^i; the vector carries no
// trailing zeros, and the zero polynomial is the empty vector.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    // c * z^e
    static IntPoly monomial(Int c, long e) {
        IntPoly p;
        if (c != 0) {
            p.c_.assign(static_cast<size_t>(e) + 1, Int(0));
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return 0;
        return c_[static_cast<size_t>(i)];
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly& operator+=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); i++) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    IntPoly& operator-=(const IntPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); i++) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    // *this += s * o, without a temporary
    IntPoly& add_scaled(const IntPoly& o, const Int& s) {
        if (s == 0 || o.is_zero()) return *this;
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); i++) c_[i] += o.c_[i] * s;
        trim();
        return *this;
    }
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
        for (size_t i = 0; i < a.c_.size(); i++)
            for (size_t j = 0; j < b.c_.size(); j++) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    IntPoly operator*(const Int& s) const {
        if (s == 0) return {};
        IntPoly r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }
    IntPoly operator-() const {
        IntPoly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    // multiply by z^e
    IntPoly shifted(long e) const {
        if (is_zero() || e == 0) return *this;
        if (e < 0) throw BadParams("IntPoly::shifted: negative shift");
        IntPoly r;
        r.c_.assign(static_cast<size_t>(e), Int(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    // exact division by z^e; throws unless the e lowest coefficients vanish
    IntPoly unshifted(long e) const {
        if (is_zero() || e == 0) return *this;
        if (e < 0 || static_cast<long>(c_.size()) <= e)
            throw NonIntegralValue("IntPoly::unshifted: not divisible by z^e");
        for (long i = 0; i < e; i++)
            if (c_[static_cast<size_t>(i)] != 0)
                throw NonIntegralValue("IntPoly::unshifted: not divisible by z^e");
        return IntPoly(std::vector<Int>(c_.begin() + e, c_.end()));
    }

    // exact division by an integer scalar
    IntPoly divided_by(const Int& s) const {
        IntPoly r(*this);
        for (auto& x : r.c_) x = exact_div(x, s, "IntPoly::divided_by");
        return r;
    }

    Int eval(const Int& z) const {
        Int r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = r * z + c_[i];
        return r;
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            const Int& a = c_[i];
            if (a == 0) continue;
            Int mag = a < 0 ? Int(-a) : a;
            if (first) {
                if (a < 0) os << "-";
                first = false;
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            if (mag != 1 || i == 0) os << mag;
            if (i > 0) {
                if (mag != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

}  // namespace qpm
