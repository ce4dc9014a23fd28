#pragma once

#include "gtbrion/rational.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gtbrion {

/// Dense univariate polynomial in s over the rationals, coefficients stored
/// from the constant term upward. The leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient vector).
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    explicit UniPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }

    /// c * s^k
    static UniPoly monomial(const Rational& c, std::size_t k) {
        if (c == 0) return {};
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }

    Rational operator()(const Rational& s) const {
        Rational value(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * s + *it;
        return value;
    }

    Rational value_at_one() const {
        Rational value(0);
        for (const auto& c : coeffs_) value += c;
        return value;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return UniPoly(std::move(v));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator*(const Rational& k, UniPoly p) {
        if (k == 0) return {};
        for (auto& c : p.coeffs_) c *= k;
        return p;
    }

    /// Multiply by s^k.
    UniPoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Rational> v(k, Rational(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return UniPoly(std::move(v));
    }

    /// Euclidean division; throws on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw EvaluationError("polynomial division by zero");
        if (degree() < d.degree()) return {UniPoly{}, *this};
        std::vector<Rational> rem = coeffs_;
        std::vector<Rational> quot(coeffs_.size() - d.coeffs_.size() + 1, Rational(0));
        Rational inv_lead = 1 / d.leading();
        for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
            Rational q = rem[k + d.coeffs_.size() - 1] * inv_lead;
            quot[k] = q;
            if (q == 0) continue;
            for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[k + j] -= q * d.coeffs_[j];
        }
        rem.resize(d.coeffs_.size() - 1);
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return (1 / leading()) * *this;
    }

    /// Quotient by (s - 1); requires p(1) = 0.
    UniPoly deflate_at_one() const {
        // synthetic division from the top
        std::vector<Rational> q(coeffs_.size() - 1, Rational(0));
        Rational carry(0);
        for (int k = degree(); k >= 1; --k) {
            carry += coeffs_[k];
            q[k - 1] = carry;
        }
        return UniPoly(std::move(q));
    }

    bool operator==(const UniPoly&) const = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeffs_[k];
            if (c == 0) continue;
            if (!first) out << (c < 0 ? " - " : " + ");
            else if (c < 0) out << "-";
            first = false;
            Rational a = abs(c);
            if (k == 0 || a != 1) out << a.get_str();
            if (k > 0) {
                if (a != 1) out << "*";
                out << "s";
                if (k > 1) out << "^" << k;
            }
        }
        return out.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero). Remainders are made
/// monic at every step to keep coefficient growth in check.
inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Reduced univariate rational function: coprime numerator and monic
/// denominator; zero is 0/1.
class UniRational {
public:
    UniRational() : den_(Rational(1)) {}
    explicit UniRational(UniPoly num) : num_(std::move(num)), den_(Rational(1)) {}

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const UniRational&) const = default;

    std::string to_string() const {
        if (den_ == UniPoly(Rational(1))) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    friend UniRational uni_reduce(const UniPoly& num, const UniPoly& den);
    UniPoly num_;
    UniPoly den_;
};

inline UniRational uni_reduce(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw EvaluationError("rational function with zero denominator");
    UniRational r;
    if (num.is_zero()) return r;
    UniPoly g = uni_gcd(num, den);
    UniPoly n = num.divmod(g).first;
    UniPoly d = den.divmod(g).first;
    Rational lead = d.leading();
    r.num_ = (1 / lead) * n;
    r.den_ = (1 / lead) * d;
    return r;
}

inline UniRational operator+(const UniRational& a, const UniRational& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return uni_reduce(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                      a.denominator() * b.denominator());
}

inline UniRational operator-(const UniRational& a) { return uni_reduce(-a.numerator(), a.denominator()); }

inline UniRational operator*(const UniRational& a, const UniRational& b) {
    return uni_reduce(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

inline UniRational uni_rational_sum(const std::vector<UniRational>& terms) {
    UniRational total;
    for (const auto& t : terms) total = total + t;
    return total;
}

/// f(1) for a reduced f; a denominator vanishing at 1 is a genuine pole.
inline Rational eval_at_one(const UniRational& f) {
    Rational den = f.denominator().value_at_one();
    if (den == 0) throw InternalInconsistency("rational function has a pole at s = 1");
    return f.numerator().value_at_one() / den;
}

/// lim_{s->1} num/den without a full gcd: only the (s - 1) factors can
/// vanish at 1, so they are divided out of both sides until the denominator
/// is nonzero there. Equal to eval_at_one(uni_reduce(num, den)).
inline Rational limit_at_one(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw EvaluationError("rational function with zero denominator");
    if (num.is_zero()) return Rational(0);
    while (den.value_at_one() == 0) {
        if (num.value_at_one() != 0) throw InternalInconsistency("rational function has a pole at s = 1");
        num = num.deflate_at_one();
        den = den.deflate_at_one();
    }
    return num.value_at_one() / den.value_at_one();
}

}  // namespace gtbrion
