#pragma once

#include "gtbrion/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gtbrion {

/// A formal variable: either a pattern coordinate t_{i,j} or a weight
/// coordinate x_i. Both families share one exponent-vector type so the
/// specialization is a plain map between exponent vectors.
struct Variable {
    enum class Family : std::uint8_t { T, X };

    Family family = Family::X;
    int row = 0;  // i of t_{i,j}; index of x_i
    int col = 0;  // j of t_{i,j}; unused for x

    static constexpr Variable t(int i, int j) { return {Family::T, i, j}; }
    static constexpr Variable x(int i) { return {Family::X, i, 0}; }

    std::string name() const {
        if (family == Family::X) return "x" + std::to_string(row);
        return "t_{" + std::to_string(row) + "," + std::to_string(col) + "}";
    }

    auto operator<=>(const Variable&) const = default;
};

/// Sparse integer exponent vector; zero entries are never stored.
class ExponentVector {
public:
    using Entry = std::pair<Variable, long long>;

    ExponentVector() = default;

    static ExponentVector single(Variable v, long long e = 1) {
        ExponentVector r;
        r.set(v, e);
        return r;
    }

    long long get(const Variable& v) const {
        auto it = find(v);
        return it != entries_.end() && it->first == v ? it->second : 0;
    }

    void set(const Variable& v, long long e) {
        auto it = find(v);
        bool present = it != entries_.end() && it->first == v;
        if (e == 0) {
            if (present) entries_.erase(it);
        } else if (present) {
            it->second = e;
        } else {
            entries_.insert(it, {v, e});
        }
    }

    void add(const Variable& v, long long e) { set(v, get(v) + e); }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    ExponentVector& operator+=(const ExponentVector& o) {
        for (const auto& [v, e] : o.entries_) add(v, e);
        return *this;
    }
    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

    ExponentVector operator-() const {
        ExponentVector r = *this;
        for (auto& entry : r.entries_) entry.second = -entry.second;
        return r;
    }
    friend ExponentVector operator-(const ExponentVector& a, const ExponentVector& b) { return a + (-b); }

    ExponentVector scaled(long long k) const {
        if (k == 0) return {};
        ExponentVector r = *this;
        for (auto& entry : r.entries_) entry.second *= k;
        return r;
    }

    auto operator<=>(const ExponentVector&) const = default;

private:
    std::vector<Entry>::iterator find(const Variable& v) {
        return std::lower_bound(entries_.begin(), entries_.end(), v,
                                [](const Entry& a, const Variable& b) { return a.first < b; });
    }
    std::vector<Entry>::const_iterator find(const Variable& v) const {
        return std::lower_bound(entries_.begin(), entries_.end(), v,
                                [](const Entry& a, const Variable& b) { return a.first < b; });
    }

    std::vector<Entry> entries_;
};

using Assignment = std::map<Variable, Rational>;

/// Value of the monomial with exponent vector m at a point.
inline Rational monomial_eval(const ExponentVector& m, const Assignment& point) {
    Rational value(1);
    for (const auto& [v, e] : m.entries()) {
        auto it = point.find(v);
        if (it == point.end()) throw EvaluationError("variable " + v.name() + " has no assigned value");
        if (it->second == 0 && e < 0)
            throw EvaluationError("variable " + v.name() + " is zero but appears with a negative exponent");
        value *= power(it->second, e);
    }
    return value;
}

/// Finite Laurent polynomial with exact rational coefficients.
class LaurentPolynomial {
public:
    using Terms = std::map<ExponentVector, Rational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const Rational& c) { add_term({}, c); }

    static LaurentPolynomial monomial(const ExponentVector& m, const Rational& c = Rational(1)) {
        LaurentPolynomial p;
        p.add_term(m, c);
        return p;
    }
    static LaurentPolynomial variable(const Variable& v) { return monomial(ExponentVector::single(v)); }

    void add_term(const ExponentVector& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const ExponentVector& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend LaurentPolynomial operator*(const Rational& k, LaurentPolynomial p) {
        if (k == 0) return {};
        for (auto& [m, c] : p.terms_) c *= k;
        return p;
    }

    /// Apply a change of variables given as a map on exponent vectors
    /// (any monoid homomorphism, e.g. a monomial substitution).
    template <typename MonomialMap>
    LaurentPolynomial substitute(MonomialMap&& map) const {
        LaurentPolynomial r;
        for (const auto& [m, c] : terms_) r.add_term(map(m), c);
        return r;
    }

    bool operator==(const LaurentPolynomial&) const = default;

    /// Monomials sorted lexicographically descending in variable order,
    /// e.g. "x1^2*x2 + 2*x1*x2*x3 - x3^-1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<Variable> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.entries()) vars.push_back(v);
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

        std::vector<std::pair<std::vector<long long>, const Terms::value_type*>> rows;
        for (const auto& term : terms_) {
            std::vector<long long> dense;
            for (const auto& v : vars) dense.push_back(term.first.get(v));
            rows.emplace_back(std::move(dense), &term);
        }
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first > b.first; });

        std::ostringstream out;
        bool first = true;
        for (const auto& [dense, term] : rows) {
            Rational c = term->second;
            bool negative = c < 0;
            if (negative) c = -c;
            if (first) {
                if (negative) out << "-";
            } else {
                out << (negative ? " - " : " + ");
            }
            first = false;
            const auto& m = term->first;
            bool unit = c == 1;
            if (!unit || m.empty()) out << c.get_str();
            bool need_star = !unit;
            for (const auto& [v, e] : m.entries()) {
                if (need_star) out << "*";
                out << v.name();
                if (e != 1) out << "^" << e;
                need_star = true;
            }
        }
        return out.str();
    }

private:
    Terms terms_;
};

/// Exact value of p at a point; every variable of p must be assigned.
inline Rational laurent_eval(const LaurentPolynomial& p, const Assignment& point) {
    Rational value(0);
    for (const auto& [m, c] : p.terms()) value += c * monomial_eval(m, point);
    return value;
}

}  // namespace gtbrion
