#pragma once

#include "gtbrion/laurent.hpp"
#include "gtbrion/rational.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace gtbrion {

class InvalidWeight : public Error {
public:
    using Error::Error;
};

/// Enumeration refused because the pattern count is above the cap.
class CapExceeded : public Error {
public:
    CapExceeded(const Integer& count, std::uint64_t cap)
        : Error("pattern count " + count.get_str() + " exceeds cap " + std::to_string(cap)), count_(count) {}
    const Integer& count() const { return count_; }

private:
    Integer count_;
};

inline constexpr std::uint64_t kDefaultPatternCap = 10'000'000;

/// Integer weight (λ_1, ..., λ_n).
struct Weight {
    std::vector<long long> entries;

    Weight() = default;
    Weight(std::initializer_list<long long> e) : entries(e) {}
    explicit Weight(std::vector<long long> e) : entries(std::move(e)) {}

    int size() const { return static_cast<int>(entries.size()); }
    long long operator[](std::size_t i) const { return entries[i]; }
    /// 1-based coordinate.
    long long at(int i) const { return entries.at(i - 1); }

    bool is_dominant() const {
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (entries[i - 1] < entries[i]) return false;
        return true;
    }
    /// Pairwise distinct coordinates.
    bool is_regular() const {
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = i + 1; j < entries.size(); ++j)
                if (entries[i] == entries[j]) return false;
        return true;
    }

    long long total() const {
        long long s = 0;
        for (auto e : entries) s += e;
        return s;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries[i]);
        }
        return s + ")";
    }

    auto operator<=>(const Weight&) const = default;
};

/// Parse "5,4,2,0" (whitespace tolerated).
inline Weight parse_weight(std::string_view text) {
    Weight w;
    std::string item;
    std::stringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw InvalidWeight("weight entry '" + item + "' is not an integer");
        }
        while (pos < item.size() && item[pos] == ' ') ++pos;
        if (pos != item.size()) throw InvalidWeight("weight entry '" + item + "' is not an integer");
        w.entries.push_back(v);
    }
    if (w.entries.empty()) throw InvalidWeight("empty weight");
    return w;
}

inline void require_dominant(const Weight& lambda) {
    if (lambda.entries.empty()) throw InvalidWeight("empty weight");
    if (!lambda.is_dominant())
        throw InvalidWeight("weight " + lambda.to_string() + " is not dominant (entries must be non-increasing)");
}

/// Position (i, j) in the pattern triangle: 0 <= i <= n-1, 1 <= j <= n-i.
struct Node {
    int row = 0;
    int col = 1;
    auto operator<=>(const Node&) const = default;
};

/// Flat (i, j)-major indexing of the n(n+1)/2 pattern coordinates.
struct Layout {
    int n = 0;

    int size() const { return n * (n + 1) / 2; }
    int free_size() const { return n * (n - 1) / 2; }
    int row_offset(int i) const { return i * n - i * (i - 1) / 2; }
    int row_length(int i) const { return n - i; }
    int index(const Node& p) const { return row_offset(p.row) + p.col - 1; }
    int index(int i, int j) const { return row_offset(i) + j - 1; }
    bool contains(const Node& p) const { return p.row >= 0 && p.row < n && p.col >= 1 && p.col <= n - p.row; }

    Node node(int flat) const {
        int i = 0;
        while (flat >= row_length(i)) {
            flat -= row_length(i);
            ++i;
        }
        return {i, flat + 1};
    }

    std::vector<Node> nodes() const {
        std::vector<Node> out;
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= n - i; ++j) out.push_back({i, j});
        return out;
    }
};

/// Triangular integer array {A_{i,j}}; row 0 is the weight.
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<std::vector<long long>> rows) : rows_(std::move(rows)) {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i].size() != rows_.size() - i) throw Error("pattern rows do not form a triangle");
    }

    static GTPattern from_flat(int n, const std::vector<long long>& flat) {
        Layout layout{n};
        std::vector<std::vector<long long>> rows(n);
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= n - i; ++j) rows[i].push_back(flat.at(layout.index(i, j)));
        return GTPattern(std::move(rows));
    }

    int n() const { return static_cast<int>(rows_.size()); }
    Layout layout() const { return {n()}; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }
    long long at(int i, int j) const { return rows_.at(i).at(j - 1); }
    long long at(const Node& p) const { return at(p.row, p.col); }
    Weight top() const { return Weight(rows_.empty() ? std::vector<long long>{} : rows_[0]); }

    std::vector<long long> flat() const {
        std::vector<long long> out;
        for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
        return out;
    }

    auto operator<=>(const GTPattern&) const = default;
    bool operator==(const GTPattern&) const = default;

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += " / ";
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ",";
                s += std::to_string(rows_[i][j]);
            }
        }
        return s;
    }

private:
    std::vector<std::vector<long long>> rows_;
};

/// Interlacing A_{i,j} >= A_{i+1,j} >= A_{i,j+1} with top row lambda.
inline bool is_valid_pattern(const GTPattern& a, const Weight& lambda) {
    if (a.n() != lambda.size()) return false;
    if (a.top() != lambda) return false;
    for (int i = 1; i < a.n(); ++i)
        for (int j = 1; j <= a.n() - i; ++j)
            if (!(a.at(i - 1, j) >= a.at(i, j) && a.at(i, j) >= a.at(i - 1, j + 1))) return false;
    return true;
}

/// Number of patterns with top row lambda: prod_{i<j} (λ_i - λ_j + j - i)/(j - i).
inline Integer weyl_dimension(const Weight& lambda) {
    require_dominant(lambda);
    Rational d(1);
    int n = lambda.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) d *= make_rational(lambda.at(i) - lambda.at(j) + j - i, j - i);
    if (!is_integer(d)) throw InternalInconsistency("dimension formula produced a non-integer");
    return d.get_num();
}

namespace detail {

template <typename Visit>
void enumerate_rows(std::vector<std::vector<long long>>& rows, int i, int j, Visit& visit) {
    int n = static_cast<int>(rows.size());
    if (i == n) {
        visit(rows);
        return;
    }
    if (j > n - i) {
        enumerate_rows(rows, i + 1, 1, visit);
        return;
    }
    long long lo = rows[i - 1][j];
    long long hi = rows[i - 1][j - 1];
    for (long long v = lo; v <= hi; ++v) {
        rows[i][j - 1] = v;
        enumerate_rows(rows, i, j + 1, visit);
    }
}

}  // namespace detail

/// All GT patterns with top row lambda, lexicographic in the flat (i, j)-major
/// coordinates. Refuses when the pattern count exceeds cap.
inline std::vector<GTPattern> enumerate_patterns(const Weight& lambda, std::uint64_t cap = kDefaultPatternCap) {
    require_dominant(lambda);
    Integer count = weyl_dimension(lambda);
    if (count > Integer(std::to_string(cap), 10)) throw CapExceeded(count, cap);
    int n = lambda.size();
    std::vector<std::vector<long long>> rows(n);
    rows[0] = lambda.entries;
    for (int i = 1; i < n; ++i) rows[i].assign(n - i, 0);
    std::vector<GTPattern> out;
    out.reserve(count.get_ui());
    auto visit = [&](const std::vector<std::vector<long long>>& r) { out.emplace_back(r); };
    if (n == 1) {
        out.emplace_back(rows);
        return out;
    }
    detail::enumerate_rows(rows, 1, 1, visit);
    return out;
}

/// (μ_A)_i = Σ_j A_{i-1,j} - Σ_j A_{i,j}, with row n empty.
inline Weight weight_of(const GTPattern& a) {
    int n = a.n();
    std::vector<long long> sums(n + 1, 0);
    for (int i = 0; i < n; ++i)
        for (long long v : a.rows()[i]) sums[i] += v;
    std::vector<long long> mu(n);
    for (int i = 1; i <= n; ++i) mu[i - 1] = sums[i - 1] - sums[i];
    return Weight(std::move(mu));
}

/// e^mu = x1^mu_1 ... xn^mu_n
inline ExponentVector weight_monomial(const Weight& mu) {
    ExponentVector m;
    for (int i = 1; i <= mu.size(); ++i) m.set(Variable::x(i), mu.at(i));
    return m;
}

inline Assignment x_assignment(const std::vector<Rational>& x) {
    Assignment a;
    for (std::size_t i = 0; i < x.size(); ++i) a[Variable::x(static_cast<int>(i) + 1)] = x[i];
    return a;
}

/// s_λ = Σ_A e^{μ_A} over all GT patterns A with top row λ.
inline LaurentPolynomial schur_polynomial(const Weight& lambda, std::uint64_t cap = kDefaultPatternCap) {
    LaurentPolynomial s;
    for (const auto& a : enumerate_patterns(lambda, cap)) s.add_term(weight_monomial(weight_of(a)), Rational(1));
    return s;
}

inline Rational schur_eval(const Weight& lambda, const std::vector<Rational>& x,
                           std::uint64_t cap = kDefaultPatternCap) {
    if (static_cast<int>(x.size()) != lambda.size()) throw Error("point dimension does not match weight length");
    return laurent_eval(schur_polynomial(lambda, cap), x_assignment(x));
}

}  // namespace gtbrion
