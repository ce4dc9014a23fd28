#pragma once

#include "gtbrion/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace gtbrion {

/// Bijection of {1..n} stored as its one-line image array.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
                throw Error("image array is not a permutation of 1..n");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(i - 1); }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<int> v(images_.size());
        for (int i = 1; i <= size(); ++i) v[(*this)(i) - 1] = i;
        return Permutation(std::move(v));
    }

    /// (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw Error("composing permutations of different sizes");
        std::vector<int> v(a.images_.size());
        for (int i = 1; i <= a.size(); ++i) v[i - 1] = a(b(i));
        return Permutation(std::move(v));
    }

    /// Action on weights by permuting coordinates: (w mu)_{w(i)} = mu_i.
    template <typename T>
    std::vector<T> act(const std::vector<T>& mu) const {
        if (static_cast<int>(mu.size()) != size()) throw Error("weight length does not match permutation size");
        std::vector<T> out(mu.size());
        for (int i = 1; i <= size(); ++i) out[(*this)(i) - 1] = mu[i - 1];
        return out;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(images_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> images_;
};

/// All of S_n in lexicographic order of image arrays.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace gtbrion
