#pragma once

// Decomposability: H_r attains sum_X witt(mu(X), r) over every field.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "arrlie/freelie.hpp"
#include "arrlie/holonomy.hpp"
#include "arrlie/lattice.hpp"

namespace arrlie {

/// Q when characteristic == 0, otherwise F_p.
struct Field {
    long long characteristic = 0;
    static Field rationals() { return {0}; }
    static Field prime(long long p) {
        if (p < 2) throw std::invalid_argument("Field::prime: p must be prime");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("Field::prime: p must be prime");
        return {p};
    }
};

inline int dim_over(const GradedPiece& piece, Field k) {
    return k.characteristic == 0 ? piece.rank_q : piece.dim_mod(k.characteristic);
}

inline long long falk_lower_bound(const Arrangement& a, int r) {
    if (r < 2) throw std::invalid_argument("falk_lower_bound: r must be >= 2");
    long long s = 0;
    for (const auto& f : a.flats) s += witt_rank(f.mu, r);
    return s;
}

/// Prime divisors, ascending.
inline std::vector<Integer> prime_divisors(Integer n) {
    std::vector<Integer> out;
    n = abs_value(n);
    for (Integer d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

/// Primes dividing some invariant factor of the piece.
inline std::vector<Integer> bad_primes(const GradedPiece& piece) {
    std::vector<Integer> out;
    for (const auto& t : piece.torsion)
        for (auto& p : prime_divisors(t)) out.push_back(std::move(p));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool is_k_decomposable(const Holonomy& h, const Arrangement& a, int r, Field k) {
    return dim_over(h.piece(r), k) == falk_lower_bound(a, r);
}

inline bool is_k_decomposable(const Arrangement& a, int r, Field k, Limits limits = {}) {
    return is_k_decomposable(Holonomy(a, r, limits), a, r, k);
}

struct BadPrime {
    Integer prime;
    int dim = 0;  // dimension of H_r tensor F_p
};

struct DecompReport {
    int degree = 3;
    int rank_q = 0;
    long long falk_bound = 0;
    std::vector<BadPrime> bad_primes;
    bool rational_equal = false;  // verdict over Q and every prime not listed
    bool overall = false;         // decomposable over every field

    bool verdict(Field k) const {
        for (const auto& b : bad_primes)
            if (b.prime == k.characteristic) return b.dim == falk_bound;
        return rational_equal;
    }
};

inline DecompReport decomposition_report(const Holonomy& h, const Arrangement& a, int r) {
    const GradedPiece piece = h.piece(r);
    DecompReport rep;
    rep.degree = r;
    rep.rank_q = piece.rank_q;
    rep.falk_bound = falk_lower_bound(a, r);
    for (const auto& p : bad_primes(piece)) {
        int d = piece.rank_q;
        for (const auto& t : piece.torsion)
            if (t % p == 0) ++d;
        rep.bad_primes.push_back({p, d});
    }
    rep.rational_equal = rep.rank_q == rep.falk_bound;
    rep.overall = rep.rational_equal && rep.bad_primes.empty();
    return rep;
}

inline DecompReport is_decomposable(const Arrangement& a, Limits limits = {}) {
    return decomposition_report(Holonomy(a, 3, limits), a, 3);
}

struct HeredityCase {
    std::vector<int> ids;
    bool decomposable = false;
};

/// Checks every single-hyperplane deletion and `samples` random subsets of
/// size >= 3 (fixed seed). Returns the cases that were not decomposable.
inline std::vector<HeredityCase> heredity_suite(const Arrangement& a, int samples, std::uint64_t seed = 20240601,
                                                std::vector<HeredityCase>* checked = nullptr) {
    const int n = a.size();
    std::vector<std::vector<int>> subsets;
    if (n >= 2)
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> ids;
            for (int i = 0; i < n; ++i)
                if (i != drop) ids.push_back(i);
            subsets.push_back(std::move(ids));
        }
    if (n >= 3) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size_dist(3, n);
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (int s = 0; s < samples; ++s) {
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<int> ids(all.begin(), all.begin() + size_dist(rng));
            std::sort(ids.begin(), ids.end());
            subsets.push_back(std::move(ids));
        }
    }
    std::vector<HeredityCase> failures;
    for (auto& ids : subsets) {
        HeredityCase c{ids, is_decomposable(restrict(a, ids)).overall};
        if (!c.decomposable) failures.push_back(c);
        if (checked) checked->push_back(std::move(c));
    }
    return failures;
}

}  // namespace arrlie
