#pragma once

// Truncated integer power series and the rank tables built from them.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrlie/decomp.hpp"
#include "arrlie/freelie.hpp"
#include "arrlie/holonomy.hpp"
#include "arrlie/lattice.hpp"

namespace arrlie {

/// Coefficients of t^0..t^N, exact.
class PowerSeries {
  public:
    explicit PowerSeries(int truncation = 0) : c_(truncation + 1) {
        if (truncation < 0) throw std::invalid_argument("PowerSeries: negative truncation");
    }
    static PowerSeries one(int n) {
        PowerSeries s(n);
        s.c_[0] = 1;
        return s;
    }
    /// Polynomial sum_k coeffs[k] t^k, truncated at n.
    static PowerSeries polynomial(const std::vector<Integer>& coeffs, int n) {
        PowerSeries s(n);
        for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= n; ++k) s.c_[k] = coeffs[k];
        return s;
    }
    /// 1 + a t^k
    static PowerSeries binomial_term(const Integer& a, int k, int n) {
        PowerSeries s = one(n);
        if (k <= n) s.c_[k] += a;
        return s;
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& operator[](int k) const { return c_.at(k); }
    Integer& operator[](int k) { return c_.at(k); }
    const std::vector<Integer>& coefficients() const { return c_; }
    bool operator==(const PowerSeries&) const = default;

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const int n = std::min(a.truncation(), b.truncation());
        PowerSeries out(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return out;
    }
    PowerSeries& operator*=(const PowerSeries& b) { return *this = *this * b; }

    /// Requires constant term +-1.
    PowerSeries inverse() const {
        if (c_[0] != 1 && c_[0] != -1) throw std::domain_error("PowerSeries::inverse: constant term is not a unit");
        const int n = truncation();
        PowerSeries out(n);
        out.c_[0] = c_[0];
        for (int k = 1; k <= n; ++k) {
            Integer s = 0;
            for (int j = 1; j <= k; ++j) s += c_[j] * out.c_[k - j];
            out.c_[k] = -s * c_[0];
        }
        return out;
    }
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

    PowerSeries pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        PowerSeries result = one(truncation()), base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            base *= base;
            e >>= 1;
        }
        return result;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= truncation(); ++k) {
            if (c_[k] == 0) continue;
            Integer a = abs_value(c_[k]);
            if (first) os << (c_[k] < 0 ? "-" : "");
            else os << (c_[k] < 0 ? " - " : " + ");
            if (k == 0 || a != 1) os << a;
            if (k >= 1) os << "t";
            if (k >= 2) os << "^" << k;
            first = false;
        }
        if (first) os << "0";
        os << " + O(t^" << truncation() + 1 << ")";
        return os.str();
    }

  private:
    std::vector<Integer> c_;
};

struct RankTable {
    enum class Kind { Lcs, Chen, HolonomyField };
    Kind kind = Kind::Lcs;
    long long characteristic = 0;     // for HolonomyField
    std::map<int, long long> values;  // degree -> rank
    bool operator==(const RankTable&) const = default;
};

/// prod_{r>=1} (1 - t^r)^{phi_r}, truncated at n.
inline PowerSeries lcs_product(const RankTable& t, int n) {
    PowerSeries s = PowerSeries::one(n);
    for (const auto& [r, phi] : t.values)
        if (r <= n) s *= PowerSeries::binomial_term(-1, r, n).pow(phi);
    return s;
}

/// (1 - t)^{b1 - b2} prod_X (1 - mu(X) t), truncated at n.
inline PowerSeries lcs_closed_form(const Arrangement& a, int n) {
    PowerSeries s = PowerSeries::binomial_term(-1, 1, n).pow(a.b1() - a.b2());
    for (const auto& f : a.flats) s *= PowerSeries::binomial_term(-f.mu, 1, n);
    return s;
}

inline void require_decomposable(const Arrangement& a, bool check, const char* who) {
    if (check && !is_decomposable(a).overall)
        throw std::invalid_argument(std::string(who) + ": arrangement is not decomposable");
}

/// phi_1 = b1, phi_r = sum_X witt(mu(X), r). With check = false the
/// formula is evaluated for any arrangement.
inline RankTable lcs_ranks_decomposable(const Arrangement& a, int r_max, bool check = true) {
    require_decomposable(a, check, "lcs_ranks_decomposable");
    RankTable t{RankTable::Kind::Lcs, 0, {}};
    t.values[1] = a.b1();
    for (int r = 2; r <= r_max; ++r) t.values[r] = falk_lower_bound(a, r);
    return t;
}

/// Ranks of H_r over Q (characteristic 0) or F_p.
inline RankTable holonomy_table(const Holonomy& h, long long characteristic = 0) {
    RankTable t{characteristic == 0 ? RankTable::Kind::Lcs : RankTable::Kind::HolonomyField, characteristic, {}};
    for (int r = 1; r <= h.max_degree(); ++r) {
        const GradedPiece p = h.piece(r);
        t.values[r] = characteristic == 0 ? p.rank_q : p.dim_mod(characteristic);
    }
    return t;
}

struct LcsCheck {
    bool match = false;
    RankTable ranks;
    PowerSeries product, closed_form;
};

enum class RankSource { Computed, Formula };

/// Compares prod (1 - t^r)^{phi_r} with the closed form through degree r_max.
/// By default phi_r are the computed holonomy ranks; RankSource::Formula uses
/// the decomposable formula instead.
inline LcsCheck lcs_product_check(const Arrangement& a, int r_max, RankSource source = RankSource::Computed,
                                  Limits limits = {}) {
    LcsCheck c;
    c.ranks = source == RankSource::Computed ? holonomy_table(Holonomy(a, r_max, limits))
                                             : lcs_ranks_decomposable(a, r_max, false);
    c.product = lcs_product(c.ranks, r_max);
    c.closed_form = lcs_closed_form(a, r_max);
    c.match = c.product == c.closed_form;
    return c;
}

inline long long chen_lower_bound(const Arrangement& a, int r) {
    if (r < 2) throw std::invalid_argument("chen_lower_bound: r must be >= 2");
    long long s = 0;
    for (const auto& f : a.flats) s += chen_free_rank(f.mu, r);
    return s;
}

inline RankTable chen_ranks_decomposable(const Arrangement& a, int r_max, bool check = true) {
    require_decomposable(a, check, "chen_ranks_decomposable");
    RankTable t{RankTable::Kind::Chen, 0, {}};
    t.values[1] = a.b1();
    for (int r = 2; r <= r_max; ++r) t.values[r] = chen_lower_bound(a, r);
    return t;
}

/// Ranks of B = H'/H''. In degree r >= 2, H''_r is spanned by the brackets of
/// generators of degrees s, r - s >= 2.
inline RankTable chen_ranks_direct(const Holonomy& h) {
    RankTable t{RankTable::Kind::Chen, 0, {}};
    t.values[1] = h.b1();
    for (int r = 2; r <= h.max_degree(); ++r) {
        const auto& d = h.degree(r);
        std::vector<int> free_pos(d.order.size(), -1);
        int nfree = 0;
        for (std::size_t g = 0; g < d.order.size(); ++g)
            if (d.order[g] == 0) free_pos[g] = nfree++;
        std::vector<SparseVec> rows;
        for (std::size_t p = 0; p < d.pairs.size(); ++p) {
            if (h.degree_of_global(d.pairs[p].first) < 2) continue;
            SparseVec row;
            for (const auto& x : d.pair_class[p])
                if (free_pos[x.index] >= 0) row.push_back({free_pos[x.index], x.coeff});
            if (!row.empty()) rows.push_back(std::move(row));
        }
        t.values[r] = nfree - rational_rank(nfree, rows);
    }
    return t;
}

inline RankTable chen_ranks_direct(const Arrangement& a, int r_max, Limits limits = {}) {
    if (r_max < 2) throw std::invalid_argument("chen_ranks_direct: r_max must be >= 2");
    return chen_ranks_direct(Holonomy(a, r_max, limits));
}

struct HsCheck {
    bool holds = false;
    PowerSeries lhs, rhs;
};

/// prod_i (1 + d_i t) against (1 + t)^{b1} prod_X (1 + mu(X) t) / (1 + t)^{mu(X)},
/// through degree max(#exponents, r_max).
inline HsCheck hypersolvable_consistency(const Arrangement& a, const std::vector<long long>& exponents,
                                         int r_max = kDefaultMaxDegree) {
    const int n = std::max(static_cast<int>(exponents.size()), r_max);
    HsCheck c;
    c.lhs = PowerSeries::one(n);
    for (long long d : exponents) c.lhs *= PowerSeries::binomial_term(d, 1, n);
    const PowerSeries one_plus_t = PowerSeries::binomial_term(1, 1, n);
    c.rhs = one_plus_t.pow(a.b1());
    for (const auto& f : a.flats) c.rhs = c.rhs * PowerSeries::binomial_term(f.mu, 1, n) / one_plus_t.pow(f.mu);
    c.holds = c.lhs == c.rhs;
    return c;
}

/// True when kappa_1 - 2 kappa_2 <= 0, i.e. A cannot be both decomposable and
/// hypersolvable. Needs mu in {1, 2} on every flat.
inline bool graphlike_hs_obstruction(const Arrangement& a) {
    long long k2 = 0;
    for (const auto& f : a.flats) {
        if (f.mu > 2) throw std::invalid_argument("graphlike_hs_obstruction: flat with mu > 2");
        if (f.mu == 2) ++k2;
    }
    return a.b1() - 2 * k2 <= 0;
}

}  // namespace arrlie
