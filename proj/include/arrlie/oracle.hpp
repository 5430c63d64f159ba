#pragma once

// Brute-force check of holonomy ranks. The enveloping algebra of H(A) over Q
// is T(V)/(R) with R spanned by x_H s_X - s_X x_H, s_X the sum over the flat.
// PBW gives its Hilbert series as prod_r (1 - t^r)^{-h_r}. Everything here
// uses its own rational elimination, not the integer code in linalg.hpp.

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "arrlie/holonomy.hpp"
#include "arrlie/lattice.hpp"

namespace arrlie::oracle {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

using Row = std::vector<std::pair<long long, Rational>>;  // sorted by column

// Echelon rows over Q with leading coefficient 1, keyed by leading column.
class RationalEchelon {
  public:
    void add(Row row) {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                const Rational lead = row.front().second;
                for (auto& [c, x] : row) x /= lead;
                pivots_.emplace(row.front().first, std::move(row));
                return;
            }
            const Rational f = row.front().second;
            row = subtract(row, f, it->second);
        }
    }
    long long rank() const { return static_cast<long long>(pivots_.size()); }

  private:
    static Row subtract(const Row& a, const Rational& f, const Row& b) {
        Row out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, -f * b[j].second);
                ++j;
            } else {
                Rational x = a[i].second - f * b[j].second;
                if (x != 0) out.emplace_back(a[i].first, std::move(x));
                ++i;
                ++j;
            }
        }
        return out;
    }

    std::map<long long, Row> pivots_;
};

inline long long ipow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace detail

/// Quadratic relations as maps from two-letter words (index a*n + b) to
/// coefficients.
inline std::vector<std::map<long long, BigInt>> associative_relations(const Arrangement& a) {
    const long long n = a.size();
    std::vector<std::map<long long, BigInt>> out;
    for (const auto& f : a.flats)
        for (int h : f.members) {
            std::map<long long, BigInt> rel;
            for (int h2 : f.members) {
                if (h2 == h) continue;
                rel[h * n + h2] += 1;
                rel[h2 * n + h] -= 1;
            }
            out.push_back(std::move(rel));
        }
    return out;
}

/// a_0..a_{r_max}: dimensions of T(V)/(R) in each degree.
inline std::vector<long long> quadratic_algebra_dims(const Arrangement& a, int r_max, Limits limits = {}) {
    if (r_max < 0) throw std::invalid_argument("quadratic_algebra_dims: r_max must be >= 0");
    const long long n = a.size();
    for (int r = 0; r <= r_max; ++r) {
        BigInt size = 1;
        for (int k = 0; k < r; ++k) size *= n;
        if (size > limits.max_rows) limits.check(limits.max_rows + 1, "oracle tensor degree " + std::to_string(r));
    }
    const auto rels = associative_relations(a);
    std::vector<long long> dims;
    for (int r = 0; r <= r_max; ++r) {
        const long long total = detail::ipow_ll(n, r);
        if (r < 2) {
            dims.push_back(total);
            continue;
        }
        detail::RationalEchelon ech;
        for (int left = 0; left + 2 <= r; ++left) {
            const int right = r - 2 - left;
            const long long nl = detail::ipow_ll(n, left), nr = detail::ipow_ll(n, right);
            for (long long u = 0; u < nl; ++u)
                for (const auto& rel : rels)
                    for (long long v = 0; v < nr; ++v) {
                        detail::Row row;
                        for (const auto& [w, c] : rel)
                            if (c != 0) row.emplace_back((u * n * n + w) * nr + v, Rational(c));
                        ech.add(std::move(row));
                    }
        }
        dims.push_back(total - ech.rank());
    }
    return dims;
}

/// h_1..h_N with prod_r (1 - t^r)^{-h_r} = sum_r dims[r] t^r.
inline std::vector<long long> holonomy_dims_from_hilbert(const std::vector<long long>& dims) {
    if (dims.empty() || dims[0] != 1) throw std::invalid_argument("holonomy_dims_from_hilbert: dims[0] must be 1");
    const int n = static_cast<int>(dims.size()) - 1;
    std::vector<BigInt> s(dims.begin(), dims.end());
    std::vector<long long> h;
    for (int r = 1; r <= n; ++r) {
        if (s[r] < 0) throw std::domain_error("holonomy_dims_from_hilbert: negative rank extracted");
        const long long hr = s[r].convert_to<long long>();
        h.push_back(hr);
        // multiply by (1 - t^r) hr times
        for (long long k = 0; k < hr; ++k)
            for (int j = n; j >= r; --j) s[j] -= s[j - r];
    }
    return h;
}

}  // namespace arrlie::oracle
