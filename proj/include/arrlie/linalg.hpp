#pragma once

// Exact integer linear algebra: sparse vectors, an incremental row echelon
// form that keeps an exact Z-basis of the row lattice, Smith normal form,
// and presentations of finitely generated abelian groups Z^n / L.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arrlie {

using Integer = boost::multiprecision::cpp_int;

struct Term {
    int index;
    Integer coeff;
    bool operator==(const Term&) const = default;
};

/// Sorted by index, no zero coefficients.
using SparseVec = std::vector<Term>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<Integer, Integer, Integer> xgcd(Integer a, Integer b) {
    Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Integer q = a / b;
        Integer r = a - q * b;
        a = std::move(b);
        b = std::move(r);
        Integer s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Integer t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

/// Floor division remainder in [0, m) for m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

inline SparseVec sparse_from_pairs(std::vector<std::pair<int, Integer>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec out;
    for (auto& [i, c] : pairs) {
        if (!out.empty() && out.back().index == i)
            out.back().coeff += c;
        else
            out.push_back({i, std::move(c)});
        if (out.back().coeff == 0) out.pop_back();
    }
    return out;
}

/// y + c * x
inline SparseVec axpy(const SparseVec& y, const Integer& c, const SparseVec& x) {
    if (c == 0) return y;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].index < x[j].index)) {
            out.push_back(y[i++]);
        } else if (i == y.size() || x[j].index < y[i].index) {
            out.push_back({x[j].index, c * x[j].coeff});
            ++j;
        } else {
            Integer v = y[i].coeff + c * x[j].coeff;
            if (v != 0) out.push_back({y[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

/// a*x + b*y
inline SparseVec lincomb(const Integer& a, const SparseVec& x, const Integer& b,
                         const SparseVec& y) {
    SparseVec out;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
            if (a != 0) out.push_back({x[i].index, a * x[i].coeff});
            ++i;
        } else if (i == x.size() || y[j].index < x[i].index) {
            if (b != 0) out.push_back({y[j].index, b * y[j].coeff});
            ++j;
        } else {
            Integer v = a * x[i].coeff + b * y[j].coeff;
            if (v != 0) out.push_back({x[i].index, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

inline SparseVec scaled(const SparseVec& x, const Integer& c) {
    if (c == 0) return {};
    SparseVec out = x;
    for (auto& t : out) t.coeff *= c;
    return out;
}

/// Accumulates sums of sparse vectors; cheaper than repeated axpy.
class SparseAccumulator {
  public:
    void add(const SparseVec& x, const Integer& c) {
        if (c == 0) return;
        for (const auto& t : x) acc_[t.index] += c * t.coeff;
    }
    void add(int index, const Integer& c) {
        if (c != 0) acc_[index] += c;
    }
    SparseVec take() {
        SparseVec out;
        out.reserve(acc_.size());
        for (auto& [i, c] : acc_)
            if (c != 0) out.push_back({i, std::move(c)});
        acc_.clear();
        return out;
    }

  private:
    std::map<int, Integer> acc_;
};

/// Row echelon basis of the Z-lattice spanned by the rows added so far.
/// Rows are keyed by their leading column; leading coefficients are positive.
/// Non-divisible leading entries are merged with an extended-gcd step, so the
/// stored rows always form an exact basis of the lattice.
class LatticeEchelon {
  public:
    explicit LatticeEchelon(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }

    /// Reduces `row` against the basis; returns true when the lattice grew.
    bool add(SparseVec row) {
        while (!row.empty()) {
            const int lead = row.front().index;
            if (lead < 0 || lead >= ncols_) throw std::out_of_range("LatticeEchelon: column out of range");
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                if (row.front().coeff < 0)
                    for (auto& t : row) t.coeff = -t.coeff;
                rows_.emplace(lead, std::move(row));
                return true;
            }
            SparseVec& piv = it->second;
            const Integer& a = piv.front().coeff;
            const Integer b = row.front().coeff;
            if (b % a == 0) {
                row = axpy(row, Integer(-(b / a)), piv);
            } else {
                auto [g, s, t] = xgcd(a, b);
                SparseVec new_piv = lincomb(s, piv, t, row);
                SparseVec rest = lincomb(Integer(-(b / g)), piv, Integer(a / g), row);
                piv = std::move(new_piv);
                row = std::move(rest);
            }
        }
        return false;
    }

    /// Reduces `row` by the basis; the result is zero iff row is in the lattice.
    SparseVec reduce(SparseVec row) const {
        SparseVec kept;
        while (!row.empty()) {
            const int lead = row.front().index;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                kept.push_back(row.front());
                row.erase(row.begin());
                continue;
            }
            const Integer& a = it->second.front().coeff;
            Integer q = row.front().coeff / a;
            if (row.front().coeff - q * a < 0) q -= 1;
            if (q == 0) {
                kept.push_back(row.front());
                row.erase(row.begin());
                continue;
            }
            row = axpy(row, Integer(-q), it->second);
        }
        return kept;
    }

    bool contains(const SparseVec& row) const { return reduce(row).empty(); }

  private:
    int ncols_;
    std::map<int, SparseVec> rows_;
};

using DenseMatrix = std::vector<std::vector<Integer>>;

struct SmithResult {
    std::vector<Integer> diagonal;  // min(rows, cols) entries, nonnegative
    DenseMatrix col_transform;      // V, with U * M * V = D
    DenseMatrix col_transform_inv;  // V^{-1}
};

/// Smith normal form with the column transform and its inverse. The row
/// transform is not needed by any caller and is not tracked.
inline SmithResult smith_normal_form(DenseMatrix m, int ncols, bool track = true) {
    const int nrows = static_cast<int>(m.size());
    DenseMatrix v, vinv;
    if (track) {
        v.assign(ncols, std::vector<Integer>(ncols));
        vinv.assign(ncols, std::vector<Integer>(ncols));
        for (int i = 0; i < ncols; ++i) v[i][i] = vinv[i][i] = 1;
    }
    auto col_sub = [&](int j, int k, const Integer& q) {  // col_j -= q col_k
        for (int r = 0; r < nrows; ++r)
            if (m[r][k] != 0) m[r][j] -= q * m[r][k];
        if (track) {
            for (int r = 0; r < ncols; ++r)
                if (v[r][k] != 0) v[r][j] -= q * v[r][k];
            for (int c = 0; c < ncols; ++c)
                if (vinv[j][c] != 0) vinv[k][c] += q * vinv[j][c];
        }
    };
    auto col_swap = [&](int j, int k) {
        if (j == k) return;
        for (int r = 0; r < nrows; ++r) std::swap(m[r][j], m[r][k]);
        if (track) {
            for (int r = 0; r < ncols; ++r) std::swap(v[r][j], v[r][k]);
            std::swap(vinv[j], vinv[k]);
        }
    };
    auto row_sub = [&](int i, int k, const Integer& q) {  // row_i -= q row_k
        for (int c = 0; c < ncols; ++c)
            if (m[k][c] != 0) m[i][c] -= q * m[k][c];
    };

    const int n = std::min(nrows, ncols);
    for (int k = 0; k < n; ++k) {
        for (;;) {
            // smallest nonzero entry of the trailing block
            int pi = -1, pj = -1;
            Integer best;
            for (int i = k; i < nrows; ++i)
                for (int j = k; j < ncols; ++j)
                    if (m[i][j] != 0) {
                        Integer a = abs_value(m[i][j]);
                        if (pi < 0 || a < best) {
                            best = a;
                            pi = i;
                            pj = j;
                            if (best == 1) goto found;
                        }
                    }
        found:
            if (pi < 0) goto done;
            std::swap(m[k], m[pi]);
            col_swap(k, pj);
            bool clean = true;
            for (int i = k + 1; i < nrows; ++i) {
                if (m[i][k] == 0) continue;
                Integer q = m[i][k] / m[k][k];
                row_sub(i, k, q);
                if (m[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < ncols; ++j) {
                if (m[k][j] == 0) continue;
                Integer q = m[k][j] / m[k][k];
                col_sub(j, k, q);
                if (m[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing block by the pivot
            int bad = -1;
            for (int i = k + 1; i < nrows && bad < 0; ++i)
                for (int j = k + 1; j < ncols; ++j)
                    if (m[i][j] % m[k][k] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int c = 0; c < ncols; ++c) m[k][c] += m[bad][c];
        }
        if (m[k][k] < 0)
            for (auto& x : m[k]) x = -x;
    }
done:
    SmithResult res;
    res.diagonal.resize(n);
    for (int k = 0; k < n; ++k) res.diagonal[k] = abs_value(m[k][k]);
    res.col_transform = std::move(v);
    res.col_transform_inv = std::move(vinv);
    return res;
}

/// Nontrivial invariant factors and rank of an integer matrix.
struct SmithInvariants {
    int rank = 0;
    std::vector<Integer> factors;  // all nonzero invariant factors, divisibility-ordered
    std::vector<Integer> torsion() const {
        std::vector<Integer> t;
        for (const auto& f : factors)
            if (f > 1) t.push_back(f);
        return t;
    }
};

inline SmithInvariants smith_invariants(const DenseMatrix& m, int ncols) {
    SmithResult s = smith_normal_form(m, ncols, false);
    SmithInvariants out;
    for (const auto& d : s.diagonal)
        if (d != 0) {
            ++out.rank;
            out.factors.push_back(d);
        }
    return out;
}

/// Presentation of Z^ncols / L in Smith form. Generators are free (order 0)
/// or cyclic of order > 1; every column has a class in generator coordinates,
/// every generator a lift as an integer combination of columns.
struct Quotient {
    int ncols = 0;
    std::vector<Integer> order;
    std::vector<SparseVec> column_class;
    std::vector<SparseVec> lift;

    int dim() const { return static_cast<int>(order.size()); }
    int free_rank() const {
        return static_cast<int>(std::count(order.begin(), order.end(), Integer(0)));
    }
    std::vector<Integer> torsion() const {
        std::vector<Integer> t;
        for (const auto& o : order)
            if (o != 0) t.push_back(o);
        return t;
    }
    /// Reduces torsion coordinates into [0, order).
    SparseVec normalize(SparseVec x) const {
        SparseVec out;
        for (auto& t : x) {
            if (order[t.index] != 0) t.coeff = mod_floor(t.coeff, order[t.index]);
            if (t.coeff != 0) out.push_back(std::move(t));
        }
        return out;
    }
    /// Class of an integer combination of columns.
    SparseVec class_of(const SparseVec& cols) const {
        SparseAccumulator acc;
        for (const auto& t : cols) acc.add(column_class[t.index], t.coeff);
        return normalize(acc.take());
    }
};

/// Z^ncols modulo the span of `rows`. Unit entries are pivoted away first
/// (smallest Markowitz cost), which keeps coefficients small; whatever is
/// left goes through a dense Smith normal form.
inline Quotient quotient(int n, std::vector<SparseVec> rows) {
    std::vector<std::vector<int>> col_rows(n);  // may hold stale entries
    std::vector<int> col_count(n, 0);
    std::vector<char> alive(rows.size(), 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) alive[i] = 0;
        for (const auto& t : rows[i]) {
            if (t.index < 0 || t.index >= n) throw std::out_of_range("quotient: column out of range");
            col_rows[t.index].push_back(static_cast<int>(i));
            ++col_count[t.index];
        }
    }
    auto coeff_at = [&](int r, int c) -> const Integer* {
        auto it = std::lower_bound(rows[r].begin(), rows[r].end(), c,
                                   [](const Term& t, int k) { return t.index < k; });
        return it != rows[r].end() && it->index == c ? &it->coeff : nullptr;
    };
    std::vector<std::pair<int, int>> pivots;  // (column, row), in elimination order
    std::vector<char> pivot_col(n, 0);
    for (;;) {
        long long best = -1;
        int br = -1, bc = -1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!alive[i]) continue;
            const long long len = static_cast<long long>(rows[i].size()) - 1;
            for (const auto& t : rows[i]) {
                if (t.coeff != 1 && t.coeff != -1) continue;
                const long long cost = len * (col_count[t.index] - 1);
                if (best < 0 || cost < best) {
                    best = cost;
                    br = static_cast<int>(i);
                    bc = t.index;
                }
            }
            if (best == 0) break;
        }
        if (br < 0) break;
        alive[br] = 0;
        pivot_col[bc] = 1;
        pivots.emplace_back(bc, br);
        const SparseVec& prow = rows[br];
        const Integer psign = *coeff_at(br, bc);
        std::vector<int> targets;
        targets.swap(col_rows[bc]);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (int r : targets) {
            if (!alive[r]) continue;
            const Integer* c = coeff_at(r, bc);
            if (!c) continue;
            const Integer f = -(*c) * psign;
            for (const auto& t : rows[r]) --col_count[t.index];
            rows[r] = axpy(rows[r], f, prow);
            for (const auto& t : rows[r]) {
                ++col_count[t.index];
                col_rows[t.index].push_back(r);
            }
            if (rows[r].empty()) alive[r] = 0;
        }
        for (const auto& t : prow) --col_count[t.index];
    }

    // Residual columns: never pivoted.
    std::vector<int> residual_index(n, -1);
    std::vector<int> residual_cols;
    for (int c = 0; c < n; ++c)
        if (!pivot_col[c]) {
            residual_index[c] = static_cast<int>(residual_cols.size());
            residual_cols.push_back(c);
        }
    // expr[c]: column c as a combination of residual columns
    std::vector<SparseVec> expr(n);
    for (int c : residual_cols) expr[c] = {{residual_index[c], Integer(1)}};
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto [c, r] = *it;
        const Integer psign = *coeff_at(r, c);
        SparseAccumulator acc;
        for (const auto& t : rows[r])
            if (t.index != c) acc.add(expr[t.index], Integer(-t.coeff * psign));
        expr[c] = acc.take();
    }
    std::vector<SparseVec> res_rel;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!alive[i]) continue;
        SparseVec r;
        for (const auto& t : rows[i]) r.push_back({residual_index[t.index], t.coeff});
        res_rel.push_back(std::move(r));
    }
    // Support of the residual relations gets a Smith normal form; the other
    // residual columns are free generators as they stand.
    std::vector<int> support_pos(residual_cols.size(), -1);
    std::vector<int> support;
    for (const auto& r : res_rel)
        for (const auto& t : r)
            if (support_pos[t.index] < 0) {
                support_pos[t.index] = 0;
                support.push_back(t.index);
            }
    std::sort(support.begin(), support.end());
    for (std::size_t k = 0; k < support.size(); ++k) support_pos[support[k]] = static_cast<int>(k);

    Quotient q;
    q.ncols = n;
    std::vector<SparseVec> residual_class(residual_cols.size());
    for (std::size_t k = 0; k < residual_cols.size(); ++k) {
        if (support_pos[k] >= 0) continue;
        residual_class[k] = {{q.dim(), Integer(1)}};
        q.order.push_back(0);
        q.lift.push_back({{residual_cols[k], Integer(1)}});
    }
    if (!support.empty()) {
        const int s = static_cast<int>(support.size());
        DenseMatrix m(res_rel.size(), std::vector<Integer>(s));
        for (std::size_t i = 0; i < res_rel.size(); ++i)
            for (const auto& t : res_rel[i]) m[i][support_pos[t.index]] = t.coeff;
        SmithResult snf = smith_normal_form(std::move(m), s);
        std::vector<int> kept_gen(s, -1);
        for (int i = 0; i < s; ++i) {
            Integer d = i < static_cast<int>(snf.diagonal.size()) ? snf.diagonal[i] : Integer(0);
            if (d == 1) continue;
            kept_gen[i] = q.dim();
            q.order.push_back(d);
            SparseVec lift;
            for (int j = 0; j < s; ++j)
                if (snf.col_transform_inv[i][j] != 0)
                    lift.push_back({residual_cols[support[j]], snf.col_transform_inv[i][j]});
            q.lift.push_back(std::move(lift));
        }
        for (int j = 0; j < s; ++j) {
            SparseVec cls;
            for (int i = 0; i < s; ++i)
                if (kept_gen[i] >= 0 && snf.col_transform[j][i] != 0)
                    cls.push_back({kept_gen[i], snf.col_transform[j][i]});
            std::sort(cls.begin(), cls.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
            residual_class[support[j]] = std::move(cls);
        }
    }
    q.column_class.resize(n);
    for (int c = 0; c < n; ++c) {
        SparseAccumulator acc;
        for (const auto& t : expr[c]) acc.add(residual_class[t.index], t.coeff);
        q.column_class[c] = q.normalize(acc.take());
    }
    return q;
}

inline Quotient quotient(const LatticeEchelon& rel) {
    std::vector<SparseVec> rows;
    for (const auto& [lead, row] : rel.rows()) rows.push_back(row);
    return quotient(rel.ncols(), std::move(rows));
}

/// Rank over Q of a set of sparse integer rows.
inline int rational_rank(int ncols, const std::vector<SparseVec>& rows) {
    return ncols - quotient(ncols, rows).free_rank();
}

}  // namespace arrlie
