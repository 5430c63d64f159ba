#pragma once

// Holonomy Lie algebra of an arrangement: the free Lie algebra on the
// hyperplanes modulo the ideal generated, for every rank-2 flat X and every
// H in X, by [x_H, sum_{H' in X} x_{H'}].
//
// Two independent constructions live here.
//
// HolonomyIdeal spans the ideal J_r degree by degree inside the free Lie
// algebra (Lyndon coordinates): J_{r+1} = [generators, J_r]. It is exact but
// its matrices have witt_rank(b1, r) columns.
//
// Holonomy works in the quotient only. For a Lie ring H generated in degree 1
// with relations in degree 2, the Chevalley-Eilenberg complex gives, for
// r >= 3,
//     H_r = (Lambda^2 H)_r / d(Lambda^3 H)_r,
//     d(a^b^c) = [a,b]^c - [a,c]^b + [b,c]^a,
// and H_2 = Lambda^2 H_1 / (quadratic relations). Torsion in lower degrees
// enters through the relations (order * a)^b. Every matrix has size governed
// by dim H_{<r}, not by the free Lie algebra.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arrlie/freelie.hpp"
#include "arrlie/lattice.hpp"
#include "arrlie/linalg.hpp"

namespace arrlie {

inline constexpr int kDefaultMaxDegree = 6;

class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class MapCertificateError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Resource guard: the largest number of matrix rows or columns any single
/// degree may need. ARRLIE_RESOURCE_LIMIT overrides the default of 10^6.
struct Limits {
    long long max_rows = from_env();

    static long long from_env() {
        if (const char* s = std::getenv("ARRLIE_RESOURCE_LIMIT")) {
            char* end = nullptr;
            long long v = std::strtoll(s, &end, 10);
            if (end != s && v > 0) return v;
        }
        return 1'000'000;
    }
    void check(long long n, const std::string& what) const {
        if (n > max_rows)
            throw ResourceLimitError(what + " needs " + std::to_string(n) + " rows, limit is " + std::to_string(max_rows));
    }
};

/// Degree-2 generators of the ideal, deduplicated up to sign.
inline std::vector<LieElement> quadratic_relations(const Arrangement& a) {
    const int n = a.size();
    std::vector<LieElement> out;
    std::set<std::map<Word, Integer>> seen;
    for (const auto& f : a.flats)
        for (int h : f.members) {
            LieElement rel{n, 2, {}};
            for (int h2 : f.members) {
                if (h2 == h) continue;
                const int lo = std::min(h, h2), hi = std::max(h, h2);
                add_to(rel.coeffs, word_of({lo, hi}), Integer(h < h2 ? 1 : -1));
            }
            if (rel.is_zero()) continue;
            if (rel.coeffs.begin()->second < 0) rel *= -1;
            if (seen.insert(rel.coeffs).second) out.push_back(std::move(rel));
        }
    return out;
}

/// Graded ranks of a finitely generated graded abelian group, one degree.
struct GradedPiece {
    int degree = 0;
    int rank_q = 0;                // dimension over Q
    std::vector<Integer> torsion;  // invariant factors > 1
    /// Dimension of the piece tensored with F_p.
    int dim_mod(long long p) const {
        int d = rank_q;
        for (const auto& t : torsion)
            if (t % p == 0) ++d;
        return d;
    }
};

// ---------------------------------------------------------------------------
// Free-Lie route

class HolonomyIdeal {
  public:
    HolonomyIdeal(const Arrangement& a, int max_degree, Limits limits = {})
        : n_(a.size()), free_(std::max(1, a.size())), max_degree_(max_degree) {
        if (max_degree < 2) throw std::invalid_argument("HolonomyIdeal: max_degree must be >= 2");
        for (int r = 2; r <= max_degree; ++r) limits.check(witt_rank(n_, r), "free Lie degree " + std::to_string(r));
        bases_.resize(max_degree + 1);
        index_.resize(max_degree + 1);
        for (int r = 1; r <= max_degree; ++r) {
            bases_[r] = lyndon_basis(std::max(1, n_), r);
            for (std::size_t k = 0; k < bases_[r].size(); ++k) index_[r].emplace(bases_[r][k].letters, static_cast<int>(k));
        }
        echelons_.emplace_back(0);
        echelons_.emplace_back(static_cast<int>(bases_[1].size()));
        echelons_.emplace_back(static_cast<int>(bases_[2].size()));
        for (const auto& rel : quadratic_relations(a)) echelons_[2].add(coords(rel));
        for (int r = 2; r < max_degree; ++r) {
            LatticeEchelon next(static_cast<int>(bases_[r + 1].size()));
            for (const auto& [lead, row] : echelons_[r].rows()) {
                LieElement u = element(r, row);
                for (int h = 0; h < n_; ++h) next.add(coords(free_.bracket(free_.generator(h), u)));
            }
            echelons_.push_back(std::move(next));
        }
    }

    int max_degree() const { return max_degree_; }
    const FreeLie& free_lie() const { return free_; }
    const std::vector<LyndonWord>& basis(int r) const { return bases_.at(r); }
    /// Z-basis of J_r, rows in Lyndon coordinates of degree r.
    std::vector<SparseVec> component(int r) const {
        check_degree(r);
        std::vector<SparseVec> rows;
        for (const auto& [lead, row] : echelons_[r].rows()) rows.push_back(row);
        return rows;
    }
    const LatticeEchelon& echelon(int r) const {
        check_degree(r);
        return echelons_[r];
    }

    SparseVec coords(const LieElement& e) const {
        const auto& idx = index_.at(e.degree);
        SparseVec v;
        for (const auto& [w, c] : e.coeffs) v.push_back({idx.at(w), c});
        std::sort(v.begin(), v.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
        return v;
    }
    LieElement element(int r, const SparseVec& v) const {
        LieElement e{free_.alphabet(), r, {}};
        for (const auto& t : v) e.coeffs.emplace(bases_[r][t.index].letters, t.coeff);
        return e;
    }
    bool contains(const LieElement& e) const { return echelons_.at(e.degree).contains(coords(e)); }

    /// H_r = L_r / J_r, with r = 1 giving the free group on the hyperplanes.
    GradedPiece piece(int r) const {
        if (r == 1) return {1, n_, {}};
        check_degree(r);
        Quotient q = quotient(echelons_[r]);
        return {r, q.free_rank(), q.torsion()};
    }

  private:
    void check_degree(int r) const {
        if (r < 1 || r > max_degree_) throw std::out_of_range("HolonomyIdeal: degree out of range");
    }

    int n_;
    FreeLie free_;
    int max_degree_;
    std::vector<std::vector<LyndonWord>> bases_;
    std::vector<std::unordered_map<Word, int>> index_;
    std::vector<LatticeEchelon> echelons_;
};

/// Spanning rows of J_r in Lyndon coordinates (an exact Z-basis).
inline std::vector<SparseVec> ideal_component(const Arrangement& a, int r, Limits limits = {}) {
    return HolonomyIdeal(a, r, limits).component(r);
}

// ---------------------------------------------------------------------------
// Quotient route

class Holonomy {
  public:
    struct Degree {
        std::vector<Integer> order;                // per generator; 0 = infinite
        std::vector<SparseVec> lift;               // per generator, over pair indices
        std::vector<std::pair<int, int>> pairs;    // global generator ids, first < second
        std::vector<SparseVec> pair_class;         // per pair, generator coordinates
        std::unordered_map<std::uint64_t, int> pair_index;
    };

    Holonomy(const Arrangement& a, int max_degree = kDefaultMaxDegree, Limits limits = {})
        : b1_(a.size()), max_degree_(max_degree), limits_(limits) {
        if (max_degree < 1) throw std::invalid_argument("Holonomy: max_degree must be >= 1");
        if (auto err = validation_error(a)) throw ArrangementError("invalid arrangement: " + *err);
        degrees_.resize(max_degree + 1);
        offset_.assign(max_degree + 2, 0);
        degrees_[1].order.assign(b1_, 0);
        degrees_[1].lift.assign(b1_, {});
        offset_[2] = b1_;
        for (int r = 2; r <= max_degree; ++r) {
            build_degree(a, r);
            offset_[r + 1] = offset_[r] + dim(r);
        }
    }

    int b1() const { return b1_; }
    int max_degree() const { return max_degree_; }
    int dim(int r) const { return static_cast<int>(degree(r).order.size()); }
    const Degree& degree(int r) const {
        if (r < 1 || r > max_degree_) throw std::out_of_range("Holonomy: degree out of range");
        return degrees_[r];
    }
    GradedPiece piece(int r) const {
        const Degree& d = degree(r);
        GradedPiece p{r, 0, {}};
        for (const auto& o : d.order) {
            if (o == 0) ++p.rank_q;
            else p.torsion.push_back(o);
        }
        std::sort(p.torsion.begin(), p.torsion.end());
        return p;
    }
    int rank_q(int r) const { return piece(r).rank_q; }
    int global_id(int r, int local) const { return offset_[r] + local; }
    int degree_of_global(int g) const {
        int r = 1;
        while (r < max_degree_ && g >= offset_[r + 1]) ++r;
        return r;
    }

    SparseVec normalize(int r, SparseVec v) const {
        const auto& ord = degree(r).order;
        SparseVec out;
        for (auto& t : v) {
            if (ord[t.index] != 0) t.coeff = mod_floor(t.coeff, ord[t.index]);
            if (t.coeff != 0) out.push_back(std::move(t));
        }
        return out;
    }

    /// [g, h] for global generator ids, in coordinates of degree deg g + deg h.
    SparseVec bracket_generators(int g, int h) const {
        if (g == h) return {};
        const int r = degree_of_global(g) + degree_of_global(h);
        const Degree& d = degree(r);
        auto it = d.pair_index.find(pair_key(std::min(g, h), std::max(g, h)));
        if (it == d.pair_index.end()) throw std::logic_error("Holonomy: missing pair");
        return g < h ? d.pair_class[it->second] : scaled(d.pair_class[it->second], Integer(-1));
    }

    /// Bracket of u in degree s and v in degree t.
    SparseVec bracket(int s, const SparseVec& u, int t, const SparseVec& v) const {
        if (s + t > max_degree_) throw std::out_of_range("Holonomy::bracket: degree above cap");
        SparseAccumulator acc;
        for (const auto& x : u)
            for (const auto& y : v) acc.add(bracket_generators(global_id(s, x.index), global_id(t, y.index)), x.coeff * y.coeff);
        return normalize(s + t, acc.take());
    }

  private:
    static std::uint64_t pair_key(int a, int b) {
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    // v ^ g for v in degree s and global generator g, added into acc over pair indices
    void wedge_into(SparseAccumulator& acc, const Degree& target, int s, const SparseVec& v, int g, const Integer& c) const {
        for (const auto& t : v) {
            const int a = global_id(s, t.index);
            if (a == g) continue;
            const int lo = std::min(a, g), hi = std::max(a, g);
            const int idx = target.pair_index.at(pair_key(lo, hi));
            acc.add(idx, a < g ? Integer(c * t.coeff) : Integer(-c * t.coeff));
        }
    }

    void build_degree(const Arrangement& a, int r) {
        Degree& d = degrees_[r];
        for (int s = 1; 2 * s <= r; ++s) {
            const int t = r - s;
            for (int i = 0; i < dim(s); ++i)
                for (int j = (s == t ? i + 1 : 0); j < dim(t); ++j) {
                    const int ga = global_id(s, i), gb = global_id(t, j);
                    d.pair_index.emplace(pair_key(ga, gb), static_cast<int>(d.pairs.size()));
                    d.pairs.emplace_back(ga, gb);
                }
        }
        limits_.check(static_cast<long long>(d.pairs.size()), "holonomy degree " + std::to_string(r) + " generators");
        std::vector<SparseVec> rel;
        if (r == 2) {
            for (const auto& q : quadratic_relations(a)) {
                SparseVec row;
                for (const auto& [w, c] : q.coeffs) row.push_back({d.pair_index.at(pair_key(letter(w, 0), letter(w, 1))), c});
                std::sort(row.begin(), row.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
                rel.push_back(std::move(row));
            }
        } else {
            // (order * a) ^ b
            for (int s = 1; s < r; ++s) {
                const Degree& ds = degrees_[s];
                for (int i = 0; i < dim(s); ++i) {
                    if (ds.order[i] == 0) continue;
                    SparseVec v{{i, ds.order[i]}};
                    for (int j = 0; j < dim(r - s); ++j) {
                        SparseAccumulator acc;
                        wedge_into(acc, d, s, v, global_id(r - s, j), Integer(1));
                        rel.push_back(acc.take());
                    }
                }
            }
            // d(a ^ b ^ c), a < b < c
            long long triples = 0;
            for (int s1 = 1; 3 * s1 <= r; ++s1)
                for (int s2 = s1; s1 + 2 * s2 <= r; ++s2) {
                    const int s3 = r - s1 - s2;
                    long long n1 = dim(s1), n2 = dim(s2), n3 = dim(s3);
                    triples += n1 * n2 * n3;
                }
            limits_.check(triples, "holonomy degree " + std::to_string(r) + " Jacobi relations");
            for (int s1 = 1; 3 * s1 <= r; ++s1)
                for (int s2 = s1; s1 + 2 * s2 <= r; ++s2) {
                    const int s3 = r - s1 - s2;
                    for (int i = 0; i < dim(s1); ++i)
                        for (int j = (s2 == s1 ? i + 1 : 0); j < dim(s2); ++j)
                            for (int k = (s3 == s2 ? j + 1 : 0); k < dim(s3); ++k) {
                                const int ga = global_id(s1, i), gb = global_id(s2, j), gc = global_id(s3, k);
                                SparseAccumulator acc;
                                wedge_into(acc, d, s1 + s2, bracket_generators(ga, gb), gc, Integer(1));
                                wedge_into(acc, d, s1 + s3, bracket_generators(ga, gc), gb, Integer(-1));
                                wedge_into(acc, d, s2 + s3, bracket_generators(gb, gc), ga, Integer(1));
                                SparseVec row = acc.take();
                                if (!row.empty()) rel.push_back(std::move(row));
                            }
                }
        }
        Quotient q = quotient(static_cast<int>(d.pairs.size()), std::move(rel));
        d.order = q.order;
        d.lift = q.lift;
        d.pair_class = std::move(q.column_class);
    }

    int b1_;
    int max_degree_;
    Limits limits_;
    std::vector<Degree> degrees_;
    std::vector<int> offset_;
};

/// Ranks over Q and torsion for degrees 1..max_degree.
inline std::vector<GradedPiece> holonomy_ranks(const Arrangement& a, int max_degree = kDefaultMaxDegree, Limits limits = {}) {
    if (max_degree < 2) throw std::invalid_argument("holonomy_ranks: max_degree must be >= 2");
    Holonomy h(a, max_degree, limits);
    std::vector<GradedPiece> out;
    for (int r = 1; r <= max_degree; ++r) out.push_back(h.piece(r));
    return out;
}

// ---------------------------------------------------------------------------
// Maps induced by maps of generators

/// Matrix per degree; matrix[r][i][j] is the coordinate on target generator i
/// of the image of source generator j. Index 0 is unused.
struct GradedLinearMap {
    int max_degree = 0;
    std::vector<DenseMatrix> matrix;
    std::vector<int> source_dim, target_dim;
};

/// Lie morphism H(src) -> H(dst) sending x_i to x_{image[i]}, or to 0 when
/// image[i] < 0. Throws MapCertificateError unless the assignment respects
/// every relation of H(src) up to the common degree cap.
inline GradedLinearMap lie_morphism(const Holonomy& src, const Holonomy& dst, const std::vector<int>& image) {
    if (static_cast<int>(image.size()) != src.b1()) throw std::invalid_argument("lie_morphism: image size mismatch");
    const int top = std::min(src.max_degree(), dst.max_degree());
    std::vector<std::vector<SparseVec>> f(top + 1);
    for (int i = 0; i < src.b1(); ++i) {
        if (image[i] >= dst.b1()) throw std::out_of_range("lie_morphism: image out of range");
        f[1].push_back(image[i] >= 0 ? SparseVec{{image[i], Integer(1)}} : SparseVec{});
    }
    auto image_of_pair = [&](const std::pair<int, int>& p) {
        const int sa = src.degree_of_global(p.first), sb = src.degree_of_global(p.second);
        return dst.bracket(sa, f[sa][p.first - src.global_id(sa, 0)], sb, f[sb][p.second - src.global_id(sb, 0)]);
    };
    for (int r = 2; r <= top; ++r) {
        const auto& d = src.degree(r);
        std::vector<SparseVec> pair_image(d.pairs.size());
        for (std::size_t p = 0; p < d.pairs.size(); ++p) pair_image[p] = image_of_pair(d.pairs[p]);
        for (std::size_t g = 0; g < d.order.size(); ++g) {
            SparseAccumulator acc;
            for (const auto& t : d.lift[g]) acc.add(pair_image[t.index], t.coeff);
            f[r].push_back(dst.normalize(r, acc.take()));
        }
        for (std::size_t p = 0; p < d.pairs.size(); ++p) {
            SparseAccumulator acc;
            for (const auto& t : d.pair_class[p]) acc.add(f[r][t.index], t.coeff);
            if (dst.normalize(r, acc.take()) != pair_image[p])
                throw MapCertificateError("lie_morphism: relations of degree " + std::to_string(r) + " not preserved");
        }
        for (std::size_t g = 0; g < d.order.size(); ++g)
            if (d.order[g] != 0 && !dst.normalize(r, scaled(f[r][g], d.order[g])).empty())
                throw MapCertificateError("lie_morphism: torsion of degree " + std::to_string(r) + " not preserved");
    }
    GradedLinearMap m;
    m.max_degree = top;
    m.matrix.resize(top + 1);
    m.source_dim.assign(top + 1, 0);
    m.target_dim.assign(top + 1, 0);
    for (int r = 1; r <= top; ++r) {
        m.source_dim[r] = src.dim(r);
        m.target_dim[r] = dst.dim(r);
        m.matrix[r].assign(dst.dim(r), std::vector<Integer>(src.dim(r)));
        for (int j = 0; j < src.dim(r); ++j)
            for (const auto& t : f[r][j]) m.matrix[r][t.index][j] = t.coeff;
    }
    return m;
}

/// H(pi_B): H(A) -> H(B) for B given by sorted ids; `sub` is the holonomy of
/// restrict(A, ids).
inline GradedLinearMap projection_map(const Holonomy& whole, const Holonomy& sub, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    std::vector<int> image(whole.b1(), -1);
    for (std::size_t k = 0; k < ids.size(); ++k) image.at(ids[k]) = static_cast<int>(k);
    return lie_morphism(whole, sub, image);
}

/// H(iota_B): H(B) -> H(A) for a closed sub-arrangement B (sorted ids).
inline GradedLinearMap inclusion_map(const Holonomy& sub, const Holonomy& whole, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return lie_morphism(sub, whole, ids);
}

inline GradedLinearMap projection_map(const Arrangement& a, const std::vector<int>& ids, int r, Limits limits = {}) {
    return projection_map(Holonomy(a, r, limits), Holonomy(restrict(a, ids), r, limits), ids);
}

inline GradedLinearMap inclusion_map(const Arrangement& a, const Rank2Flat& x, int r, Limits limits = {}) {
    return inclusion_map(Holonomy(localization(a, x), r, limits), Holonomy(a, r, limits), x.members);
}

/// second * first, entries reduced modulo the torsion of the final target.
inline GradedLinearMap compose(const GradedLinearMap& second, const GradedLinearMap& first, const Holonomy& target) {
    GradedLinearMap m;
    m.max_degree = std::min(first.max_degree, second.max_degree);
    m.matrix.resize(m.max_degree + 1);
    m.source_dim = first.source_dim;
    m.target_dim = second.target_dim;
    m.source_dim.resize(m.max_degree + 1);
    m.target_dim.resize(m.max_degree + 1);
    for (int r = 1; r <= m.max_degree; ++r) {
        const auto& A = second.matrix[r];
        const auto& B = first.matrix[r];
        if (second.source_dim[r] != first.target_dim[r]) throw std::invalid_argument("compose: dimension mismatch");
        const int rows = second.target_dim[r], mid = first.target_dim[r], cols = first.source_dim[r];
        m.matrix[r].assign(rows, std::vector<Integer>(cols));
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < mid; ++k) {
                if (A[i][k] == 0) continue;
                for (int j = 0; j < cols; ++j) m.matrix[r][i][j] += A[i][k] * B[k][j];
            }
        const auto& ord = target.degree(r).order;
        for (int i = 0; i < rows; ++i)
            if (ord[i] != 0)
                for (auto& x : m.matrix[r][i]) x = mod_floor(x, ord[i]);
    }
    return m;
}

/// All localization maps stacked: H_r(A) -> prod_X H_r(A_X), flats in
/// canonical order.
struct AssembledProjection {
    std::vector<Holonomy> local;  // per flat
    GradedLinearMap map;          // block-stacked rows
};

inline AssembledProjection pi_assembled(const Holonomy& whole, const Arrangement& a) {
    AssembledProjection out;
    const int top = whole.max_degree();
    out.map.max_degree = top;
    out.map.matrix.resize(top + 1);
    out.map.source_dim.assign(top + 1, 0);
    out.map.target_dim.assign(top + 1, 0);
    for (int r = 1; r <= top; ++r) out.map.source_dim[r] = whole.dim(r);
    for (const auto& x : a.flats) {
        out.local.emplace_back(localization(a, x), top);
        GradedLinearMap m = projection_map(whole, out.local.back(), x.members);
        for (int r = 1; r <= top; ++r) {
            out.map.target_dim[r] += m.target_dim[r];
            for (auto& row : m.matrix[r]) out.map.matrix[r].push_back(std::move(row));
        }
    }
    return out;
}

inline AssembledProjection pi_assembled(const Arrangement& a, int r, Limits limits = {}) {
    return pi_assembled(Holonomy(a, r, limits), a);
}

}  // namespace arrlie
