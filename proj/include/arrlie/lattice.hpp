#pragma once

// Arrangements reduced to their rank-2 intersection data.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "arrlie/linalg.hpp"

namespace arrlie {

class ArrangementError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

using IntVector = std::vector<Integer>;

struct Hyperplane {
    int id = 0;
    std::optional<IntVector> normal;  // primitive, first nonzero entry positive
    bool operator==(const Hyperplane&) const = default;
};

struct Rank2Flat {
    std::vector<int> members;  // sorted, size >= 2
    int mu = 0;                // members.size() - 1
    bool operator==(const Rank2Flat&) const = default;
};

/// Hyperplanes plus the rank-2 flats, which partition the unordered pairs of
/// hyperplanes. Flats are kept in canonical order: size descending, then
/// lexicographic member list.
struct Arrangement {
    std::vector<Hyperplane> hyperplanes;
    std::vector<Rank2Flat> flats;
    std::string label;

    int size() const { return static_cast<int>(hyperplanes.size()); }
    int b1() const { return size(); }
    int b2() const {
        int s = 0;
        for (const auto& f : flats) s += f.mu;
        return s;
    }
    bool has_normals() const {
        return !hyperplanes.empty() &&
               std::all_of(hyperplanes.begin(), hyperplanes.end(), [](const Hyperplane& h) { return h.normal.has_value(); });
    }
    /// Index of the flat containing hyperplanes i != j.
    int flat_of(int i, int j) const {
        for (std::size_t k = 0; k < flats.size(); ++k) {
            const auto& m = flats[k].members;
            if (std::binary_search(m.begin(), m.end(), i) && std::binary_search(m.begin(), m.end(), j))
                return static_cast<int>(k);
        }
        throw ArrangementError("flat_of: pair not covered");
    }
    bool operator==(const Arrangement&) const = default;
};

inline Rank2Flat make_flat(std::vector<int> members) {
    std::sort(members.begin(), members.end());
    const int mu = static_cast<int>(members.size()) - 1;
    return {std::move(members), mu};
}

inline void sort_flats(std::vector<Rank2Flat>& flats) {
    std::sort(flats.begin(), flats.end(), [](const Rank2Flat& a, const Rank2Flat& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.members < b.members;
    });
}

/// Primitive representative with positive leading entry.
inline IntVector normalize_normal(IntVector v) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, abs_value(x));
    if (g == 0) throw ArrangementError("zero normal vector");
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (*lead < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

/// Canonical basis of the rational row space of two normals: fraction-free
/// reduced echelon form, rows made primitive with positive pivots. Returns
/// nullopt when the normals are proportional.
inline std::optional<std::pair<IntVector, IntVector>> pair_span_key(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw ArrangementError("normals of different dimensions");
    IntVector r0 = a, r1 = b;
    const std::size_t n = a.size();
    std::size_t c1 = 0;
    while (c1 < n && r0[c1] == 0 && r1[c1] == 0) ++c1;
    if (c1 == n) return std::nullopt;
    if (r0[c1] == 0) std::swap(r0, r1);
    {
        Integer p = r0[c1], q = r1[c1];
        for (std::size_t k = 0; k < n; ++k) r1[k] = p * r1[k] - q * r0[k];
    }
    std::size_t c2 = c1 + 1;
    while (c2 < n && r1[c2] == 0) ++c2;
    if (c2 >= n) return std::nullopt;
    {
        Integer p = r1[c2], q = r0[c2];
        for (std::size_t k = 0; k < n; ++k) r0[k] = p * r0[k] - q * r1[k];
    }
    return std::make_pair(normalize_normal(std::move(r0)), normalize_normal(std::move(r1)));
}

/// Groups hyperplanes by the rank-2 subspaces spanned by pairs of normals.
inline std::vector<Rank2Flat> compute_rank2_flats(const std::vector<IntVector>& normals) {
    const int n = static_cast<int>(normals.size());
    for (const auto& v : normals) {
        if (v.empty() || std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
            throw ArrangementError("zero normal vector");
        if (v.size() != normals.front().size()) throw ArrangementError("normals of different dimensions");
    }
    std::map<std::pair<IntVector, IntVector>, std::set<int>> groups;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto key = pair_span_key(normals[i], normals[j]);
            if (!key)
                throw ArrangementError("hyperplanes " + std::to_string(i) + " and " + std::to_string(j) +
                                       " have proportional normals");
            auto& g = groups[*key];
            g.insert(i);
            g.insert(j);
        }
    std::vector<Rank2Flat> flats;
    for (auto& [key, members] : groups) flats.push_back(make_flat({members.begin(), members.end()}));
    sort_flats(flats);
    return flats;
}

/// nullopt when valid; otherwise a description of the first problem found.
inline std::optional<std::string> validation_error(const Arrangement& a) {
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        if (a.hyperplanes[i].id != i) return "hyperplane ids must be 0..n-1 in order";
    std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
    for (const auto& f : a.flats) {
        if (f.members.size() < 2) return "flat with fewer than two members";
        if (!std::is_sorted(f.members.begin(), f.members.end()) ||
            std::adjacent_find(f.members.begin(), f.members.end()) != f.members.end())
            return "flat members must be sorted and distinct";
        if (f.mu != static_cast<int>(f.members.size()) - 1) return "mu does not match flat size";
        for (int x : f.members)
            if (x < 0 || x >= n) return "flat member out of range";
        for (std::size_t p = 0; p < f.members.size(); ++p)
            for (std::size_t q = p + 1; q < f.members.size(); ++q)
                if (++cover[f.members[p] * n + f.members[q]] > 1)
                    return "pair {" + std::to_string(f.members[p]) + "," + std::to_string(f.members[q]) +
                           "} covered twice";
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cover[i * n + j] == 0)
                return "pair {" + std::to_string(i) + "," + std::to_string(j) + "} not covered";
    const bool any_normal = std::any_of(a.hyperplanes.begin(), a.hyperplanes.end(),
                                        [](const Hyperplane& h) { return h.normal.has_value(); });
    if (any_normal) {
        if (!a.has_normals()) return "normals given for some hyperplanes only";
        std::vector<IntVector> normals;
        for (const auto& h : a.hyperplanes) normals.push_back(*h.normal);
        std::vector<Rank2Flat> expected;
        try {
            expected = compute_rank2_flats(normals);
        } catch (const ArrangementError& e) {
            return e.what();
        }
        std::vector<Rank2Flat> declared = a.flats;
        sort_flats(declared);
        if (declared != expected) return "declared flats do not match the normals";
    }
    return std::nullopt;
}

inline bool is_valid(const Arrangement& a) { return !validation_error(a); }

inline void validate(const Arrangement& a) {
    if (auto err = validation_error(a)) throw ArrangementError("invalid arrangement: " + *err);
}

inline Arrangement arrangement_from_normals(const std::vector<IntVector>& normals, std::string label = {}) {
    Arrangement a;
    a.label = std::move(label);
    for (std::size_t i = 0; i < normals.size(); ++i)
        a.hyperplanes.push_back({static_cast<int>(i), normalize_normal(normals[i])});
    a.flats = compute_rank2_flats(normals);
    validate(a);
    return a;
}

/// Combinatorial input: n hyperplanes and the flats with at least three
/// members. Every pair not inside a listed flat becomes a flat of size two.
inline Arrangement arrangement_from_flats(int n, const std::vector<std::vector<int>>& multi_flats, std::string label = {}) {
    if (n < 1) throw ArrangementError("arrangement needs at least one hyperplane");
    Arrangement a;
    a.label = std::move(label);
    for (int i = 0; i < n; ++i) a.hyperplanes.push_back({i, std::nullopt});
    std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
    for (const auto& m : multi_flats) {
        Rank2Flat f = make_flat(m);
        if (f.members.size() < 2) throw ArrangementError("flat with fewer than two members");
        for (int x : f.members)
            if (x < 0 || x >= n) throw ArrangementError("flat member out of range");
        for (std::size_t p = 0; p < f.members.size(); ++p)
            for (std::size_t q = p + 1; q < f.members.size(); ++q) {
                auto& c = covered[f.members[p] * n + f.members[q]];
                if (c) throw ArrangementError("two flats share a pair of hyperplanes");
                c = 1;
            }
        a.flats.push_back(std::move(f));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!covered[i * n + j]) a.flats.push_back(make_flat({i, j}));
    sort_flats(a.flats);
    validate(a);
    return a;
}

/// Sub-arrangement on the given hyperplanes; hyperplane k of the result is the
/// k-th smallest id of `subset`. Flats are the traces of size >= 2.
inline Arrangement restrict(const Arrangement& a, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw ArrangementError("restrict: empty subset");
    for (int x : subset)
        if (x < 0 || x >= a.size()) throw ArrangementError("restrict: id out of range");
    std::vector<int> new_id(a.size(), -1);
    Arrangement r;
    r.label = a.label.empty() ? std::string() : a.label + "|sub";
    for (std::size_t k = 0; k < subset.size(); ++k) {
        new_id[subset[k]] = static_cast<int>(k);
        r.hyperplanes.push_back({static_cast<int>(k), a.hyperplanes[subset[k]].normal});
    }
    for (const auto& f : a.flats) {
        std::vector<int> trace;
        for (int x : f.members)
            if (new_id[x] >= 0) trace.push_back(new_id[x]);
        if (trace.size() >= 2) r.flats.push_back(make_flat(std::move(trace)));
    }
    sort_flats(r.flats);
    return r;
}

/// The pencil of hyperplanes through the flat X.
inline Arrangement localization(const Arrangement& a, const Rank2Flat& x) {
    if (std::find(a.flats.begin(), a.flats.end(), x) == a.flats.end())
        throw ArrangementError("localization: not a flat of the arrangement");
    Arrangement r = restrict(a, x.members);
    r.label = a.label.empty() ? std::string() : a.label + "_X";
    return r;
}

}  // namespace arrlie
