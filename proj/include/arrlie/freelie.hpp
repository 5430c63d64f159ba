#pragma once

// Free Lie algebra over Z in the Lyndon basis.
//
// A Lyndon word w with standard factorization w = uv (v the longest proper
// Lyndon suffix) stands for the bracket P_w = [P_u, P_v]. Expanded in the free
// associative algebra, P_w = w + (lexicographically larger words), so any Lie
// polynomial can be rewritten in the Lyndon basis by repeatedly cancelling its
// smallest word. Brackets are computed that way.

#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arrlie/linalg.hpp"

namespace arrlie {

/// Letters are bytes 0..n-1; std::string compares bytewise as unsigned.
using Word = std::string;

inline Word word_of(std::initializer_list<int> letters) {
    Word w;
    for (int l : letters) w.push_back(static_cast<char>(l));
    return w;
}

inline int letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

inline bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!(w < w.substr(k) + w.substr(0, k))) return false;
    return true;
}

/// w = u v with v the longest proper suffix of w that is Lyndon.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("standard_factorization: word of length < 2");
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word v = w.substr(k);
        if (is_lyndon(v)) return {w.substr(0, k), v};
    }
    throw std::logic_error("standard_factorization: no Lyndon suffix");
}

struct LyndonWord {
    Word letters;
    int degree() const { return static_cast<int>(letters.size()); }
    bool operator==(const LyndonWord&) const = default;
    auto operator<=>(const LyndonWord&) const = default;
};

/// Lyndon words of length exactly r over {0..n-1}, lexicographic (Duval).
inline std::vector<LyndonWord> lyndon_basis(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("lyndon_basis: need n >= 1 and r >= 1");
    if (n > 255) throw std::invalid_argument("lyndon_basis: alphabet larger than 255");
    std::vector<LyndonWord> out;
    std::vector<int> w{-1};
    while (!w.empty()) {
        w.back() += 1;
        if (static_cast<int>(w.size()) == r) {
            Word s;
            for (int l : w) s.push_back(static_cast<char>(l));
            out.push_back({std::move(s)});
        }
        const std::size_t m = w.size();
        while (static_cast<int>(w.size()) < r) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1) w.pop_back();
    }
    return out;
}

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

inline Integer ipow(const Integer& base, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

inline long long to_ll(const Integer& x) {
    if (x > Integer(std::numeric_limits<long long>::max()) || x < Integer(std::numeric_limits<long long>::min()))
        throw std::overflow_error("integer does not fit in 64 bits");
    return x.convert_to<long long>();
}

/// Rank of the degree-r piece of the free Lie algebra on n generators.
inline long long witt_rank(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("witt_rank: need n >= 0 and r >= 1");
    Integer sum = 0;
    for (int d = 1; d <= r; ++d)
        if (r % d == 0) sum += mobius(d) * ipow(Integer(n), r / d);
    return to_ll(sum / r);
}

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Chen ranks of the free group: (r-1) * C(n+r-2, r).
inline long long chen_free_rank(int n, int r) {
    if (n < 0 || r < 2) throw std::invalid_argument("chen_free_rank: need n >= 0 and r >= 2");
    return to_ll((r - 1) * binomial(n + r - 2, r));
}

/// Element of the free associative algebra, homogeneous or not.
using AssocPoly = std::map<Word, Integer>;

inline void add_to(AssocPoly& p, const Word& w, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = p.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline AssocPoly assoc_commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Integer c = cu * cv;
            add_to(out, u + v, c);
            add_to(out, v + u, -c);
        }
    return out;
}

/// Homogeneous element of the free Lie algebra, in Lyndon coordinates.
struct LieElement {
    int alphabet = 0;
    int degree = 0;
    std::map<Word, Integer> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const LieElement&) const = default;

    LieElement& operator+=(const LieElement& o) {
        check_compatible(o);
        for (const auto& [w, c] : o.coeffs) add_to(coeffs, w, c);
        return *this;
    }
    LieElement& operator*=(const Integer& s) {
        if (s == 0) coeffs.clear();
        for (auto& [w, c] : coeffs) c *= s;
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) {
        LieElement nb = b;
        nb *= -1;
        return a += nb;
    }
    friend LieElement operator*(const Integer& s, LieElement a) { return a *= s; }

    void check_compatible(const LieElement& o) const {
        if (alphabet != o.alphabet) throw std::invalid_argument("LieElement: alphabet mismatch");
        if (degree != o.degree) throw std::invalid_argument("LieElement: degree mismatch");
    }
};

/// Free Lie algebra on n letters with a memo of associative expansions.
/// The memo is guarded, so one instance may be shared between threads.
class FreeLie {
  public:
    explicit FreeLie(int n) : n_(n) {
        if (n < 1 || n > 255) throw std::invalid_argument("FreeLie: alphabet size must be in [1, 255]");
    }

    int alphabet() const { return n_; }

    LieElement generator(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("FreeLie::generator");
        return basis_element(Word(1, static_cast<char>(i)));
    }

    LieElement basis_element(const Word& w) const {
        if (!is_lyndon(w)) throw std::invalid_argument("FreeLie::basis_element: not a Lyndon word");
        LieElement e{n_, static_cast<int>(w.size()), {}};
        e.coeffs.emplace(w, 1);
        return e;
    }

    /// Associative expansion of the bracketed Lyndon word P_w.
    const AssocPoly& expansion(const Word& w) const {
        {
            std::lock_guard lock(mutex_);
            auto it = memo_.find(w);
            if (it != memo_.end()) return it->second;
        }
        AssocPoly p;
        if (w.size() == 1) {
            p.emplace(w, 1);
        } else {
            auto [u, v] = standard_factorization(w);
            p = assoc_commutator(expansion(u), expansion(v));
        }
        std::lock_guard lock(mutex_);
        return memo_.try_emplace(w, std::move(p)).first->second;
    }

    AssocPoly to_assoc(const LieElement& a) const {
        AssocPoly out;
        for (const auto& [w, c] : a.coeffs)
            for (const auto& [v, d] : expansion(w)) add_to(out, v, c * d);
        return out;
    }

    /// Rewrites a homogeneous Lie polynomial of degree `degree` in the Lyndon
    /// basis. Throws if the input is not a Lie element.
    LieElement from_assoc(AssocPoly p, int degree) const {
        LieElement out{n_, degree, {}};
        while (!p.empty()) {
            auto it = p.begin();
            const Word w = it->first;
            const Integer c = it->second;
            if (static_cast<int>(w.size()) != degree || !is_lyndon(w))
                throw std::invalid_argument("FreeLie::from_assoc: not a homogeneous Lie element");
            out.coeffs.emplace(w, c);
            for (const auto& [v, d] : expansion(w)) add_to(p, v, -c * d);
        }
        return out;
    }

    LieElement bracket(const LieElement& a, const LieElement& b) const {
        if (a.alphabet != n_ || b.alphabet != n_) throw std::invalid_argument("FreeLie::bracket: alphabet mismatch");
        const int deg = a.degree + b.degree;
        if (a.is_zero() || b.is_zero()) return LieElement{n_, deg, {}};
        return from_assoc(assoc_commutator(to_assoc(a), to_assoc(b)), deg);
    }

    /// Image under the letter substitution x_i -> x_{image[i]} (or 0 when
    /// image[i] < 0) into the free Lie algebra `target`.
    LieElement substitute(const LieElement& a, const std::vector<int>& image, const FreeLie& target) const {
        if (static_cast<int>(image.size()) != n_) throw std::invalid_argument("FreeLie::substitute: image size");
        AssocPoly mapped;
        for (const auto& [w, c] : to_assoc(a)) {
            Word m;
            bool zero = false;
            for (std::size_t i = 0; i < w.size() && !zero; ++i) {
                int t = image[letter(w, i)];
                if (t < 0) zero = true;
                else m.push_back(static_cast<char>(t));
            }
            if (!zero) add_to(mapped, m, c);
        }
        return target.from_assoc(std::move(mapped), a.degree);
    }

  private:
    int n_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<Word, AssocPoly> memo_;
};

inline LieElement bracket(const FreeLie& L, const LieElement& a, const LieElement& b) { return L.bracket(a, b); }

}  // namespace arrlie
