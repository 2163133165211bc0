#pragma once

// Brute-force character theory for tiny cyclic quivers, used to check the
// tableau formula from the outside:
//   - the graded character of C[p] as torus Laurent polynomials,
//   - its decomposition into K-types by peeling off rational Schur products,
//   - division by the invariants Tr((X_1...X_k)^p), p = 1..n, of degree k p,
// plus Hesselink's alternating Kostant-partition-function sum for k = 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "stable_multiplicity.hpp"

namespace cyclic_quiver {

inline constexpr int max_oracle_coordinates = 12;
inline constexpr int max_oracle_degree = 6;

class QuiverConfig {
public:
    QuiverConfig(int k, std::vector<int> dims) : dims_(std::move(dims))
    {
        if (k < 1) throw UsageError("a cyclic quiver needs k >= 1 nodes");
        if (static_cast<int>(dims_.size()) != k) throw UsageError("dims must list exactly k dimensions");
        for (int d : dims_)
            if (d < 1) throw UsageError("node dimensions must be positive");
    }

    int k() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& dims() const { return dims_; }
    int n() const { return *std::min_element(dims_.begin(), dims_.end()); }
    int dim(int i) const { return dims_[static_cast<std::size_t>(((i - 1) % k() + k()) % k())]; }

    int total_variables() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

    // Offset of node i's first torus variable in a node-major exponent vector.
    int offset(int i) const
    {
        int idx = ((i - 1) % k() + k()) % k();
        return std::accumulate(dims_.begin(), dims_.begin() + idx, 0);
    }

    // dim p = sum_i n_i n_{i+1}.
    int coordinate_count() const
    {
        int s = 0;
        for (int i = 1; i <= k(); ++i) s += dim(i) * dim(i + 1);
        return s;
    }

private:
    std::vector<int> dims_;
};

using Exponent = std::vector<int>;

class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int variables = 0) : variables_(variables) {}

    static LaurentPolynomial constant(int variables, std::int64_t c = 1)
    {
        LaurentPolynomial p(variables);
        p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
        return p;
    }

    static LaurentPolynomial monomial(Exponent e, std::int64_t c = 1)
    {
        LaurentPolynomial p(static_cast<int>(e.size()));
        p.add_term(std::move(e), c);
        return p;
    }

    int variables() const { return variables_; }
    const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Exponent e, std::int64_t c)
    {
        if (static_cast<int>(e.size()) != variables_) throw UsageError("exponent vector has the wrong number of variables");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted && (it->second += c) == 0) terms_.erase(it);
    }

    // Lexicographically greatest exponent. Undefined on zero.
    const std::pair<const Exponent, std::int64_t>& leading() const { return *terms_.rbegin(); }

    // Sum of coefficients, i.e. the value at x = (1, ..., 1).
    std::int64_t evaluate_at_ones() const
    {
        std::int64_t s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& other)
    {
        for (const auto& [e, c] : other.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& other)
    {
        for (const auto& [e, c] : other.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPolynomial scaled(std::int64_t factor) const
    {
        LaurentPolynomial out(variables_);
        if (factor == 0) return out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
        return out;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        if (a.variables_ != b.variables_) throw UsageError("multiplying Laurent polynomials in different variables");
        LaurentPolynomial out(a.variables_);
        Exponent e(static_cast<std::size_t>(a.variables_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    // Product in disjoint variable sets: a(x) b(y) in variables (x, y).
    friend LaurentPolynomial outer_product(const LaurentPolynomial& a, const LaurentPolynomial& b)
    {
        LaurentPolynomial out(a.variables_ + b.variables_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                e.insert(e.end(), eb.begin(), eb.end());
                out.terms_.emplace(std::move(e), ca * cb);
            }
        return out;
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    friend std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p)
    {
        if (p.terms_.empty()) return os << '0';
        bool first = true;
        for (auto it = p.terms_.rbegin(); it != p.terms_.rend(); ++it) {
            os << (first ? "" : " + ") << it->second << "*x^(";
            for (std::size_t j = 0; j < it->first.size(); ++j) os << (j ? "," : "") << it->first[j];
            os << ')';
            first = false;
        }
        return os;
    }

private:
    int variables_;
    std::map<Exponent, std::int64_t> terms_;
};

// Highest weight of a rational GL_n irreducible: n weakly decreasing integers.
class RationalWeight {
public:
    RationalWeight() = default;

    explicit RationalWeight(std::vector<int> entries) : entries_(std::move(entries))
    {
        for (std::size_t j = 1; j < entries_.size(); ++j)
            if (entries_[j] > entries_[j - 1]) throw UsageError("rational weight must be weakly decreasing");
    }

    RationalWeight(std::initializer_list<int> entries) : RationalWeight(std::vector<int>(entries)) {}

    int n() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }
    int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }

    friend auto operator<=>(const RationalWeight&, const RationalWeight&) = default;
    friend bool operator==(const RationalWeight&, const RationalWeight&) = default;

    friend std::ostream& operator<<(std::ostream& os, const RationalWeight& w)
    {
        os << '(';
        for (int j = 0; j < w.n(); ++j) os << (j ? "," : "") << w[j];
        return os << ')';
    }

private:
    std::vector<int> entries_;
};

// (nu^+ parts, zeros, -nu^- parts reversed), length n.
inline RationalWeight rational_weight(const Partition& plus, const Partition& minus, int n)
{
    if (n < 1) throw UsageError("rank n must be positive");
    if (plus.length() + minus.length() > n)
        throw PreconditionError("length(nu+) + length(nu-) exceeds n: not a GL_" + std::to_string(n) + " weight");
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < plus.length(); ++r) e[static_cast<std::size_t>(r)] = plus.row(r);
    for (int r = 0; r < minus.length(); ++r) e[static_cast<std::size_t>(n - 1 - r)] = -minus.row(r);
    return RationalWeight(std::move(e));
}

inline NodeType split_rational_weight(const RationalWeight& w)
{
    std::vector<int> plus, minus;
    for (int v : w.entries())
        if (v > 0) plus.push_back(v);
    for (int j = w.n() - 1; j >= 0; --j)
        if (w[j] < 0) minus.push_back(-w[j]);
    return {Partition(plus), Partition(minus)};
}

// Weyl dimension formula prod_{i<j} (w_i - w_j + j - i) / (j - i).
inline std::int64_t weyl_dimension(const RationalWeight& w)
{
    Integer num = 1, den = 1;
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) {
            num *= w[i] - w[j] + j - i;
            den *= j - i;
        }
    return static_cast<std::int64_t>(num / den);
}

namespace detail {

// Exact quotient p / (x_a - x_b), a < b, by division with respect to lex order
// (the divisor's leading term is x_a).
inline LaurentPolynomial divide_by_difference(LaurentPolynomial p, int a, int b)
{
    LaurentPolynomial quotient(p.variables());
    while (!p.is_zero()) {
        auto [lead, c] = p.leading();
        Exponent t = lead;
        if (t[static_cast<std::size_t>(a)] < 1) internal_failure("alternant not divisible by the Vandermonde factor");
        t[static_cast<std::size_t>(a)] -= 1;
        quotient.add_term(t, c);
        Exponent lower = t;
        lower[static_cast<std::size_t>(b)] += 1;
        std::int64_t coef = c;
        p.add_term(lead, -coef);
        p.add_term(std::move(lower), coef);
    }
    return quotient;
}

inline int permutation_sign(const std::vector<int>& perm)
{
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

} // namespace detail

// Bialternant det(x_j^{w_i + n - i}) / det(x_j^{n - i}), expanded exactly.
inline LaurentPolynomial schur_rational(const RationalWeight& w)
{
    const int n = w.n();
    if (n == 0) return LaurentPolynomial::constant(0);
    // Shift by a power of the determinant so every exponent is nonnegative.
    int shift = std::max(0, -w[n - 1]);
    LaurentPolynomial alternant(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = w[i] + shift + n - 1 - i;
        alternant.add_term(std::move(e), detail::permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));

    LaurentPolynomial s = std::move(alternant);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) s = detail::divide_by_difference(std::move(s), a, b);

    if (shift == 0) return s;
    LaurentPolynomial out(n);
    for (const auto& [e, c] : s.terms()) {
        Exponent shifted = e;
        for (int& x : shifted) x -= shift;
        out.add_term(std::move(shifted), c);
    }
    return out;
}

// The K-type as one rational weight per node.
using KTypeWeights = std::vector<RationalWeight>;

inline KTypeWeights ktype_weights(const KType& nu, const QuiverConfig& cfg)
{
    if (nu.k() != cfg.k()) throw UsageError("K-type and quiver have different numbers of nodes");
    KTypeWeights out;
    for (int i = 1; i <= cfg.k(); ++i) out.push_back(rational_weight(nu.node(i).plus, nu.node(i).minus, cfg.dim(i)));
    return out;
}

inline KType ktype_from_weights(const KTypeWeights& weights)
{
    std::vector<NodeType> nodes;
    for (const auto& w : weights) nodes.push_back(split_rational_weight(w));
    const int k = static_cast<int>(nodes.size());
    return KType(k, std::move(nodes));
}

inline LaurentPolynomial ktype_character(const KTypeWeights& weights)
{
    LaurentPolynomial out = LaurentPolynomial::constant(0);
    for (const auto& w : weights) out = outer_product(out, schur_rational(w));
    return out;
}

inline void check_oracle_capacity(const QuiverConfig& cfg, int degree)
{
    if (cfg.coordinate_count() > max_oracle_coordinates || degree > max_oracle_degree)
        throw CapacityError("character oracle is limited to dim p <= " + std::to_string(max_oracle_coordinates) +
                            " and degree <= " + std::to_string(max_oracle_degree) + " (got dim p = " +
                            std::to_string(cfg.coordinate_count()) + ", degree " + std::to_string(degree) + ")");
}

// Torus weights of the coordinate functions on p: for the arrow i -> i+1 the
// entry (r, s) of X_i has weight x^{(i)}_s / x^{(i+1)}_r.
inline std::vector<Exponent> coordinate_weights(const QuiverConfig& cfg)
{
    std::vector<Exponent> out;
    const auto vars = static_cast<std::size_t>(cfg.total_variables());
    for (int i = 1; i <= cfg.k(); ++i)
        for (int r = 0; r < cfg.dim(i + 1); ++r)
            for (int s = 0; s < cfg.dim(i); ++s) {
                Exponent e(vars, 0);
                e[static_cast<std::size_t>(cfg.offset(i) + s)] += 1;
                e[static_cast<std::size_t>(cfg.offset(i + 1) + r)] -= 1;
                out.push_back(std::move(e));
            }
    return out;
}

// Characters of C^d[p] for d = 0..max_degree: complete homogeneous symmetric
// functions of the coordinate weights.
inline std::vector<LaurentPolynomial> graded_coordinate_characters(const QuiverConfig& cfg, int max_degree)
{
    check_oracle_capacity(cfg, max_degree);
    const int vars = cfg.total_variables();
    std::vector<LaurentPolynomial> h(static_cast<std::size_t>(max_degree) + 1, LaurentPolynomial(vars));
    h[0] = LaurentPolynomial::constant(vars);
    for (const auto& w : coordinate_weights(cfg)) {
        LaurentPolynomial x = LaurentPolynomial::monomial(w);
        // h'_d = h_d + x h'_{d-1}, increasing d.
        for (std::size_t d = 1; d < h.size(); ++d) h[d] += x * h[d - 1];
    }
    return h;
}

inline LaurentPolynomial graded_coordinate_character(const QuiverConfig& cfg, int degree)
{
    if (degree < 0) throw UsageError("degree must be nonnegative");
    return graded_coordinate_characters(cfg, degree)[static_cast<std::size_t>(degree)];
}

// Repeatedly strips the product of rational Schur characters whose highest
// weight is the lex-greatest exponent (node-major order).
inline std::map<KTypeWeights, std::int64_t> decompose_into_ktypes(LaurentPolynomial ch, const QuiverConfig& cfg)
{
    if (ch.variables() != cfg.total_variables()) throw UsageError("character has the wrong number of variables");
    std::map<KTypeWeights, std::int64_t> out;
    std::map<RationalWeight, LaurentPolynomial> schur_cache;
    while (!ch.is_zero()) {
        auto [lead, c] = ch.leading();
        if (c < 0) throw NotACharacterError("negative multiplicity while peeling K-types");
        KTypeWeights weights;
        LaurentPolynomial piece = LaurentPolynomial::constant(0);
        for (int i = 1; i <= cfg.k(); ++i) {
            auto first = lead.begin() + cfg.offset(i);
            std::vector<int> block(first, first + cfg.dim(i));
            if (!std::is_sorted(block.begin(), block.end(), std::greater<>()))
                throw NotACharacterError("leading exponent is not dominant on every node");
            RationalWeight w(std::move(block));
            auto it = schur_cache.find(w);
            if (it == schur_cache.end()) it = schur_cache.emplace(w, schur_rational(w)).first;
            piece = outer_product(piece, it->second);
            weights.push_back(std::move(w));
        }
        ch -= piece.scaled(c);
        out[weights] += c;
    }
    return out;
}

// Graded multiplicity of every K-type in the harmonics, up to max_degree <= n:
// the K-type series of C[p] times prod_{p=1}^n (1 - q^{kp}).
inline std::map<KType, QSeries> harmonic_multiplicity_table(const QuiverConfig& cfg, int max_degree)
{
    if (max_degree < 0) throw UsageError("max_degree must be nonnegative");
    if (max_degree > cfg.n()) throw PreconditionError("harmonic oracle is only valid up to degree n = min(dims)");
    auto characters = graded_coordinate_characters(cfg, max_degree);
    std::map<KType, QSeries> series;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& [weights, mult] : decompose_into_ktypes(characters[static_cast<std::size_t>(d)], cfg)) {
            auto [it, inserted] = series.try_emplace(ktype_from_weights(weights), max_degree);
            it->second[d] += mult;
        }
    QSeries invariants = euler_factor_finite(cfg.k(), cfg.n(), max_degree);
    for (auto& [nu, s] : series) s = mul(invariants, s);
    return series;
}

inline void require_realizable(const QuiverConfig& cfg, const KType& nu)
{
    if (nu.k() != cfg.k()) throw PreconditionError("K-type and quiver have different numbers of nodes");
    for (int i = 1; i <= cfg.k(); ++i)
        if (nu.node(i).plus.length() + nu.node(i).minus.length() > cfg.dim(i))
            throw PreconditionError("K-type is not realizable: length(nu_i+) + length(nu_i-) > n_i at node " +
                                    std::to_string(i));
}

inline QSeries harmonic_multiplicity_oracle(const QuiverConfig& cfg, const KType& nu, int max_degree)
{
    require_realizable(cfg, nu);
    auto table = harmonic_multiplicity_table(cfg, max_degree);
    auto it = table.find(nu);
    return it == table.end() ? QSeries(max_degree) : it->second;
}

namespace detail {

class KostantCounter {
public:
    KostantCounter(int n, int truncation) : n_(n), truncation_(truncation)
    {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) roots_.emplace_back(i, j);
    }

    QSeries count(const std::vector<int>& w) { return count(w, 0); }

private:
    QSeries count(const std::vector<int>& w, std::size_t idx)
    {
        if (idx == roots_.size()) return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; })
                                              ? QSeries::one(truncation_)
                                              : QSeries(truncation_);
        // Roots before idx are exhausted, so coordinates left of the current
        // first index are final; partial sums must stay nonnegative.
        int first = roots_[idx].first;
        int partial = 0;
        for (int p = 0; p < n_; ++p) {
            partial += w[static_cast<std::size_t>(p)];
            if (partial < 0 || (p < first && w[static_cast<std::size_t>(p)] != 0)) return QSeries(truncation_);
        }
        if (partial != 0) return QSeries(truncation_);

        auto key = std::make_pair(w, idx);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        auto [i, j] = roots_[idx];
        QSeries total(truncation_);
        std::vector<int> rest = w;
        for (int c = 0; c <= truncation_; ++c) {
            QSeries sub = count(rest, idx + 1);
            for (int d = 0; d + c <= truncation_; ++d) total[d + c] += sub[d];
            rest[static_cast<std::size_t>(i)] -= 1;
            rest[static_cast<std::size_t>(j)] += 1;
            if (rest[static_cast<std::size_t>(i)] < 0) break;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

    int n_;
    int truncation_;
    std::vector<std::pair<int, int>> roots_;
    std::map<std::pair<std::vector<int>, std::size_t>, QSeries> memo_;
};

} // namespace detail

// sum_m N_m(w) q^m, N_m(w) = ways to write w as a sum of m positive roots e_i - e_j, i < j <= n.
inline QSeries q_kostant_partition(const WeightVector& w, int n, int truncation)
{
    if (w.basis() != Basis::epsilon) throw UsageError("q_kostant_partition expects epsilon coordinates");
    if (n < 1) throw UsageError("rank n must be positive");
    if (w.max_index() > n) return QSeries(truncation);
    return detail::KostantCounter(n, truncation).count(w.dense(n));
}

// Lusztig q-analogue of the zero weight space:
// sum_{sigma in S_n} sign(sigma) P_q(sigma(lam + rho) - rho), rho = (n-1, ..., 1, 0).
inline QSeries hesselink_exponent(const RationalWeight& lam, int truncation)
{
    const int n = lam.n();
    if (n < 1) throw UsageError("weight must have at least one entry");
    detail::KostantCounter counter(n, truncation);
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = lam[i] + (n - 1 - i);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    QSeries total(truncation);
    do {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p)
            v[static_cast<std::size_t>(p)] = shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] - (n - 1 - p);
        QSeries term = counter.count(v);
        if (detail::permutation_sign(perm) > 0)
            total += term;
        else
            total -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace cyclic_quiver
