#pragma once

// Stable graded multiplicity of a K-type in the harmonics of the cyclic quiver
// on k nodes, K = GL_{n_1} x ... x GL_{n_k}.
//
// A tuple T = (T_1^+, T_1^-, ..., T_k^+, T_k^-) of tableaux with shapes nu_i^+-
// is distinguished when sum_i (wt T_i^+ - wt T_i^-) = 0. Every distinguished T
// sits in a one-parameter family of products of CLR sets indexed by
// lambda_1 = lambda_min(T) + delta, and
//
//     m_nu(q) = sum_{T distinguished} q^{|lambda_1(T)| + ... + |lambda_k(T)|}.
//
// The definition-side oracle expands prod_{i>=1}(1 - q^{ki}) times the raw
// branching sum of products of LR coefficients, with LR coefficients taken from
// the classical skew-tableau rule so it shares no code with the crystal path.
//
// Node indices are cyclic with representatives 1..k; node 0 means node k.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "errors.hpp"
#include "littlewood_richardson.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "tableau.hpp"

namespace cyclic_quiver {

struct NodeType {
    Partition plus;
    Partition minus;

    friend auto operator<=>(const NodeType&, const NodeType&) = default;
    friend bool operator==(const NodeType&, const NodeType&) = default;
};

// Rational irreducible of K: one (nu^+, nu^-) pair per node.
class KType {
public:
    KType(int k, std::vector<NodeType> nodes) : nodes_(std::move(nodes))
    {
        if (k < 1) throw UsageError("a cyclic quiver needs k >= 1 nodes");
        if (static_cast<int>(nodes_.size()) != k)
            throw UsageError("K-type must list exactly k = " + std::to_string(k) + " partition pairs");
    }

    static KType trivial(int k) { return KType(k, std::vector<NodeType>(static_cast<std::size_t>(std::max(k, 0)))); }

    int k() const { return static_cast<int>(nodes_.size()); }
    const std::vector<NodeType>& nodes() const { return nodes_; }

    // Cyclic, 1-based.
    const NodeType& node(int i) const { return nodes_[static_cast<std::size_t>(((i - 1) % k() + k()) % k())]; }

    int plus_boxes() const
    {
        int s = 0;
        for (const auto& n : nodes_) s += n.plus.size();
        return s;
    }

    int minus_boxes() const
    {
        int s = 0;
        for (const auto& n : nodes_) s += n.minus.size();
        return s;
    }

    int total_boxes() const { return plus_boxes() + minus_boxes(); }

    friend auto operator<=>(const KType&, const KType&) = default;
    friend bool operator==(const KType&, const KType&) = default;

private:
    std::vector<NodeType> nodes_;
};

struct TableauPair {
    Tableau plus;
    Tableau minus;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

class TableauTuple {
public:
    explicit TableauTuple(std::vector<TableauPair> nodes) : nodes_(std::move(nodes))
    {
        if (nodes_.empty()) throw UsageError("tableau tuple needs at least one node");
    }

    int k() const { return static_cast<int>(nodes_.size()); }
    const std::vector<TableauPair>& nodes() const { return nodes_; }
    const TableauPair& node(int i) const { return nodes_[static_cast<std::size_t>(((i - 1) % k() + k()) % k())]; }

    bool has_shapes_of(const KType& nu) const
    {
        if (nu.k() != k()) return false;
        for (int i = 1; i <= k(); ++i)
            if (node(i).plus.shape() != nu.node(i).plus || node(i).minus.shape() != nu.node(i).minus) return false;
        return true;
    }

    int max_entry() const
    {
        int m = 0;
        for (const auto& p : nodes_) m = std::max({m, p.plus.max_entry(), p.minus.max_entry()});
        return m;
    }

    friend bool operator==(const TableauTuple&, const TableauTuple&) = default;

private:
    std::vector<TableauPair> nodes_;
};

// lambdas[i-1] = lambda_i, alphas[i-1] = alpha_i.
struct LambdaProfile {
    Partition lambda_min;
    std::vector<Partition> lambdas;
    std::vector<Partition> alphas;
    int degree = 0;

    friend bool operator==(const LambdaProfile&, const LambdaProfile&) = default;
};

struct DistinguishedTuple {
    TableauTuple tuple;
    LambdaProfile profile;
};

// wt(T_i) = wt(T_i^+) - wt(T_i^-).
inline WeightVector tuple_weight(const TableauTuple& t, int i)
{
    if (i < 1 || i > t.k()) throw UsageError("node index out of range 1..k");
    return weight(t.node(i).plus) - weight(t.node(i).minus);
}

inline bool is_distinguished(const TableauTuple& t)
{
    WeightVector total(Basis::epsilon);
    for (int i = 1; i <= t.k(); ++i) total += tuple_weight(t, i);
    return total.is_zero();
}

namespace detail {

// Weight and eps(.) of one tableau, computed once per candidate.
struct TableauData {
    Tableau tableau;
    WeightVector wt{Basis::epsilon};
    WeightVector eps{Basis::omega};

    explicit TableauData(Tableau t) : tableau(std::move(t)), wt(weight(tableau)), eps(epsilon_vector(tableau)) {}
};

struct NodeData {
    const TableauData* plus;
    const TableauData* minus;
};

inline WeightVector coordinatewise_max(std::span<const WeightVector> vs)
{
    WeightVector out(Basis::omega);
    std::map<int, int> best;
    for (const auto& v : vs)
        for (auto [i, x] : v.coords()) best.emplace(i, x);
    for (auto& [i, x] : best)
        for (const auto& v : vs) x = std::max(x, v[i]);
    for (auto [i, x] : best) out.set(i, x);
    return out;
}

// S_i^+- = eps(T_i^+-) + wt(T_i^+) - sum_{j=2}^i wt(T_j), maximised coordinatewise in omega coordinates.
inline Partition lambda_min(std::span<const NodeData> nodes)
{
    std::vector<WeightVector> bounds;
    WeightVector partial(Basis::epsilon);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) partial += nodes[i].plus->wt - nodes[i].minus->wt;
        WeightVector base = epsilon_to_omega(nodes[i].plus->wt - partial);
        bounds.push_back(nodes[i].plus->eps + base);
        bounds.push_back(nodes[i].minus->eps + base);
    }
    WeightVector top = coordinatewise_max(bounds);
    for (auto [i, x] : top.coords())
        if (x < 0) internal_failure("lambda_min has a negative omega coordinate");
    auto p = as_partition(omega_to_epsilon(top));
    if (!p) internal_failure("lambda_min is not a partition");
    return *p;
}

// lambda_i = lambda_1 + sum_{j=2}^i wt(T_j), alpha_i = lambda_i - wt(T_i^+).
// nullopt if some lambda_i or alpha_i is not a partition, or, when check_clr is set,
// if T_i^+ is not in CLR^{lambda_i}_{alpha_i} or T_i^- not in CLR^{lambda_{i-1}}_{alpha_i}.
inline std::optional<LambdaProfile> profile_at(std::span<const NodeData> nodes, const Partition& lambda_1,
                                               const Partition& lambda_min_value, bool check_clr)
{
    LambdaProfile prof;
    prof.lambda_min = lambda_min_value;
    WeightVector lam = lambda_1.epsilon_coords();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) lam += nodes[i].plus->wt - nodes[i].minus->wt;
        auto li = as_partition(lam);
        auto ai = as_partition(lam - nodes[i].plus->wt);
        if (!li || !ai) return std::nullopt;
        prof.degree += li->size();
        prof.lambdas.push_back(std::move(*li));
        prof.alphas.push_back(std::move(*ai));
    }
    if (check_clr) {
        std::size_t k = nodes.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Partition& alpha = prof.alphas[i];
            const Partition& lam_prev = prof.lambdas[(i + k - 1) % k];
            const auto& plus = *nodes[i].plus;
            const auto& minus = *nodes[i].minus;
            bool plus_ok = leq_omega(plus.eps, alpha.omega_coords()) &&
                           partition_shift(alpha, plus.wt) == prof.lambdas[i].epsilon_coords();
            bool minus_ok = leq_omega(minus.eps, alpha.omega_coords()) &&
                            partition_shift(alpha, minus.wt) == lam_prev.epsilon_coords();
            if (!plus_ok || !minus_ok) return std::nullopt;
        }
    }
    return prof;
}

inline std::vector<TableauData> tableau_data(const TableauTuple& t)
{
    std::vector<TableauData> data;
    data.reserve(2 * static_cast<std::size_t>(t.k()));
    for (const auto& p : t.nodes()) {
        data.emplace_back(p.plus);
        data.emplace_back(p.minus);
    }
    return data;
}

inline std::vector<NodeData> node_view(const std::vector<TableauData>& data)
{
    std::vector<NodeData> nodes;
    for (std::size_t i = 0; i + 1 < data.size(); i += 2) nodes.push_back({&data[i], &data[i + 1]});
    return nodes;
}

inline void require_distinguished(const TableauTuple& t)
{
    if (!is_distinguished(t)) throw PreconditionError("tableau tuple is not distinguished (node weights do not sum to zero)");
}

} // namespace detail

inline Partition lambda_min(const TableauTuple& t)
{
    detail::require_distinguished(t);
    auto data = detail::tableau_data(t);
    return detail::lambda_min(detail::node_view(data));
}

// Profile of the family member lambda_1 = lambda_min(T) + delta. Every entry is a
// partition and every CLR membership holds; a failure here is a bug.
inline LambdaProfile lambda_profile(const TableauTuple& t, const Partition& delta = {})
{
    detail::require_distinguished(t);
    auto data = detail::tableau_data(t);
    auto nodes = detail::node_view(data);
    Partition low = detail::lambda_min(nodes);
    auto lambda_1 = as_partition(low.epsilon_coords() + delta.epsilon_coords());
    if (!lambda_1) detail::internal_failure("lambda_min + delta is not a partition");
    auto prof = detail::profile_at(nodes, *lambda_1, low, true);
    if (!prof) detail::internal_failure("profile above lambda_min leaves the CLR family");
    return *prof;
}

// Profile reconstructed from an arbitrary lambda_1, or nullopt when T is not in
// the CLR product indexed by it.
inline std::optional<LambdaProfile> profile_at(const TableauTuple& t, const Partition& lambda_1)
{
    detail::require_distinguished(t);
    auto data = detail::tableau_data(t);
    auto nodes = detail::node_view(data);
    return detail::profile_at(nodes, lambda_1, detail::lambda_min(nodes), true);
}

namespace detail {

struct Slot {
    int sign; // +1 for T_i^+, -1 for T_i^-
    std::vector<TableauData> candidates;
    std::vector<std::vector<int>> dense_wt; // per candidate, coordinates 1..max_entry
};

class DistinguishedSearch {
public:
    DistinguishedSearch(const KType& nu, int max_entry, int max_degree)
        : max_entry_(std::max(max_entry, 0)), max_degree_(max_degree)
    {
        for (const auto& n : nu.nodes()) {
            slots_.push_back(make_slot(n.plus, +1));
            slots_.push_back(make_slot(n.minus, -1));
        }
        plus_after_.assign(slots_.size() + 1, 0);
        minus_after_.assign(slots_.size() + 1, 0);
        for (std::size_t s = slots_.size(); s-- > 0;) {
            int boxes = slots_[s].candidates.empty() ? 0 : slots_[s].candidates.front().tableau.box_count();
            plus_after_[s] = plus_after_[s + 1] + (slots_[s].sign > 0 ? boxes : 0);
            minus_after_[s] = minus_after_[s + 1] + (slots_[s].sign < 0 ? boxes : 0);
        }
    }

    std::vector<DistinguishedTuple> run(int threads) const
    {
        for (const auto& slot : slots_)
            if (slot.candidates.empty()) return {};
        if (plus_after_[0] != minus_after_[0]) return {};

        // Slots with a single candidate before the first branching slot are fixed.
        std::vector<int> prefix_choice;
        std::vector<int> sum(static_cast<std::size_t>(max_entry_), 0);
        std::size_t split = 0;
        while (split < slots_.size() && slots_[split].candidates.size() == 1) {
            accumulate(sum, split, 0);
            prefix_choice.push_back(0);
            ++split;
        }
        if (split == slots_.size()) {
            std::vector<DistinguishedTuple> out;
            if (is_zero(sum)) emit(prefix_choice, out);
            return out;
        }

        const auto& branches = slots_[split].candidates;
        std::vector<std::vector<DistinguishedTuple>> per_branch(branches.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t b; (b = next.fetch_add(1)) < branches.size();) {
                std::vector<int> choice = prefix_choice;
                std::vector<int> local = sum;
                choice.push_back(static_cast<int>(b));
                accumulate(local, split, b);
                if (feasible(local, split + 1)) search(split + 1, choice, local, per_branch[b]);
            }
        };
        int pool = std::clamp(threads, 1, static_cast<int>(branches.size()));
        if (pool == 1) {
            worker();
        } else {
            std::vector<std::thread> workers;
            for (int w = 0; w < pool; ++w) workers.emplace_back(worker);
            for (auto& w : workers) w.join();
        }
        std::vector<DistinguishedTuple> out;
        for (auto& part : per_branch)
            for (auto& item : part) out.push_back(std::move(item));
        return out;
    }

private:
    Slot make_slot(const Partition& shape, int sign) const
    {
        Slot slot{sign, {}, {}};
        for (auto& t : enumerate_sst(shape, max_entry_)) {
            auto& d = slot.candidates.emplace_back(std::move(t));
            slot.dense_wt.push_back(d.wt.dense(max_entry_));
        }
        return slot;
    }

    void accumulate(std::vector<int>& sum, std::size_t slot, std::size_t choice) const
    {
        const auto& w = slots_[slot].dense_wt[choice];
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += slots_[slot].sign * w[j];
    }

    static bool is_zero(const std::vector<int>& sum)
    {
        return std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
    }

    // Surplus content must still be cancellable by the boxes of the remaining slots.
    bool feasible(const std::vector<int>& sum, std::size_t next_slot) const
    {
        int surplus = 0, deficit = 0;
        for (int x : sum) (x > 0 ? surplus : deficit) += std::abs(x);
        return surplus <= minus_after_[next_slot] && deficit <= plus_after_[next_slot];
    }

    void search(std::size_t slot, std::vector<int>& choice, std::vector<int>& sum,
                std::vector<DistinguishedTuple>& out) const
    {
        if (slot == slots_.size()) {
            if (is_zero(sum)) emit(choice, out);
            return;
        }
        const auto& s = slots_[slot];
        for (std::size_t c = 0; c < s.candidates.size(); ++c) {
            accumulate(sum, slot, c);
            if (feasible(sum, slot + 1)) {
                choice.push_back(static_cast<int>(c));
                search(slot + 1, choice, sum, out);
                choice.pop_back();
            }
            const auto& w = s.dense_wt[c];
            for (std::size_t j = 0; j < sum.size(); ++j) sum[j] -= s.sign * w[j];
        }
    }

    void emit(const std::vector<int>& choice, std::vector<DistinguishedTuple>& out) const
    {
        std::vector<NodeData> nodes;
        for (std::size_t s = 0; s + 1 < slots_.size(); s += 2)
            nodes.push_back({&slots_[s].candidates[static_cast<std::size_t>(choice[s])],
                             &slots_[s + 1].candidates[static_cast<std::size_t>(choice[s + 1])]});
        Partition low = lambda_min(nodes);
        auto prof = profile_at(nodes, low, low, false);
        if (!prof) internal_failure("distinguished tuple has a non-partition profile at lambda_min");
        if (max_degree_ >= 0 && prof->degree > max_degree_) return;
        std::vector<TableauPair> pairs;
        for (const auto& n : nodes) pairs.push_back({n.plus->tableau, n.minus->tableau});
        out.push_back({TableauTuple(std::move(pairs)), std::move(*prof)});
    }

    int max_entry_;
    int max_degree_;
    std::vector<Slot> slots_;
    std::vector<int> plus_after_;
    std::vector<int> minus_after_;
};

} // namespace detail

// Every distinguished tuple of shape nu with all entries <= max_entry, whatever its degree.
inline std::vector<DistinguishedTuple> distinguished_tuples(const KType& nu, int max_entry, int threads = 1)
{
    return detail::DistinguishedSearch(nu, max_entry, -1).run(threads);
}

// Distinguished tuples of profile degree <= max_degree. An entry m forces some
// lambda_i to have at least m rows, so entries <= max_degree loses nothing.
inline std::vector<DistinguishedTuple> enumerate_distinguished(const KType& nu, int max_degree, int threads = 1)
{
    if (max_degree < 0) throw UsageError("max_degree must be nonnegative");
    return detail::DistinguishedSearch(nu, max_degree, max_degree).run(threads);
}

inline QSeries stable_multiplicity(const KType& nu, int max_degree, int threads = 1)
{
    QSeries out(max_degree);
    for (const auto& d : enumerate_distinguished(nu, max_degree, threads)) out[d.profile.degree] += 1;
    return out;
}

// sum_{alpha, lambda} q^{sum |lambda_i|} prod_i c^{lambda_i}_{alpha_i, nu_i^+} c^{lambda_{i-1}}_{alpha_i, nu_i^-},
// without the invariant factor.
inline QSeries raw_branching_sum(const KType& nu, int max_degree)
{
    if (max_degree < 0) throw UsageError("max_degree must be nonnegative");
    QSeries out(max_degree);
    const int k = nu.k();
    if (nu.plus_boxes() != nu.minus_boxes()) return out;

    std::map<std::tuple<Partition, Partition, Partition>, std::int64_t> lr_cache;
    auto lr = [&](const Partition& lam, const Partition& alpha, const Partition& n) {
        auto key = std::make_tuple(lam, alpha, n);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
        auto c = lr_coefficient_classical({lam, alpha, n});
        lr_cache.emplace(std::move(key), c);
        return c;
    };
    // sum_alpha c^{lam_i}_{alpha, nu_i^+} c^{lam_prev}_{alpha, nu_i^-}
    auto node_factor = [&](int i, const Partition& lam_i, const Partition& lam_prev) {
        const auto& n = nu.node(i);
        int a = lam_i.size() - n.plus.size();
        Integer total = 0;
        if (a < 0 || a != lam_prev.size() - n.minus.size()) return total;
        for (const auto& alpha : partitions_of(a)) {
            auto c1 = lr(lam_i, alpha, n.plus);
            if (c1 == 0) continue;
            total += Integer(c1) * lr(lam_prev, alpha, n.minus);
        }
        return total;
    };

    // |lambda_i| = |lambda_{i-1}| + |nu_i^+| - |nu_i^-|, so |lambda_1| fixes every size.
    for (int s1 = 0; s1 <= max_degree; ++s1) {
        std::vector<int> sizes{s1};
        bool ok = true;
        for (int i = 2; i <= k; ++i) {
            int s = sizes.back() + nu.node(i).plus.size() - nu.node(i).minus.size();
            if (s < 0) ok = false;
            sizes.push_back(s);
        }
        if (!ok) continue;
        int degree = 0;
        for (int s : sizes) degree += s;
        if (degree > max_degree) continue;

        std::vector<const Partition*> chosen(static_cast<std::size_t>(k));
        std::vector<std::vector<Partition>> level;
        for (int s : sizes) level.push_back(partitions_of(s));
        Integer sum = 0;
        auto descend = [&](auto&& self, int i, const Integer& acc) -> void {
            if (i > k) {
                Integer closing = node_factor(1, *chosen[0], *chosen[static_cast<std::size_t>(k - 1)]);
                sum += acc * closing;
                return;
            }
            for (const auto& lam : level[static_cast<std::size_t>(i - 1)]) {
                chosen[static_cast<std::size_t>(i - 1)] = &lam;
                if (i == 1) {
                    self(self, 2, acc);
                    continue;
                }
                Integer f = node_factor(i, lam, *chosen[static_cast<std::size_t>(i - 2)]);
                if (f != 0) self(self, i + 1, acc * f);
            }
        };
        descend(descend, 1, Integer(1));
        out[degree] += sum;
    }
    return out;
}

inline QSeries stable_multiplicity_definition(const KType& nu, int max_degree)
{
    return mul(euler_factor(nu.k(), max_degree), raw_branching_sum(nu, max_degree));
}

// Raw branching sum == (sum_delta q^{k|delta|}) * (tableau formula), to the truncation.
inline bool separation_check(const KType& nu, int max_degree, int threads = 1)
{
    return raw_branching_sum(nu, max_degree) ==
           mul(partition_series(nu.k(), max_degree), stable_multiplicity(nu, max_degree, threads));
}

} // namespace cyclic_quiver
