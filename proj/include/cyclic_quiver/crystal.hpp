#pragma once

// gl_inf crystal structure on semistandard tableaux.
//
// Kashiwara operators use the signature rule on the column reading word: an
// i+1 followed later by an i cancel as a bracket pair. Whatever remains reads
// i...i (i+1)...(i+1); raising turns the leftmost unbracketed i+1 into i,
// lowering turns the rightmost unbracketed i into i+1.

#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"
#include "tableau.hpp"

namespace cyclic_quiver {

inline WeightVector weight(const Tableau& t)
{
    WeightVector w(Basis::epsilon);
    for (const auto& row : t.rows())
        for (int v : row) w.add(v, 1);
    return w;
}

namespace detail {

struct Signature {
    std::vector<std::pair<int, int>> unbracketed_lower; // boxes holding i, in reading order
    std::vector<std::pair<int, int>> unbracketed_upper; // boxes holding i+1, in reading order
};

inline Signature signature(const Tableau& t, int i)
{
    Signature sig;
    for (auto [r, c] : t.column_reading_positions()) {
        int v = t.at(r, c);
        if (v == i + 1) {
            sig.unbracketed_upper.emplace_back(r, c);
        } else if (v == i) {
            if (!sig.unbracketed_upper.empty())
                sig.unbracketed_upper.pop_back();
            else
                sig.unbracketed_lower.emplace_back(r, c);
        }
    }
    return sig;
}

inline void require_index(int i)
{
    if (i < 1) throw UsageError("crystal operator index must be positive");
}

} // namespace detail

// e~_i; nullopt when epsilon_i(T) = 0.
inline std::optional<Tableau> raise(const Tableau& t, int i)
{
    detail::require_index(i);
    auto sig = detail::signature(t, i);
    if (sig.unbracketed_upper.empty()) return std::nullopt;
    auto [r, c] = sig.unbracketed_upper.front();
    return t.with_entry(r, c, i);
}

// f~_i; nullopt when phi_i(T) = 0.
inline std::optional<Tableau> lower(const Tableau& t, int i)
{
    detail::require_index(i);
    auto sig = detail::signature(t, i);
    if (sig.unbracketed_lower.empty()) return std::nullopt;
    auto [r, c] = sig.unbracketed_lower.back();
    return t.with_entry(r, c, i + 1);
}

inline int epsilon_string(const Tableau& t, int i)
{
    int k = 0;
    for (auto cur = raise(t, i); cur; cur = raise(*cur, i)) ++k;
    return k;
}

inline int phi_string(const Tableau& t, int i)
{
    int k = 0;
    for (auto cur = lower(t, i); cur; cur = lower(*cur, i)) ++k;
    return k;
}

// Bracket-count shortcut for (epsilon_i, phi_i); must agree with the iterated definitions.
inline std::pair<int, int> string_lengths(const Tableau& t, int i)
{
    auto sig = detail::signature(t, i);
    return {static_cast<int>(sig.unbracketed_upper.size()), static_cast<int>(sig.unbracketed_lower.size())};
}

// eps(T) = sum_i epsilon_i(T) omega_i. Only i < max entry can be nonzero.
inline WeightVector epsilon_vector(const Tableau& t)
{
    WeightVector w(Basis::omega);
    for (int i = 1; i < t.max_entry(); ++i) w.set(i, epsilon_string(t, i));
    return w;
}

} // namespace cyclic_quiver
