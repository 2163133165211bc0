#pragma once

// Partitions, finitely supported integer weight vectors in the epsilon / omega
// bases, and the omega-basis product order that extends partition order to Z^inf.
//
// Coordinates are 1-based throughout: epsilon_1 is a box in row 1, omega_i is a
// column of height i.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cyclic_quiver {

enum class Basis { epsilon, omega };

inline const char* to_string(Basis b) { return b == Basis::epsilon ? "epsilon" : "omega"; }

class WeightVector {
public:
    explicit WeightVector(Basis basis = Basis::epsilon) : basis_(basis) {}

    WeightVector(Basis basis, std::initializer_list<int> dense) : basis_(basis)
    {
        int index = 1;
        for (int v : dense) set(index++, v);
    }

    static WeightVector from_dense(Basis basis, std::span<const int> dense)
    {
        WeightVector w(basis);
        for (std::size_t j = 0; j < dense.size(); ++j) w.set(static_cast<int>(j) + 1, dense[j]);
        return w;
    }

    static WeightVector unit(int index, Basis basis = Basis::epsilon)
    {
        WeightVector w(basis);
        w.set(index, 1);
        return w;
    }

    Basis basis() const { return basis_; }
    const std::map<int, int>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    // Largest index carrying a nonzero coordinate, 0 for the zero vector.
    int max_index() const { return coords_.empty() ? 0 : coords_.rbegin()->first; }

    int operator[](int index) const
    {
        auto it = coords_.find(index);
        return it == coords_.end() ? 0 : it->second;
    }

    void set(int index, int value)
    {
        if (index < 1) throw UsageError("weight vector index must be positive, got " + std::to_string(index));
        if (value == 0)
            coords_.erase(index);
        else
            coords_[index] = value;
    }

    void add(int index, int delta) { set(index, (*this)[index] + delta); }

    // Dense coordinates 1..length (index 0 of the result is coordinate 1).
    std::vector<int> dense(int length) const
    {
        std::vector<int> out(static_cast<std::size_t>(std::max(length, 0)), 0);
        for (auto [i, v] : coords_)
            if (i <= length) out[static_cast<std::size_t>(i - 1)] = v;
        return out;
    }

    WeightVector& operator+=(const WeightVector& other)
    {
        require_same_basis(other);
        for (auto [i, v] : other.coords_) add(i, v);
        return *this;
    }

    WeightVector& operator-=(const WeightVector& other)
    {
        require_same_basis(other);
        for (auto [i, v] : other.coords_) add(i, -v);
        return *this;
    }

    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }

    friend WeightVector operator-(WeightVector a)
    {
        for (auto& [i, v] : a.coords_) v = -v;
        return a;
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const WeightVector& w)
    {
        os << (w.basis_ == Basis::epsilon ? "eps" : "omega") << '(';
        for (int i = 1; i <= w.max_index(); ++i) os << (i > 1 ? "," : "") << w[i];
        return os << ')';
    }

private:
    void require_same_basis(const WeightVector& other) const
    {
        if (other.basis_ != basis_)
            throw UsageError(std::string("cannot combine weight vectors in ") + to_string(basis_) + " and " +
                             to_string(other.basis_) + " coordinates");
    }

    std::map<int, int> coords_;
    Basis basis_;
};

class Partition {
public:
    Partition() = default;

    // Zero parts at the tail are dropped; anything else must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (parts_[j] < 1) throw UsageError("partition parts must be positive");
            if (j > 0 && parts_[j] > parts_[j - 1]) throw UsageError("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // The single column (1^height).
    static Partition column(int height) { return Partition(std::vector<int>(static_cast<std::size_t>(height), 1)); }

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int size() const
    {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // Row lengths, 0-based, zero beyond the length.
    int row(int r) const { return r < length() ? parts_[static_cast<std::size_t>(r)] : 0; }

    // Young-diagram inclusion.
    bool contains(const Partition& other) const
    {
        if (other.length() > length()) return false;
        for (int r = 0; r < other.length(); ++r)
            if (other.row(r) > row(r)) return false;
        return true;
    }

    WeightVector epsilon_coords() const
    {
        WeightVector w(Basis::epsilon);
        for (int r = 0; r < length(); ++r) w.set(r + 1, parts_[static_cast<std::size_t>(r)]);
        return w;
    }

    WeightVector omega_coords() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Partition& p)
    {
        os << '(';
        for (int r = 0; r < p.length(); ++r) os << (r ? "," : "") << p.row(r);
        return os << ')';
    }

private:
    std::vector<int> parts_;
};

// b_i = a_i - a_{i+1}.
inline WeightVector epsilon_to_omega(const WeightVector& w)
{
    if (w.basis() != Basis::epsilon) throw UsageError("epsilon_to_omega expects epsilon coordinates");
    WeightVector out(Basis::omega);
    for (int i = 1; i <= w.max_index(); ++i) out.set(i, w[i] - w[i + 1]);
    return out;
}

// a_i = sum_{j >= i} b_j.
inline WeightVector omega_to_epsilon(const WeightVector& w)
{
    if (w.basis() != Basis::omega) throw UsageError("omega_to_epsilon expects omega coordinates");
    WeightVector out(Basis::epsilon);
    int tail = 0;
    for (int i = w.max_index(); i >= 1; --i) {
        tail += w[i];
        out.set(i, tail);
    }
    return out;
}

inline WeightVector Partition::omega_coords() const { return epsilon_to_omega(epsilon_coords()); }

// Product order on Z^inf: u <= v iff v_i - u_i >= 0 for every i.
inline bool leq_omega(const WeightVector& u, const WeightVector& v)
{
    if (u.basis() != Basis::omega || v.basis() != Basis::omega)
        throw UsageError("leq_omega expects omega coordinates");
    for (auto [i, x] : u.coords())
        if (v[i] < x) return false;
    for (auto [i, y] : v.coords())
        if (y < u[i]) return false;
    return true;
}

inline WeightVector partition_shift(const Partition& p, const WeightVector& w)
{
    if (w.basis() != Basis::epsilon) throw UsageError("partition_shift expects epsilon coordinates");
    return p.epsilon_coords() + w;
}

// Not-a-partition is an ordinary negative answer, reported as nullopt.
inline std::optional<Partition> as_partition(const WeightVector& w)
{
    if (w.basis() != Basis::epsilon) throw UsageError("as_partition expects epsilon coordinates");
    std::vector<int> parts;
    int previous = 0;
    for (int i = w.max_index(); i >= 1; --i) {
        int a = w[i];
        if (a < previous) return std::nullopt;
        previous = a;
    }
    if (previous < 0) return std::nullopt;
    for (int i = 1; i <= w.max_index(); ++i) parts.push_back(w[i]);
    return Partition(std::move(parts));
}

namespace detail {

inline void partitions_of(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_of(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace detail

// Partitions of exactly n, reverse-lexicographic ((n) first, (1^n) last).
inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> current;
    detail::partitions_of(n, n, current, out);
    return out;
}

// Every partition of size <= max_size, ordered by size then reverse-lexicographically.
inline std::vector<Partition> enumerate_partitions(int max_size)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace cyclic_quiver
