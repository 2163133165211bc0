#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace cyclic_quiver {

// A semistandard tableau in English notation: rows weakly increase, columns
// strictly increase. Entries are unbounded positive integers.
class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
    {
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        std::vector<int> lengths;
        for (const auto& row : rows_) lengths.push_back(static_cast<int>(row.size()));
        shape_ = Partition(lengths);
        if (!is_semistandard()) throw UsageError("tableau rows must weakly increase and columns strictly increase");
    }

    // Row r filled with r: the unique tableau of this shape killed by every raising operator.
    static Tableau highest_weight(const Partition& shape)
    {
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < shape.length(); ++r) rows.emplace_back(static_cast<std::size_t>(shape.row(r)), r + 1);
        return Tableau(std::move(rows));
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int box_count() const { return shape_.size(); }

    int at(int r, int c) const { return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

    int max_entry() const
    {
        int m = 0;
        for (const auto& row : rows_)
            if (!row.empty()) m = std::max(m, row.back());
        return m;
    }

    // Box positions in column reading order: columns left to right, each read bottom to top.
    std::vector<std::pair<int, int>> column_reading_positions() const
    {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(box_count()));
        for (int c = 0; c < shape_.row(0); ++c) {
            int height = 0;
            while (height < shape_.length() && shape_.row(height) > c) ++height;
            for (int r = height - 1; r >= 0; --r) out.emplace_back(r, c);
        }
        return out;
    }

    // Copy with one box replaced; no validation, callers guarantee semistandardness.
    Tableau with_entry(int r, int c, int value) const
    {
        Tableau t = *this;
        t.rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = value;
        return t;
    }

    bool is_semistandard() const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (rows_[r][c] < 1) return false;
                if (c > 0 && rows_[r][c - 1] > rows_[r][c]) return false;
                if (r > 0 && rows_[r - 1][c] >= rows_[r][c]) return false;
            }
        }
        return true;
    }

    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }
    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }

    friend std::ostream& operator<<(std::ostream& os, const Tableau& t)
    {
        os << '[';
        for (std::size_t r = 0; r < t.rows_.size(); ++r) {
            os << (r ? "," : "") << '[';
            for (std::size_t c = 0; c < t.rows_[r].size(); ++c) os << (c ? "," : "") << t.rows_[r][c];
            os << ']';
        }
        return os << ']';
    }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

namespace detail {

// Fills boxes in row-major order; trying values in increasing order yields the
// tableaux sorted lexicographically by their top-to-bottom row reading word.
inline void fill_sst(const Partition& shape, int max_entry, int box, std::vector<std::vector<int>>& rows,
                     std::vector<Tableau>& out)
{
    int total = shape.size();
    if (box == total) {
        out.emplace_back(rows);
        return;
    }
    int r = 0, c = box;
    while (c >= shape.row(r)) c -= shape.row(r++);
    int low = 1;
    if (c > 0) low = std::max(low, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) low = std::max(low, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    // Column below this box still needs (height - r - 1) strictly larger entries.
    int height = r;
    while (height < shape.length() && shape.row(height) > c) ++height;
    int high = max_entry - (height - r - 1);
    for (int v = low; v <= high; ++v) {
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        fill_sst(shape, max_entry, box + 1, rows, out);
    }
}

} // namespace detail

// All semistandard tableaux of the shape with entries in 1..max_entry, in
// lexicographic order of the row reading word.
inline std::vector<Tableau> enumerate_sst(const Partition& shape, int max_entry)
{
    std::vector<Tableau> out;
    if (shape.empty()) {
        out.emplace_back();
        return out;
    }
    if (max_entry < 1) return out;
    std::vector<std::vector<int>> rows;
    for (int r = 0; r < shape.length(); ++r) rows.emplace_back(static_cast<std::size_t>(shape.row(r)), 0);
    detail::fill_sst(shape, max_entry, 0, rows, out);
    return out;
}

} // namespace cyclic_quiver
