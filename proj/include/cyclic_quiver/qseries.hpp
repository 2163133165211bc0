#pragma once

// Truncated power series in q with exact integer coefficients. A series with
// truncation D is known modulo q^{D+1}; results of arithmetic carry the smaller
// truncation of their operands.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"
#include "partition.hpp"

namespace cyclic_quiver {

using Integer = boost::multiprecision::cpp_int;

class QSeries {
public:
    QSeries() : QSeries(0) {}

    explicit QSeries(int truncation) : coeffs_(static_cast<std::size_t>(check(truncation)) + 1) {}

    QSeries(int truncation, std::vector<Integer> coeffs) : QSeries(truncation)
    {
        for (std::size_t d = 0; d < coeffs.size() && d < coeffs_.size(); ++d) coeffs_[d] = std::move(coeffs[d]);
    }

    static QSeries one(int truncation)
    {
        QSeries s(truncation);
        s.coeffs_[0] = 1;
        return s;
    }

    // c q^d, or zero when d exceeds the truncation.
    static QSeries monomial(int truncation, int degree, Integer c = 1)
    {
        QSeries s(truncation);
        if (degree >= 0 && degree <= truncation) s.coeffs_[static_cast<std::size_t>(degree)] = std::move(c);
        return s;
    }

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    const Integer& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
    Integer& operator[](int degree) { return coeffs_.at(static_cast<std::size_t>(degree)); }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
    }

    QSeries truncated(int truncation) const
    {
        QSeries s(std::min(truncation, this->truncation()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    QSeries& operator+=(const QSeries& other)
    {
        shrink_to(other.truncation());
        for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += other.coeffs_[d];
        return *this;
    }

    QSeries& operator-=(const QSeries& other)
    {
        shrink_to(other.truncation());
        for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= other.coeffs_[d];
        return *this;
    }

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

    // Cauchy product modulo q^{min(truncations)+1}.
    friend QSeries mul(const QSeries& a, const QSeries& b)
    {
        QSeries out(std::min(a.truncation(), b.truncation()));
        auto top = static_cast<std::size_t>(out.truncation());
        for (std::size_t i = 0; i <= top; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= top; ++j)
                if (b.coeffs_[j] != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend bool operator==(const QSeries&, const QSeries&) = default;

    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            const Integer& c = coeffs_[d];
            if (c == 0) continue;
            Integer mag = c < 0 ? Integer(-c) : c;
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            if (d == 0 || mag != 1) os << mag;
            if (d >= 1) os << 'q';
            if (d >= 2) os << '^' << d;
        }
        if (first) os << '0';
        os << " + O(q^" << coeffs_.size() << ')';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

private:
    static int check(int truncation)
    {
        if (truncation < 0) throw UsageError("series truncation must be nonnegative");
        return truncation;
    }

    void shrink_to(int truncation)
    {
        if (truncation < this->truncation()) coeffs_.resize(static_cast<std::size_t>(truncation) + 1);
    }

    std::vector<Integer> coeffs_;
};

// prod_{i>=1} (1 - q^{k i}); factors with k i > truncation are 1 at this precision.
inline QSeries euler_factor(int k, int truncation)
{
    if (k < 1) throw UsageError("euler_factor needs k >= 1");
    QSeries out = QSeries::one(truncation);
    for (int i = 1; k * i <= truncation; ++i) out = mul(out, QSeries::one(truncation) - QSeries::monomial(truncation, k * i));
    return out;
}

// Same product, stopping after the first `factors` terms (invariants of a finite quiver).
inline QSeries euler_factor_finite(int k, int factors, int truncation)
{
    if (k < 1) throw UsageError("euler_factor_finite needs k >= 1");
    QSeries out = QSeries::one(truncation);
    for (int i = 1; i <= factors && k * i <= truncation; ++i)
        out = mul(out, QSeries::one(truncation) - QSeries::monomial(truncation, k * i));
    return out;
}

// sum over partitions delta of q^{k |delta|}.
inline QSeries partition_series(int k, int truncation)
{
    if (k < 1) throw UsageError("partition_series needs k >= 1");
    int top = truncation / k;
    // Count multisets of parts summing to m, one part size at a time.
    std::vector<Integer> counts(static_cast<std::size_t>(top) + 1);
    counts[0] = 1;
    for (int part = 1; part <= top; ++part)
        for (int m = part; m <= top; ++m) counts[static_cast<std::size_t>(m)] += counts[static_cast<std::size_t>(m - part)];
    QSeries out(truncation);
    for (int m = 0; m <= top; ++m) out[k * m] = counts[static_cast<std::size_t>(m)];
    return out;
}

} // namespace cyclic_quiver
