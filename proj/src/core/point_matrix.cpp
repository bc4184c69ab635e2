#include "plslab/core/point_matrix.hpp"

#include "plslab/core/error.hpp"

#include <set>

namespace plslab {

SqrtCoord::SqrtCoord(int s, Rat r) : sign(s), radicand(std::move(r))
{
    if (sign < -1 || sign > 1) {
        throw InvalidMatrixError("coordinate sign must be -1, 0 or 1");
    }
    if (radicand.sign() < 0) {
        throw InvalidMatrixError("negative radicand " + radicand.to_string());
    }
    if ((sign == 0) != radicand.is_zero()) {
        throw InvalidMatrixError("sign is 0 exactly when the radicand is 0");
    }
}

SqrtCoord SqrtCoord::integer(const Int& value)
{
    if (value.is_zero()) {
        return {};
    }
    return {value.sign(), Rat(Int(value * value))};
}

PointMatrix::PointMatrix(std::size_t points, std::size_t columns)
    : rows_(points, std::vector<SqrtCoord>(columns)), columns_(columns)
{
}

PointMatrix::PointMatrix(std::vector<std::vector<SqrtCoord>> rows) : rows_(std::move(rows))
{
    columns_ = rows_.empty() ? 0 : rows_.front().size();
    for (const auto& r : rows_) {
        if (r.size() != columns_) {
            throw InvalidMatrixError("ragged point matrix");
        }
    }
}

void PointMatrix::check_point(std::size_t i) const
{
    if (i >= rows_.size()) {
        throw DimensionError("point " + std::to_string(i) + " out of range");
    }
}

const SqrtCoord& PointMatrix::at(std::size_t point, std::size_t column) const
{
    check_point(point);
    if (column >= columns_) {
        throw DimensionError("column " + std::to_string(column) + " out of range");
    }
    return rows_[point][column];
}

void PointMatrix::set(std::size_t point, std::size_t column, SqrtCoord value)
{
    check_point(point);
    if (column >= columns_) {
        throw DimensionError("column " + std::to_string(column) + " out of range");
    }
    rows_[point][column] = std::move(value);
}

std::size_t PointMatrix::add_column()
{
    for (auto& r : rows_) {
        r.emplace_back();
    }
    return columns_++;
}

std::size_t PointMatrix::add_point()
{
    rows_.emplace_back(columns_);
    return rows_.size() - 1;
}

std::optional<Rat> PointMatrix::column_radicand(std::size_t column) const
{
    for (const auto& r : rows_) {
        if (r[column].sign != 0) {
            return r[column].radicand;
        }
    }
    return std::nullopt;
}

std::optional<std::string> PointMatrix::alignment_violation() const
{
    for (std::size_t c = 0; c < columns_; ++c) {
        const auto rad = column_radicand(c);
        if (!rad) {
            continue;
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const SqrtCoord& x = rows_[i][c];
            if (x.sign != 0 && x.radicand != *rad) {
                return "column " + std::to_string(c) + " mixes radicands " + rad->to_string() + " and " +
                       x.radicand.to_string() + " (row " + std::to_string(i) + ")";
            }
        }
    }
    return std::nullopt;
}

bool PointMatrix::is_aligned() const
{
    return !alignment_violation().has_value();
}

void PointMatrix::check_aligned() const
{
    if (auto v = alignment_violation()) {
        throw InvalidMatrixError(*v);
    }
}

Rat PointMatrix::squared_distance(std::size_t i, std::size_t j) const
{
    check_point(i);
    check_point(j);
    check_aligned();
    Rat s;
    for (std::size_t c = 0; c < columns_; ++c) {
        const SqrtCoord& a = rows_[i][c];
        const SqrtCoord& b = rows_[j][c];
        const int d = a.sign - b.sign;
        if (d != 0) {
            s += Rat(d * d) * (a.sign != 0 ? a.radicand : b.radicand);
        }
    }
    return s;
}

Rat PointMatrix::squared_norm(std::size_t i) const
{
    check_point(i);
    Rat s;
    for (const SqrtCoord& a : rows_[i]) {
        s += a.radicand;
    }
    return s;
}

Rat PointMatrix::inner_product(std::size_t i, std::size_t j) const
{
    check_point(i);
    check_point(j);
    check_aligned();
    Rat s;
    for (std::size_t c = 0; c < columns_; ++c) {
        const SqrtCoord& a = rows_[i][c];
        const SqrtCoord& b = rows_[j][c];
        if (a.sign != 0 && b.sign != 0) {
            s += Rat(a.sign * b.sign) * a.radicand;
        }
    }
    return s;
}

bool PointMatrix::is_injective() const
{
    std::set<std::vector<std::pair<int, std::string>>> seen;
    for (const auto& r : rows_) {
        std::vector<std::pair<int, std::string>> key;
        key.reserve(r.size());
        for (const SqrtCoord& x : r) {
            key.emplace_back(x.sign, x.radicand.to_string());
        }
        if (!seen.insert(std::move(key)).second) {
            return false;
        }
    }
    return true;
}

} // namespace plslab
