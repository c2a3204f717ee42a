#include "coxkit/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxkit {

void JordanType::add(const Rational& eigenvalue, std::size_t size, std::size_t multiplicity) {
    if (size == 0) throw std::invalid_argument("Jordan block of size 0");
    if (multiplicity == 0) return;
    auto pos = std::find_if(blocks_.begin(), blocks_.end(), [&](const JordanBlockEntry& b) {
        return b.eigenvalue == eigenvalue && b.size == size;
    });
    if (pos != blocks_.end()) {
        pos->multiplicity += multiplicity;
        return;
    }
    blocks_.push_back({eigenvalue, size, multiplicity});
    std::sort(blocks_.begin(), blocks_.end(), [](const JordanBlockEntry& a, const JordanBlockEntry& b) {
        if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
        return a.size > b.size;
    });
}

void JordanType::add(const JordanType& other) {
    for (const auto& b : other.blocks_) add(b.eigenvalue, b.size, b.multiplicity);
}

std::size_t JordanType::total_dimension() const {
    return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0},
                           [](std::size_t acc, const JordanBlockEntry& b) {
                               return acc + b.size * b.multiplicity;
                           });
}

std::size_t JordanType::block_count() const {
    return std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0},
                           [](std::size_t acc, const JordanBlockEntry& b) {
                               return acc + b.multiplicity;
                           });
}

std::vector<std::size_t> JordanType::sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks_)
        out.insert(out.end(), b.multiplicity, b.size);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<std::size_t> JordanType::sizes_at(const Rational& eigenvalue) const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks_)
        if (b.eigenvalue == eigenvalue) out.insert(out.end(), b.multiplicity, b.size);
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool JordanType::has_single_eigenvalue(Rational* out) const {
    if (blocks_.empty()) return false;
    for (const auto& b : blocks_)
        if (b.eigenvalue != blocks_.front().eigenvalue) return false;
    if (out) *out = blocks_.front().eigenvalue;
    return true;
}

JordanType JordanType::with_eigenvalue(const Rational& eigenvalue) const {
    JordanType out;
    for (const auto& b : blocks_) out.add(eigenvalue, b.size, b.multiplicity);
    return out;
}

std::string JordanType::to_string() const {
    if (blocks_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& b : blocks_) {
        if (!first) os << " + ";
        first = false;
        os << "J(" << coxkit::to_string(b.eigenvalue) << "," << b.size << ")";
        if (b.multiplicity > 1) os << "^" << b.multiplicity;
    }
    return os.str();
}

namespace {

using IntGrid = std::vector<std::vector<BigInt>>;

IntGrid grid_mul(const IntGrid& a, const IntGrid& b) {
    const std::size_t n = a.size();
    IntGrid out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const BigInt& aik = a[i][k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[k][j] != 0) out[i][j] += aik * b[k][j];
        }
    return out;
}

}  // namespace

JordanType jordan_type_at(const RationalMatrix& m, const Rational& mu) {
    if (!m.is_square()) throw DimensionError("jordan_type_at needs a square matrix");
    const std::size_t dim = m.rows();
    JordanType type;
    if (dim == 0) return type;

    // Scale m - mu*I to integers once; the rank sequence is scale-invariant
    // and the power iteration runs on integers from then on.
    BigInt scale = 1;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Rational e = i == j ? m.at(i, j) - mu : m.at(i, j);
            const BigInt d = denominator(e);
            scale = scale / boost::multiprecision::gcd(scale, d) * d;
        }
    IntGrid shifted(dim, std::vector<BigInt>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const Rational e = i == j ? m.at(i, j) - mu : m.at(i, j);
            shifted[i][j] = numerator(e) * (scale / denominator(e));
        }

    // A triangular shift with nonzero diagonal is invertible, so mu is not
    // an eigenvalue and no elimination is needed.
    bool upper = true, lower = true, diagonal_nonzero = true;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            if (i > j && shifted[i][j] != 0) upper = false;
            if (i < j && shifted[i][j] != 0) lower = false;
            if (i == j && shifted[i][j] == 0) diagonal_nonzero = false;
        }
    if (diagonal_nonzero && (upper || lower)) return type;

    // ranks[k] = rank(shifted^k); stop once the sequence stabilizes.
    std::vector<std::size_t> ranks{dim};
    IntGrid power = shifted;
    for (std::size_t k = 1; k <= dim; ++k) {
        ranks.push_back(integer_rank(power));
        if (ranks[k] == ranks[k - 1]) break;
        power = grid_mul(power, shifted);
    }
    if (ranks.back() != ranks[ranks.size() - 2]) ranks.push_back(ranks.back());

    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        const std::size_t count = ranks[k - 1] + ranks[k + 1] - 2 * ranks[k];
        if (count > 0) type.add(mu, k, count);
    }
    return type;
}

JordanType full_jordan_type(const RationalMatrix& m, const std::vector<Rational>& candidates) {
    if (!m.is_square()) throw DimensionError("full_jordan_type needs a square matrix");
    std::vector<Rational> distinct;
    for (const auto& c : candidates)
        if (std::find(distinct.begin(), distinct.end(), c) == distinct.end()) distinct.push_back(c);

    JordanType type;
    for (const auto& mu : distinct) type.add(jordan_type_at(m, mu));
    if (type.total_dimension() != m.rows())
        throw IncompleteSpectrumError(
            "candidate eigenvalues account for dimension " + std::to_string(type.total_dimension()) +
            " of " + std::to_string(m.rows()));
    return type;
}

}  // namespace coxkit
