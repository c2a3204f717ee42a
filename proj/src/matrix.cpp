#include "coxkit/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace coxkit {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionError(what);
}

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

/// Fraction-free Bareiss elimination on an integer matrix. Returns the rank
/// and, for square full-rank input, leaves the determinant (signed by the
/// row swaps) in `det_out` when requested.
std::size_t bareiss(std::vector<std::vector<BigInt>>& a, BigInt* det_out) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    BigInt prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Smallest nonzero pivot keeps intermediate minors modest.
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            if (pivot == rows || abs(a[i][c]) < abs(a[pivot][c])) pivot = i;
        }
        if (pivot == rows) continue;
        if (pivot != r) {
            std::swap(a[pivot], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    if (det_out) {
        if (rows == cols && r == rows)
            *det_out = sign > 0 ? prev : -prev;
        else
            *det_out = 0;
    }
    return r;
}

std::vector<std::vector<BigInt>> cleared_rows(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt scale = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale = lcm_big(scale, denominator(m.at(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& e = m.at(i, j);
            out[i][j] = numerator(e) * (scale / denominator(e));
        }
    }
    return out;
}

}  // namespace

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::jordan_block(const Rational& eigenvalue, std::size_t size) {
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m.at(i, i) = eigenvalue;
        if (i + 1 < size) m.at(i, i + 1) = 1;
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_int_rows(v);
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        require(rows[i].size() == c, "ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& e) { return e == 0; });
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix addition shape mismatch");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + other.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    require(rows_ == other.rows_ && cols_ == other.cols_, "matrix subtraction shape mismatch");
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - other.entries_[i];
    return s;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    require(cols_ == other.rows_, "matrix product shape mismatch");
    RationalMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rational& bkj = other.at(k, j);
                if (bkj != 0) p.at(i, j) += aik * bkj;
            }
        }
    return p;
}

RationalMatrix RationalMatrix::operator*(const Rational& scalar) const {
    RationalMatrix s(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] * scalar;
    return s;
}

RationalMatrix RationalMatrix::pow(std::size_t k) const {
    require(is_square(), "pow of non-square matrix");
    RationalMatrix acc = identity(rows_);
    for (std::size_t i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

std::size_t RationalMatrix::rank() const {
    auto a = cleared_rows(*this);
    return bareiss(a, nullptr);
}

Rational RationalMatrix::determinant() const {
    require(is_square(), "determinant of non-square matrix");
    if (rows_ == 0) return 1;
    // Clear denominators once for the whole matrix, then divide back.
    BigInt scale = 1;
    for (const Rational& e : entries_) scale = lcm_big(scale, denominator(e));
    std::vector<std::vector<BigInt>> a(rows_, std::vector<BigInt>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& e = at(i, j);
            a[i][j] = numerator(e) * (scale / denominator(e));
        }
    BigInt det;
    bareiss(a, &det);
    Rational result(det);
    Rational divisor(boost::multiprecision::pow(scale, static_cast<unsigned>(rows_)));
    return result / divisor;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    require(is_square(), "inverse of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix work = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (work.at(i, c) != 0) { pivot = i; break; }
        if (pivot == n) return std::nullopt;
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(pivot, j), work.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        const Rational d = work.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(c, j) /= d;
            inv.at(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Rational f = work.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= f * work.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << coxkit::to_string(at(i, j));
        }
        os << "]";
        os << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

std::size_t integer_rank(std::vector<std::vector<BigInt>> grid) {
    return bareiss(grid, nullptr);
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix p(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rational& bkl = b.at(k, l);
                    if (bkl != 0) p.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return p;
}

std::optional<std::size_t> nilpotency_index(const RationalMatrix& n) {
    if (!n.is_square()) throw DimensionError("nilpotency index of non-square matrix");
    RationalMatrix p = RationalMatrix::identity(n.rows());
    for (std::size_t k = 1; k <= std::max<std::size_t>(n.rows(), 1); ++k) {
        p = p * n;
        if (p.is_zero()) return k;
    }
    return std::nullopt;
}

RationalMatrix exp_nilpotent(const RationalMatrix& n) {
    if (!n.is_square()) throw DimensionError("exp of non-square matrix");
    const std::size_t dim = n.rows();
    RationalMatrix sum = RationalMatrix::identity(dim);
    RationalMatrix power = RationalMatrix::identity(dim);
    Rational factorial = 1;
    for (std::size_t i = 1; i <= dim; ++i) {
        power = power * n;
        if (power.is_zero()) break;
        if (i == dim) throw NotNilpotentError("matrix is not nilpotent");
        factorial *= i;
        sum = sum + power * (Rational(1) / factorial);
    }
    return sum;
}

}  // namespace coxkit
