#include "coxkit/chow.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace coxkit {

namespace {

void require_shape(bool ok) {
    if (!ok) throw DimensionError("Chow class coordinate shapes differ");
}

/// Column order within a degree: monomials on low ray indices first, so the
/// elimination consumes them and the high-index monomials become the basis.
bool column_before(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> ka(a.rbegin(), a.rend());
    std::vector<int> kb(b.rbegin(), b.rend());
    return ka < kb;
}

std::vector<int> support_of(const std::vector<int>& monomial) {
    std::vector<int> s = monomial;
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

/// All degree-d monomials in the ray variables whose support is a face:
/// for each face, every composition of d into positive exponents.
std::vector<std::vector<int>> face_monomials(const std::set<std::vector<int>>& faces,
                                             std::size_t degree) {
    std::vector<std::vector<int>> out;
    if (degree == 0) {
        out.push_back({});
        return out;
    }
    for (const auto& face : faces) {
        const std::size_t s = face.size();
        if (s == 0 || s > degree) continue;
        std::vector<std::size_t> extra(s, 0);  // exponent of face[k] is 1 + extra[k]
        const std::function<void(std::size_t, std::size_t)> distribute = [&](std::size_t slot,
                                                                             std::size_t left) {
            if (slot + 1 == s) {
                extra[slot] = left;
                std::vector<int> mono;
                for (std::size_t k = 0; k < s; ++k)
                    mono.insert(mono.end(), 1 + extra[k], face[k]);
                out.push_back(std::move(mono));
                return;
            }
            for (std::size_t take = 0; take <= left; ++take) {
                extra[slot] = take;
                distribute(slot + 1, left - take);
            }
        };
        distribute(0, degree - s);
    }
    std::sort(out.begin(), out.end(), column_before);
    return out;
}

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) { p = i; break; }
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational d = rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= d;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const Rational f = rows[i][c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

bool ChowClass::is_zero() const {
    for (const auto& level : coords_)
        for (const auto& e : level)
            if (e != 0) return false;
    return true;
}

bool ChowClass::is_homogeneous_of(std::size_t d) const {
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        if (k == d) continue;
        for (const auto& e : coords_[k])
            if (e != 0) return false;
    }
    return true;
}

ChowClass ChowClass::operator+(const ChowClass& other) const {
    require_shape(coords_.size() == other.coords_.size());
    auto out = coords_;
    for (std::size_t d = 0; d < out.size(); ++d) {
        require_shape(out[d].size() == other.coords_[d].size());
        for (std::size_t i = 0; i < out[d].size(); ++i) out[d][i] += other.coords_[d][i];
    }
    return ChowClass(out);
}

ChowClass ChowClass::operator-(const ChowClass& other) const {
    return *this + other * Rational(-1);
}

ChowClass ChowClass::operator*(const Rational& scalar) const {
    auto out = coords_;
    for (auto& level : out)
        for (auto& e : level) e *= scalar;
    return ChowClass(out);
}

ChowRing ChowRing::build(const Fan& fan) {
    require_valid(fan);
    ChowRing ring;
    ring.fan_ = fan;
    ring.fan_.normalize();
    const std::size_t n = fan.rank;

    const auto expected = betti(fan);
    for (const auto& level : faces_by_dimension(ring.fan_))
        for (const auto& face : level) ring.faces_.insert(face);

    ring.graded_.resize(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        Graded& g = ring.graded_[d];
        g.monomials = face_monomials(ring.faces_, d);
        for (std::size_t c = 0; c < g.monomials.size(); ++c) g.index_of[g.monomials[c]] = c;

        if (d == 0) {
            g.basis_cols = {0};
            g.reduce = {{Rational(1)}};
        } else {
            const std::size_t cols = g.monomials.size();
            std::vector<std::vector<Rational>> rows;
            for (const auto& mu : ring.graded_[d - 1].monomials) {
                for (std::size_t m = 0; m < n; ++m) {
                    std::vector<Rational> row(cols, Rational(0));
                    bool nonzero = false;
                    for (std::size_t rho = 0; rho < ring.fan_.rays.size(); ++rho) {
                        const long long coeff = ring.fan_.rays[rho][m];
                        if (coeff == 0) continue;
                        std::vector<int> nu = mu;
                        nu.insert(std::upper_bound(nu.begin(), nu.end(), static_cast<int>(rho)),
                                  static_cast<int>(rho));
                        if (!ring.faces_.count(support_of(nu))) continue;
                        row[g.index_of.at(nu)] += coeff;
                        nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
            }
            const auto pivots = rref(rows, cols);
            std::vector<char> is_pivot(cols, 0);
            for (std::size_t p : pivots) is_pivot[p] = 1;
            for (std::size_t c = 0; c < cols; ++c)
                if (!is_pivot[c]) g.basis_cols.push_back(c);

            std::map<std::size_t, std::size_t> basis_pos;
            for (std::size_t b = 0; b < g.basis_cols.size(); ++b) basis_pos[g.basis_cols[b]] = b;

            g.reduce.assign(cols, std::vector<Rational>(g.basis_cols.size(), Rational(0)));
            for (std::size_t c = 0; c < cols; ++c)
                if (!is_pivot[c]) g.reduce[c][basis_pos[c]] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                const std::size_t p = pivots[r];
                for (std::size_t b = 0; b < g.basis_cols.size(); ++b)
                    g.reduce[p][b] = -rows[r][g.basis_cols[b]];
            }
        }

        if (g.basis_cols.size() != expected[d])
            throw BettiMismatchError("graded piece " + std::to_string(d) + " has dimension " +
                                     std::to_string(g.basis_cols.size()) + ", Betti number is " +
                                     std::to_string(expected[d]));
        ring.dims_.push_back(g.basis_cols.size());
    }

    // Point normalization: every max-cone product must reduce to the same
    // degree-n class (smoothness gives multiplicity one).
    bool first = true;
    for (const auto& cone : ring.fan_.max_cones) {
        const auto red = ring.graded_[n].reduce.at(ring.graded_[n].index_of.at(cone));
        if (first) {
            ring.point_coefficient_ = red[0];
            first = false;
        } else if (red[0] != ring.point_coefficient_) {
            throw BettiMismatchError("max-cone products disagree in the top degree");
        }
    }
    if (ring.point_coefficient_ == 0)
        throw BettiMismatchError("max-cone product vanishes in the top degree");

    // Basis products, reduced once.
    ring.products_.resize(n + 1);
    for (std::size_t d1 = 0; d1 <= n; ++d1) {
        ring.products_[d1].resize(ring.dims_[d1]);
        for (std::size_t i = 0; i < ring.dims_[d1]; ++i) {
            ring.products_[d1][i].resize(n - d1 + 1);
            for (std::size_t d2 = 0; d1 + d2 <= n; ++d2) {
                ring.products_[d1][i][d2].resize(ring.dims_[d2]);
                for (std::size_t j = 0; j < ring.dims_[d2]; ++j) {
                    const auto& ma = ring.graded_[d1].monomials[ring.graded_[d1].basis_cols[i]];
                    const auto& mb = ring.graded_[d2].monomials[ring.graded_[d2].basis_cols[j]];
                    std::vector<int> prod;
                    std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(prod));
                    std::vector<Rational> coords(ring.dims_[d1 + d2], Rational(0));
                    if (ring.faces_.count(support_of(prod)))
                        coords = ring.graded_[d1 + d2].reduce.at(ring.graded_[d1 + d2].index_of.at(prod));
                    ring.products_[d1][i][d2][j] = std::move(coords);
                }
            }
        }
    }
    return ring;
}

std::size_t ChowRing::total_dim() const {
    std::size_t total = 0;
    for (std::size_t d : dims_) total += d;
    return total;
}

ChowClass ChowRing::zero() const {
    std::vector<std::vector<Rational>> coords(dims_.size());
    for (std::size_t d = 0; d < dims_.size(); ++d) coords[d].assign(dims_[d], Rational(0));
    return ChowClass(coords);
}

ChowClass ChowRing::unit() const { return basis_class(0, 0); }

ChowClass ChowRing::basis_class(std::size_t degree, std::size_t index) const {
    ChowClass c = zero();
    c.degree(degree).at(index) = 1;
    return c;
}

ChowClass ChowRing::ray_class(std::size_t ray) const {
    return monomial_class({static_cast<int>(ray)});
}

ChowClass ChowRing::reduce_to_class(const std::vector<int>& monomial) const {
    ChowClass c = zero();
    const std::size_t d = monomial.size();
    if (d >= graded_.size()) return c;
    if (!faces_.count(support_of(monomial))) return c;
    c.degree(d) = graded_[d].reduce.at(graded_[d].index_of.at(monomial));
    return c;
}

ChowClass ChowRing::monomial_class(std::vector<int> ray_indices) const {
    std::sort(ray_indices.begin(), ray_indices.end());
    for (int idx : ray_indices)
        if (idx < 0 || static_cast<std::size_t>(idx) >= fan_.rays.size())
            throw std::out_of_range("ray index out of range");
    return reduce_to_class(ray_indices);
}

std::string ChowRing::basis_label(std::size_t degree, std::size_t index) const {
    const auto& mono = graded_.at(degree).monomials[graded_.at(degree).basis_cols.at(index)];
    if (mono.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < mono.size();) {
        std::size_t run = k;
        while (run < mono.size() && mono[run] == mono[k]) ++run;
        if (k) os << "*";
        os << "D" << mono[k];
        if (run - k > 1) os << "^" << (run - k);
        k = run;
    }
    return os.str();
}

ChowClass ChowRing::multiply(const ChowClass& a, const ChowClass& b) const {
    const std::size_t n = variety_dim();
    require_shape(a.coords().size() == n + 1 && b.coords().size() == n + 1);
    ChowClass out = zero();
    for (std::size_t d1 = 0; d1 <= n; ++d1) {
        require_shape(a.degree(d1).size() == dims_[d1] && b.degree(d1).size() == dims_[d1]);
        for (std::size_t i = 0; i < dims_[d1]; ++i) {
            const Rational& ai = a.degree(d1)[i];
            if (ai == 0) continue;
            for (std::size_t d2 = 0; d1 + d2 <= n; ++d2)
                for (std::size_t j = 0; j < dims_[d2]; ++j) {
                    const Rational& bj = b.degree(d2)[j];
                    if (bj == 0) continue;
                    const auto& coords = products_[d1][i][d2][j];
                    const Rational scale = ai * bj;
                    auto& target = out.degree(d1 + d2);
                    for (std::size_t k = 0; k < coords.size(); ++k)
                        if (coords[k] != 0) target[k] += scale * coords[k];
                }
        }
    }
    return out;
}

ChowClass ChowRing::power(const ChowClass& a, std::size_t k) const {
    ChowClass acc = unit();
    for (std::size_t i = 0; i < k; ++i) acc = multiply(acc, a);
    return acc;
}

ChowClass ChowRing::canonical_class() const {
    ChowClass k = zero();
    for (std::size_t rho = 0; rho < fan_.rays.size(); ++rho) k = k - ray_class(rho);
    return k;
}

ChowClass ChowRing::chern_character(const ChowClass& divisor) const {
    if (divisor.coords().size() != dims_.size() || !divisor.is_homogeneous_of(1))
        throw DegreeError("Chern character needs a homogeneous degree-1 class");
    ChowClass acc = unit();
    ChowClass term = unit();
    for (std::size_t k = 1; k <= variety_dim(); ++k) {
        term = multiply(term, divisor) * (Rational(1) / Rational(k));
        acc = acc + term;
    }
    return acc;
}

RationalMatrix ChowRing::multiplication_operator(const ChowClass& c) const {
    const std::size_t m = total_dim();
    RationalMatrix op(m, m);
    std::size_t row = 0;
    for (std::size_t d = 0; d < dims_.size(); ++d)
        for (std::size_t i = 0; i < dims_[d]; ++i, ++row) {
            const ChowClass image = multiply(basis_class(d, i), c);
            std::size_t col = 0;
            for (std::size_t e = 0; e < dims_.size(); ++e)
                for (std::size_t j = 0; j < dims_[e]; ++j, ++col) op.at(row, col) = image.degree(e)[j];
        }
    return op;
}

Rational ChowRing::degree_number(const ChowClass& a) const {
    const std::size_t n = variety_dim();
    require_shape(a.coords().size() == n + 1);
    if (dims_[n] != 1) throw DegreeError("top graded piece is not one-dimensional");
    return a.degree(n)[0] / point_coefficient_;
}

}  // namespace coxkit
