#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxkit/fan.hpp"
#include "coxkit/matrix.hpp"
#include "coxkit/rational.hpp"

namespace coxkit {

struct BettiMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of a graded Chow ring: one exact coordinate vector per degree,
/// relative to the owning ring's graded bases.
class ChowClass {
public:
    ChowClass() = default;
    explicit ChowClass(std::vector<std::vector<Rational>> coords) : coords_(std::move(coords)) {}

    const std::vector<std::vector<Rational>>& coords() const { return coords_; }
    const std::vector<Rational>& degree(std::size_t d) const { return coords_.at(d); }
    std::vector<Rational>& degree(std::size_t d) { return coords_.at(d); }
    std::size_t top_degree() const { return coords_.empty() ? 0 : coords_.size() - 1; }

    bool is_zero() const;
    /// True when every coordinate outside the given degree vanishes.
    bool is_homogeneous_of(std::size_t d) const;

    ChowClass operator+(const ChowClass& other) const;
    ChowClass operator-(const ChowClass& other) const;
    ChowClass operator*(const Rational& scalar) const;
    bool operator==(const ChowClass&) const = default;

private:
    std::vector<std::vector<Rational>> coords_;
};

/// Rational Chow ring of a smooth complete fan, presented as the polynomial
/// ring on the ray classes modulo the Stanley-Reisner ideal and the linear
/// relations sum_rho <m, u_rho> x_rho. Graded bases are reduced monomials,
/// chosen deterministically (see build()).
class ChowRing {
public:
    /// Enumerates face-supported monomials per degree, eliminates the
    /// relation space exactly, and fixes the basis as the least independent
    /// monomials (preferring high ray indices, so blow-up classes survive).
    /// Throws BettiMismatchError when a graded dimension disagrees with the
    /// Betti numbers of the fan.
    static ChowRing build(const Fan& fan);

    const Fan& fan() const { return fan_; }
    std::size_t variety_dim() const { return fan_.rank; }
    const std::vector<std::size_t>& graded_dims() const { return dims_; }
    std::size_t total_dim() const;

    ChowClass zero() const;
    ChowClass unit() const;
    ChowClass ray_class(std::size_t ray) const;
    ChowClass basis_class(std::size_t degree, std::size_t index) const;
    /// Class of a product of ray classes (empty list = 1); zero when the
    /// support is not a face.
    ChowClass monomial_class(std::vector<int> ray_indices) const;

    /// Monomial label of a basis element, e.g. "1", "D3", "D3^2", "D3*D4".
    std::string basis_label(std::size_t degree, std::size_t index) const;

    ChowClass multiply(const ChowClass& a, const ChowClass& b) const;
    ChowClass power(const ChowClass& a, std::size_t k) const;

    /// -sum of all ray classes.
    ChowClass canonical_class() const;

    /// Truncated exponential 1 + D + D^2/2! + ... + D^n/n! of a homogeneous
    /// degree-1 class. Throws DegreeError otherwise.
    ChowClass chern_character(const ChowClass& divisor) const;

    /// Matrix of multiplication by c on the concatenated graded basis
    /// (degree, then basis index); row i is the image of basis element i.
    RationalMatrix multiplication_operator(const ChowClass& c) const;

    /// Top coordinate measured against the max-cone point class.
    Rational degree_number(const ChowClass& a) const;

private:
    struct Graded {
        std::vector<std::vector<int>> monomials;           // column order (ascending ray-index multisets)
        std::map<std::vector<int>, std::size_t> index_of;  // monomial -> column
        std::vector<std::size_t> basis_cols;               // basis columns, in column order
        std::vector<std::vector<Rational>> reduce;         // per column: coordinates over basis
    };

    ChowClass reduce_to_class(const std::vector<int>& monomial) const;

    Fan fan_;
    std::vector<std::size_t> dims_;
    std::vector<Graded> graded_;
    std::set<std::vector<int>> faces_;
    Rational point_coefficient_ = 0;  // max-cone product in the degree-n basis
    // products of basis elements, indexed [d1][i][d2][j] (d1 + d2 <= n)
    std::vector<std::vector<std::vector<std::vector<std::vector<Rational>>>>> products_;
};

}  // namespace coxkit
