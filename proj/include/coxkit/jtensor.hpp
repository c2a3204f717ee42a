#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/jordan.hpp"
#include "coxkit/rational.hpp"

namespace coxkit {

struct ZeroEigenvalueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EigenvalueMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One Jordan block J(eigenvalue, size) used as a tensor factor.
struct JordanFactor {
    Rational eigenvalue;
    std::size_t size = 1;

    bool operator==(const JordanFactor&) const = default;
};

inline constexpr std::size_t kDefaultDimensionCap = 4096;

/// Jordan type of J(alpha,s) (x) J(beta,t), in closed form. The both-zero
/// case uses the ceiling reading of the bracket: J(0,s)^(t-s+1) plus two
/// blocks each of J(0, s-1), ..., J(0, 1). The floor reading would change
/// the total dimension away from s*t; the Kronecker oracle confirms the
/// ceiling on every tested case.
JordanSum box_pair(const JordanFactor& a, const JordanFactor& b);

/// Multi-factor closed form for nonzero eigenvalues: multiply the
/// polynomials 1 + x + ... + x^(r_j - 1), read the coefficients c_k, and
/// emit c_k - c_{k-1} blocks J(prod alpha_i, n+1-2k) with n = sum r_j - t.
/// Throws ZeroEigenvalueError when some factor eigenvalue is 0.
JordanSum box_many(const std::vector<JordanFactor>& factors);

/// Bilinear extension of box_pair over direct sums.
JordanSum box_sums(const JordanSum& a, const JordanSum& b);

/// Independent oracle: builds the literal Kronecker product matrix and
/// extracts its Jordan type from rank sequences. Throws DimensionCapError
/// when the product dimension exceeds the cap.
JordanSum brute_force_box(const std::vector<JordanFactor>& factors,
                          std::size_t dimension_cap = kDefaultDimensionCap);

/// Jordan type of the Coxeter transformation of a product variety from the
/// factors' types: sizes via box_sums, eigenvalue -(mu_X * mu_Y). Each
/// input must carry the single eigenvalue (-1)^(n-1) of its factor.
JordanType product_coxeter(const JordanType& jx, std::size_t nx,
                           const JordanType& jy, std::size_t ny);

/// Parses a whitespace-separated list like "J(1,2) J(-1,3) J(1/2,2)".
std::vector<JordanFactor> parse_jordan_factors(const std::string& text);

}  // namespace coxkit
