#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxkit/chow.hpp"
#include "coxkit/fan.hpp"
#include "coxkit/jordan.hpp"
#include "coxkit/matrix.hpp"

namespace coxkit {

struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonMonotoneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeCountError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The single eigenvalue (-1)^(n-1) of the Coxeter transformation of an
/// n-dimensional variety.
inline int coxeter_sign(std::size_t n) { return n % 2 == 1 ? 1 : -1; }

/// (x + constant)^power with constant = (-1)^n; `verified` records that
/// the nilpotency certificate was checked.
struct CoxeterPolynomial {
    std::size_t power = 0;
    int constant = 1;
    bool verified = false;

    std::string to_string() const;
    /// Expanded coefficients, ascending in the variable.
    std::vector<BigInt> coefficients() const;
};

/// Coxeter transformation on the concatenated Chow basis:
/// (-1)^(n-1) times multiplication by ch of the canonical class.
/// Row i is the image of basis element i.
RationalMatrix coxeter_matrix(const ChowRing& ring);

/// Returns (x + (-1)^n)^m and certifies it as the characteristic polynomial
/// by checking that the Coxeter matrix minus its eigenvalue is nilpotent.
/// Throws VerificationError when the certificate fails.
CoxeterPolynomial coxeter_polynomial(const ChowRing& ring);

JordanType jordan_type_of_coxeter(const ChowRing& ring);

/// b_i - b_{i-1} blocks of dimension n-2i+1 for 0 <= i <= n/2, eigenvalue
/// (-1)^(n-1) attached. Throws NonMonotoneError when the first half of the
/// Betti sequence decreases.
JordanType predicted_jordan_from_betti(const std::vector<std::size_t>& betti_numbers);

/// Block counts straight from the cone counts via the alternating sum
/// with binomial (i+1 choose k).
JordanType jordan_blocks_from_cone_counts(const ConeCounts& counts);

/// Recovers the Betti numbers from the block sizes: the unique largest
/// block fixes n = d_1 - 1, cumulative block counts fill the first half,
/// duality mirrors the rest. Throws MalformedTypeError when the multiset
/// cannot arise (largest block repeated, or parity mismatch).
std::vector<std::size_t> betti_from_jordan(const std::vector<std::size_t>& sizes);

struct LefschetzLevel {
    std::size_t lower = 0;        // i
    std::size_t upper = 0;        // n - i
    std::size_t rank_found = 0;   // rank of multiplication by omega^(n-2i)
    std::size_t rank_needed = 0;  // b_i
    bool ok = false;
};

struct LefschetzReport {
    bool ok = true;
    std::vector<LefschetzLevel> levels;
};

/// Checks that multiplication by omega^(n-2i) maps degree i isomorphically
/// onto degree n-i for every 0 <= i <= n/2.
LefschetzReport lefschetz_check(const ChowRing& ring, const ChowClass& omega);

/// -C^t C^(-1). Throws SingularMatrixError when C is not invertible.
RationalMatrix coxeter_of_cartan(const RationalMatrix& cartan);

enum class CrossCheck { Match, Mismatch, NotApplicable };

/// Everything the CLI and the tables report for one variety.
struct CoxeterReport {
    std::string name;
    std::size_t n = 0;  // variety dimension
    std::size_t m = 0;  // rank of the Grothendieck group
    Rational eigenvalue;
    CoxeterPolynomial polynomial;
    RationalMatrix coxeter;
    JordanType jordan;
    std::vector<std::size_t> betti_numbers;
    bool lefschetz_canonical = false;
    bool lefschetz_anticanonical = false;
    LefschetzReport lefschetz_detail;  // for the canonical class
    std::optional<JordanType> predicted;         // Betti route, when Lefschetz holds
    std::optional<JordanType> cone_count_route;  // cone-count route (toric only)
    std::optional<std::vector<std::size_t>> betti_roundtrip;
    CrossCheck cross_check = CrossCheck::NotApplicable;
};

/// Full pipeline for a fan: Chow ring, Coxeter matrix, certified
/// polynomial, Jordan type, Lefschetz status of K and -K, and the
/// cross-checks between the direct, Betti and cone-count routes whenever
/// the Lefschetz check passes.
CoxeterReport coxeter_report(const Fan& fan);

}  // namespace coxkit
