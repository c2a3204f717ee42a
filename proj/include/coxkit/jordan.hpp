#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxkit/matrix.hpp"
#include "coxkit/rational.hpp"

namespace coxkit {

struct IncompleteSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JordanBlockEntry {
    Rational eigenvalue;
    std::size_t size = 0;
    std::size_t multiplicity = 0;

    bool operator==(const JordanBlockEntry&) const = default;
};

/// Multiset of Jordan blocks in canonical order: eigenvalue ascending,
/// size descending. Doubles as the formal direct sum used by the tensor
/// calculus.
class JordanType {
public:
    JordanType() = default;

    void add(const Rational& eigenvalue, std::size_t size, std::size_t multiplicity = 1);
    void add(const JordanType& other);

    const std::vector<JordanBlockEntry>& blocks() const { return blocks_; }
    bool empty() const { return blocks_.empty(); }

    std::size_t total_dimension() const;
    std::size_t block_count() const;

    /// Block sizes in descending order, repeated with multiplicity.
    std::vector<std::size_t> sizes() const;

    /// Sizes restricted to one eigenvalue.
    std::vector<std::size_t> sizes_at(const Rational& eigenvalue) const;

    /// The unique eigenvalue of this type, when there is exactly one.
    bool has_single_eigenvalue(Rational* out = nullptr) const;

    /// Rewrites every block onto the given eigenvalue, keeping sizes.
    JordanType with_eigenvalue(const Rational& eigenvalue) const;

    /// e.g. "J(1,4) + J(1,2)^2"; "0" for the empty type.
    std::string to_string() const;

    bool operator==(const JordanType&) const = default;

private:
    std::vector<JordanBlockEntry> blocks_;  // kept canonically sorted and merged
};

/// Same multiset type under its tensor-calculus name.
using JordanSum = JordanType;

/// Block sizes at `mu` from the rank sequence r_k = rank((m - mu*I)^k);
/// there are r_{k-1} - 2 r_k + r_{k+1} blocks of size exactly k. Returns an
/// empty type when mu is not an eigenvalue.
JordanType jordan_type_at(const RationalMatrix& m, const Rational& mu);

/// Union of jordan_type_at over the candidate eigenvalues. The candidates
/// must exhaust the spectrum: throws IncompleteSpectrumError when the block
/// sizes do not sum to the matrix dimension.
JordanType full_jordan_type(const RationalMatrix& m, const std::vector<Rational>& candidates);

}  // namespace coxkit
