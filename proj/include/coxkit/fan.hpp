#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxkit {

struct InvalidFanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAFaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DualityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Combinatorial model of a smooth complete toric variety: primitive ray
/// generators and the maximal cones as index sets into the ray list.
///
/// The rank-0 fan (no rays, one empty cone) models the point.
struct Fan {
    std::size_t rank = 0;
    std::vector<std::vector<long long>> rays;
    std::vector<std::vector<int>> max_cones;  // indices sorted ascending
    std::string name;

    /// Sorts cone index lists in place; loaders call this before validation.
    void normalize();
};

/// Counts of cones per dimension, [|Sigma(0)|, ..., |Sigma(n)|].
struct ConeCounts {
    std::vector<std::size_t> counts;
};

/// Checks every structural invariant: primitive distinct rays, unimodular
/// max cones of full dimension, every ridge in exactly two max cones, and a
/// connected max-cone adjacency graph. Returns all violations.
std::vector<std::string> validate(const Fan& fan);

/// Throws InvalidFanError listing every violation.
void require_valid(const Fan& fan);

/// All faces of the fan grouped by dimension (subsets of max cones;
/// sound because smooth fans are simplicial).
std::vector<std::set<std::vector<int>>> faces_by_dimension(const Fan& fan);

ConeCounts cone_counts(const Fan& fan);

/// Betti numbers b_0..b_n from the cone counts via the alternating-sum
/// formula; asserts Poincare duality b_k = b_{n-k}.
std::vector<std::size_t> betti(const Fan& fan);

/// Star subdivision at the given cone (a face with >= 2 rays): inserts the
/// primitive barycentric ray and splits every max cone containing the face.
/// Models the blow-up at the distinguished point of the cone.
Fan star_subdivide(const Fan& fan, std::vector<int> cone);

/// Fan of the product variety: rays embedded side by side, max cones the
/// unions of one max cone from each factor.
Fan product_fan(const Fan& x, const Fan& y);

/// Canonical form under simultaneous permutation of rays and max cones:
/// rays sorted lexicographically, indices renumbered, cones sorted.
Fan canonical_form(const Fan& fan);

/// Equality up to permutation of rays and max cones; names are ignored.
bool fans_equal(const Fan& a, const Fan& b);

/// Strict reader for the fan JSON schema
/// {"name": ..., "rank": n, "rays": [[...]], "max_cones": [[...]]}.
/// Throws std::invalid_argument on schema violations and
/// nlohmann::json::parse_error on malformed JSON.
Fan fan_from_json(const std::string& text);

/// Writer for the same schema, keys in the order name, rank, rays,
/// max_cones.
std::string fan_to_json(const Fan& fan, int indent = 2);

}  // namespace coxkit
