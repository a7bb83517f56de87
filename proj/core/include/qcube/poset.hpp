#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcube/errors.hpp"
#include "qcube/matrix.hpp"

namespace qcube {

enum class Family { Binary, Nonbinary, VectorSpace };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Canonical element label.
///  - Binary/Nonbinary: the n-tuple over {0..q-1} (binary: {0,1}).
///  - VectorSpace: the RREF matrix of the subspace, row-major, with
///    `rows` = dimension. RREF is unique per subspace, so keys are
///    canonical.
struct ElementKey {
    std::vector<std::uint8_t> data;
    int rows = 0;

    auto operator<=>(const ElementKey&) const = default;

    /// Subset bitmask interpretation of a 0/1 tuple (bit i-1 <-> coordinate i).
    std::uint32_t mask() const;
    std::string to_string() const;
};

/// Guardrail for constructed poset sizes; brute-force enumeration fails
/// fast past this, the formulas are the scalable path.
inline constexpr std::size_t kDefaultMaxPosetVertices = 100000;

/// A graded poset presented by its Hasse diagram: indexed elements,
/// rank function, and cover pairs (lower, upper). Immutable once built.
/// Canonical element order: (rank, mask) for binary, (rank, lex tuple)
/// for nonbinary, (dimension, lex row-major RREF) for vector-space.
class GradedPoset {
public:
    GradedPoset(Family family, int n, int q, std::vector<ElementKey> elements,
                std::vector<int> ranks, std::vector<std::pair<std::size_t, std::size_t>> covers);

    Family family() const { return family_; }
    int n() const { return n_; }
    int q() const { return q_; }
    std::size_t size() const { return elements_.size(); }

    const ElementKey& element(std::size_t i) const { return elements_[i]; }
    int rank(std::size_t i) const { return ranks_[i]; }
    std::size_t index_of(const ElementKey& key) const;
    bool contains(const ElementKey& key) const { return index_.count(key) > 0; }

    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
    const std::vector<std::size_t>& up_neighbors(std::size_t i) const { return up_[i]; }
    const std::vector<std::size_t>& down_neighbors(std::size_t i) const { return down_[i]; }
    std::size_t degree(std::size_t i) const { return up_[i].size() + down_[i].size(); }

    int top_rank() const { return top_rank_; }
    const std::vector<std::size_t>& level(int r) const;

private:
    Family family_;
    int n_, q_;
    std::vector<ElementKey> elements_;
    std::vector<int> ranks_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
    std::vector<std::vector<std::size_t>> up_, down_;
    std::vector<std::vector<std::size_t>> levels_;
    std::map<ElementKey, std::size_t> index_;
    int top_rank_ = 0;
};

GradedPoset build_binary(int n, std::size_t max_vertices = kDefaultMaxPosetVertices);
GradedPoset build_nonbinary(int n, int q, std::size_t max_vertices = kDefaultMaxPosetVertices);

/// All subspaces of F_q^n as canonical RREF keys, ordered by
/// (dimension, lex row-major). q must be a prime power <= 16, n <= 6.
std::vector<ElementKey> enumerate_subspaces(int n, int q,
                                            std::size_t max_vertices = kDefaultMaxPosetVertices);

GradedPoset build_vectorspace(int n, int q, std::size_t max_vertices = kDefaultMaxPosetVertices);

/// 0/1 matrix of the up operator in the element basis: entry (i, j) = 1
/// iff element i covers element j. down_matrix is its transpose.
IntMatrix up_matrix(const GradedPoset& p);
IntMatrix down_matrix(const GradedPoset& p);

/// Hasse-graph degree of the given element; LookupError when absent.
std::size_t vertex_degree(const GradedPoset& p, const ElementKey& e);

/// One block of the combinatorial partition of B_q(n): all (Y, g) with
/// X subset of Y, g = f on X, g = 1 on Y - X. Order-isomorphic to
/// B(n - l); `members` lists poset indices in the canonical order of
/// B(n - l) elements (subsets T of [n] - X by (popcount, mask)), which
/// exhibits the isomorphism.
struct UpperBooleanPart {
    int l = 0;
    std::uint32_t x_mask = 0;
    std::vector<std::uint8_t> f;  // values >= 2 for the bits of x_mask, ascending
    std::vector<std::size_t> members;
};

/// Partition of a nonbinary poset into upper Boolean parts; exactly
/// (q-2)^l C(n,l) parts of rank n-l. The order isomorphism of each part
/// with B(n-l) is verified during construction.
std::vector<UpperBooleanPart> upper_boolean_partition(const GradedPoset& p);

bool is_connected(const GradedPoset& p);

}  // namespace qcube
