#pragma once

// Recursive structure of fully complementary partitions.
//
// An FCP for half-lengths n = (n_1, ..., n_{d+1}) is a PartitionArray on the
// (2n_1, ..., 2n_d) grid with entries <= 2n_{d+1}. When n has a zero
// component, FCP(n) holds only the empty sentinel.

#include <functional>
#include <iosfwd>
#include <vector>

#include "hdp/lattice.hpp"
#include "hdp/numeric.hpp"

namespace hdp {

// Axes in this header are 0-based: axis d is the height axis.

/// phi_k : FCP(n - e_k) -> FCP(n). `n` is the target half-length vector.
/// Throws std::invalid_argument unless `parent` is in FCP(n - e_k).
PartitionArray phi(std::size_t axis, const BoxDims& n, const PartitionArray& parent);
/// Same map without validating `parent`.
PartitionArray phi_unchecked(std::size_t axis, const BoxDims& n, const PartitionArray& parent);

struct FcpDecomposition {
  std::size_t axis;
  PartitionArray parent;  // the empty sentinel when n - e_axis has a zero

  friend bool operator==(const FcpDecomposition&, const FcpDecomposition&) = default;
};

/// The unique (k, parent) with phi(k, n, parent) = pi. Requires all n_i > 0.
FcpDecomposition decompose(const PartitionArray& pi, const BoxDims& n);

using FcpVisitor = std::function<void(const PartitionArray&)>;

/// Streams FCP(n) in recursion order (axis-major, no duplicates).
void for_each_fcp(const BoxDims& n, const FcpVisitor& visit);
/// FCP(n), sorted lexicographically by flattened entries.
std::vector<PartitionArray> enumerate_fcp(const BoxDims& n);

/// |FCP(n)| by the memoized recurrence. Negative or doubly-zero vectors give 0.
BigInt count_fcp(std::span<const int> n);
inline BigInt count_fcp(const BoxDims& n) { return count_fcp(n.sides()); }

/// Fully complementary diagrams of a box with arbitrary (full) side lengths:
/// two or more odd sides give 0, one odd side reduces to the even box below it.
BigInt count_fc_box(const BoxDims& sides);

/// Lattice path from a point of the coordinate boundary; steps are 0-based axes.
struct LatticePath {
  std::vector<int> start;
  std::vector<std::size_t> steps;

  std::vector<int> end() const;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

std::ostream& operator<<(std::ostream& os, const LatticePath& p);

/// Throws std::invalid_argument describing the first violated path invariant.
void validate_path(const LatticePath& p);

LatticePath fcp_to_path(const PartitionArray& pi, const BoxDims& n);
PartitionArray path_to_fcp(const LatticePath& p);

/// Every valid path ending at n (the images of FCP(n)), sorted.
std::vector<LatticePath> paths_ending_at(std::span<const int> n);

}  // namespace hdp
