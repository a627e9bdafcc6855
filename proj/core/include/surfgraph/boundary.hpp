#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "surfgraph/operations.hpp"
#include "surfgraph/orientation.hpp"
#include "surfgraph/ribbon_graph.hpp"

namespace surfgraph {

/// Entry per edge in {0, +1, -1}.
using SignedBoundaryVector = std::vector<int>;

/// Edges with two distinct adjacent faces exactly one of which is in
/// `faces`. Sorted ascending. Throws UnknownFace.
EdgeSet boundary(const RibbonGraph& g, std::span<const FaceId> faces);

/// Zero off the boundary; on it, +1 where `o` agrees with the direction the
/// faces in `faces` induce on their boundary (faces keep the surface on
/// their left, sigma being counterclockwise), -1 where it disagrees.
SignedBoundaryVector signed_boundary(const RibbonGraph& g, std::span<const FaceId> faces,
                                     const Orientation& o);

/// Signed face boundaries w.r.t. the reference orientation, one row per face:
/// entry (f, e) = #(head darts of e in f) − #(tail darts of e in f).
class FaceMatrix {
 public:
  explicit FaceMatrix(const RibbonGraph& g);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(FaceId f, EdgeId e) const { return entries_[static_cast<std::size_t>(f) * cols_ + e]; }
  std::span<const std::int8_t> row(FaceId f) const {
    return {entries_.data() + static_cast<std::size_t>(f) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::vector<int> column_sums() const;
  /// Rank over the rationals.
  int rank() const;
  /// Sum of the rows in `faces`.
  std::vector<int> row_sum(std::span<const FaceId> faces) const;
  /// D·p for an integer vector p.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> p) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int8_t> entries_;
};

inline FaceMatrix face_matrix(const RibbonGraph& g) { return FaceMatrix(g); }

}  // namespace surfgraph
