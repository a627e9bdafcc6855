#include "surfgraph/boundary.hpp"

#include <string>

#include "surfgraph/error.hpp"
#include "surfgraph/polynomial.hpp"

namespace surfgraph {

namespace {

std::vector<bool> face_membership(const RibbonGraph& g, std::span<const FaceId> faces) {
  std::vector<bool> in(g.face_count(), false);
  for (const FaceId f : faces) {
    if (f < 0 || f >= g.face_count()) {
      throw Error(ErrorKind::UnknownFace, "face " + std::to_string(f) + " not in graph with " +
                                              std::to_string(g.face_count()) + " faces");
    }
    in[f] = true;
  }
  return in;
}

}  // namespace

EdgeSet boundary(const RibbonGraph& g, std::span<const FaceId> faces) {
  const auto in = face_membership(g, faces);
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const FaceId a = g.tail_face(e), b = g.head_face(e);
    if (a != b && in[a] != in[b]) out.push_back(e);
  }
  return out;
}

SignedBoundaryVector signed_boundary(const RibbonGraph& g, std::span<const FaceId> faces,
                                     const Orientation& o) {
  if (o.edge_count() != g.edge_count()) {
    throw Error(ErrorKind::GraphMismatch, "orientation has " + std::to_string(o.edge_count()) +
                                              " edges, graph has " + std::to_string(g.edge_count()));
  }
  const auto in = face_membership(g, faces);
  SignedBoundaryVector out(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const FaceId right = g.tail_face(e), left = g.head_face(e);
    if (right == left || in[right] == in[left]) continue;
    // A face on the left of the reference direction induces that direction.
    out[e] = (in[left] ? 1 : -1) * o.sign(e);
  }
  return out;
}

FaceMatrix::FaceMatrix(const RibbonGraph& g)
    : rows_(g.face_count()), cols_(g.edge_count()),
      entries_(static_cast<std::size_t>(rows_) * cols_, 0) {
  for (FaceId f = 0; f < rows_; ++f) {
    for (const Dart d : g.face_darts(f)) {
      entries_[static_cast<std::size_t>(f) * cols_ + g.edge_of(d)] += g.is_tail_dart(d) ? -1 : 1;
    }
  }
}

std::vector<int> FaceMatrix::column_sums() const {
  std::vector<int> sums(cols_, 0);
  for (int f = 0; f < rows_; ++f) {
    for (int e = 0; e < cols_; ++e) sums[e] += at(f, e);
  }
  return sums;
}

int FaceMatrix::rank() const {
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (int f = 0; f < rows_; ++f) {
    for (int e = 0; e < cols_; ++e) m[f][e] = at(f, e);
  }
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = 0; r < rows_; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols_; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<int> FaceMatrix::row_sum(std::span<const FaceId> faces) const {
  std::vector<int> sum(cols_, 0);
  for (const FaceId f : faces) {
    for (int e = 0; e < cols_; ++e) sum[e] += at(f, e);
  }
  return sum;
}

std::vector<std::int64_t> FaceMatrix::apply(std::span<const std::int64_t> p) const {
  std::vector<std::int64_t> out(rows_, 0);
  for (int f = 0; f < rows_; ++f) {
    for (int e = 0; e < cols_; ++e) out[f] += at(f, e) * p[e];
  }
  return out;
}

}  // namespace surfgraph
