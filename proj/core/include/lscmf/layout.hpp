#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>

#include <Eigen/Core>

#include "lscmf/errors.hpp"

namespace lscmf {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Identifies one observed data matrix: the view in the rows, the view in
/// the columns and a layer index (0 for plain matrices, >0 for the layers
/// of tensor-like layouts).
struct EdgeKey {
  std::string row_view;
  std::string col_view;
  std::uint32_t layer = 0;

  auto operator<=>(const EdgeKey&) const = default;

  /// "(rows,cols)" or "(rows,cols,layer)" for messages and serialization.
  std::string label() const;
};

/// The view graph: named views with their dimensions plus the set of
/// observed edges. Views are opaque strings in this interface; dense
/// integer indices are an internal concern of the algorithms.
class ViewLayout {
public:
  void add_view(const std::string& name, Index dim);

  /// Registers an observed edge. Both views must exist, self-loops are
  /// rejected, and the same unordered view pair may appear only once per
  /// layer (a canonical orientation is required per pair and layer).
  void add_edge(const EdgeKey& key);

  bool has_view(const std::string& name) const { return view_dims_.contains(name); }
  Index view_dim(const std::string& name) const;

  const std::map<std::string, Index>& view_dims() const { return view_dims_; }
  const std::set<EdgeKey>& edges() const { return edges_; }

  /// True if every view is reachable from every other through edges.
  bool connected() const;

private:
  std::map<std::string, Index> view_dims_;
  std::set<EdgeKey> edges_;
};

}  // namespace lscmf
