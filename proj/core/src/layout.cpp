#include "lscmf/layout.hpp"

#include <numeric>
#include <vector>

namespace lscmf {

std::string EdgeKey::label() const {
  std::string s = "(" + row_view + "," + col_view;
  if (layer != 0) s += "," + std::to_string(layer);
  return s + ")";
}

void ViewLayout::add_view(const std::string& name, Index dim) {
  if (name.empty()) throw LayoutError(LayoutError::Kind::unknown_view, "view name must be non-empty");
  if (dim <= 0)
    throw LayoutError(LayoutError::Kind::unknown_view,
                      "view '" + name + "' must have a positive dimension");
  view_dims_[name] = dim;
}

void ViewLayout::add_edge(const EdgeKey& key) {
  if (!has_view(key.row_view) || !has_view(key.col_view))
    throw LayoutError(LayoutError::Kind::unknown_view,
                      "edge " + key.label() + " references an undeclared view");
  if (key.row_view == key.col_view)
    throw LayoutError(LayoutError::Kind::invalid_edge,
                      "edge " + key.label() + " is a self-loop");
  EdgeKey flipped{key.col_view, key.row_view, key.layer};
  if (edges_.contains(key) || edges_.contains(flipped))
    throw LayoutError(LayoutError::Kind::duplicate_edge,
                      "edge " + key.label() + " duplicates an existing edge for the same view pair and layer");
  edges_.insert(key);
}

Index ViewLayout::view_dim(const std::string& name) const {
  auto it = view_dims_.find(name);
  if (it == view_dims_.end())
    throw LayoutError(LayoutError::Kind::unknown_view, "unknown view '" + name + "'");
  return it->second;
}

bool ViewLayout::connected() const {
  if (view_dims_.empty()) return true;

  std::map<std::string, int> id;
  for (const auto& [name, dim] : view_dims_) id.emplace(name, static_cast<int>(id.size()));

  std::vector<int> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) parent[find(id.at(e.row_view))] = find(id.at(e.col_view));

  const int root = find(0);
  for (std::size_t i = 1; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

}  // namespace lscmf
