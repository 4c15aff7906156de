#include "repkit/indexed_category.hpp"

#include "repkit/errors.hpp"

namespace repkit {

IndexedCategory make_category(AlgebraPtr a, std::vector<Rep> objects,
                              bool is_full_module_category) {
  IndexedCategory c;
  c.algebra = std::move(a);
  c.objects = std::move(objects);
  c.is_full_module_category = is_full_module_category;
  for (std::size_t i = 0; i < c.objects.size(); ++i)
    for (std::size_t j = i + 1; j < c.objects.size(); ++j)
      if (is_isomorphic(c.objects[i], c.objects[j]))
        throw ValidationError("make_category: objects " + std::to_string(i) +
                              " and " + std::to_string(j) + " are isomorphic");
  for (std::size_t i = 0; i < c.objects.size(); ++i) {
    std::vector<HomBasis> row;
    for (std::size_t j = 0; j < c.objects.size(); ++j)
      row.emplace_back(c.objects[i], c.objects[j]);
    c.hom.push_back(std::move(row));
  }
  return c;
}

IndexedCategory restrict(const IndexedCategory& c, const std::vector<int>& removed) {
  std::vector<bool> drop(c.objects.size(), false);
  for (int r : removed) {
    if (r < 0 || r >= c.size())
      throw ValidationError("restrict: object index out of range");
    drop[r] = true;
  }
  IndexedCategory out;
  out.algebra = c.algebra;
  out.is_full_module_category = c.is_full_module_category && removed.empty();
  std::vector<int> keep;
  for (int i = 0; i < c.size(); ++i)
    if (!drop[i]) keep.push_back(i);
  for (int i : keep) out.objects.push_back(c.objects[i]);
  for (int i : keep) {
    std::vector<HomBasis> row;
    for (int j : keep) row.push_back(c.hom[i][j]);
    out.hom.push_back(std::move(row));
  }
  return out;
}

std::optional<int> find_object(const IndexedCategory& c, const Rep& m) {
  for (int i = 0; i < c.size(); ++i)
    if (c.objects[i].dims == m.dims && is_isomorphic(c.objects[i], m)) return i;
  return std::nullopt;
}

std::string object_name(const IndexedCategory& c, int i) {
  return dim_vector_string(c.objects[i]) + "#" + std::to_string(i);
}

} // namespace repkit
