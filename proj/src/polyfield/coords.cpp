#include "sodelie/polyfield/coords.hpp"

#include <map>
#include <mutex>
#include <set>

namespace sodelie {

Coords Coords::intern(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("coordinate list must not be empty");
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) {
    throw std::invalid_argument("coordinate names must be distinct");
  }
  // Entries are never erased, so handed-out pointers stay valid.
  static std::mutex mutex;
  static std::map<std::vector<std::string>, std::shared_ptr<const std::vector<std::string>>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(names);
  if (it == registry.end()) {
    auto stored = std::make_shared<const std::vector<std::string>>(names);
    it = registry.emplace(std::move(names), std::move(stored)).first;
  }
  return Coords(it->second);
}

std::optional<std::size_t> Coords::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Coords::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw UnknownCoordinate("unknown coordinate '" + std::string(name) + "'");
}

void require_same_coords(const Coords& a, const Coords& b, std::string_view what) {
  if (a == b) return;
  auto join = [](const Coords& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + c.name(i);
    return out + ")";
  };
  throw CoordinateMismatch(std::string(what) + ": coordinate lists differ " + join(a) + " vs " + join(b));
}

}  // namespace sodelie
