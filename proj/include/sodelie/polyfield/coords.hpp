#ifndef SODELIE_POLYFIELD_COORDS_HPP
#define SODELIE_POLYFIELD_COORDS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sodelie {

class CoordinateMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownCoordinate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Interned, ordered list of coordinate names.
///
/// Two Coords built from the same name list share storage, so equality is a
/// pointer comparison. Instances are immutable and cheap to copy.
class Coords {
 public:
  /// Returns the canonical instance for `names`. Names must be non-empty and
  /// pairwise distinct.
  static Coords intern(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of, but throws UnknownCoordinate.
  std::size_t require_index(std::string_view name) const;

  bool operator==(const Coords& other) const { return names_ == other.names_; }
  bool operator!=(const Coords& other) const { return !(*this == other); }

 private:
  explicit Coords(std::shared_ptr<const std::vector<std::string>> names)
      : names_(std::move(names)) {}

  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws CoordinateMismatch naming `what` when the two lists differ.
void require_same_coords(const Coords& a, const Coords& b, std::string_view what);

}  // namespace sodelie

#endif
