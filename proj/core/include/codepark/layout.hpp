// Park layout: one square room per class, grouped by source directory and
// packed on the ground plane (x/z, meters).
//
// Room side grows with the square root of the class's code lines so floor
// area tracks class size; exterior lightness falls linearly with size so the
// largest class is also the darkest. Rooms of a directory share a labeled
// group rectangle. A user arrangement may move room centers, after which the
// same geometric invariants are re-checked.
#pragma once

#include <codepark/error.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace codepark {

namespace layout_constants {
inline constexpr double kMinSide = 4.0;
inline constexpr double kSideRange = 6.0;  // side = kMinSide + kSideRange * sqrt(ratio)
inline constexpr double kRoomHeight = 3.0;
inline constexpr double kRoomGap = 2.0;
inline constexpr double kGroupMargin = 6.0;
inline constexpr double kGroupPadding = 1.5;
inline constexpr double kGroundMargin = 10.0;
inline constexpr double kLightest = 0.85;
inline constexpr double kDarkest = 0.35;
}  // namespace layout_constants

struct Point2 {
  double x = 0;
  double z = 0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned rectangle on the ground plane.
struct Rect {
  double min_x = 0, min_z = 0, max_x = 0, max_z = 0;

  double width() const noexcept { return max_x - min_x; }
  double depth() const noexcept { return max_z - min_z; }
  Point2 center() const noexcept { return {(min_x + max_x) / 2, (min_z + max_z) / 2}; }
  bool intersects(const Rect& o) const noexcept {
    return min_x < o.max_x && o.min_x < max_x && min_z < o.max_z && o.min_z < max_z;
  }
  /// `o` lies strictly inside this rectangle.
  bool strictly_contains(const Rect& o) const noexcept {
    return min_x < o.min_x && o.max_x < max_x && min_z < o.min_z && o.max_z < max_z;
  }
  /// Chebyshev separation: negative when overlapping, otherwise the larger of
  /// the axis gaps. Two rooms leave a walking gap g iff separation >= g.
  double separation(const Rect& o) const noexcept;
  Rect expanded(double margin) const noexcept {
    return {min_x - margin, min_z - margin, max_x + margin, max_z + margin};
  }
  Rect translated(double dx, double dz) const noexcept {
    return {min_x + dx, min_z + dz, max_x + dx, max_z + dz};
  }
  static Rect centered(Point2 c, double width, double depth) noexcept {
    return {c.x - width / 2, c.z - depth / 2, c.x + width / 2, c.z + depth / 2};
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Perceptual (OKLab) color plus its sRGB hex rendering.
struct Color {
  double lightness = 0;
  double a = 0;
  double b = 0;
  std::string hex;  // "#RRGGBB"
};

/// What layout needs to know about a class.
struct RoomInput {
  std::string class_id;
  std::string name;
  std::string directory;
  std::size_t loc = 0;
};

struct Room {
  std::string class_id;
  std::string group_id;
  std::string roof_label;
  std::size_t loc = 0;
  double side = 0;
  double height = layout_constants::kRoomHeight;
  Rect footprint;
  Color exterior_color;
};

struct DirectoryGroup {
  std::string group_id;
  std::string directory;
  std::string label_text;
  Rect bounds;
  Point2 label_anchor;  // on the ground, centered just outside the front edge
  std::vector<std::string> room_ids;  // in packing order
};

enum class ArrangementSource { Computed, UserOverride };

struct ParkLayout {
  std::vector<Room> rooms;            // group order, then class name
  std::vector<DirectoryGroup> groups;  // directory path ascending
  Rect ground_extent;
  ArrangementSource arrangement_source = ArrangementSource::Computed;

  const Room* find_room(std::string_view class_id) const;
};

/// User-authored room centers.
struct Arrangement {
  std::map<std::string, Point2> positions;
  std::string saved_at;  // ISO-8601 UTC, empty when unknown
};

/// A rejected override. `collisions` lists offending pairs of room or group
/// ids; `unknown_ids` lists class ids absent from the layout.
class LayoutValidationError : public Error {
 public:
  LayoutValidationError(std::vector<std::pair<std::string, std::string>> collisions,
                        std::vector<std::string> unknown_ids);
  const std::vector<std::pair<std::string, std::string>>& collisions() const noexcept {
    return collisions_;
  }
  const std::vector<std::string>& unknown_ids() const noexcept { return unknown_; }

 private:
  std::vector<std::pair<std::string, std::string>> collisions_;
  std::vector<std::string> unknown_;
};

/// 4 + 6 * sqrt(loc / loc_max) rounded to the nearest 0.5 m; 4 m when loc_max is 0.
double room_side(std::size_t loc, std::size_t loc_max);

/// Lightness 0.85 for the smallest class down to 0.35 for the largest.
Color room_color(std::size_t loc, std::size_t loc_min, std::size_t loc_max);

std::string group_id_for(std::string_view directory);

/// Throws Error when `rooms` is empty and LayoutValidationError when the
/// override is rejected.
ParkLayout layout_park(std::span<const RoomInput> rooms,
                       const Arrangement* override_positions = nullptr);

/// Moves rooms of an existing layout to the given centers and re-validates.
ParkLayout apply_arrangement(const ParkLayout& base, const Arrangement& arrangement);

/// All invariant violations: room pairs closer than the walking gap, rooms
/// outside their group, intersecting groups. Empty for a valid layout.
std::vector<std::pair<std::string, std::string>> find_collisions(const ParkLayout& layout);

/// Room centers of a layout, as an arrangement.
Arrangement current_positions(const ParkLayout& layout);

}  // namespace codepark
