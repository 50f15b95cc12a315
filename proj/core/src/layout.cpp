#include <codepark/layout.hpp>

#include <codepark/hash.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <tuple>

namespace codepark {

using namespace layout_constants;

double Rect::separation(const Rect& o) const noexcept {
  double dx = std::max(o.min_x - max_x, min_x - o.max_x);
  double dz = std::max(o.min_z - max_z, min_z - o.max_z);
  return std::max(dx, dz);
}

const Room* ParkLayout::find_room(std::string_view class_id) const {
  for (const auto& r : rooms) {
    if (r.class_id == class_id) return &r;
  }
  return nullptr;
}

namespace {

std::string describe(const std::vector<std::pair<std::string, std::string>>& collisions,
                     const std::vector<std::string>& unknown) {
  std::string msg = "arrangement rejected:";
  for (const auto& id : unknown) msg += " unknown class " + id + ";";
  for (const auto& [a, b] : collisions) msg += " " + a + " collides with " + b + ";";
  return msg;
}

// OKLab -> sRGB, per channel clamped and gamma-encoded.
std::string oklab_hex(double L, double a, double b) {
  double l_ = L + 0.3963377774 * a + 0.2158037573 * b;
  double m_ = L - 0.1055613458 * a - 0.0638541728 * b;
  double s_ = L - 0.0894841775 * a - 1.2914855480 * b;
  double l = l_ * l_ * l_, m = m_ * m_ * m_, s = s_ * s_ * s_;
  double rgb[3] = {
      +4.0767416621 * l - 3.3077115913 * m + 0.2309699292 * s,
      -1.2684380046 * l + 2.6097574011 * m - 0.3413193965 * s,
      -0.0041960863 * l - 0.7034186147 * m + 1.7076147010 * s,
  };
  char out[8];
  int bytes[3];
  for (int i = 0; i < 3; ++i) {
    double c = std::clamp(rgb[i], 0.0, 1.0);
    c = c <= 0.0031308 ? 12.92 * c : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
    bytes[i] = static_cast<int>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
  }
  std::snprintf(out, sizeof out, "#%02X%02X%02X", bytes[0], bytes[1], bytes[2]);
  return out;
}

struct GroupBlock {
  DirectoryGroup group;
  std::vector<Room> rooms;
  double width = 0;  // bounds size
  double depth = 0;
};

// Packs one directory's rooms into a near-square grid with its bounds'
// top-left corner at the origin.
GroupBlock pack_group(std::string directory, std::vector<Room> rooms,
                      std::vector<std::string> names) {
  // sort by class name, then id
  std::vector<std::size_t> order(rooms.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(names[a], rooms[a].class_id) < std::tie(names[b], rooms[b].class_id);
  });

  const std::size_t n = rooms.size();
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  const std::size_t rows = (n + cols - 1) / cols;
  std::vector<double> col_width(cols, 0.0), row_depth(rows, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const Room& r = rooms[order[k]];
    col_width[k % cols] = std::max(col_width[k % cols], r.side);
    row_depth[k / cols] = std::max(row_depth[k / cols], r.side);
  }
  std::vector<double> col_x(cols), row_z(rows);
  double x = kGroupPadding;
  for (std::size_t c = 0; c < cols; ++c) {
    col_x[c] = x;
    x += col_width[c] + kRoomGap;
  }
  double z = kGroupPadding;
  for (std::size_t r = 0; r < rows; ++r) {
    row_z[r] = z;
    z += row_depth[r] + kRoomGap;
  }

  GroupBlock block;
  block.width = x - kRoomGap + kGroupPadding;
  block.depth = z - kRoomGap + kGroupPadding;
  block.group.group_id = group_id_for(directory);
  block.group.label_text = directory.empty() ? "(root)" : directory;
  block.group.directory = std::move(directory);
  for (std::size_t k = 0; k < n; ++k) {
    Room r = std::move(rooms[order[k]]);
    std::size_t c = k % cols, row = k / cols;
    Point2 center{col_x[c] + col_width[c] / 2, row_z[row] + row_depth[row] / 2};
    r.footprint = Rect::centered(center, r.side, r.side);
    r.group_id = block.group.group_id;
    block.group.room_ids.push_back(r.class_id);
    block.rooms.push_back(std::move(r));
  }
  return block;
}

struct Shelf {
  std::vector<Point2> origins;  // top-left of each block
  double width = 0;
  double depth = 0;
};

Shelf shelf_pack(const std::vector<GroupBlock>& blocks, double limit) {
  Shelf s;
  double x = 0, z = 0, row_depth = 0;
  bool row_empty = true;
  for (const auto& b : blocks) {
    if (!row_empty && x + b.width > limit + 1e-9) {
      z += row_depth + kGroupMargin;
      x = 0;
      row_depth = 0;
      row_empty = true;
    }
    s.origins.push_back({x, z});
    s.width = std::max(s.width, x + b.width);
    row_depth = std::max(row_depth, b.depth);
    x += b.width + kGroupMargin;
    row_empty = false;
  }
  s.depth = z + row_depth;
  return s;
}

// Row-major wrap whose overall aspect ratio is closest to square.
Shelf pack_groups(const std::vector<GroupBlock>& blocks) {
  std::vector<double> limits;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    double w = 0;
    for (std::size_t j = i; j < blocks.size(); ++j) {
      w += blocks[j].width + (j > i ? kGroupMargin : 0.0);
      limits.push_back(w);
    }
  }
  std::sort(limits.begin(), limits.end());
  limits.erase(std::unique(limits.begin(), limits.end()), limits.end());

  Shelf best;
  double best_score = std::numeric_limits<double>::infinity();
  double best_area = best_score;
  for (double limit : limits) {
    Shelf s = shelf_pack(blocks, limit);
    double score = std::abs(std::log(s.width / s.depth));
    double area = s.width * s.depth;
    if (score < best_score - 1e-12 || (std::abs(score - best_score) <= 1e-12 && area < best_area)) {
      best = std::move(s);
      best_score = score;
      best_area = area;
    }
  }
  return best;
}

Rect bounding_box(const std::vector<DirectoryGroup>& groups) {
  Rect box = groups.front().bounds;
  for (const auto& g : groups) {
    box.min_x = std::min(box.min_x, g.bounds.min_x);
    box.min_z = std::min(box.min_z, g.bounds.min_z);
    box.max_x = std::max(box.max_x, g.bounds.max_x);
    box.max_z = std::max(box.max_z, g.bounds.max_z);
  }
  return box;
}

Point2 label_anchor(const Rect& bounds) {
  return {(bounds.min_x + bounds.max_x) / 2, bounds.max_z + kGroupMargin / 4};
}

// Group bounds from member rooms, after rooms moved.
void refit_groups(ParkLayout& layout) {
  for (auto& g : layout.groups) {
    bool first = true;
    Rect box;
    for (const auto& r : layout.rooms) {
      if (r.group_id != g.group_id) continue;
      if (first) {
        box = r.footprint;
        first = false;
      } else {
        box.min_x = std::min(box.min_x, r.footprint.min_x);
        box.min_z = std::min(box.min_z, r.footprint.min_z);
        box.max_x = std::max(box.max_x, r.footprint.max_x);
        box.max_z = std::max(box.max_z, r.footprint.max_z);
      }
    }
    g.bounds = box.expanded(kGroupPadding);
    g.label_anchor = label_anchor(g.bounds);
  }
  layout.ground_extent = bounding_box(layout.groups).expanded(kGroundMargin);
}

}  // namespace

LayoutValidationError::LayoutValidationError(
    std::vector<std::pair<std::string, std::string>> collisions, std::vector<std::string> unknown)
    : Error(describe(collisions, unknown)),
      collisions_(std::move(collisions)),
      unknown_(std::move(unknown)) {}

double room_side(std::size_t loc, std::size_t loc_max) {
  if (loc_max == 0) return kMinSide;
  double ratio = std::clamp(static_cast<double>(loc) / static_cast<double>(loc_max), 0.0, 1.0);
  double side = kMinSide + kSideRange * std::sqrt(ratio);
  return std::round(side * 2.0) / 2.0;
}

Color room_color(std::size_t loc, std::size_t loc_min, std::size_t loc_max) {
  constexpr double kA = 0.008, kB = 0.022;  // warm gray
  double lightness = kLightest;
  if (loc_max > loc_min) {
    double t = static_cast<double>(loc - std::min(loc, loc_min)) /
               static_cast<double>(loc_max - loc_min);
    lightness = kLightest - (kLightest - kDarkest) * std::clamp(t, 0.0, 1.0);
  }
  return {lightness, kA, kB, oklab_hex(lightness, kA, kB)};
}

std::string group_id_for(std::string_view directory) {
  return "g" + fnv1a64_hex(std::string("dir\n") + std::string(directory));
}

ParkLayout layout_park(std::span<const RoomInput> inputs, const Arrangement* override_positions) {
  if (inputs.empty()) throw Error("layout needs at least one class");
  std::size_t loc_min = inputs.front().loc, loc_max = inputs.front().loc;
  for (const auto& in : inputs) {
    loc_min = std::min(loc_min, in.loc);
    loc_max = std::max(loc_max, in.loc);
  }

  std::map<std::string, std::pair<std::vector<Room>, std::vector<std::string>>> by_dir;
  for (const auto& in : inputs) {
    Room r;
    r.class_id = in.class_id;
    r.roof_label = in.name;
    r.loc = in.loc;
    r.side = room_side(in.loc, loc_max);
    r.exterior_color = room_color(in.loc, loc_min, loc_max);
    auto& [rooms, names] = by_dir[in.directory];
    rooms.push_back(std::move(r));
    names.push_back(in.name);
  }

  std::vector<GroupBlock> blocks;
  for (auto& [dir, entry] : by_dir) {
    blocks.push_back(pack_group(dir, std::move(entry.first), std::move(entry.second)));
  }
  Shelf shelf = pack_groups(blocks);

  // Center the park on the origin.
  double shift_x = -shelf.width / 2, shift_z = -shelf.depth / 2;
  ParkLayout layout;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    auto& b = blocks[k];
    double dx = shelf.origins[k].x + shift_x, dz = shelf.origins[k].z + shift_z;
    b.group.bounds = Rect{0, 0, b.width, b.depth}.translated(dx, dz);
    b.group.label_anchor = label_anchor(b.group.bounds);
    for (auto& r : b.rooms) {
      r.footprint = r.footprint.translated(dx, dz);
      layout.rooms.push_back(std::move(r));
    }
    layout.groups.push_back(std::move(b.group));
  }
  layout.ground_extent = bounding_box(layout.groups).expanded(kGroundMargin);

  if (override_positions && !override_positions->positions.empty()) {
    return apply_arrangement(layout, *override_positions);
  }
  return layout;
}

ParkLayout apply_arrangement(const ParkLayout& base, const Arrangement& arrangement) {
  ParkLayout layout = base;
  std::vector<std::string> unknown;
  for (const auto& [id, pos] : arrangement.positions) {
    auto it = std::find_if(layout.rooms.begin(), layout.rooms.end(),
                           [&](const Room& r) { return r.class_id == id; });
    if (it == layout.rooms.end()) {
      unknown.push_back(id);
      continue;
    }
    if (!std::isfinite(pos.x) || !std::isfinite(pos.z)) {
      unknown.push_back(id);
      continue;
    }
    it->footprint = Rect::centered(pos, it->side, it->side);
  }
  if (!unknown.empty()) throw LayoutValidationError({}, std::move(unknown));
  refit_groups(layout);
  layout.arrangement_source = ArrangementSource::UserOverride;
  auto collisions = find_collisions(layout);
  if (!collisions.empty()) throw LayoutValidationError(std::move(collisions), {});
  return layout;
}

std::vector<std::pair<std::string, std::string>> find_collisions(const ParkLayout& layout) {
  constexpr double kEps = 1e-9;
  std::vector<std::pair<std::string, std::string>> out;
  const auto& rooms = layout.rooms;
  for (std::size_t i = 0; i < rooms.size(); ++i) {
    for (std::size_t j = i + 1; j < rooms.size(); ++j) {
      if (rooms[i].footprint.separation(rooms[j].footprint) < kRoomGap - kEps) {
        out.emplace_back(rooms[i].class_id, rooms[j].class_id);
      }
    }
  }
  for (const auto& r : rooms) {
    auto g = std::find_if(layout.groups.begin(), layout.groups.end(),
                          [&](const DirectoryGroup& d) { return d.group_id == r.group_id; });
    if (g == layout.groups.end() || !g->bounds.strictly_contains(r.footprint)) {
      out.emplace_back(r.class_id, r.group_id);
    }
  }
  const auto& groups = layout.groups;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[i].bounds.intersects(groups[j].bounds)) {
        out.emplace_back(groups[i].group_id, groups[j].group_id);
      }
    }
  }
  return out;
}

Arrangement current_positions(const ParkLayout& layout) {
  Arrangement a;
  for (const auto& r : layout.rooms) a.positions[r.class_id] = r.footprint.center();
  return a;
}

}  // namespace codepark
