#include "grothkit/bpd.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace grothkit {

namespace {

constexpr std::uint8_t kNorth = 1;
constexpr std::uint8_t kSouth = 2;
constexpr std::uint8_t kEast = 4;
constexpr std::uint8_t kWest = 8;

std::uint8_t edges(Tile t) {
  switch (t) {
    case Tile::SEElbow: return kSouth | kEast;
    case Tile::NWElbow: return kWest | kNorth;
    case Tile::Horizontal: return kWest | kEast;
    case Tile::Vertical: return kSouth | kNorth;
    case Tile::Crossing: return kNorth | kSouth | kEast | kWest;
    case Tile::Empty: return 0;
  }
  return 0;
}

struct Flow {
  int north = 0;
  int east = 0;
  bool new_crossing = false;
};

bool has_crossed(const std::vector<std::uint64_t>& crossed, int a, int b) {
  return (crossed[a] >> b) & 1u;
}

void mark_crossed(std::vector<std::uint64_t>& crossed, int a, int b, bool on) {
  if (on) {
    crossed[a] |= std::uint64_t{1} << b;
    crossed[b] |= std::uint64_t{1} << a;
  } else {
    crossed[a] &= ~(std::uint64_t{1} << b);
    crossed[b] &= ~(std::uint64_t{1} << a);
  }
}

// Routes the pipes entering a tile from the south (label s) and west (label w),
// where 0 means no pipe. Returns false on an edge mismatch.
bool route_tile(Tile t, int s, int w, std::vector<std::uint64_t>& crossed, Flow& out) {
  const std::uint8_t e = edges(t);
  if (((e & kSouth) != 0) != (s != 0) || ((e & kWest) != 0) != (w != 0)) return false;
  out = Flow{};
  switch (t) {
    case Tile::SEElbow: out.east = s; break;
    case Tile::NWElbow: out.north = w; break;
    case Tile::Horizontal: out.east = w; break;
    case Tile::Vertical: out.north = s; break;
    case Tile::Empty: break;
    case Tile::Crossing:
      if (has_crossed(crossed, s, w)) {
        out.east = s;
        out.north = w;
      } else {
        out.east = w;
        out.north = s;
        mark_crossed(crossed, s, w, true);
        out.new_crossing = true;
      }
      break;
  }
  return true;
}

std::string cell_text(int r, int c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

// Single left-to-right column sweep; within a column, bottom to top.
Permutation trace_impl(int n, const std::vector<Tile>& tiles,
                       std::vector<std::vector<Cell>>* routes) {
  if (n < 1) throw InvalidGrid("grid size must be positive");
  if (n > 63) throw InvalidGrid("grid too large");
  if (static_cast<int>(tiles.size()) != n * n) throw InvalidGrid("tile count does not match n*n");
  std::vector<int> horizontal(n + 1, 0);
  std::vector<std::uint64_t> crossed(n + 1, 0);
  if (routes) routes->assign(n + 1, {});
  for (int c = 1; c <= n; ++c) {
    int vertical = c;
    for (int r = n; r >= 1; --r) {
      const Tile t = tiles[(r - 1) * n + (c - 1)];
      Flow flow;
      if (!route_tile(t, vertical, horizontal[r], crossed, flow)) {
        throw InvalidGrid("edge mismatch at " + cell_text(r, c));
      }
      if (routes) {
        if (vertical) (*routes)[vertical].push_back({r, c});
        if (horizontal[r]) (*routes)[horizontal[r]].push_back({r, c});
      }
      vertical = flow.north;
      horizontal[r] = flow.east;
    }
    if (vertical != 0) throw InvalidGrid("pipe exits through the north boundary in column " +
                                         std::to_string(c));
  }
  std::vector<int> one_line(n);
  for (int r = 1; r <= n; ++r) {
    if (horizontal[r] == 0) throw InvalidGrid("no pipe exits row " + std::to_string(r));
    one_line[r - 1] = horizontal[r];
  }
  try {
    return Permutation(std::move(one_line));
  } catch (const InvalidArgument&) {
    throw InvalidGrid("pipe routing is not a bijection");
  }
}

}  // namespace

char tile_char(Tile t) {
  switch (t) {
    case Tile::SEElbow: return 'r';
    case Tile::NWElbow: return 'j';
    case Tile::Horizontal: return '-';
    case Tile::Vertical: return '|';
    case Tile::Crossing: return '+';
    case Tile::Empty: return '.';
  }
  return '?';
}

Tile tile_from_char(char ch) {
  switch (ch) {
    case 'r': return Tile::SEElbow;
    case 'j': return Tile::NWElbow;
    case '-': return Tile::Horizontal;
    case '|': return Tile::Vertical;
    case '+': return Tile::Crossing;
    case '.': return Tile::Empty;
    default: throw ParseError(std::string("unknown tile character '") + ch + "'");
  }
}

Permutation trace_permutation(int n, const std::vector<Tile>& tiles) {
  return trace_impl(n, tiles, nullptr);
}

BumplessPipeDream::BumplessPipeDream(int n, std::vector<Tile> tiles)
    : n_(n), tiles_(std::move(tiles)), trace_(trace_impl(n_, tiles_, nullptr)) {}

BumplessPipeDream BumplessPipeDream::from_rows(const std::vector<std::string>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Tile> tiles;
  tiles.reserve(n * n);
  for (const std::string& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidGrid("grid is not square");
    for (char ch : row) tiles.push_back(tile_from_char(ch));
  }
  return BumplessPipeDream(n, std::move(tiles));
}

std::string BumplessPipeDream::encoding() const {
  std::string out;
  out.reserve(tiles_.size());
  for (Tile t : tiles_) out += tile_char(t);
  return out;
}

std::vector<std::string> BumplessPipeDream::rows() const {
  const std::string flat = encoding();
  std::vector<std::string> out;
  for (int r = 0; r < n_; ++r) out.push_back(flat.substr(r * n_, n_));
  return out;
}

std::string BumplessPipeDream::render() const {
  std::string out;
  for (const std::string& row : rows()) out += row + "\n";
  return out;
}

std::vector<Cell> BumplessPipeDream::cells_of(Tile kind) const {
  std::vector<Cell> out;
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c) == kind) out.push_back({r, c});
  return out;
}

std::vector<Cell> BumplessPipeDream::pipe_route(int label) const {
  if (label < 1 || label > n_) throw InvalidArgument("pipe label out of range");
  std::vector<std::vector<Cell>> routes;
  trace_impl(n_, tiles_, &routes);
  return routes[label];
}

BumplessPipeDream rothe_bpd(const Permutation& w) {
  const int n = w.size();
  std::vector<Tile> tiles;
  tiles.reserve(n * n);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (c == w(r)) {
        tiles.push_back(Tile::SEElbow);
        continue;
      }
      const bool horizontal = c > w(r);
      const bool vertical = r > w.inverse_at(c);
      if (horizontal && vertical) {
        tiles.push_back(Tile::Crossing);
      } else if (horizontal) {
        tiles.push_back(Tile::Horizontal);
      } else if (vertical) {
        tiles.push_back(Tile::Vertical);
      } else {
        tiles.push_back(Tile::Empty);
      }
    }
  }
  return BumplessPipeDream(n, std::move(tiles));
}

// ---------------------------------------------------------------------------
// Moves. A move removes the old route segments of the affected pipes, adds the
// new ones, and then revalidates the whole grid.

namespace {

enum class Segment { SN, WE, SE, WN };

class GridEdit {
 public:
  explicit GridEdit(const BumplessPipeDream& p) : n_(p.size()), tiles_(p.tiles()) {}

  Tile at(int r, int c) const { return tiles_[(r - 1) * n_ + (c - 1)]; }

  void remove(int r, int c, Segment s) {
    Tile& t = tile(r, c);
    switch (s) {
      case Segment::SN:
        if (t == Tile::Crossing) t = Tile::Horizontal;
        else if (t == Tile::Vertical) t = Tile::Empty;
        else ok_ = false;
        break;
      case Segment::WE:
        if (t == Tile::Crossing) t = Tile::Vertical;
        else if (t == Tile::Horizontal) t = Tile::Empty;
        else ok_ = false;
        break;
      case Segment::SE:
        if (t == Tile::SEElbow) t = Tile::Empty;
        else ok_ = false;
        break;
      case Segment::WN:
        if (t == Tile::NWElbow) t = Tile::Empty;
        else ok_ = false;
        break;
    }
  }

  void add(int r, int c, Segment s) {
    Tile& t = tile(r, c);
    if (t == Tile::Empty) {
      switch (s) {
        case Segment::SN: t = Tile::Vertical; break;
        case Segment::WE: t = Tile::Horizontal; break;
        case Segment::SE: t = Tile::SEElbow; break;
        case Segment::WN: t = Tile::NWElbow; break;
      }
    } else if (t == Tile::Horizontal && s == Segment::SN) {
      t = Tile::Crossing;
    } else if (t == Tile::Vertical && s == Segment::WE) {
      t = Tile::Crossing;
    } else {
      ok_ = false;
    }
  }

  void remove_column(int c, int bottom, int top, Segment s) {
    for (int r = bottom; r >= top; --r) remove(r, c, s);
  }
  void add_column(int c, int bottom, int top, Segment s) {
    for (int r = bottom; r >= top; --r) add(r, c, s);
  }
  void remove_row(int r, int left, int right, Segment s) {
    for (int c = left; c <= right; ++c) remove(r, c, s);
  }
  void add_row(int r, int left, int right, Segment s) {
    for (int c = left; c <= right; ++c) add(r, c, s);
  }

  // Returns the edited BPD when the edit was consistent and the result is a
  // valid grid with the expected trace.
  bool finish(const Permutation& expected, std::vector<BumplessPipeDream>& out) const {
    if (!ok_) return false;
    try {
      BumplessPipeDream result(n_, tiles_);
      if (!(result.trace() == expected)) return false;
      out.push_back(std::move(result));
      return true;
    } catch (const InvalidGrid&) {
      return false;
    }
  }

 private:
  Tile& tile(int r, int c) { return tiles_[(r - 1) * n_ + (c - 1)]; }

  int n_;
  std::vector<Tile> tiles_;
  bool ok_ = true;
};

bool is_elbow(Tile t) { return t == Tile::SEElbow || t == Tile::NWElbow; }

// Cells of the closed rectangle [top, bottom] x [left, right] that are elbows.
std::vector<Cell> elbows_in(const BumplessPipeDream& p, int top, int bottom, int left, int right) {
  std::vector<Cell> out;
  for (int r = top; r <= bottom; ++r)
    for (int c = left; c <= right; ++c)
      if (is_elbow(p.at(r, c))) out.push_back({r, c});
  return out;
}

void sort_unique(std::vector<BumplessPipeDream>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<BumplessPipeDream> droops(const BumplessPipeDream& p) {
  const int n = p.size();
  std::vector<BumplessPipeDream> out;
  for (const Cell& elbow : p.cells_of(Tile::SEElbow)) {
    const int a = elbow.row;
    const int b = elbow.column;
    for (int c = a + 1; c <= n; ++c) {
      for (int d = b + 1; d <= n; ++d) {
        if (p.at(c, d) != Tile::Empty) continue;
        if (elbows_in(p, a, c, b, d).size() != 1) continue;
        GridEdit edit(p);
        edit.remove_column(b, c, a + 1, Segment::SN);
        edit.remove(a, b, Segment::SE);
        edit.remove_row(a, b + 1, d, Segment::WE);
        edit.add(c, b, Segment::SE);
        edit.add_row(c, b + 1, d - 1, Segment::WE);
        edit.add(c, d, Segment::WN);
        edit.add_column(d, c - 1, a + 1, Segment::SN);
        edit.add(a, d, Segment::SE);
        edit.finish(p.trace(), out);
      }
    }
  }
  sort_unique(out);
  return out;
}

std::vector<BumplessPipeDream> k_droops(const BumplessPipeDream& p) {
  const int n = p.size();
  std::vector<BumplessPipeDream> out;
  for (const Cell& elbow : p.cells_of(Tile::SEElbow)) {
    const int a = elbow.row;
    const int b = elbow.column;
    for (int c = a + 1; c <= n; ++c) {
      for (int d = b + 1; d <= n; ++d) {
        if (p.at(c, d) != Tile::NWElbow) continue;
        const std::vector<Cell> found = elbows_in(p, a, c, b, d);

        // Crossing at the north-east corner; pipe j turns east at (c, e).
        if (p.at(a, d) == Tile::Crossing && found.size() == 3) {
          for (int e = b + 1; e < d; ++e) {
            if (p.at(c, e) != Tile::SEElbow) continue;
            GridEdit edit(p);
            edit.remove_column(b, c, a + 1, Segment::SN);
            edit.remove(a, b, Segment::SE);
            edit.remove_row(a, b + 1, d, Segment::WE);
            edit.remove(c, e, Segment::SE);
            edit.remove_row(c, e + 1, d - 1, Segment::WE);
            edit.remove(c, d, Segment::WN);
            edit.remove_column(d, c - 1, a, Segment::SN);
            edit.add(c, b, Segment::SE);
            edit.add_row(c, b + 1, d - 1, Segment::WE);
            edit.add(c, d, Segment::WN);
            edit.add_column(d, c - 1, a, Segment::SN);
            edit.add_column(e, c, a + 1, Segment::SN);
            edit.add(a, e, Segment::SE);
            edit.add_row(a, e + 1, d, Segment::WE);
            edit.finish(p.trace(), out);
          }
        }

        // Crossing at the south-west corner; pipe j turns east at (e, d).
        if (p.at(c, b) == Tile::Crossing && found.size() == 3) {
          for (int e = a + 1; e < c; ++e) {
            if (p.at(e, d) != Tile::SEElbow) continue;
            GridEdit edit(p);
            edit.remove_column(b, c, a + 1, Segment::SN);
            edit.remove(a, b, Segment::SE);
            edit.remove_row(a, b + 1, d, Segment::WE);
            edit.remove_column(d, c - 1, e + 1, Segment::SN);
            edit.remove(e, d, Segment::SE);
            edit.add_column(b, c, e + 1, Segment::SN);
            edit.add(e, b, Segment::SE);
            edit.add_row(e, b + 1, d, Segment::WE);
            edit.add_column(d, c - 1, a + 1, Segment::SN);
            edit.add(a, d, Segment::SE);
            edit.finish(p.trace(), out);
          }
        }
      }
    }
  }
  sort_unique(out);
  return out;
}

namespace {

std::vector<BumplessPipeDream> closure(const Permutation& w, int bound, bool with_k) {
  if (w.size() > bound) {
    throw BoundExceeded("BPD enumeration is limited to n <= " + std::to_string(bound));
  }
  std::set<std::string> seen;
  std::vector<BumplessPipeDream> found;
  std::deque<BumplessPipeDream> queue;
  BumplessPipeDream start = rothe_bpd(w);
  seen.insert(start.encoding());
  queue.push_back(start);
  while (!queue.empty()) {
    BumplessPipeDream current = std::move(queue.front());
    queue.pop_front();
    std::vector<BumplessPipeDream> next = droops(current);
    if (with_k) {
      std::vector<BumplessPipeDream> more = k_droops(current);
      next.insert(next.end(), more.begin(), more.end());
    }
    for (BumplessPipeDream& q : next) {
      if (seen.insert(q.encoding()).second) queue.push_back(std::move(q));
    }
    found.push_back(std::move(current));
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Column-by-column sweep over tile choices. Each cell admits at most two
// tiles given the pipes entering it, so the search is a binary tree pruned by
// the target trace when one is given.
class GridSearch {
 public:
  GridSearch(int n, const Permutation* target)
      : n_(n), target_(target), tiles_(n * n, Tile::Empty), horizontal_(n + 1, 0),
        crossed_(n + 1, 0) {}

  std::vector<BumplessPipeDream> run() {
    visit(1, n_, 1);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Pipe `label` moving through row r may still reach its exit row.
  bool reachable(int label, int row) const {
    return target_ == nullptr || target_->inverse_at(label) <= row;
  }

  void visit(int c, int r, int vertical) {
    if (r == 0) {
      if (vertical != 0) return;
      if (c == n_) {
        record();
        return;
      }
      visit(c + 1, n_, c + 1);
      return;
    }
    const int west = horizontal_[r];
    Tile options[2];
    int count = 0;
    if (vertical == 0 && west == 0) {
      options[count++] = Tile::Empty;
    } else if (west == 0) {
      options[count++] = Tile::SEElbow;
      options[count++] = Tile::Vertical;
    } else if (vertical == 0) {
      options[count++] = Tile::NWElbow;
      options[count++] = Tile::Horizontal;
    } else {
      options[count++] = Tile::Crossing;
    }
    for (int k = 0; k < count; ++k) {
      const Tile t = options[k];
      Flow flow;
      route_tile(t, vertical, west, crossed_, flow);
      const bool ok = (flow.north == 0 || reachable(flow.north, r - 1)) &&
                      (flow.east == 0 || reachable(flow.east, r)) &&
                      !(c == n_ && target_ && flow.east != (*target_)(r));
      if (ok) {
        tiles_[(r - 1) * n_ + (c - 1)] = t;
        horizontal_[r] = flow.east;
        visit(c, r - 1, flow.north);
        horizontal_[r] = west;
      }
      if (flow.new_crossing) mark_crossed(crossed_, vertical, west, false);
    }
  }

  void record() {
    BumplessPipeDream p(n_, tiles_);
    if (target_ == nullptr || p.trace() == *target_) found_.push_back(std::move(p));
  }

  int n_;
  const Permutation* target_;
  std::vector<Tile> tiles_;
  std::vector<int> horizontal_;
  std::vector<std::uint64_t> crossed_;
  std::vector<BumplessPipeDream> found_;
};

}  // namespace

std::vector<BumplessPipeDream> enumerate_bpds(const Permutation& w, int bound) {
  return closure(w, bound, true);
}

std::vector<BumplessPipeDream> enumerate_droop_closure(const Permutation& w, int bound) {
  return closure(w, bound, false);
}

std::vector<BumplessPipeDream> enumerate_bpds_bruteforce(const Permutation& w) {
  if (w.size() > kBruteForceBound) {
    throw BoundExceeded("brute-force BPD enumeration is limited to n <= " +
                        std::to_string(kBruteForceBound));
  }
  return GridSearch(w.size(), &w).run();
}

std::vector<BumplessPipeDream> enumerate_all_grids(int n) {
  if (n < 1) throw InvalidArgument("grid size must be positive");
  if (n > 5) throw BoundExceeded("enumerating all grids is limited to n <= 5");
  return GridSearch(n, nullptr).run();
}

namespace {

// (-1)^(|B(P)| - l(w)); differs from 1 only when some pair crosses twice.
Integer excess_sign(const BumplessPipeDream& p) {
  const auto excess = p.empty_cells().size() - static_cast<std::size_t>(length(p.trace()));
  return excess % 2 == 0 ? Integer(1) : Integer(-1);
}

}  // namespace

Polynomial weight_single(const BumplessPipeDream& p) {
  const VariableSpace space = VariableSpace::plain(p.size());
  Polynomial out = Polynomial::constant(space, excess_sign(p));
  for (const Cell& cell : p.empty_cells()) out *= Polynomial::x(space, cell.row);
  for (const Cell& cell : p.nw_elbows()) out *= Polynomial::one(space) - Polynomial::x(space, cell.row);
  return out;
}

Polynomial weight_double(const BumplessPipeDream& p) {
  const VariableSpace space = VariableSpace::dual(p.size());
  const Polynomial one = Polynomial::one(space);
  Polynomial out = Polynomial::constant(space, excess_sign(p));
  for (const Cell& cell : p.empty_cells()) {
    const Polynomial x = Polynomial::x(space, cell.row);
    const Polynomial y = Polynomial::y(space, cell.column);
    out *= x + y - x * y;
  }
  for (const Cell& cell : p.nw_elbows()) {
    const Polynomial x = Polynomial::x(space, cell.row);
    const Polynomial y = Polynomial::y(space, cell.column);
    out *= one - x - y + x * y;
  }
  return out;
}

}  // namespace grothkit
