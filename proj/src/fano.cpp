#include "btq/fano.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <set>

namespace btq::fano {

namespace {

bool parity(unsigned v) { return std::popcount(v) & 1u; }

std::array<GeomElement, 14> make_elements() {
  std::array<GeomElement, 14> out{};
  for (unsigned i = 0; i < 7; ++i) {
    out[i] = {Kind::Point, static_cast<std::uint8_t>(i + 1)};
    out[i + 7] = {Kind::Line, static_cast<std::uint8_t>(i + 1)};
  }
  return out;
}

const std::array<GeomElement, 14> kElements = make_elements();

std::size_t lookup_key(const GroupElement& g) {
  return (g.duality ? 512u : 0u) + g.matrix.rows[0] * 64u + g.matrix.rows[1] * 8u +
         g.matrix.rows[2];
}

BitMatrix3 inverse_transpose(const BitMatrix3& m) { return m.inverse().transpose(); }

}  // namespace

GeomElement GeomElement::point(unsigned coords) {
  if (coords < 1 || coords > 7) throw FanoError("point coordinates must be in 1..7");
  return {Kind::Point, static_cast<std::uint8_t>(coords)};
}

GeomElement GeomElement::line(unsigned coords) {
  if (coords < 1 || coords > 7) throw FanoError("line coordinates must be in 1..7");
  return {Kind::Line, static_cast<std::uint8_t>(coords)};
}

GeomElement GeomElement::from_index(std::size_t i) {
  if (i >= 14) throw FanoError("element index out of range");
  return kElements[i];
}

std::string GeomElement::label() const {
  return std::string(kind == Kind::Point ? "P" : "L") + std::to_string(coords);
}

GeomElement GeomElement::parse(const std::string& label) {
  if (label.size() != 2 || (label[0] != 'P' && label[0] != 'L') || label[1] < '1' ||
      label[1] > '7') {
    throw FanoError("bad element label '" + label + "'");
  }
  unsigned c = static_cast<unsigned>(label[1] - '0');
  return label[0] == 'P' ? point(c) : line(c);
}

std::span<const GeomElement> all_elements() { return kElements; }
std::span<const GeomElement> all_points() { return std::span(kElements).first(7); }
std::span<const GeomElement> all_lines() { return std::span(kElements).last(7); }

bool incident(GeomElement a, GeomElement b) {
  if (a.kind == b.kind) return false;
  return !parity(static_cast<unsigned>(a.coords & b.coords));
}

std::array<GeomElement, 3> incident_elements(GeomElement e) {
  std::array<GeomElement, 3> out{};
  std::size_t n = 0;
  for (const auto& f : all_elements()) {
    if (incident(e, f)) out[n++] = f;
  }
  return out;
}

std::uint8_t BitMatrix3::apply(std::uint8_t v) const {
  std::uint8_t out = 0;
  for (int r = 0; r < 3; ++r) {
    if (parity(static_cast<unsigned>(rows[r] & v))) out |= static_cast<std::uint8_t>(1u << (2 - r));
  }
  return out;
}

BitMatrix3 BitMatrix3::operator*(const BitMatrix3& o) const {
  // Row r of the product is the combination of rows of o selected by row r of this.
  BitMatrix3 out{{0, 0, 0}};
  for (int r = 0; r < 3; ++r) {
    for (int k = 0; k < 3; ++k) {
      if (bit(r, k)) out.rows[r] ^= o.rows[k];
    }
  }
  return out;
}

BitMatrix3 BitMatrix3::transpose() const {
  BitMatrix3 out{{0, 0, 0}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (bit(r, c)) out.rows[c] |= static_cast<std::uint8_t>(1u << (2 - r));
    }
  }
  return out;
}

bool BitMatrix3::invertible() const {
  std::set<std::uint8_t> images;
  for (std::uint8_t v = 1; v < 8; ++v) images.insert(apply(v));
  return images.size() == 7 && !images.contains(0);
}

BitMatrix3 BitMatrix3::inverse() const {
  // Gauss-Jordan on [M | I].
  std::array<std::uint8_t, 3> a = rows;
  std::array<std::uint8_t, 3> b = identity().rows;
  for (int c = 0; c < 3; ++c) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (2 - c));
    int pivot = -1;
    for (int r = c; r < 3; ++r) {
      if (a[r] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw FanoError("matrix is singular over F_2");
    std::swap(a[c], a[pivot]);
    std::swap(b[c], b[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r != c && (a[r] & mask)) {
        a[r] ^= a[c];
        b[r] ^= b[c];
      }
    }
  }
  return BitMatrix3{b};
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  const BitMatrix3 n = duality ? inverse_transpose(o.matrix) : o.matrix;
  return {matrix * n, duality != o.duality};
}

GroupElement GroupElement::inverse() const {
  const BitMatrix3 minv = matrix.inverse();
  return {duality ? inverse_transpose(minv) : minv, duality};
}

GeomElement act(const GroupElement& g, GeomElement e) {
  if (!g.duality) {
    const BitMatrix3 m = e.is_point() ? g.matrix : inverse_transpose(g.matrix);
    return {e.kind, m.apply(e.coords)};
  }
  // (M,1) = (M,0) after tau; tau keeps coordinates and swaps the kind.
  if (e.is_point()) return {Kind::Line, inverse_transpose(g.matrix).apply(e.coords)};
  return {Kind::Point, g.matrix.apply(e.coords)};
}

nlohmann::json to_json(const GroupElement& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < 3; ++r) {
    rows.push_back({int(g.matrix.bit(r, 0)), int(g.matrix.bit(r, 1)), int(g.matrix.bit(r, 2))});
  }
  return {{"matrix", rows}, {"duality", g.duality ? 1 : 0}};
}

GroupElement group_element_from_json(const nlohmann::json& j) {
  GroupElement g;
  const auto& rows = j.at("matrix");
  if (!rows.is_array() || rows.size() != 3) throw FanoError("matrix must have 3 rows");
  for (int r = 0; r < 3; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != 3) throw FanoError("matrix rows must have 3 entries");
    std::uint8_t bits = 0;
    for (int c = 0; c < 3; ++c) {
      const int b = row[c].get<int>();
      if (b != 0 && b != 1) throw FanoError("matrix entries must be 0 or 1");
      if (b) bits |= static_cast<std::uint8_t>(1u << (2 - c));
    }
    g.matrix.rows[r] = bits;
  }
  const int d = j.at("duality").get<int>();
  if (d != 0 && d != 1) throw FanoError("duality must be 0 or 1");
  g.duality = d == 1;
  if (!g.matrix.invertible()) throw FanoError("matrix is singular over F_2");
  return g;
}

ExtendedGroup::ExtendedGroup() {
  std::vector<BitMatrix3> mats;
  for (unsigned bits = 0; bits < 512; ++bits) {
    BitMatrix3 m{{static_cast<std::uint8_t>(bits >> 6), static_cast<std::uint8_t>((bits >> 3) & 7u),
                  static_cast<std::uint8_t>(bits & 7u)}};
    if (m.invertible()) mats.push_back(m);
  }
  // Identity first, the rest by rows.
  std::sort(mats.begin(), mats.end(), [](const BitMatrix3& a, const BitMatrix3& b) {
    const bool ia = a == BitMatrix3::identity(), ib = b == BitMatrix3::identity();
    if (ia != ib) return ia;
    return a < b;
  });
  for (bool d : {false, true}) {
    for (const auto& m : mats) elements_.push_back({m, d});
  }
  if (elements_.front() != GroupElement::identity()) throw FanoError("identity is not least");

  lookup_.assign(1024, SIZE_MAX);
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_[lookup_key(elements_[i])] = i;

  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_of(elements_[a] * elements_[b]);
    inverse_[a] = index_of(elements_[a].inverse());
  }
  action_.resize(n * 14);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t e = 0; e < 14; ++e) action_[g * 14 + e] = fano::act(elements_[g], kElements[e]).index();
  }
}

const ExtendedGroup& ExtendedGroup::instance() {
  static const ExtendedGroup group;
  return group;
}

std::size_t ExtendedGroup::index_of(const GroupElement& g) const {
  const std::size_t i = lookup_[lookup_key(g)];
  if (i == SIZE_MAX) throw FanoError("not a group element");
  return i;
}

std::size_t ExtendedGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity(); x = multiply(x, a)) ++k;
  return k;
}

Subgroup::Subgroup(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(std::size_t g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::is_group() const {
  const auto& G = ExtendedGroup::instance();
  if (!contains(G.identity())) return false;
  for (auto a : members_) {
    for (auto b : members_) {
      if (!contains(G.multiply(a, b))) return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const {
  const auto& G = ExtendedGroup::instance();
  for (auto a : members_) {
    for (auto b : members_) {
      if (G.multiply(a, b) != G.multiply(b, a)) return false;
    }
  }
  return true;
}

std::size_t Subgroup::max_element_order() const {
  const auto& G = ExtendedGroup::instance();
  std::size_t best = 0;
  for (auto a : members_) best = std::max(best, G.element_order(a));
  return best;
}

std::size_t Subgroup::correlation_count() const {
  const auto& G = ExtendedGroup::instance();
  return static_cast<std::size_t>(
      std::count_if(members_.begin(), members_.end(), [&](auto g) { return G.element(g).duality; }));
}

Subgroup Subgroup::collineation_part() const {
  const auto& G = ExtendedGroup::instance();
  std::vector<std::size_t> out;
  for (auto g : members_) {
    if (!G.element(g).duality) out.push_back(g);
  }
  return Subgroup(std::move(out));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool Subgroup::normalizes(const Subgroup& other) const {
  const auto& G = ExtendedGroup::instance();
  for (auto h : members_) {
    for (auto k : other.members_) {
      if (!other.contains(G.multiply(G.multiply(h, k), G.inverse(h)))) return false;
    }
  }
  return true;
}

Subgroup full_group() {
  std::vector<std::size_t> all(ExtendedGroup::instance().order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(std::move(all));
}

Subgroup collineation_group() { return full_group().collineation_part(); }

Subgroup trivial_subgroup() { return Subgroup({ExtendedGroup::instance().identity()}); }

Subgroup generated_subgroup(std::span<const std::size_t> generators) {
  const auto& G = ExtendedGroup::instance();
  std::vector<std::size_t> members{G.identity()};
  std::vector<bool> seen(G.order(), false);
  seen[G.identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto s : generators) {
      const std::size_t x = G.multiply(members[i], s);
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
  }
  return Subgroup(std::move(members));
}

Flag Flag::make(GeomElement point, GeomElement line) {
  if (!point.is_point() || !line.is_line() || !incident(point, line)) {
    throw FanoError("not incident: " + point.label() + ", " + line.label());
  }
  return {point, line};
}

std::vector<Flag> all_flags() {
  std::vector<Flag> out;
  for (const auto& p : all_points()) {
    for (const auto& l : all_lines()) {
      if (incident(p, l)) out.push_back({p, l});
    }
  }
  return out;
}

Flag default_flag() { return all_flags().front(); }

Subgroup flag_stabilizer_d8(const Flag& f) {
  Flag::make(f.point, f.line);
  const auto& G = ExtendedGroup::instance();
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (G.element(g).duality) continue;
    if (G.act(g, f.point.index()) == f.point.index() && G.act(g, f.line.index()) == f.line.index()) {
      out.push_back(g);
    }
  }
  return Subgroup(std::move(out));
}

Subgroup element_stabilizer(GeomElement e) {
  const auto& G = ExtendedGroup::instance();
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (!G.element(g).duality && G.act(g, e.index()) == e.index()) out.push_back(g);
  }
  return Subgroup(std::move(out));
}

Subgroup sylow2_d16(const Flag& f) {
  const auto& G = ExtendedGroup::instance();
  const Subgroup d8 = flag_stabilizer_d8(f);
  for (std::size_t g = 0; g < G.order(); ++g) {
    if (!G.element(g).duality) continue;
    if (G.act(g, f.point.index()) != f.line.index() || G.act(g, f.line.index()) != f.point.index()) {
      continue;
    }
    if (!Subgroup({g}).normalizes(d8)) continue;
    std::vector<std::size_t> members = d8.members();
    for (auto h : d8.members()) members.push_back(G.multiply(g, h));
    Subgroup d16(std::move(members));
    if (d16.order() != 16 || !d16.is_group()) {
      throw std::logic_error("flag-swapping correlation does not extend D8 to a group of order 16");
    }
    return d16;
  }
  throw std::logic_error("no correlation normalizes the flag stabilizer");
}

std::vector<Orbit> orbits(const Subgroup& h, std::span<const GeomElement> elems) {
  const auto& G = ExtendedGroup::instance();
  std::vector<bool> done(14, false);
  std::vector<Orbit> out;
  for (const auto& e : elems) {
    if (done[e.index()]) continue;
    std::set<GeomElement> orbit;
    for (auto g : h.members()) orbit.insert(GeomElement::from_index(G.act(g, e.index())));
    for (const auto& x : orbit) done[x.index()] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

OrbitRepresentatives orbit_representatives_ppp(const Flag& f) {
  const Subgroup d8 = flag_stabilizer_d8(f);
  auto reps_by_size = [&](std::span<const GeomElement> elems) {
    std::array<GeomElement, 3> reps{};
    std::array<bool, 3> seen{};
    for (const auto& orbit : orbits(d8, elems)) {
      const int cls = orbit.size() == 1 ? 0 : orbit.size() == 2 ? 1 : orbit.size() == 4 ? 2 : -1;
      if (cls < 0 || seen[cls]) throw std::logic_error("flag stabilizer orbit sizes are not {1,2,4}");
      seen[cls] = true;
      reps[cls] = orbit.front();
    }
    return reps;
  };
  const auto p = reps_by_size(all_points());
  const auto l = reps_by_size(all_lines());
  return {p[0], p[1], p[2], l[0], l[1], l[2]};
}

int d8_orbit_class(const Flag& f, GeomElement e) {
  const Subgroup d8 = flag_stabilizer_d8(f);
  const GeomElement one[] = {e};
  const auto sz = orbits(d8, one).front().size();
  switch (sz) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    default: throw std::logic_error("unexpected flag stabilizer orbit size");
  }
}

}  // namespace btq::fano
