#include "compactlab/example_groups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace compactlab {

std::set<long long> shift_lamps(const std::set<long long>& lamps, long long by) {
  std::set<long long> out;
  for (long long i : lamps) out.insert(i + by);
  return out;
}

std::set<long long> symmetric_difference(const std::set<long long>& a,
                                         const std::set<long long>& b) {
  std::set<long long> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.begin()));
  return out;
}

LamplighterElement lamplighter_multiply(const LamplighterElement& g,
                                        const LamplighterElement& h) {
  return LamplighterElement{g.position + h.position,
                            symmetric_difference(g.lamps, shift_lamps(h.lamps, g.position))};
}

LamplighterElement lamplighter_inverse(const LamplighterElement& g) {
  return LamplighterElement{-g.position, shift_lamps(g.lamps, -g.position)};
}

LampConfig LampConfig::finitely_supported(std::set<long long> lit) {
  return LampConfig(Finite{std::move(lit)});
}

LampConfig LampConfig::window_periodic(std::vector<bool> left, std::vector<bool> base,
                                       std::vector<bool> right, long long base_start) {
  if (left.empty() || right.empty()) throw Error("periodic tails must be nonempty");
  if (base.empty()) throw Error("periodic config needs a nonempty base window");
  return LampConfig(Periodic{std::move(left), std::move(base), std::move(right), base_start});
}

bool LampConfig::lit(long long i) const {
  return std::visit(
      [i](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Finite>) {
          return c.lit.count(i) > 0;
        } else {
          const long long end = c.base_start + static_cast<long long>(c.base.size());
          if (i >= c.base_start && i < end)
            return c.base[static_cast<std::size_t>(i - c.base_start)];
          if (i < c.base_start) {
            // Tile leftward; the pattern's last bit sits at base_start - 1.
            const long long offset = c.base_start - 1 - i;
            const auto len = static_cast<long long>(c.left.size());
            return c.left[static_cast<std::size_t>(len - 1 - (offset % len))];
          }
          const long long offset = i - end;
          return c.right[static_cast<std::size_t>(offset %
                                                  static_cast<long long>(c.right.size()))];
        }
      },
      v_);
}

std::vector<bool> LampConfig::window(long long radius) const {
  std::vector<bool> out;
  out.reserve(static_cast<std::size_t>(2 * radius + 1));
  for (long long i = -radius; i <= radius; ++i) out.push_back(lit(i));
  return out;
}

bool LampConfig::is_finitely_supported() const {
  if (std::holds_alternative<Finite>(v_)) return true;
  const auto& p = std::get<Periodic>(v_);
  auto all_off = [](const std::vector<bool>& bits) {
    return std::none_of(bits.begin(), bits.end(), [](bool b) { return b; });
  };
  return all_off(p.left) && all_off(p.right);
}

std::set<long long> LampConfig::support() const {
  if (!is_finitely_supported()) throw Error("configuration has infinite support");
  if (const auto* f = std::get_if<Finite>(&v_)) return f->lit;
  const auto& p = std::get<Periodic>(v_);
  std::set<long long> out;
  for (std::size_t j = 0; j < p.base.size(); ++j) {
    if (p.base[j]) out.insert(p.base_start + static_cast<long long>(j));
  }
  return out;
}

std::string LampConfig::str() const {
  if (is_finitely_supported()) {
    std::string s = "lamps:";
    bool first = true;
    for (long long i : support()) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s;
  }
  const auto& p = std::get<Periodic>(v_);
  auto bits = [](const std::vector<bool>& v) {
    std::string s;
    for (bool b : v) s += b ? '1' : '0';
    return s;
  };
  return "window-periodic:" + bits(p.left) + "|" + bits(p.base) + "|" + bits(p.right);
}

bool operator==(const LampConfig& a, const LampConfig& b) {
  if (a.is_finitely_supported() && b.is_finitely_supported())
    return a.support() == b.support();
  // Compare far enough that both periodic structures are committed.
  auto extent = [](const LampConfig& c) -> long long {
    if (const auto* p = std::get_if<LampConfig::Periodic>(&c.v_)) {
      const long long end = p->base_start + static_cast<long long>(p->base.size());
      const long long tails =
          static_cast<long long>(std::max(p->left.size(), p->right.size()));
      return std::max(std::abs(p->base_start), std::abs(end)) + 2 * tails;
    }
    const auto& f = std::get<LampConfig::Finite>(c.v_);
    return f.lit.empty() ? 1 : std::max(std::abs(*f.lit.begin()), std::abs(*f.lit.rbegin()));
  };
  const long long radius = std::max(extent(a), extent(b)) + 2;
  if (a.window(radius) != b.window(radius)) return false;
  // Beyond the window both sides are purely periodic; compare one full cycle.
  auto tail_period = [](const LampConfig& c, bool leftward) -> std::vector<bool> {
    if (const auto* p = std::get_if<LampConfig::Periodic>(&c.v_))
      return leftward ? p->left : p->right;
    return {false};
  };
  for (bool leftward : {true, false}) {
    const auto pa = tail_period(a, leftward);
    const auto pb = tail_period(b, leftward);
    const long long cycle = static_cast<long long>(std::lcm(pa.size(), pb.size()));
    for (long long j = 1; j <= cycle; ++j) {
      const long long i = leftward ? -radius - j : radius + j;
      if (a.lit(i) != b.lit(i)) return false;
    }
  }
  return true;
}

LampConfig lamplighter_act(const LamplighterElement& g, const LampConfig& x) {
  if (x.is_finitely_supported()) {
    return LampConfig::finitely_supported(
        symmetric_difference(g.lamps, shift_lamps(x.support(), g.position)));
  }
  // Shift the periodic description by g.position, then widen the base window
  // to absorb the toggled lamps.
  const auto& p = std::get<LampConfig::Periodic>(x.v_);
  long long start = p.base_start + g.position;
  long long end = start + static_cast<long long>(p.base.size());
  long long lo = start, hi = end - 1;
  if (!g.lamps.empty()) {
    lo = std::min(lo, *g.lamps.begin());
    hi = std::max(hi, *g.lamps.rbegin());
  }
  LampConfig shifted = LampConfig::window_periodic(p.left, p.base, p.right, start);
  std::vector<bool> base;
  for (long long i = lo; i <= hi; ++i) {
    base.push_back(shifted.lit(i) != (g.lamps.count(i) > 0));
  }
  // Align the tiling phases: each tail must continue exactly where the old
  // tiling would have. Growing the window down by t turns left[m] into
  // left[m - t]; growing up by s turns right[m] into right[m + s].
  auto rotate_for = [](const std::vector<bool>& pattern, long long steps) {
    const auto len = static_cast<long long>(pattern.size());
    std::vector<bool> out(pattern.size());
    for (long long j = 0; j < len; ++j) {
      out[static_cast<std::size_t>(j)] =
          pattern[static_cast<std::size_t>((((j + steps) % len) + len) % len)];
    }
    return out;
  };
  const long long left_growth = start - lo;
  const long long right_growth = hi - (end - 1);
  return LampConfig::window_periodic(rotate_for(p.left, -left_growth),
                                     std::move(base),
                                     rotate_for(p.right, right_growth), lo);
}

DihedralElement dihedral_multiply(const DihedralElement& g, const DihedralElement& h) {
  return DihedralElement{g.shift + (g.flip ? -h.shift : h.shift),
                         static_cast<bool>(g.flip ^ h.flip)};
}

DihedralElement dihedral_inverse(const DihedralElement& g) {
  return g.flip ? DihedralElement{g.shift, true} : DihedralElement{-g.shift, false};
}

long long dihedral_act_integer(const DihedralElement& g, long long n) {
  return g.shift + (g.flip ? -n : n);
}

int dihedral_act_two_point(const DihedralElement& g, int point) {
  if (point != 0 && point != 1) throw Error("two-point space has points 0 and 1");
  return g.flip ? 1 - point : point;
}

int integer_act_two_point(long long k, int point) {
  if (point != 0 && point != 1) throw Error("two-point space has points 0 and 1");
  return (k % 2 + 2) % 2 == 0 ? point : 1 - point;
}

FiniteAction::FiniteAction(std::vector<std::string> points,
                           std::map<std::string, std::vector<int>> generator_images)
    : points_(std::move(points)), generator_images_(std::move(generator_images)) {
  if (points_.empty()) throw Error("finite action needs at least one point");
  for (const auto& [gen, image] : generator_images_) {
    if (image.size() != points_.size() || !is_permutation(image))
      throw Error("generator '" + gen + "' image is not a bijection of the points");
  }
}

int FiniteAction::point_index(const std::string& name) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] == name) return static_cast<int>(i);
  }
  throw Error("unknown point '" + name + "'");
}

const std::vector<int>& FiniteAction::generator_image(const std::string& gen) const {
  auto it = generator_images_.find(gen);
  if (it == generator_images_.end()) throw Error("unknown generator '" + gen + "'");
  return it->second;
}

std::vector<int> FiniteAction::word_image(const std::string& word) const {
  std::vector<int> acc = identity_permutation(points_.size());
  for (char c : word) {
    std::string name(1, static_cast<char>(std::tolower(c)));
    std::vector<int> img = generator_image(name);
    if (std::isupper(static_cast<unsigned char>(c))) img = invert_permutation(img);
    acc = compose_permutations(img, acc);
  }
  return acc;
}

bool FiniteAction::is_transitive() const {
  std::vector<bool> reached(points_.size(), false);
  std::vector<int> frontier{0};
  reached[0] = true;
  while (!frontier.empty()) {
    int p = frontier.back();
    frontier.pop_back();
    for (const auto& [gen, image] : generator_images_) {
      for (int q : {image[static_cast<std::size_t>(p)],
                    invert_permutation(image)[static_cast<std::size_t>(p)]}) {
        if (!reached[static_cast<std::size_t>(q)]) {
          reached[static_cast<std::size_t>(q)] = true;
          frontier.push_back(q);
        }
      }
    }
  }
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

std::vector<int> compose_permutations(const std::vector<int>& outer,
                                      const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i)
    out[i] = outer[static_cast<std::size_t>(inner[i])];
  return out;
}

std::vector<int> invert_permutation(const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

std::vector<int> identity_permutation(std::size_t n) {
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(i);
  return out;
}

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() ||
        seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

GroupElement element_multiply(const GroupElement& g, const GroupElement& h) {
  if (g.index() != h.index()) throw Error("group tag mismatch");
  if (const auto* lg = std::get_if<LamplighterElement>(&g))
    return lamplighter_multiply(*lg, std::get<LamplighterElement>(h));
  if (const auto* dg = std::get_if<DihedralElement>(&g))
    return dihedral_multiply(*dg, std::get<DihedralElement>(h));
  return std::get<long long>(g) + std::get<long long>(h);
}

SpacePoint element_act(const GroupElement& g, const SpacePoint& x) {
  if (const auto* lg = std::get_if<LamplighterElement>(&g)) {
    if (const auto* config = std::get_if<LampConfig>(&x))
      return lamplighter_act(*lg, *config);
    throw Error("space mismatch: lamplighter acts on lamp configurations");
  }
  if (const auto* dg = std::get_if<DihedralElement>(&g)) {
    if (const auto* n = std::get_if<long long>(&x)) return dihedral_act_integer(*dg, *n);
    if (const auto* p = std::get_if<int>(&x)) return dihedral_act_two_point(*dg, *p);
    throw Error("space mismatch: dihedral acts on Z or the two-point space");
  }
  const long long k = std::get<long long>(g);
  if (const auto* p = std::get_if<int>(&x)) return integer_act_two_point(k, *p);
  throw Error("space mismatch: Z acts on the two-point space");
}

}  // namespace compactlab
