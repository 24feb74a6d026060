#include "compactlab/measures.hpp"

namespace compactlab {

CylinderMeasure CylinderMeasure::uniform(int rank) {
  return CylinderMeasure(Base(Uniform{}), ReducedWord(rank), rank);
}

CylinderMeasure CylinderMeasure::dirac(const BoundaryPoint& x) {
  return CylinderMeasure(Base(Dirac{x}), ReducedWord(x.rank()), x.rank());
}

CylinderMeasure CylinderMeasure::table(int rank, std::size_t depth,
                                       std::map<ReducedWord, Rational> masses) {
  if (depth == 0) throw Error("table measure needs depth >= 1");
  Rational total(0);
  for (const auto& [word, mass] : masses) {
    if (word.rank() != rank) throw Error("table word rank mismatch");
    if (word.length() != depth)
      throw Error("table word '" + word.str() + "' does not have the table depth");
    if (mass < 0) throw Error("table mass for '" + word.str() + "' is negative");
    total += mass;
  }
  if (total != 1) throw Error("table masses sum to " + format_rational(total) + ", not 1");
  return CylinderMeasure(Base(Table{depth, std::move(masses)}), ReducedWord(rank), rank);
}

Rational CylinderMeasure::base_mass(const ReducedWord& w) const {
  return std::visit(
      [&](const auto& b) -> Rational {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Uniform>) {
          if (w.is_identity()) return Rational(1);
          Rational m(1, 2 * rank_);
          const Rational branch(1, 2 * rank_ - 1);
          for (std::size_t i = 1; i < w.length(); ++i) m *= branch;
          m.canonicalize();
          return m;
        }
        if constexpr (std::is_same_v<T, Dirac>) {
          for (std::size_t i = 0; i < w.length(); ++i) {
            if (!(w.letter(i) == b.x.letter_at(i))) return Rational(0);
          }
          return Rational(1);
        }
        if constexpr (std::is_same_v<T, Table>) {
          if (w.length() > b.depth)
            throw Error("table measure of depth " + std::to_string(b.depth) +
                        " queried at depth " + std::to_string(w.length()) +
                        " without consistency extension");
          if (w.length() == b.depth) {
            auto it = b.masses.find(w);
            return it == b.masses.end() ? Rational(0) : it->second;
          }
          // Coarser cylinders by Kolmogorov consistency.
          Rational total(0);
          for (const auto& [word, mass] : b.masses) {
            if (common_prefix_length(word, w) == w.length()) total += mass;
          }
          return total;
        }
      },
      base_);
}

Rational CylinderMeasure::mass(const Cylinder& c) const {
  if (c.base.rank() != rank_) throw Error("rank mismatch");
  if (act_.is_identity()) return base_mass(c.base);
  CylinderMeasure untranslated(base_, ReducedWord(rank_), rank_);
  return pushforward_mass(act_, untranslated, c);
}

CylinderMeasure CylinderMeasure::translated(const ReducedWord& g) const {
  if (g.rank() != rank_) throw Error("rank mismatch");
  return CylinderMeasure(base_, multiply(g, act_), rank_);
}

bool CylinderMeasure::is_dirac() const { return std::holds_alternative<Dirac>(base_); }

std::string CylinderMeasure::description() const {
  std::string tag = std::visit(
      [](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Uniform>) return "uniform";
        if constexpr (std::is_same_v<T, Dirac>) return "dirac:" + b.x.str();
        if constexpr (std::is_same_v<T, Table>)
          return "table(depth " + std::to_string(b.depth) + ")";
      },
      base_);
  if (!act_.is_identity()) tag = act_.str() + "." + tag;
  return tag;
}

Rational pushforward_mass(const ReducedWord& g, const CylinderMeasure& nu,
                          const Cylinder& c) {
  require_same_rank(g, c.base);
  if (g.rank() != nu.rank()) throw Error("rank mismatch");
  const CylinderMeasure base(nu.base_, ReducedWord(nu.rank_), nu.rank_);
  const ReducedWord total_act = multiply(g, nu.act_);
  if (total_act.is_identity()) return base.base_mass(c.base);

  const ReducedWord& w = c.base;
  const ReducedWord h = total_act.inverse();
  const std::size_t L = total_act.length();
  const std::size_t d = w.length();

  // Stratify boundary points x by the exact cancellation depth k against h:
  // on that stratum, (total_act).x = (first L-k letters of total_act) . x',
  // where x' is x past its first k letters and does not start with h[k].
  Rational result(0);
  for (std::size_t k = 0; k <= L; ++k) {
    if (k == L) {
      // x in [h]; the action shifts: membership in [w] means x in [h.w].
      if (d == 0) {
        result += base.base_mass(h);
      } else if (!h.last().cancels(w.first())) {
        result += base.base_mass(concat_reduced(h, w));
      }
      continue;
    }
    const std::size_t surviving = L - k;
    if (surviving >= d) {
      // The surviving head of total_act already decides membership.
      if (common_prefix_length(total_act, w) >= d) {
        result += base.base_mass(h.prefix(k)) - base.base_mass(h.prefix(k + 1));
      }
    } else {
      // Head must match w's start, the rest of w constrains x past depth k.
      if (common_prefix_length(total_act, w) < surviving) continue;
      const Letter continuation = w.letter(surviving);
      if (continuation == h.letter(k)) continue;  // belongs to a deeper stratum
      if (k > 0 && continuation.cancels(h.letter(k - 1))) continue;  // x not reduced
      result += base.base_mass(concat_reduced(h.prefix(k), w.subword(surviving, d)));
    }
  }
  result.canonicalize();
  return result;
}

Rational dirac_gap(const CylinderMeasure& mu, const BoundaryPoint& x, std::size_t depth) {
  Rational gap = Rational(1) - mu.mass(Cylinder{x.prefix_word(depth)});
  gap.canonicalize();
  return gap;
}

CylinderFunction CylinderFunction::constant(int rank, const Rational& value) {
  return CylinderFunction(rank, 0, {}, value);
}

CylinderFunction CylinderFunction::indicator(const Cylinder& c) {
  std::map<ReducedWord, Rational> values;
  values.emplace(c.base, Rational(1));
  return CylinderFunction(c.base.rank(), c.base.length(), std::move(values), Rational(0));
}

CylinderFunction CylinderFunction::from_values(int rank, std::size_t depth,
                                               std::map<ReducedWord, Rational> values,
                                               const Rational& fill) {
  for (const auto& [word, value] : values) {
    if (word.rank() != rank) throw Error("function word rank mismatch");
    if (word.length() != depth)
      throw Error("function word '" + word.str() + "' does not have the declared depth");
    (void)value;
  }
  return CylinderFunction(rank, depth, std::move(values), fill);
}

Rational CylinderFunction::value(const ReducedWord& u) const {
  if (u.rank() != rank_) throw Error("rank mismatch");
  if (u.length() < depth_) throw Error("cylinder function queried above its depth");
  auto it = values_.find(u.length() == depth_ ? u : u.prefix(depth_));
  return it == values_.end() ? fill_ : it->second;
}

Rational CylinderFunction::sup_norm() const {
  Rational best = abs(fill_);
  if (depth_ > 0 &&
      values_.size() == reduced_words_of_length(rank_, depth_).size()) {
    best = Rational(0);  // fill value unused when the table is total
  }
  for (const auto& [word, v] : values_) best = std::max(best, Rational(abs(v)));
  return best;
}

CylinderFunction CylinderFunction::lifted(std::size_t depth) const {
  if (depth < depth_) throw Error("cannot lower a cylinder function's depth");
  if (depth == depth_) return *this;
  std::map<ReducedWord, Rational> values;
  for (const ReducedWord& u : reduced_words_of_length(rank_, depth)) {
    values.emplace(u, value(u));
  }
  return CylinderFunction(rank_, depth, std::move(values), fill_);
}

CylinderFunction CylinderFunction::translated(const ReducedWord& g) const {
  if (g.rank() != rank_) throw Error("rank mismatch");
  if (g.is_identity()) return *this;
  const std::size_t depth = g.length() + depth_;
  std::map<ReducedWord, Rational> values;
  for (const ReducedWord& u : reduced_words_of_length(rank_, depth)) {
    // For x in [u], g.x is determined to depth_ letters by u.
    values.emplace(u, value(multiply(g, u).prefix(depth_)));
  }
  return CylinderFunction(rank_, depth, std::move(values), fill_);
}

std::string CylinderFunction::description() const {
  return "cylinder-function(depth " + std::to_string(depth_) + ")";
}

CylinderFunction operator*(const CylinderFunction& f, const CylinderFunction& g) {
  if (f.rank() != g.rank()) throw Error("rank mismatch");
  const std::size_t depth = std::max(f.depth(), g.depth());
  const CylinderFunction lf = f.lifted(depth);
  const CylinderFunction lg = g.lifted(depth);
  if (depth == 0)
    return CylinderFunction::constant(f.rank(), lf.fill_ * lg.fill_);
  std::map<ReducedWord, Rational> values;
  for (const ReducedWord& u : reduced_words_of_length(f.rank(), depth)) {
    Rational v = lf.value(u) * lg.value(u);
    v.canonicalize();
    values.emplace(u, std::move(v));
  }
  return CylinderFunction::from_values(f.rank(), depth, std::move(values));
}

CylinderFunction operator-(const CylinderFunction& f, const CylinderFunction& g) {
  if (f.rank() != g.rank()) throw Error("rank mismatch");
  const std::size_t depth = std::max(f.depth(), g.depth());
  const CylinderFunction lf = f.lifted(depth);
  const CylinderFunction lg = g.lifted(depth);
  if (depth == 0)
    return CylinderFunction::constant(f.rank(), lf.fill_ - lg.fill_);
  std::map<ReducedWord, Rational> values;
  for (const ReducedWord& u : reduced_words_of_length(f.rank(), depth)) {
    Rational v = lf.value(u) - lg.value(u);
    v.canonicalize();
    values.emplace(u, std::move(v));
  }
  return CylinderFunction::from_values(f.rank(), depth, std::move(values));
}

Rational poisson_eval(const CylinderFunction& f, const CylinderMeasure& nu,
                      const ReducedWord& g) {
  if (f.rank() != nu.rank() || f.rank() != g.rank()) throw Error("rank mismatch");
  const CylinderMeasure pushed = nu.translated(g);
  if (f.depth() == 0) return f.value(ReducedWord(f.rank()));
  Rational total(0);
  for (const ReducedWord& u : reduced_words_of_length(f.rank(), f.depth())) {
    total += f.value(u) * pushed.mass(Cylinder{u});
  }
  total.canonicalize();
  return total;
}

}  // namespace compactlab
