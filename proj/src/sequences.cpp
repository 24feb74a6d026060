#include "compactlab/sequences.hpp"

#include <set>

namespace compactlab {

SequenceSpec SequenceSpec::powers(const ReducedWord& g) {
  if (g.is_identity()) throw Error("powers of the identity are not injective");
  return SequenceSpec(Variant(Powers{g}));
}

SequenceSpec SequenceSpec::prefixes(const BoundaryPoint& x) {
  return SequenceSpec(Variant(Prefixes{x}));
}

SequenceSpec SequenceSpec::prefix_inverses(const BoundaryPoint& x) {
  return SequenceSpec(Variant(PrefixInverses{x}));
}

SequenceSpec SequenceSpec::explicit_list(std::vector<ReducedWord> words) {
  if (words.empty()) throw Error("explicit sequence must be nonempty");
  std::set<ReducedWord> seen;
  for (const auto& w : words) {
    require_same_rank(w, words.front());
    if (!seen.insert(w).second)
      throw Error("explicit sequence must be injective; '" + w.str() + "' repeats");
  }
  return SequenceSpec(Variant(Explicit{std::move(words)}));
}

SequenceSpec SequenceSpec::right_translate(SequenceSpec base, const ReducedWord& g) {
  if (base.rank() != g.rank()) throw Error("rank mismatch");
  return SequenceSpec(Variant(
      RightTranslate{std::make_shared<const SequenceSpec>(std::move(base)), g}));
}

int SequenceSpec::rank() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Powers>) return s.g.rank();
        if constexpr (std::is_same_v<T, Prefixes> || std::is_same_v<T, PrefixInverses>)
          return s.x.rank();
        if constexpr (std::is_same_v<T, Explicit>) return s.words.front().rank();
        if constexpr (std::is_same_v<T, RightTranslate>) return s.g.rank();
      },
      v_);
}

ReducedWord SequenceSpec::element(int n) const {
  if (n < 1) throw Error("sequence index starts at 1");
  return std::visit(
      [n](const auto& s) -> ReducedWord {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Powers>) {
          ReducedWord w(s.g.rank());
          for (int i = 0; i < n; ++i) w = multiply(w, s.g);
          return w;
        }
        if constexpr (std::is_same_v<T, Prefixes>) {
          return s.x.prefix_word(static_cast<std::size_t>(n));
        }
        if constexpr (std::is_same_v<T, PrefixInverses>) {
          return s.x.prefix_word(static_cast<std::size_t>(n)).inverse();
        }
        if constexpr (std::is_same_v<T, Explicit>) {
          if (static_cast<std::size_t>(n) > s.words.size())
            throw Error("index beyond explicit sequence");
          return s.words[static_cast<std::size_t>(n) - 1];
        }
        if constexpr (std::is_same_v<T, RightTranslate>) {
          return multiply(s.base->element(n), s.g);
        }
      },
      v_);
}

std::optional<ReducedWord> SequenceSpec::powers_generator() const {
  if (const auto* p = std::get_if<Powers>(&v_)) return p->g;
  return std::nullopt;
}

int SequenceSpec::effective_horizon(int requested) const {
  return std::visit(
      [requested](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Explicit>)
          return std::min(requested, static_cast<int>(s.words.size()));
        else if constexpr (std::is_same_v<T, RightTranslate>)
          return s.base->effective_horizon(requested);
        else
          return requested;
      },
      v_);
}

std::string SequenceSpec::str() const {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Powers>) return "powers:" + s.g.str();
        if constexpr (std::is_same_v<T, Prefixes>) return "prefixes:" + s.x.str();
        if constexpr (std::is_same_v<T, PrefixInverses>)
          return "prefix-inverses:" + s.x.str();
        if constexpr (std::is_same_v<T, Explicit>) {
          std::string out = "explicit:";
          for (std::size_t i = 0; i < s.words.size(); ++i) {
            if (i) out += ",";
            out += s.words[i].str();
          }
          return out;
        }
        if constexpr (std::is_same_v<T, RightTranslate>)
          return "rtrans:" + s.base->str() + ";" + s.g.str();
      },
      v_);
}

SequenceSpec SequenceSpec::parse(std::string_view text, int rank) {
  auto starts_with = [&](std::string_view prefix) {
    return text.substr(0, prefix.size()) == prefix;
  };
  if (starts_with("powers:"))
    return powers(ReducedWord::parse(text.substr(7), rank));
  if (starts_with("prefixes:"))
    return prefixes(BoundaryPoint::parse(text.substr(9), rank));
  if (starts_with("prefix-inverses:"))
    return prefix_inverses(BoundaryPoint::parse(text.substr(16), rank));
  if (starts_with("explicit:")) {
    std::string_view rest = text.substr(9);
    std::vector<ReducedWord> words;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      words.push_back(ReducedWord::parse(rest.substr(0, comma), rank));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return explicit_list(std::move(words));
  }
  if (starts_with("rtrans:")) {
    std::string_view rest = text.substr(7);
    auto semi = rest.rfind(';');
    if (semi == std::string_view::npos)
      throw Error("rtrans needs ';<word>' suffix: '" + std::string(text) + "'");
    return right_translate(parse(rest.substr(0, semi), rank),
                           ReducedWord::parse(rest.substr(semi + 1), rank));
  }
  throw Error("unknown sequence spec '" + std::string(text) + "'", 0);
}

}  // namespace compactlab
