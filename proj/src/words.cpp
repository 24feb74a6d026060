#include "compactlab/words.hpp"

#include <algorithm>

namespace compactlab {

Letter Letter::from_char(char c, int rank) {
  if (c >= 'a' && c <= 'z') {
    int gen = c - 'a';
    if (gen >= rank) throw Error(std::string("letter '") + c + "' exceeds rank");
    return Letter{static_cast<std::uint8_t>(gen), +1};
  }
  if (c >= 'A' && c <= 'Z') {
    int gen = c - 'A';
    if (gen >= rank) throw Error(std::string("letter '") + c + "' exceeds rank");
    return Letter{static_cast<std::uint8_t>(gen), -1};
  }
  throw Error(std::string("invalid letter '") + c + "'");
}

int ReducedWord::check_rank(int rank) {
  if (rank < 1 || rank > 26) throw Error("rank must be in [1, 26]");
  return rank;
}

ReducedWord::ReducedWord(std::vector<Letter> reduced_letters, int rank)
    : letters_(std::move(reduced_letters)), rank_(check_rank(rank)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].generator >= rank_) throw Error("letter exceeds rank");
    if (i + 1 < letters_.size() && letters_[i].cancels(letters_[i + 1]))
      throw Error("letter sequence is not reduced");
  }
}

ReducedWord ReducedWord::reduce(std::span<const Letter> letters, int rank) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter& l : letters) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return ReducedWord(std::move(stack), rank);
}

ReducedWord ReducedWord::parse(std::string_view text, int rank) {
  ReducedWord id(rank);
  if (text.empty() || text == "1") return id;
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    try {
      letters.push_back(Letter::from_char(text[i], rank));
    } catch (const Error& e) {
      throw Error(std::string(e.what()) + " in word '" + std::string(text) + "'",
                  static_cast<long>(i));
    }
  }
  return reduce(letters, rank);
}

ReducedWord ReducedWord::inverse() const {
  std::vector<Letter> out(letters_.size());
  std::transform(letters_.rbegin(), letters_.rend(), out.begin(),
                 [](const Letter& l) { return l.inverse(); });
  return ReducedWord(std::move(out), rank_);
}

ReducedWord ReducedWord::subword(std::size_t begin, std::size_t end) const {
  if (begin > end || end > letters_.size()) throw Error("subword range out of bounds");
  return ReducedWord(std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end),
                     rank_);
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (const Letter& l : letters_) s.push_back(l.to_char());
  return s;
}

std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.letters_.size(); ++i) {
    if (auto c = a.letters_[i] <=> b.letters_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void require_same_rank(const ReducedWord& a, const ReducedWord& b) {
  if (a.rank() != b.rank()) throw Error("rank mismatch");
}

ReducedWord multiply(const ReducedWord& g, const ReducedWord& h) {
  require_same_rank(g, h);
  const auto& gl = g.letters();
  const auto& hl = h.letters();
  std::size_t k = 0;
  while (k < gl.size() && k < hl.size() && gl[gl.size() - 1 - k].cancels(hl[k])) ++k;
  std::vector<Letter> out;
  out.reserve(gl.size() + hl.size() - 2 * k);
  out.insert(out.end(), gl.begin(), gl.end() - k);
  out.insert(out.end(), hl.begin() + k, hl.end());
  return ReducedWord(std::move(out), g.rank());
}

ReducedWord concat_reduced(const ReducedWord& g, const ReducedWord& h) {
  require_same_rank(g, h);
  if (!g.is_identity() && !h.is_identity() && g.last().cancels(h.first()))
    throw Error("concatenation cancels at the seam");
  std::vector<Letter> out;
  out.reserve(g.length() + h.length());
  out.insert(out.end(), g.letters().begin(), g.letters().end());
  out.insert(out.end(), h.letters().begin(), h.letters().end());
  return ReducedWord(std::move(out), g.rank());
}

std::size_t common_prefix_length(const ReducedWord& g, const ReducedWord& h) {
  require_same_rank(g, h);
  std::size_t n = std::min(g.length(), h.length());
  std::size_t i = 0;
  while (i < n && g.letter(i) == h.letter(i)) ++i;
  return i;
}

std::size_t gromov_product(const ReducedWord& g, const ReducedWord& h) {
  require_same_rank(g, h);
  std::size_t cross = multiply(g.inverse(), h).length();
  return (g.length() + h.length() - cross) / 2;
}

std::vector<ReducedWord> reduced_words_of_length(int rank, std::size_t len) {
  std::vector<Letter> alphabet;
  for (int gen = 0; gen < rank; ++gen) {
    alphabet.push_back(Letter{static_cast<std::uint8_t>(gen), +1});
    alphabet.push_back(Letter{static_cast<std::uint8_t>(gen), -1});
  }
  std::vector<ReducedWord> out;
  std::vector<Letter> current;
  auto rec = [&](auto&& self) -> void {
    if (current.size() == len) {
      out.emplace_back(current, rank);
      return;
    }
    for (const Letter& l : alphabet) {
      if (!current.empty() && current.back().cancels(l)) continue;
      current.push_back(l);
      self(self);
      current.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<ReducedWord> ball(int rank, std::size_t radius) {
  std::vector<ReducedWord> out;
  for (std::size_t r = 0; r <= radius; ++r) {
    auto sphere = reduced_words_of_length(rank, r);
    out.insert(out.end(), sphere.begin(), sphere.end());
  }
  return out;
}

}  // namespace compactlab
