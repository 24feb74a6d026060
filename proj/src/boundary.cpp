#include "compactlab/boundary.hpp"

#include <numeric>

namespace compactlab {

namespace {

// Shortest Q with P = Q^(|P|/|Q|).
ReducedWord primitive_root(const ReducedWord& p) {
  const std::size_t n = p.length();
  for (std::size_t q = 1; q < n; ++q) {
    if (n % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = q; i < n && periodic; ++i) {
      periodic = p.letter(i) == p.letter(i % q);
    }
    if (periodic) return p.prefix(q);
  }
  return p;
}

ReducedWord rotate_right(const ReducedWord& p) {
  std::vector<Letter> out;
  out.reserve(p.length());
  out.push_back(p.last());
  for (std::size_t i = 0; i + 1 < p.length(); ++i) out.push_back(p.letter(i));
  return ReducedWord(std::move(out), p.rank());
}

}  // namespace

BoundaryPoint BoundaryPoint::make(const ReducedWord& prefix, const ReducedWord& period) {
  require_same_rank(prefix, period);
  if (period.is_identity()) throw Error("boundary point needs a nonempty period");
  if (period.length() > 1 && period.first().cancels(period.last()))
    throw Error("seam cancellation: period.period is not reduced");
  if (!prefix.is_identity() && prefix.last().cancels(period.first()))
    throw Error("seam cancellation: prefix.period is not reduced");

  ReducedWord u = prefix;
  ReducedWord p = primitive_root(period);
  // A representation with a shorter prefix exists exactly when the last prefix
  // letter matches the last period letter (the infinite word is then periodic
  // one position earlier, with the period rotated right).
  while (!u.is_identity() && u.last() == p.last()) {
    u = u.prefix(u.length() - 1);
    p = rotate_right(p);
  }
  return BoundaryPoint(std::move(u), std::move(p));
}

BoundaryPoint BoundaryPoint::parse(std::string_view text, int rank) {
  // word(period), with the final parenthesized group as the period; earlier
  // parenthesized groups in the head are expanded literally once.
  auto close = text.rfind(')');
  if (text.empty() || close != text.size() - 1)
    throw Error("boundary point must look like word(period): '" + std::string(text) + "'",
                static_cast<long>(text.size()));
  auto open = text.rfind('(', close);
  if (open == std::string_view::npos)
    throw Error("boundary point must look like word(period): '" + std::string(text) + "'",
                0);
  std::string_view period_text = text.substr(open + 1, close - open - 1);
  if (period_text.empty())
    throw Error("boundary point period must be nonempty", static_cast<long>(open + 1));
  ReducedWord period = ReducedWord::parse(period_text, rank);
  std::string head;
  int nesting = 0;
  for (std::size_t i = 0; i < open; ++i) {
    const char c = text[i];
    if (c == '(') {
      if (++nesting > 1) throw Error("nested parentheses in point", static_cast<long>(i));
      continue;
    }
    if (c == ')') {
      if (--nesting < 0) throw Error("unbalanced parentheses in point", static_cast<long>(i));
      continue;
    }
    head.push_back(c);
  }
  if (nesting != 0)
    throw Error("unbalanced parentheses in point", static_cast<long>(open));
  ReducedWord prefix = ReducedWord::parse(head, rank);
  return make(prefix, period);
}

Letter BoundaryPoint::letter_at(std::size_t i) const {
  if (i < prefix_.length()) return prefix_.letter(i);
  return period_.letter((i - prefix_.length()) % period_.length());
}

ReducedWord BoundaryPoint::prefix_word(std::size_t d) const {
  std::vector<Letter> out;
  out.reserve(d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(letter_at(i));
  return ReducedWord(std::move(out), rank());
}

BoundaryPoint BoundaryPoint::acted_by(const ReducedWord& g) const {
  if (g.rank() != rank()) throw Error("rank mismatch");
  if (g.is_identity()) return *this;
  // Unroll enough periods that cancellation (at most |g| letters) cannot reach
  // past the unrolled part; the tail after it is again period^infinity.
  const std::size_t copies = (g.length() + 1) / period_.length() + 2;
  ReducedWord word = prefix_;
  for (std::size_t i = 0; i < copies; ++i) word = concat_reduced(word, period_);
  ReducedWord head = multiply(g, word);
  return make(head, period_);
}

std::string BoundaryPoint::str() const {
  std::string s = prefix_.is_identity() ? "" : prefix_.str();
  return s + "(" + period_.str() + ")";
}

bool points_equal(const BoundaryPoint& x, const BoundaryPoint& y) {
  if (x.rank() != y.rank()) throw Error("rank mismatch");
  const std::size_t px = x.period().length();
  const std::size_t py = y.period().length();
  const std::size_t depth = std::max(x.prefix().length(), y.prefix().length()) + px + py +
                            std::lcm(px, py);
  for (std::size_t i = 0; i < depth; ++i) {
    if (!(x.letter_at(i) == y.letter_at(i))) return false;
  }
  return true;
}

std::size_t common_prefix_length(const ReducedWord& g, const BoundaryPoint& x) {
  if (g.rank() != x.rank()) throw Error("rank mismatch");
  std::size_t i = 0;
  while (i < g.length() && g.letter(i) == x.letter_at(i)) ++i;
  return i;
}

BoundaryPoint powers_limit(const ReducedWord& g) {
  if (g.is_identity()) throw Error("powers of the identity do not leave finite sets");
  std::size_t i = 0, j = g.length() - 1;
  while (i < j && g.letter(i).cancels(g.letter(j))) {
    ++i;
    --j;
  }
  return BoundaryPoint::make(g.prefix(i), g.subword(i, j + 1));
}

}  // namespace compactlab
