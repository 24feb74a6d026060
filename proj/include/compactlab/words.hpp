#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace compactlab {

// Error type for all precondition violations (rank mismatch, malformed input,
// seam cancellation, ...). Parse errors carry a character position when known.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what, long position = -1)
      : std::runtime_error(what), position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

// One generator or inverse generator of the ambient free group.
struct Letter {
  std::uint8_t generator = 0;  // index in [0, rank)
  std::int8_t sign = 1;        // +1 or -1

  Letter inverse() const { return Letter{generator, static_cast<std::int8_t>(-sign)}; }
  bool cancels(const Letter& other) const {
    return generator == other.generator && sign == -other.sign;
  }
  // a < A < b < B < ...; used for deterministic enumeration and map keys.
  int code() const { return 2 * generator + (sign < 0 ? 1 : 0); }
  char to_char() const {
    return static_cast<char>((sign > 0 ? 'a' : 'A') + generator);
  }
  static Letter from_char(char c, int rank);

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.code() <=> b.code();
  }
};

// An element of the free group F_rank in reduced normal form. Immutable.
class ReducedWord {
 public:
  explicit ReducedWord(int rank = 2) : rank_(check_rank(rank)) {}
  ReducedWord(std::vector<Letter> reduced_letters, int rank);

  // Free reduction of an arbitrary letter sequence (single stack pass).
  static ReducedWord reduce(std::span<const Letter> letters, int rank);
  // Word grammar: "1" or the empty string is the identity, otherwise [a-zA-Z]+
  // subject to the rank bound.
  static ReducedWord parse(std::string_view text, int rank = 2);

  int rank() const { return rank_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter letter(std::size_t i) const { return letters_.at(i); }
  Letter first() const { return letters_.front(); }
  Letter last() const { return letters_.back(); }

  ReducedWord inverse() const;
  // Letters [begin, end); a contiguous piece of a reduced word is reduced.
  ReducedWord subword(std::size_t begin, std::size_t end) const;
  ReducedWord prefix(std::size_t len) const { return subword(0, len); }

  std::string str() const;  // identity renders as "1"

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  // Total order (length, then letter codes); used for map keys and
  // deterministic output only.
  friend std::strong_ordering operator<=>(const ReducedWord& a, const ReducedWord& b);

 private:
  static int check_rank(int rank);
  std::vector<Letter> letters_;
  int rank_;
};

void require_same_rank(const ReducedWord& a, const ReducedWord& b);

ReducedWord multiply(const ReducedWord& g, const ReducedWord& h);
// Concatenation that the caller asserts involves no cancellation at the seam.
ReducedWord concat_reduced(const ReducedWord& g, const ReducedWord& h);

std::size_t common_prefix_length(const ReducedWord& g, const ReducedWord& h);

// (|g| + |h| - |g^-1 h|) / 2; in a free group this is the common prefix length.
std::size_t gromov_product(const ReducedWord& g, const ReducedWord& h);

// All reduced words of exactly the given length, in deterministic letter-code
// order. Count is 2r * (2r-1)^(len-1) for len >= 1.
std::vector<ReducedWord> reduced_words_of_length(int rank, std::size_t len);
// All reduced words of length <= radius.
std::vector<ReducedWord> ball(int rank, std::size_t radius);

}  // namespace compactlab
