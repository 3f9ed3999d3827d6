#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bincons {

// Exact arithmetic for the whole library. mpq_class keeps every value in
// lowest terms with a positive denominator, which the rest of the code
// relies on for equality tests and for use as map keys.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat ratOf(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool isInt(const Rat& r) { return r.get_den() == 1; }

inline Int ratFloor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ratCeil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// Lowest-terms decimal form: "p" when integral, otherwise "p/q".
inline std::string ratStr(const Rat& r) { return r.get_str(); }

// Accepts "p", "p/q", with an optional leading sign on p. Returns nullopt on
// malformed input or a zero denominator.
inline std::optional<Rat> parseRat(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  auto digits = [&](std::size_t from) {
    std::size_t i = from;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i;
  };
  if (text[pos] == '-') ++pos;
  std::size_t numEnd = digits(pos);
  if (numEnd == pos) return std::nullopt;
  std::size_t denStart = numEnd;
  if (numEnd < text.size()) {
    if (text[numEnd] != '/') return std::nullopt;
    denStart = numEnd + 1;
    std::size_t denEnd = digits(denStart);
    if (denEnd == denStart || denEnd != text.size()) return std::nullopt;
  }
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, std::string(text).c_str(), 10) != 0 ||
      mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    return std::nullopt;
  }
  mpq_canonicalize(q);
  Rat r(q);
  mpq_clear(q);
  return r;
}

}  // namespace bincons
