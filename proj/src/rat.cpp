#include "rat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "error.hpp"

namespace ahg {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Errc::parse, "empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      fail(Errc::parse, "bad character in rational literal: \"" + s + "\"");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::parse, "unparsable rational: \"" + s + "\"");
  if (q.get_den() == 0) fail(Errc::parse, "zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long rat_height(const Rat& q) {
  Int a = abs(q.get_num());
  Int b = q.get_den();
  Int h = a > b ? a : b;
  if (!h.fits_slong_p()) fail(Errc::budget, "rational height out of range");
  return h.get_si();
}

std::vector<Rat> rats_up_to_height(int h) {
  std::vector<Rat> out;
  for (long hh = 1; hh <= std::max(h, 1); ++hh) {
    std::vector<std::tuple<long, long, long, Rat>> layer;  // (den, |num|, sign)
    for (long p = -hh; p <= hh; ++p) {
      for (long q = 1; q <= hh; ++q) {
        if (std::max(std::abs(p), q) != hh) continue;
        if (std::gcd(std::abs(p), q) != 1) continue;
        layer.push_back({q, std::abs(p), p < 0 ? 1 : 0, Rat(p, q)});
      }
    }
    std::sort(layer.begin(), layer.end(), [](const auto& a, const auto& b) {
      return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
             std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
    });
    for (auto& e : layer) out.push_back(std::get<3>(e));
  }
  return out;
}

uint64_t fnv1a(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  uint64_t h = fnv1a(bytes);
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace ahg
