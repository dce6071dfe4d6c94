#include "ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "error.hpp"

namespace ahg::card {

OrdinalIndex OrdinalIndex::finite(uint64_t n) {
  OrdinalIndex idx;
  if (n > 0) idx.terms.push_back({0, n});
  return idx;
}

uint64_t OrdinalIndex::constant() const {
  if (terms.empty() || terms.back().exp != 0) return 0;
  return terms.back().coeff;
}

OrdinalIndex OrdinalIndex::limit_part() const {
  OrdinalIndex idx;
  for (const Term& t : terms)
    if (t.exp >= 1) idx.terms.push_back(t);
  return idx;
}

OrdinalIndex OrdinalIndex::plus_finite(uint64_t n) const {
  if (n == 0) return *this;
  OrdinalIndex idx = limit_part();
  idx.terms.push_back({0, constant() + n});
  return idx;
}

std::strong_ordering OrdinalIndex::operator<=>(const OrdinalIndex& o) const {
  size_t m = std::min(terms.size(), o.terms.size());
  for (size_t i = 0; i < m; ++i) {
    if (terms[i].exp != o.terms[i].exp)
      return terms[i].exp <=> o.terms[i].exp;
    if (terms[i].coeff != o.terms[i].coeff)
      return terms[i].coeff <=> o.terms[i].coeff;
  }
  return terms.size() <=> o.terms.size();
}

namespace {

uint64_t parse_nat(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) fail(Errc::parse, "expected number in ordinal: \"" + s + "\"");
  uint64_t v = 0;
  auto res = std::from_chars(s.data() + start, s.data() + pos, v);
  if (res.ec != std::errc()) fail(Errc::parse, "ordinal number out of range: \"" + s + "\"");
  return v;
}

}  // namespace

OrdinalIndex OrdinalIndex::parse(const std::string& s) {
  if (s.empty()) fail(Errc::parse, "empty ordinal");
  OrdinalIndex idx;
  size_t pos = 0;
  while (true) {
    Term t{0, 0};
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      t.exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        uint64_t e = parse_nat(s, pos);
        if (e == 0 || e > 0xffffffffull) fail(Errc::parse, "ordinal exponent out of range");
        t.exp = static_cast<uint32_t>(e);
      }
      t.coeff = 1;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        t.coeff = parse_nat(s, pos);
        if (t.coeff == 0) fail(Errc::parse, "zero coefficient in ordinal");
      }
    } else {
      t.coeff = parse_nat(s, pos);
      t.exp = 0;
      if (t.coeff == 0) {
        // a lone "0" is the empty ordinal; "0" inside a sum is rejected below
        if (!idx.terms.empty() || pos != s.size())
          fail(Errc::parse, "zero term in ordinal sum: \"" + s + "\"");
        return idx;
      }
    }
    if (!idx.terms.empty() && idx.terms.back().exp <= t.exp)
      fail(Errc::parse, "ordinal terms must have strictly descending exponents: \"" + s + "\"");
    idx.terms.push_back(t);
    if (pos == s.size()) break;
    if (s[pos] != '+') fail(Errc::parse, "expected '+' in ordinal: \"" + s + "\"");
    ++pos;
  }
  return idx;
}

std::string OrdinalIndex::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += "+";
    const Term& t = terms[i];
    if (t.exp == 0) {
      out += std::to_string(t.coeff);
    } else {
      out += "w";
      if (t.exp > 1) out += "^" + std::to_string(t.exp);
      if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
    }
  }
  return out;
}

Cardinal Cardinal::parse(const std::string& s) {
  const std::string prefix = "aleph:";
  if (s.rfind(prefix, 0) != 0)
    fail(Errc::parse, "cardinal must look like \"aleph:<ordinal>\": \"" + s + "\"");
  return Cardinal{OrdinalIndex::parse(s.substr(prefix.size()))};
}

std::string Cardinal::str() const { return "aleph:" + index.str(); }

Depth Depth::parse(const std::string& s) {
  if (s == "inf") return Depth::inf();
  size_t pos = 0;
  uint64_t v = parse_nat(s, pos);
  if (pos != s.size()) fail(Errc::parse, "bad depth: \"" + s + "\"");
  if (v > 0xffffffffull) fail(Errc::parse, "depth out of range");
  return Depth::of(static_cast<uint32_t>(v));
}

std::string Depth::str() const { return infinite ? "inf" : std::to_string(value); }

bool validate_setting(const ContinuumSetting& s) {
  if (s.allow_invalid) return true;
  // gamma must be a successor ordinal >= 1: nonzero constant term in CNF.
  return !s.gamma.is_zero() && s.gamma.constant() > 0;
}

Cardinal succ_iter(const Cardinal& kappa, uint64_t n) {
  return Cardinal{kappa.index.plus_finite(n)};
}

std::strong_ordering compare(const Cardinal& a, const Cardinal& b) { return a <=> b; }

Cardinal least_chi(uint64_t e, const Cardinal& x) {
  if (e == 0) fail(Errc::contract, "least_chi requires e >= 1");
  OrdinalIndex limit = x.index.limit_part();
  uint64_t c = x.index.constant();
  uint64_t keep = c > (e - 1) ? c - (e - 1) : 0;
  return Cardinal{limit.plus_finite(keep)};
}

bool chi_le(const Depth& delta, const Cardinal& kappa, const ContinuumSetting& s) {
  if (!validate_setting(s)) fail(Errc::invalid, "invalid continuum setting: gamma=" + s.gamma.str());
  if (delta.infinite) return true;
  return kappa.index.plus_finite(delta.value) >= s.gamma;
}

Cardinal infinite_chromatic(const Depth& delta, const ContinuumSetting& s) {
  if (!validate_setting(s)) fail(Errc::invalid, "invalid continuum setting: gamma=" + s.gamma.str());
  if (delta.infinite) return Cardinal{OrdinalIndex::finite(0)};
  return least_chi(delta.value + 1, Cardinal{s.gamma});
}

std::optional<uint64_t> least_m_reaching(const Cardinal& kappa, const OrdinalIndex& gamma) {
  const OrdinalIndex& alpha = kappa.index;
  if (alpha >= gamma) return 0;
  if (alpha.limit_part() == gamma.limit_part())
    return gamma.constant() - alpha.constant();  // same limit part and alpha < gamma
  return std::nullopt;  // alpha's limit part is below gamma's; no finite step reaches it
}

}  // namespace ahg::card
