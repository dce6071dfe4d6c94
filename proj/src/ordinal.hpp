#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ahg::card {

// Ordinal below w^w in Cantor normal form: sum of w^exp * coeff with exponents
// strictly descending and coefficients >= 1. Empty term list is 0.
struct OrdinalIndex {
  struct Term {
    uint32_t exp;
    uint64_t coeff;
    auto operator<=>(const Term&) const = default;
  };
  std::vector<Term> terms;

  static OrdinalIndex finite(uint64_t n);
  // Text form used by the CLI and JSON: "0", "3", "w", "w*2+3", "w^2*5+w+1".
  static OrdinalIndex parse(const std::string& s);
  std::string str() const;

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const { return terms.empty() || terms.front().exp == 0; }
  uint64_t constant() const;              // coefficient of w^0
  OrdinalIndex limit_part() const;        // terms with exp >= 1
  OrdinalIndex plus_finite(uint64_t n) const;

  std::strong_ordering operator<=>(const OrdinalIndex& o) const;
  bool operator==(const OrdinalIndex& o) const { return terms == o.terms; }
};

// The aleph with the given index. aleph:0 is the least infinite cardinal.
struct Cardinal {
  OrdinalIndex index;

  static Cardinal parse(const std::string& s);  // "aleph:w+1"
  std::string str() const;
  std::strong_ordering operator<=>(const Cardinal& o) const { return index <=> o.index; }
  bool operator==(const Cardinal& o) const { return index == o.index; }
};

// Finite depth value or the distinguished infinite depth.
struct Depth {
  bool infinite = false;
  uint32_t value = 0;

  static Depth inf() { return Depth{true, 0}; }
  static Depth of(uint32_t v) { return Depth{false, v}; }
  static Depth parse(const std::string& s);
  std::string str() const;
  bool operator==(const Depth& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

// An assumed value of the continuum: 2^{aleph_0} = aleph_gamma. Invalid gammas
// (0, or limits below w^w, which all have countable cofinality) are rejected
// unless explicitly overridden.
struct ContinuumSetting {
  OrdinalIndex gamma;
  bool allow_invalid = false;
};

bool validate_setting(const ContinuumSetting& s);

// kappa^{+n}: n-fold cardinal successor.
Cardinal succ_iter(const Cardinal& kappa, uint64_t n);

std::strong_ordering compare(const Cardinal& a, const Cardinal& b);

// Least kappa with kappa^{+(e-1)} >= x. Requires e >= 1.
Cardinal least_chi(uint64_t e, const Cardinal& x);

// Whether a hypergraph of the given depth has chromatic number <= kappa under
// the setting. Infinite depth is always within bound.
bool chi_le(const Depth& delta, const Cardinal& kappa, const ContinuumSetting& s);

// Least infinite kappa with chi_le true.
Cardinal infinite_chromatic(const Depth& delta, const ContinuumSetting& s);

// Least finite m with index(kappa) + m >= gamma; nullopt when no finite m works.
std::optional<uint64_t> least_m_reaching(const Cardinal& kappa, const OrdinalIndex& gamma);

}  // namespace ahg::card
