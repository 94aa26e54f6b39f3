#include "simconj/family_id.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace simconj {

namespace {

constexpr std::array<std::string_view, 17> kNames = {
    "abelian", "Phi2",   "Phi3",   "Phi4",   "Phi5",   "Phi6",   "Phi7",   "Phi8",  "Phi9",
    "Phi10",   "Gamma2", "Gamma3", "Gamma4", "Gamma5", "Gamma6", "Gamma7", "Gamma8",
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view family_name(Family f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  const std::string want = lower(name);
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (lower(kNames[i]) == want) return static_cast<Family>(i);
  }
  return std::nullopt;
}

bool is_gamma(Family f) { return f >= Family::gamma2; }

bool is_phi(Family f) { return f >= Family::phi2 && f <= Family::phi10; }

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (std::size_t i = 0; i < kNames.size(); ++i) v.push_back(static_cast<Family>(i));
    return v;
  }();
  return all;
}

std::vector<Family> families_for_prime(int p) {
  std::vector<Family> out{Family::abelian};
  for (Family f : all_families()) {
    if ((p == 2 && is_gamma(f)) || (p != 2 && is_phi(f))) out.push_back(f);
  }
  return out;
}

}  // namespace simconj
