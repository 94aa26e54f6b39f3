#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simconj {

// Isoclinism families of p-groups up to rank 5. Gamma families are the p = 2
// counterparts of the Phi families.
enum class Family {
  abelian,
  phi2, phi3, phi4, phi5, phi6, phi7, phi8, phi9, phi10,
  gamma2, gamma3, gamma4, gamma5, gamma6, gamma7, gamma8,
};

std::string_view family_name(Family f);
// Accepts "Phi5", "phi5", "Gamma3", "abelian", ...
std::optional<Family> parse_family(std::string_view name);
bool is_gamma(Family f);
bool is_phi(Family f);
const std::vector<Family>& all_families();
// Families checked at prime p: abelian plus Gamma2..Gamma8 for p = 2, Phi2..Phi10 otherwise.
std::vector<Family> families_for_prime(int p);

}  // namespace simconj
