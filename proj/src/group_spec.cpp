#include "simconj/group_spec.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "simconj/families.hpp"
#include "simconj/pcp.hpp"

namespace simconj {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

void check_fields(const json& spec, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : spec.items()) {
    if (key != "kind" && key != "label" && key != "order_cap" && !allowed.count(key)) {
      parse_fail("unknown field '" + key + "' for kind " + spec.at("kind").get<std::string>());
    }
  }
}

template <class T>
T get(const json& spec, const std::string& key) {
  if (!spec.contains(key)) parse_fail("missing field '" + key + "'");
  try {
    return spec.at(key).get<T>();
  } catch (const json::exception& e) {
    parse_fail("field '" + key + "': " + e.what());
  }
}

BuildOptions options_of(const json& spec) {
  BuildOptions o;
  if (spec.contains("label")) o.label = get<std::string>(spec, "label");
  if (spec.contains("order_cap")) o.order_cap = get<std::size_t>(spec, "order_cap");
  return o;
}

GroupTable build_family(const json& spec) {
  check_fields(spec, {"name", "p", "order", "degree", "invariants", "k"});
  const auto name = get<std::string>(spec, "name");
  GroupTable g;
  if (name == "abelian" && spec.contains("invariants")) {
    g = abelian(get<std::vector<std::size_t>>(spec, "invariants"));
  } else if (name == "abelian" && spec.contains("order")) {
    g = cyclic(get<std::size_t>(spec, "order"));
  } else if (auto fam = parse_family(name)) {
    g = *stem_group(*fam, get<int>(spec, "p"));
  } else if (name == "cyclic" || name == "dihedral" || name == "quaternion" || name == "semidihedral") {
    g = named_group(name, {get<std::size_t>(spec, "order")});
  } else if (name == "symmetric" || name == "alternating") {
    g = named_group(name, {get<std::size_t>(spec, "degree")});
  } else if (name == "elementary_abelian") {
    g = elementary_abelian(get<int>(spec, "p"), get<int>(spec, "k"));
  } else if (const CatalogEntry* e = find_catalog_entry(name)) {
    g = e->build();
  } else {
    parse_fail("unknown family or group name '" + name + "'");
  }
  if (spec.contains("label")) g.set_label(get<std::string>(spec, "label"));
  return g;
}

GroupTable build_pcp(const json& spec) {
  check_fields(spec, {"prime", "relative_orders", "power_words", "commutator_words"});
  PcPresentation pc(get<std::vector<int>>(spec, "relative_orders"), spec.contains("prime") ? get<int>(spec, "prime") : 0,
                    spec.value("label", std::string{}));
  const std::size_t d = pc.size();
  auto word = [&](const json& w, const std::string& what) {
    ExponentVector v;
    try {
      v = w.get<ExponentVector>();
    } catch (const json::exception& e) {
      parse_fail(what + ": " + e.what());
    }
    if (v.size() != d) parse_fail(what + " must have " + std::to_string(d) + " exponents");
    return v;
  };
  if (spec.contains("power_words")) {
    const auto& pw = spec.at("power_words");
    if (!pw.is_array() || pw.size() != d) parse_fail("power_words must list one word per generator");
    for (std::size_t i = 0; i < d; ++i) pc.set_power(i, word(pw[i], "power word " + std::to_string(i)));
  }
  if (spec.contains("commutator_words")) {
    for (const auto& entry : spec.at("commutator_words")) {
      for (const auto& [key, value] : entry.items()) {
        if (key != "j" && key != "i" && key != "word") parse_fail("unknown field '" + key + "' in commutator word");
      }
      const auto j = get<std::size_t>(entry, "j");
      const auto i = get<std::size_t>(entry, "i");
      if (j >= d || i >= j) parse_fail("commutator words need 0 <= i < j < d");
      pc.set_commutator(j, i, word(entry.at("word"), "commutator word"));
    }
  }
  PcpOptions o;
  if (spec.contains("order_cap")) o.order_cap = get<std::size_t>(spec, "order_cap");
  return build_from_pcp(pc, o);
}

}  // namespace

GroupTable build_group(const json& spec) {
  if (!spec.is_object()) parse_fail("a group spec must be a JSON object");
  const auto kind = get<std::string>(spec, "kind");
  if (kind == "permutation") {
    check_fields(spec, {"generators"});
    return build_from_permutations(get<std::vector<Permutation>>(spec, "generators"), options_of(spec));
  }
  if (kind == "cayley") {
    check_fields(spec, {"table"});
    return build_from_cayley(get<std::vector<std::vector<int>>>(spec, "table"), options_of(spec));
  }
  if (kind == "pcp") return build_pcp(spec);
  if (kind == "family") return build_family(spec);
  parse_fail("unknown kind '" + kind + "'");
}

json load_group_spec(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      parse_fail(std::string("inline spec: ") + e.what());
    }
  }
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return json::parse(ss.str());
    } catch (const json::exception& e) {
      parse_fail(arg + ": " + e.what());
    }
  }
  if (find_catalog_entry(arg)) return json{{"kind", "family"}, {"name", arg}};
  const auto colon = arg.find(':');
  if (colon != std::string::npos) {
    const std::string name = arg.substr(0, colon);
    std::size_t value = 0;
    try {
      value = std::stoul(arg.substr(colon + 1));
    } catch (const std::exception&) {
      parse_fail("bad parameter in '" + arg + "'");
    }
    if (parse_family(name)) return json{{"kind", "family"}, {"name", name}, {"p", value}};
    if (name == "symmetric" || name == "alternating") return json{{"kind", "family"}, {"name", name}, {"degree", value}};
    return json{{"kind", "family"}, {"name", name}, {"order", value}};
  }
  parse_fail("'" + arg + "' is not a spec file, inline JSON, catalog name or name:param");
}

GroupTable resolve_group(const std::string& arg) { return build_group(load_group_spec(arg)); }

}  // namespace simconj
