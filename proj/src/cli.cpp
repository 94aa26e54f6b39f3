#include "simconj/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "simconj/analysis.hpp"
#include "simconj/closed_forms.hpp"
#include "simconj/families.hpp"
#include "simconj/genfun.hpp"
#include "simconj/group_spec.hpp"
#include "simconj/isoclinism.hpp"
#include "simconj/oracle.hpp"

namespace simconj {

namespace {

using nlohmann::json;

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, std::size_t jobs, const std::function<void(std::size_t)>& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

json group_json(const GroupTable& g) { return json{{"label", g.label()}, {"order", g.order()}}; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> series_strings(const RationalGF& f, std::size_t terms) {
  std::vector<std::string> out;
  for (const auto& c : f.series(terms)) out.push_back(rational_to_string(c));
  return out;
}

struct GenfunArgs {
  std::string spec;
  std::string which = "both";
  bool normalized = false;
  bool partial = false;
  std::size_t coefficients = 0;
};

int cmd_genfun(const GenfunArgs& a, bool as_json, std::ostream& out) {
  const GroupTable g = resolve_group(a.spec);
  json results = json::object();
  std::vector<std::pair<std::string, RationalGF>> fs;
  if (a.which == "A" || a.which == "both") fs.emplace_back("A", a_of_t(g));
  if (a.which == "B" || a.which == "both") fs.emplace_back("B", b_of_t(g));
  if (!as_json) out << "group " << g.label() << " (order " << g.order() << ")\n";
  for (auto& [name, f] : fs) {
    if (a.normalized) f = normalize(f, g.order());
    const std::string var = a.normalized ? "(t/|G|)" : "(t)";
    json r{{"serialized", f.serialize()}, {"rational", f.to_json()}, {"display", f.display()}};
    if (!as_json) out << name << var << " = " << f.display() << "\n";
    if (a.partial) {
      const PartialFractions pf = partial_fractions(f);
      r["partial_fractions"] = pf.to_json();
      if (!as_json) out << name << var << " = " << pf.display() << "  [partial fractions]\n";
    }
    if (a.coefficients) {
      const auto cs = series_strings(f, a.coefficients);
      r["coefficients"] = cs;
      if (!as_json) out << (name == "A" ? "alpha" : "beta") << "_0.." << a.coefficients - 1 << ": " << join(cs, " ") << "\n";
    }
    results[name] = r;
  }
  if (as_json) {
    json doc{{"command", "genfun"}, {"group", group_json(g)}, {"normalized", a.normalized}, {"results", results}};
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_verify_table(const std::vector<int>& primes, std::size_t jobs, bool as_json, std::ostream& out) {
  const auto rows = verify_table(primes, jobs);
  bool ok = true;
  json checks = json::array();
  for (const auto& r : rows) {
    ok = ok && r.passed();
    json c{{"family", family_name(r.family)}, {"p", r.p}, {"order", r.order}, {"A", r.a_ok}, {"B", r.b_ok}, {"pass", r.passed()}};
    if (!r.error.empty()) c["error"] = r.error;
    if (!r.a_ok && r.a_got) c["A_mismatch"] = {{"expected", r.a_want->serialize()}, {"actual", r.a_got->serialize()}};
    if (!r.b_ok && r.b_got) c["B_mismatch"] = {{"expected", r.b_want->serialize()}, {"actual", r.b_got->serialize()}};
    checks.push_back(c);
    if (!as_json) {
      out << (r.passed() ? "PASS " : "FAIL ") << family_name(r.family) << " p=" << r.p << " |G|=" << r.order
          << " A " << (r.a_ok ? "ok" : "mismatch") << ", B " << (r.b_ok ? "ok" : "mismatch");
      if (!r.error.empty()) out << " (" << r.error << ")";
      out << "\n";
      if (!r.a_ok && r.a_got) out << "  A expected " << r.a_want->display() << "\n  A actual   " << r.a_got->display() << "\n";
      if (!r.b_ok && r.b_got) out << "  B expected " << r.b_want->display() << "\n  B actual   " << r.b_got->display() << "\n";
    }
  }
  // Families that the table lists together must produce identical rows.
  for (int p : primes) {
    if (p == 2) continue;
    for (auto [x, y] : {std::pair{Family::phi3, Family::phi4}, std::pair{Family::phi7, Family::phi8}}) {
      const TableCheck* rx = nullptr;
      const TableCheck* ry = nullptr;
      for (const auto& r : rows) {
        if (r.p == p && r.family == x) rx = &r;
        if (r.p == p && r.family == y) ry = &r;
      }
      const bool same = rx && ry && rx->a_got && ry->a_got && *rx->a_got == *ry->a_got && *rx->b_got == *ry->b_got;
      ok = ok && same;
      const std::string name = std::string(family_name(x)) + "=" + std::string(family_name(y));
      checks.push_back(json{{"identity", name}, {"p", p}, {"pass", same}});
      if (!as_json) out << (same ? "PASS " : "FAIL ") << name << " p=" << p << " normalized A and B coincide\n";
    }
  }
  if (as_json) {
    out << json{{"command", "verify-table"}, {"primes", primes}, {"checks", checks}, {"pass", ok}}.dump(2) << "\n";
  } else {
    out << (ok ? "all rows reproduced\n" : "some rows FAILED\n");
  }
  return ok ? 0 : 1;
}

int cmd_equiv(const std::string& s1, const std::string& s2, const std::string& mode, const std::string& expect, bool as_json,
              std::ostream& out) {
  const GroupTable g = resolve_group(s1);
  const GroupTable h = resolve_group(s2);
  bool verdict = false;
  bool checks_ok = true;
  json detail = json::object();
  if (mode == "A") {
    verdict = a_equivalent(g, h);
    const bool same_ce = conjugacy_data(g).class_equation == conjugacy_data(h).class_equation;
    detail["class_equations_equal"] = same_ce;
    checks_ok = same_ce == verdict;
  } else if (mode == "B") {
    verdict = b_equivalent(g, h);
  } else {
    const auto w = are_isoclinic(g, h);
    verdict = w.has_value();
    if (w) {
      const bool valid = verify_witness(g, h, *w);
      detail["witness"] = {{"theta", w->theta}, {"phi", w->phi}, {"verified", valid}};
      checks_ok = valid;
    }
  }
  if (!expect.empty()) checks_ok = checks_ok && (verdict == (expect == "true"));
  if (as_json) {
    json doc{{"command", "equiv"}, {"mode", mode}, {"groups", {group_json(g), group_json(h)}}, {"equivalent", verdict},
             {"detail", detail}, {"pass", checks_ok}};
    out << doc.dump(2) << "\n";
  } else {
    out << g.label() << " and " << h.label() << (verdict ? " are " : " are not ")
        << (mode == "isoclinic" ? "isoclinic" : mode + "-equivalent") << "\n";
    if (detail.contains("class_equations_equal")) {
      out << "class equations " << (detail["class_equations_equal"].get<bool>() ? "equal" : "differ") << "\n";
    }
    if (detail.contains("witness")) {
      out << "witness: theta on " << detail["witness"]["theta"].size() << " cosets, phi on "
          << detail["witness"]["phi"].size() << " elements, diagram "
          << (detail["witness"]["verified"].get<bool>() ? "verified" : "FAILED") << "\n";
    }
    if (!expect.empty()) out << "expected " << expect << ": " << (checks_ok ? "ok" : "MISMATCH") << "\n";
  }
  return checks_ok ? 0 : 1;
}

int cmd_oracle(const std::string& spec, std::size_t n_max, std::uint64_t cap, bool as_json, std::ostream& out) {
  const GroupTable g = resolve_group(spec);
  const auto a = a_of_t(g).series(n_max + 1);
  const auto b = b_of_t(g).series(n_max + 1);
  bool ok = true;
  json rows = json::array();
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (TupleMode mode : {TupleMode::all_tuples, TupleMode::commuting_tuples}) {
      const Rational& expected = mode == TupleMode::all_tuples ? a[n] : b[n];
      json row{{"n", n}, {"mode", tuple_mode_name(mode)}, {"genfun", rational_to_string(expected)}};
      try {
        const OrbitCount c = mode == TupleMode::all_tuples ? alpha_brute(g, n, cap) : beta_brute(g, n, cap);
        const bool match = Rational(std::to_string(c.count)) == expected;
        ok = ok && match;
        row["brute"] = c.count;
        row["work"] = c.work;
        row["match"] = match;
        if (!as_json) out << c.record() << " genfun=" << rational_to_string(expected) << (match ? " match" : " MISMATCH") << "\n";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::tuple_cap_exceeded) throw;
        row["skipped"] = e.what();
        if (!as_json) out << "group=" << g.label() << " mode=" << tuple_mode_name(mode) << " n=" << n << " skipped (" << e.what() << ")\n";
      }
      rows.push_back(row);
    }
  }
  if (as_json) out << json{{"command", "oracle"}, {"group", group_json(g)}, {"rows", rows}, {"pass", ok}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

int cmd_bench(std::vector<std::string> groups, std::size_t n_max, const std::string& csv_path, std::size_t jobs,
              std::ostream& out) {
  if (groups.empty()) groups = {"S3", "D8", "Q8", "D16", "SL(2,3)", "Heis27", "D32", "Gamma5a1"};
  std::vector<std::vector<BenchRow>> cells(groups.size() * n_max);
  parallel_for(cells.size(), jobs, [&](std::size_t i) {
    const GroupTable g = resolve_group(groups[i / n_max]);
    cells[i] = bench_group(g, i % n_max + 1);
  });
  bool ok = true;
  std::ostringstream csv;
  csv << kBenchCsvHeader << "\n";
  for (const auto& cell : cells) {
    std::map<std::string, std::string> counts;
    for (const auto& row : cell) {
      csv << to_csv(row) << "\n";
      counts[row.strategy] = row.count;
    }
    if (counts["brute_alpha"] != "skipped") ok = ok && counts["brute_alpha"] == counts["burnside_sum"];
    if (counts["brute_beta"] != "skipped") ok = ok && counts["brute_beta"] == counts["centralizer_recursion"];
  }
  out << csv.str();
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw Error(ErrorKind::parse_error, "cannot write " + csv_path);
    f << csv.str();
  }
  return ok ? 0 : 1;
}

int cmd_certify(const std::string& spec_arg, bool as_json, std::ostream& out) {
  const json spec = load_group_spec(spec_arg);
  GroupTable g;
  if (spec.value("kind", "") == "cayley") {
    // Certify reports on broken tables instead of refusing them.
    const auto rows = spec.at("table").get<std::vector<std::vector<int>>>();
    const std::size_t n = rows.size();
    std::vector<Elem> flat;
    for (const auto& r : rows) {
      if (r.size() != n) throw Error(ErrorKind::not_a_group, "table is not square");
      for (int v : r) {
        if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(ErrorKind::not_a_group, "entry out of range");
        flat.push_back(static_cast<Elem>(v));
      }
    }
    std::vector<Elem> gens;
    for (std::size_t x = 1; x < n; ++x) gens.push_back(static_cast<Elem>(x));
    g = GroupTable::from_raw(n, std::move(flat), std::move(gens), spec.value("label", "cayley"));
  } else {
    g = build_group(spec);
  }
  const CertificateReport report = certify(g);
  auto status = [](CheckResult::Status s) {
    return s == CheckResult::Status::pass ? "pass" : (s == CheckResult::Status::fail ? "fail" : "skipped");
  };
  if (as_json) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"status", status(c.status)}, {"detail", c.detail}});
    out << json{{"command", "certify"}, {"group", group_json(g)}, {"checks", checks}, {"pass", report.passed()}}.dump(2) << "\n";
  } else {
    out << "group " << g.label() << " (order " << g.order() << ")\n";
    for (const auto& c : report.checks) {
      out << "  " << c.name << ": " << status(c.status);
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
  }
  return report.passed() ? 0 : 1;
}

int cmd_info(const std::string& spec, int p, bool as_json, std::ostream& out) {
  const GroupTable g = resolve_group(spec);
  const ClassData data = conjugacy_data(g);
  json doc{{"command", "info"}, {"group", group_json(g)}};
  doc["class_number"] = data.class_number();
  doc["class_equation"] = data.class_equation;
  json hist = json::object();
  for (auto [m, z] : data.z_histogram) hist[std::to_string(m)] = z;
  doc["z_histogram"] = hist;
  doc["center_order"] = center(g).order();
  doc["derived_order"] = derived_subgroup(g).order();
  const auto cls = nilpotency_class(g);
  doc["nilpotency_class"] = cls ? json(*cls) : json(nullptr);
  doc["ac_group"] = is_ac_group(g);
  doc["stem_order"] = stem_order(g);
  if (p > 0 && prime_power_exponent(g.order(), p).value_or(0) >= 4) {
    const auto prof = maximal_class_profile(g, p);
    doc["maximal_class"] = {{"is_maximal_class", prof.is_maximal_class},
                            {"has_abelian_maximal_subgroup", prof.has_abelian_maximal_subgroup},
                            {"P1_P3_commute", prof.p1_p3_commute},
                            {"degree_of_commutativity_positive", prof.degree_of_commutativity_positive}};
  }
  if (as_json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : doc.items()) {
      if (key != "command") out << key << ": " << value.dump() << "\n";
    }
  }
  return 0;
}

}  // namespace

std::vector<TableCheck> verify_table(const std::vector<int>& primes, std::size_t jobs) {
  for (int p : primes) {
    if (p != 2 && p != 3 && p != 5) {
      throw Error(ErrorKind::invalid_parameters, "p = " + std::to_string(p) + " is outside {2, 3, 5} (order cap)");
    }
  }
  std::vector<TableCheck> rows;
  for (int p : primes) {
    for (Family f : families_for_prime(p)) {
      TableCheck r;
      r.family = f;
      r.p = p;
      rows.push_back(std::move(r));
    }
  }
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    TableCheck& r = rows[i];
    try {
      const auto g = stem_group(r.family, r.p);
      r.order = g->order();
      const GfPair want = table_row(r.family, r.p);
      r.a_got = normalize(a_of_t(*g), g->order());
      r.b_got = normalize(b_of_t(*g), g->order());
      r.a_want = want.a;
      r.b_want = want.b;
      r.a_ok = *r.a_got == want.a;
      r.b_ok = *r.b_got == want.b;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  });
  return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simultaneous-conjugacy generating functions for small finite groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output")->configurable(false);

  GenfunArgs ga;
  auto* genfun = app.add_subcommand("genfun", "Print A(t) and/or B(t) for a group");
  genfun->add_option("spec", ga.spec, "Group spec file, inline JSON, catalog name or Name:p")->required();
  genfun->add_option("--which", ga.which, "A, B or both")->check(CLI::IsMember({"A", "B", "both"}));
  genfun->add_flag("--normalized", ga.normalized, "Substitute t -> t/|G|");
  genfun->add_flag("--partial-fractions", ga.partial, "Also print the partial-fraction form");
  genfun->add_option("--coefficients", ga.coefficients, "Print this many series coefficients");
  genfun->add_flag("--json", as_json);

  std::string primes_arg = "2,3";
  std::size_t jobs = 1;
  auto* verify = app.add_subcommand("verify-table", "Rebuild every stem group and compare with the normalized table");
  verify->add_option("--primes", primes_arg, "Comma-separated primes from {2,3,5}");
  verify->add_option("--jobs", jobs, "Worker threads");
  verify->add_flag("--json", as_json);

  std::string s1, s2, mode = "A", expect;
  auto* equiv = app.add_subcommand("equiv", "A-equivalence, B-equivalence or isoclinism of two groups");
  equiv->add_option("spec1", s1)->required();
  equiv->add_option("spec2", s2)->required();
  equiv->add_option("--mode", mode)->check(CLI::IsMember({"A", "B", "isoclinic"}));
  equiv->add_option("--expect", expect, "Fail unless the verdict is this")->check(CLI::IsMember({"true", "false"}));
  equiv->add_flag("--json", as_json);

  std::string ospec;
  std::size_t n_max = 3;
  std::uint64_t cap = kDefaultTupleCap;
  auto* oracle = app.add_subcommand("oracle", "Brute-force orbit counts against the series coefficients");
  oracle->add_option("spec", ospec)->required();
  oracle->add_option("--n-max", n_max);
  oracle->add_option("--tuple-cap", cap);
  oracle->add_flag("--json", as_json);

  std::vector<std::string> bench_groups;
  std::size_t bench_n = 2;
  std::string csv_path;
  auto* bench = app.add_subcommand("bench", "Compare counting strategies; prints CSV");
  bench->add_option("--groups", bench_groups, "Group specs (default: a fixed catalog subset)");
  bench->add_option("--n-max", bench_n);
  bench->add_option("--csv", csv_path, "Also write the CSV here");
  bench->add_option("--jobs", jobs);

  std::string cspec;
  auto* cert = app.add_subcommand("certify", "Check the group axioms on a table");
  cert->add_option("spec", cspec)->required();
  cert->add_flag("--json", as_json);

  std::string ispec;
  int info_p = 0;
  auto* info = app.add_subcommand("info", "Structural invariants of a group");
  info->add_option("spec", ispec)->required();
  info->add_option("--p", info_p, "Prime for the maximal-class profile");
  info->add_flag("--json", as_json);

  std::vector<std::string> argv_store{"simconj"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*genfun) return cmd_genfun(ga, as_json, out);
    if (*verify) {
      std::vector<int> primes;
      std::stringstream ss(primes_arg);
      for (std::string tok; std::getline(ss, tok, ',');) primes.push_back(std::stoi(tok));
      return cmd_verify_table(primes, jobs, as_json, out);
    }
    if (*equiv) return cmd_equiv(s1, s2, mode, expect, as_json, out);
    if (*oracle) return cmd_oracle(ospec, n_max, cap, as_json, out);
    if (*bench) {
      if (bench_n == 0) throw Error(ErrorKind::invalid_parameters, "--n-max must be at least 1");
      return cmd_bench(bench_groups, bench_n, csv_path, jobs, out);
    }
    if (*cert) return cmd_certify(cspec, as_json, out);
    if (*info) return cmd_info(ispec, info_p, as_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace simconj
