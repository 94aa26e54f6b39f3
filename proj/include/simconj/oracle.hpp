#pragma once

// Brute-force orbit counts for simultaneous conjugation on G^n and on the
// commuting tuples G^(n). Independent of the class-equation machinery: it only
// uses the multiplication table.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "simconj/group_table.hpp"

namespace simconj {

inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;

enum class TupleMode { all_tuples, commuting_tuples };

std::string_view tuple_mode_name(TupleMode m);

struct OrbitCount {
  std::string group;
  std::size_t n = 0;
  TupleMode mode = TupleMode::all_tuples;
  std::uint64_t count = 0;
  std::uint64_t tuples_visited = 0;
  // conjugations applied by the union-find pass: tuples * generators * n
  std::uint64_t work = 0;

  // "group=<label> mode=<mode> n=<n> count=<c> tuples=<t> work=<w>"
  std::string record() const;
};

// Throws TupleCapExceeded if |G|^n exceeds the cap.
OrbitCount alpha_brute(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap = kDefaultTupleCap);
OrbitCount beta_brute(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap = kDefaultTupleCap);

// Commuting n-tuples encoded base |G| (first coordinate most significant), ascending.
// The first draws each coordinate from the centralizer of the prefix; the
// second filters all of G^n and exists to cross-check it.
std::vector<std::uint64_t> commuting_tuples(const GroupTable& g, std::size_t n,
                                            std::uint64_t tuple_cap = kDefaultTupleCap);
std::vector<std::uint64_t> commuting_tuples_filtered(const GroupTable& g, std::size_t n,
                                                     std::uint64_t tuple_cap = kDefaultTupleCap);

struct BenchRow {
  std::string strategy;
  std::string group;
  std::size_t order = 0;
  std::size_t n = 0;
  std::string count;
  std::uint64_t nanos = 0;
  std::uint64_t work = 0;
};

inline constexpr const char* kBenchCsvHeader = "strategy,group,order,n,count,nanos,work";
std::string to_csv(const BenchRow& row);

// Strategies, each reporting its own work metric:
//   class_data             class BFS plus one centralizer per class (|G| * (gens + classes))
//   burnside_sum           alpha_n from the per-element centralizer orders (|G| terms)
//   centralizer_recursion  beta_n via the centralizer recursion (elements touched across nodes)
//   brute_alpha            union-find over G^n (|G|^n * gens * n conjugations)
//   brute_beta             union-find over G^(n)
std::vector<BenchRow> bench_group(const GroupTable& g, std::size_t n, std::uint64_t tuple_cap = kDefaultTupleCap);

}  // namespace simconj
