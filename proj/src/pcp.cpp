#include "simconj/pcp.hpp"

#include <algorithm>

namespace simconj {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Smallest prime factor when n is a prime power, 0 otherwise.
int prime_of_power(int n) {
  if (n < 2) return 0;
  int p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

std::vector<int> letters_of(const ExponentVector& w) {
  std::vector<int> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (int c = 0; c < w[k]; ++c) out.push_back(static_cast<int>(k));
  }
  return out;
}

[[noreturn]] void inconsistent(const std::string& what) { throw Error(ErrorKind::inconsistent_presentation, what); }

}  // namespace

PcPresentation::PcPresentation(std::vector<int> orders, int p, std::string name)
    : prime(p), relative_orders(std::move(orders)), label(std::move(name)) {
  const std::size_t d = relative_orders.size();
  power_words.assign(d, ExponentVector(d, 0));
  commutator_words.assign(d * d, ExponentVector(d, 0));
}

std::uint64_t PcPresentation::order() const {
  std::uint64_t n = 1;
  for (int r : relative_orders) n *= static_cast<std::uint64_t>(r);
  return n;
}

ExponentVector PcPresentation::word(std::initializer_list<std::pair<int, int>> letters) const {
  ExponentVector w(size(), 0);
  for (auto [gen, exp] : letters) {
    const auto g = static_cast<std::size_t>(gen);
    const int r = relative_orders.at(g);
    w.at(g) = ((exp % r) + r) % r;
  }
  return w;
}

void PcPresentation::set_power(std::size_t i, ExponentVector w) { power_words.at(i) = std::move(w); }

void PcPresentation::set_commutator(std::size_t j, std::size_t i, ExponentVector w) {
  if (j <= i) inconsistent("commutator words are indexed by j > i");
  commutator_words.at(j * size() + i) = std::move(w);
}

void PcPresentation::validate() const {
  const std::size_t d = size();
  if (d == 0) inconsistent("presentation has no generators");
  if (prime != 0 && !is_prime(prime)) inconsistent("prime field is not prime");
  for (std::size_t i = 0; i < d; ++i) {
    const int r = relative_orders[i];
    const int q = prime_of_power(r);
    if (q == 0) inconsistent("relative order " + std::to_string(r) + " is not a prime power");
    if (prime != 0 && q != prime) inconsistent("relative order " + std::to_string(r) + " is not a power of p");
  }
  if (power_words.size() != d || commutator_words.size() != d * d) inconsistent("word tables have the wrong shape");

  auto check_word = [&](const ExponentVector& w, std::size_t lead, const std::string& what) {
    if (w.size() != d) inconsistent(what + " has wrong length");
    for (std::size_t k = 0; k < d; ++k) {
      if (w[k] < 0 || w[k] >= relative_orders[k]) inconsistent(what + " exponent out of range");
      if (k <= lead && w[k] != 0) inconsistent(what + " is not weight-ordered");
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    check_word(power_words[i], i, "power word " + std::to_string(i));
    for (std::size_t j = i + 1; j < d; ++j) {
      check_word(commutator(j, i), i, "commutator word [" + std::to_string(j) + "," + std::to_string(i) + "]");
    }
  }
}

Collector::Collector(const PcPresentation& pcp, std::size_t rewrite_budget) : pcp_(pcp), budget_(rewrite_budget) {
  const std::size_t d = pcp.size();
  for (std::size_t i = 0; i < d; ++i) power_letters_.push_back(letters_of(pcp.power(i)));
  comm_letters_.resize(d * d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < j; ++i) comm_letters_[j * d + i] = letters_of(pcp.commutator(j, i));
  }
}

void Collector::collect(ExponentVector& x, std::vector<int>& stack) const {
  const std::size_t d = pcp_.size();
  std::size_t steps = 0;
  std::vector<int> pending;
  while (!stack.empty()) {
    const auto i = static_cast<std::size_t>(stack.back());
    stack.pop_back();
    if (++steps > budget_) inconsistent("collection exceeded the rewrite budget");

    // x = prefix * g_i^e_i * tail;  tail * g_i = g_i * tail^{g_i}
    // and g_k^{g_i} = g_k [g_k, g_i].
    pending.clear();
    for (std::size_t k = i + 1; k < d; ++k) {
      const auto& conj = comm_letters_[k * d + i];
      for (int c = 0; c < x[k]; ++c) {
        pending.push_back(static_cast<int>(k));
        pending.insert(pending.end(), conj.begin(), conj.end());
      }
      x[k] = 0;
    }
    if (++x[i] == pcp_.relative_orders[i]) {
      x[i] = 0;
      const auto& pw = power_letters_[i];
      pending.insert(pending.begin(), pw.begin(), pw.end());
    }
    stack.insert(stack.end(), pending.rbegin(), pending.rend());
  }
}

void Collector::times_generator(ExponentVector& x, std::size_t gen) const {
  std::vector<int> stack{static_cast<int>(gen)};
  collect(x, stack);
}

ExponentVector Collector::multiply(const ExponentVector& x, const ExponentVector& y) const {
  ExponentVector out = x;
  auto letters = letters_of(y);
  std::reverse(letters.begin(), letters.end());
  collect(out, letters);
  return out;
}

std::size_t Collector::index_of(const ExponentVector& x) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < x.size(); ++k) idx = idx * static_cast<std::size_t>(pcp_.relative_orders[k]) + static_cast<std::size_t>(x[k]);
  return idx;
}

ExponentVector Collector::exponents_of(std::size_t index) const {
  const std::size_t d = pcp_.size();
  ExponentVector x(d, 0);
  for (std::size_t k = d; k-- > 0;) {
    const auto r = static_cast<std::size_t>(pcp_.relative_orders[k]);
    x[k] = static_cast<int>(index % r);
    index /= r;
  }
  return x;
}

GroupTable build_from_pcp(const PcPresentation& pcp, const PcpOptions& options) {
  pcp.validate();
  const std::uint64_t order64 = pcp.order();
  if (order64 > options.order_cap) {
    throw Error(ErrorKind::closure_exceeds_cap, "presentation order " + std::to_string(order64) + " exceeds cap");
  }
  const auto n = static_cast<std::size_t>(order64);
  const std::size_t d = pcp.size();
  const Collector collector(pcp, options.rewrite_budget);

  // right[x * d + i] = x * g_i
  std::vector<Elem> right(n * d);
  for (std::size_t x = 0; x < n; ++x) {
    const ExponentVector ex = collector.exponents_of(x);
    for (std::size_t i = 0; i < d; ++i) {
      ExponentVector prod = ex;
      collector.times_generator(prod, i);
      right[x * d + i] = static_cast<Elem>(collector.index_of(prod));
    }
  }

  // y = y' * g_k where k is the last generator with a nonzero exponent in y and
  // y' has that exponent lowered by one; y' < y in index order.
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t k = d - 1; k-- > 0;) stride[k] = stride[k + 1] * static_cast<std::size_t>(pcp.relative_orders[k + 1]);
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) table[x * n] = static_cast<Elem>(x);
  for (std::size_t y = 1; y < n; ++y) {
    std::size_t k = d - 1;
    while ((y / stride[k]) % static_cast<std::size_t>(pcp.relative_orders[k]) == 0) --k;
    const std::size_t prev = y - stride[k];
    for (std::size_t x = 0; x < n; ++x) table[x * n + y] = right[table[x * n + prev] * d + k];
  }

  std::vector<Elem> gens;
  for (std::size_t i = 0; i < d; ++i) gens.push_back(static_cast<Elem>(stride[i]));
  GroupTable g = GroupTable::from_raw(n, std::move(table), std::move(gens), pcp.label);
  const auto report = certify(g);
  if (const auto* bad = report.first_failure()) {
    inconsistent("certificate failed (" + bad->name + "): " + bad->detail);
  }
  return g;
}

}  // namespace simconj
