#include <algorithm>
#include <limits>
#include <string>

#include "graphcodes/codes.hpp"
#include "graphcodes/parallel.hpp"

namespace graphcodes {
namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct Candidate {
  std::uint64_t weight = kNone;
  std::vector<Element> word;

  void offer(std::uint64_t w, std::span<const Element> c) {
    if (w < weight) {
      weight = w;
      word.assign(c.begin(), c.end());
    }
  }
  void merge(const Candidate& o) {
    if (o.weight < weight) *this = o;
  }
};

std::uint64_t weight(std::span<const Element> c) {
  return static_cast<std::uint64_t>(std::count_if(c.begin(), c.end(), [](Element x) { return x != 0; }));
}

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

BigInt ipow(BigInt b, std::size_t e) {
  BigInt out = 1;
  while (e-- > 0) out *= b;
  return out;
}

// Exhaustive search over projective message classes ---------------------------

// Messages with first nonzero coordinate i equal to 1 are base = g_i plus a
// GF(p)-combination of the rows beta_t * g_j (j > i), where beta_t is the
// element with encoding p^t. A p-ary modular Gray code walks those
// combinations adding one row per step.
Candidate exhaustive_search(const Matrix& g, const Field& f) {
  const std::size_t k = g.rows(), m = g.cols();
  const int p = f.p(), e = f.e();

  std::vector<Element> beta(static_cast<std::size_t>(e));
  for (int t = 0, code = 1; t < e; ++t, code *= p) beta[static_cast<std::size_t>(t)] = static_cast<Element>(code);

  Candidate best;
  for (std::size_t lead = 0; lead < k; ++lead) {
    // Digit rows for coordinates lead+1..k-1, least significant first.
    Matrix digit_rows(0, m);
    std::vector<Element> tmp(m);
    for (std::size_t j = lead + 1; j < k; ++j)
      for (int t = 0; t < e; ++t) {
        const Element* scale = f.mul_row(beta[static_cast<std::size_t>(t)]);
        for (std::size_t x = 0; x < m; ++x) tmp[x] = scale[g(j, x)];
        digit_rows.append_row(tmp);
      }
    const std::size_t digits = digit_rows.rows();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < digits; ++i) total *= static_cast<std::uint64_t>(p);

    const std::size_t chunks = std::min<std::uint64_t>(total, 4096);
    std::vector<Candidate> found(chunks);
    parallel_for(chunks, [&](std::size_t cb, std::size_t ce, int) {
      std::vector<Element> word(m);
      std::vector<int> counter(digits + 1, 0);
      for (std::size_t chunk = cb; chunk < ce; ++chunk) {
        const std::uint64_t begin = total / chunks * chunk + std::min<std::uint64_t>(chunk, total % chunks);
        const std::uint64_t end = begin + total / chunks + (chunk < total % chunks ? 1 : 0);
        // Gray code state at `begin`: digit t is (b_t - b_{t+1}) mod p.
        std::uint64_t b = begin;
        for (std::size_t t = 0; t < digits; ++t, b /= static_cast<std::uint64_t>(p))
          counter[t] = static_cast<int>(b % static_cast<std::uint64_t>(p));
        counter[digits] = 0;
        auto r0 = g.row(lead);
        std::copy(r0.begin(), r0.end(), word.begin());
        for (std::size_t t = 0; t < digits; ++t) {
          const int gt = ((counter[t] - counter[t + 1]) % p + p) % p;
          if (gt != 0) axpy(word, static_cast<Element>(gt), digit_rows.row(t), f);
        }
        Candidate local;
        local.offer(weight(word), word);
        for (std::uint64_t c = begin + 1; c < end; ++c) {
          std::uint64_t v = c;
          std::size_t t = 0;
          while (v % static_cast<std::uint64_t>(p) == 0) {
            v /= static_cast<std::uint64_t>(p);
            ++t;
          }
          auto row = digit_rows.row(t);
          const Element* add = nullptr;
          std::uint64_t w = 0;
          for (std::size_t x = 0; x < m; ++x) {
            add = f.add_row(word[x]);
            word[x] = add[row[x]];
            w += word[x] != 0;
          }
          if (w < local.weight) local.offer(w, word);
        }
        found[chunk] = std::move(local);
      }
    });
    for (const auto& c : found) best.merge(c);
  }
  return best;
}

// Information-set search ------------------------------------------------------

struct Systematic {
  Matrix gamma;            // k x m, identity on its information set
  std::size_t fresh = 0;   // information-set columns not used by earlier matrices
};

void pivot(Matrix& a, std::size_t r, std::size_t c, const Field& f) {
  const Element s = f.inv(a(r, c));
  if (s != 1) {
    const Element* mul = f.mul_row(s);
    for (auto& x : a.row(r)) x = mul[x];
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (i != r && a(i, c) != 0) axpy(a.row(i), f.neg(a(i, c)), a.row(r), f);
}

// Greedy disjoint information sets; the last ones may be partial and are
// completed with earlier columns.
std::vector<Systematic> information_sets(const Matrix& g, const Field& f) {
  const std::size_t k = g.rows(), m = g.cols();
  std::vector<bool> used(m, false);
  std::vector<Systematic> out;
  while (true) {
    Matrix a = g;
    std::size_t r = 0;
    std::vector<std::size_t> taken;
    for (int pass = 0; pass < 2 && r < k; ++pass) {
      for (std::size_t c = 0; c < m && r < k; ++c) {
        if (used[c] != (pass == 1)) continue;
        std::size_t pr = r;
        while (pr < k && a(pr, c) == 0) ++pr;
        if (pr == k) continue;
        a.swap_rows(r, pr);
        pivot(a, r, c, f);
        if (pass == 0) taken.push_back(c);
        ++r;
      }
    }
    if (taken.empty()) break;
    for (auto c : taken) used[c] = true;
    out.push_back({std::move(a), taken.size()});
  }
  return out;
}

class InfoSetSearch {
 public:
  InfoSetSearch(const Matrix& g, const Field& f, std::uint64_t budget)
      : f_(f), k_(g.rows()), m_(g.cols()), budget_(budget), sets_(information_sets(g, f)) {
    done_.assign(sets_.size(), 0);
  }

  // Runs until the bounds meet, or until `stop` says the answer is known.
  template <class Stop>
  void run(Stop&& stop) {
    for (std::size_t w = 1; w <= k_; ++w) {
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        if (stop() || lower() >= best_.weight) return;
        if (w + 1 <= k_ - sets_[j].fresh) continue;  // would not raise the lower bound
        const BigInt cost = binomial(k_, w) * ipow(f_.q() - 1, w - 1);
        if (work_ + cost > budget_)
          throw BudgetExceeded("information-set minimum distance search",
                               std::min(projected_work(w, j), projective_class_count(f_.q(), k_)), budget_);
        enumerate(sets_[j].gamma, w);
        work_ += cost;
        done_[j] = w;
      }
    }
    exhausted_ = true;
  }

  std::uint64_t lower() const {
    if (exhausted_) return best_.weight;
    std::uint64_t l = 0;
    for (std::size_t j = 0; j < sets_.size(); ++j) {
      const std::size_t overlap = k_ - sets_[j].fresh;
      if (done_[j] + 1 > overlap) l += done_[j] + 1 - overlap;
    }
    return l;
  }
  const Candidate& best() const { return best_; }

  // Work after which the bounds are sure to meet, resuming at level (w, j)
  // with the current upper bound. A lighter codeword found later only
  // stops the search sooner.
  BigInt projected_work(std::size_t w0, std::size_t j0) const {
    auto done = done_;
    BigInt total = work_;
    auto lower_of = [&] {
      std::uint64_t l = 0;
      for (std::size_t j = 0; j < sets_.size(); ++j) {
        const std::size_t overlap = k_ - sets_[j].fresh;
        if (done[j] + 1 > overlap) l += done[j] + 1 - overlap;
      }
      return l;
    };
    for (std::size_t w = w0; w <= k_; ++w) {
      for (std::size_t j = (w == w0 ? j0 : 0); j < sets_.size(); ++j) {
        if (lower_of() >= best_.weight) return total;
        if (w + 1 <= k_ - sets_[j].fresh) continue;
        total += binomial(k_, w) * ipow(f_.q() - 1, w - 1);
        done[j] = w;
      }
    }
    return total;
  }
  const BigInt& work() const { return work_; }

 private:
  // All messages of weight w whose first nonzero coordinate is 1.
  void enumerate(const Matrix& gamma, std::size_t w) {
    const auto q1 = static_cast<std::size_t>(f_.q() - 1);
    // scaled[(row * q1 + a - 1)] = a * row
    Matrix scaled(k_ * q1, m_);
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t a = 1; a <= q1; ++a) {
        const Element* mul = f_.mul_row(static_cast<Element>(a));
        auto dst = scaled.row(r * q1 + a - 1);
        auto src = gamma.row(r);
        for (std::size_t x = 0; x < m_; ++x) dst[x] = mul[src[x]];
      }

    const std::size_t leads = k_ - w + 1;
    std::vector<Candidate> found(leads);
    parallel_for(leads, [&](std::size_t lb, std::size_t le, int) {
      std::vector<std::vector<Element>> acc(w, std::vector<Element>(m_));
      for (std::size_t lead = lb; lead < le; ++lead) {
        Candidate local;
        auto r = gamma.row(lead);
        std::copy(r.begin(), r.end(), acc[0].begin());
        descend(scaled, acc, 1, lead + 1, w, local);
        found[lead] = std::move(local);
      }
    });
    for (const auto& c : found) best_.merge(c);
  }

  void descend(const Matrix& scaled, std::vector<std::vector<Element>>& acc, std::size_t depth, std::size_t from,
               std::size_t w, Candidate& local) const {
    if (depth == w) {
      const auto wt = weight(acc[depth - 1]);
      if (wt < local.weight) local.offer(wt, acc[depth - 1]);
      return;
    }
    const auto q1 = static_cast<std::size_t>(f_.q() - 1);
    const auto& prev = acc[depth - 1];
    auto& cur = acc[depth];
    for (std::size_t r = from; r + (w - depth) <= k_; ++r) {
      for (std::size_t a = 0; a < q1; ++a) {
        auto add = scaled.row(r * q1 + a);
        for (std::size_t x = 0; x < m_; ++x) cur[x] = f_.add(prev[x], add[x]);
        descend(scaled, acc, depth + 1, r + 1, w, local);
      }
    }
  }

  const Field& f_;
  std::size_t k_, m_;
  BigInt budget_;
  std::vector<Systematic> sets_;
  std::vector<std::size_t> done_;
  Candidate best_;
  BigInt work_ = 0;
  bool exhausted_ = false;
};

void require_full_rank(const Matrix& g, const Field& f) {
  if (g.rows() == 0) throw InvalidParams("minimum distance of the zero code is undefined");
  if (rank(g, f) != g.rows()) throw InvalidParams("generator matrix must have full row rank");
}

}  // namespace

BigInt projective_class_count(int q, std::size_t k) { return (ipow(q, k) - 1) / (q - 1); }

MinDistResult minimum_distance(const Matrix& generator, const Field& f, std::uint64_t budget, MinDistMethod method) {
  require_full_rank(generator, f);
  const BigInt classes = projective_class_count(f.q(), generator.rows());
  if (method == MinDistMethod::Automatic)
    method = classes <= budget ? MinDistMethod::Exhaustive : MinDistMethod::InformationSet;

  MinDistResult out;
  out.method = method;
  if (method == MinDistMethod::Exhaustive) {
    if (classes > budget) throw BudgetExceeded("exhaustive minimum distance search", classes, budget);
    Candidate c = exhaustive_search(generator, f);
    out.distance = c.weight;
    out.witness = std::move(c.word);
    out.work = classes;
    return out;
  }
  InfoSetSearch search(generator, f, budget);
  search.run([] { return false; });
  out.distance = search.best().weight;
  out.witness = search.best().word;
  out.work = search.work();
  return out;
}

bool minimum_distance_at_least(const Matrix& generator, const Field& f, std::uint64_t bound, std::uint64_t budget) {
  require_full_rank(generator, f);
  if (bound <= 1) return true;
  InfoSetSearch search(generator, f, budget);
  search.run([&] { return search.best().weight < bound || search.lower() >= bound; });
  return search.best().weight >= bound;
}

}  // namespace graphcodes
