#include "rsumlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <thread>

#include "rsumlab/error.hpp"
#include "rsumlab/mask_kernel.hpp"
#include "rsumlab/sumset.hpp"

namespace rsumlab {

namespace {

constexpr std::int64_t kNoGamma = std::numeric_limits<std::int64_t>::min();

std::size_t kind_rank(BoundKind k) {
  return static_cast<std::size_t>(std::find(kAllBoundKinds.begin(), kAllBoundKinds.end(), k) -
                                  kAllBoundKinds.begin());
}

std::int64_t gamma_key(const std::optional<std::int64_t>& g) { return g ? *g : kNoGamma; }

struct DomainRun {
  Domain domain;
  std::vector<std::size_t> kinds;  // positions in VerifyOptions::kinds
  EnumerationPlan plan;
  std::vector<std::int64_t> gammas;  // {kNoGamma} outside the twisted domain
};

std::vector<DomainRun> domain_runs(const VerifyOptions& opt) {
  const auto& g = opt.plan.group;
  std::vector<DomainRun> runs;
  for (Domain d : {Domain::Plain, Domain::Restricted, Domain::Diagonal, Domain::Generalized, Domain::Twisted}) {
    DomainRun run{d, {}, opt.plan, {kNoGamma}};
    for (std::size_t i = 0; i < opt.kinds.size(); ++i) {
      if (domain_of(opt.kinds[i]) == d) run.kinds.push_back(i);
    }
    if (run.kinds.empty()) continue;
    auto& plan = run.plan;
    switch (d) {
      case Domain::Plain:
        plan.fixed_s = ElementSet(g);
        break;
      case Domain::Restricted:
        plan.fixed_s = ElementSet::from_indices(g, {0});
        break;
      case Domain::Diagonal:
        plan.diagonal = true;
        plan.fixed_s = ElementSet::from_indices(g, {0});
        break;
      case Domain::Generalized:
        break;
      case Domain::Twisted: {
        run.gammas.clear();
        if (!g.is_prime_cyclic()) {
          if (opt.drop_hypotheses) throw DomainError("twisted sumset needs a prime cyclic group");
          break;  // nothing to evaluate; the kind is inapplicable everywhere
        }
        const auto p = static_cast<std::int64_t>(g.order());
        if (opt.gamma) {
          if (*opt.gamma % p == 0) throw DomainError("γ must be nonzero modulo p");
          run.gammas.push_back(*opt.gamma);
        } else {
          const std::int64_t hi = opt.drop_hypotheses ? p - 1 : p - 2;
          for (std::int64_t y = 1; y <= hi; ++y) run.gammas.push_back(y);
        }
        break;
      }
    }
    runs.push_back(std::move(run));
  }
  return runs;
}

// Bounded set of the smallest witnesses under witness_less.
class WitnessHeap {
 public:
  explicit WitnessHeap(std::size_t cap) : cap_(cap) {}

  bool full() const { return items_.size() >= cap_; }
  bool disabled() const { return cap_ == 0; }
  const BoundReport& top() const { return items_.front(); }

  void offer(BoundReport r) {
    if (cap_ == 0) return;
    if (!full()) {
      items_.push_back(std::move(r));
      std::push_heap(items_.begin(), items_.end(), witness_less);
      return;
    }
    if (!witness_less(r, top())) return;
    std::pop_heap(items_.begin(), items_.end(), witness_less);
    items_.back() = std::move(r);
    std::push_heap(items_.begin(), items_.end(), witness_less);
  }

  void merge(WitnessHeap&& other) {
    for (auto& r : other.items_) offer(std::move(r));
  }

  std::vector<BoundReport> sorted() && {
    std::sort(items_.begin(), items_.end(), witness_less);
    return std::move(items_);
  }

 private:
  std::size_t cap_;
  std::vector<BoundReport> items_;
};

struct Accum {
  std::uint64_t triples = 0;
  std::vector<KindTally> tallies;
  std::vector<WitnessHeap> violations;
  std::vector<WitnessHeap> tight;

  explicit Accum(const VerifyOptions& opt) {
    for (auto k : opt.kinds) {
      tallies.push_back(KindTally{k});
      violations.emplace_back(opt.max_witnesses);
      tight.emplace_back(opt.max_witnesses);
    }
  }

  void merge(Accum&& o) {
    triples += o.triples;
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      tallies[i].checked += o.tallies[i].checked;
      tallies[i].applicable += o.tallies[i].applicable;
      tallies[i].violations += o.tallies[i].violations;
      violations[i].merge(std::move(o.violations[i]));
      tight[i].merge(std::move(o.tight[i]));
    }
  }
};

struct MaskKey {
  Mask a;
  Mask s;
  std::int64_t gamma;
  Mask b;

  friend auto operator<=>(const MaskKey&, const MaskKey&) = default;
};

MaskKey key_of(const BoundReport& r) {
  return MaskKey{r.a.mask(), r.s.mask(), gamma_key(r.gamma), r.b.mask()};
}

// True if no witness with this (A, S, γ) prefix can enter the heap.
bool prefix_closed(const WitnessHeap& h, Mask a, Mask s, std::int64_t gamma) {
  if (h.disabled()) return true;
  if (!h.full()) return false;
  const auto top = key_of(h.top());
  return MaskKey{a, s, gamma, 0} > top;
}

bool admits(const WitnessHeap& h, const MaskKey& key) {
  if (h.disabled()) return false;
  return !h.full() || key < key_of(h.top());
}

// Per-size hypothesis and rhs table for one (|A|, |S|, γ).
struct SizeTable {
  std::vector<std::uint8_t> applicable;  // [kind][k]
  std::vector<std::int64_t> rhs;
  std::vector<std::uint8_t> dropped;
  std::vector<std::string> reason;
};

class MaskSweep {
 public:
  MaskSweep(const DomainRun& run, const VerifyOptions& opt)
      : run_(run), opt_(opt), g_(run.plan.group), mg_(g_), n_(mg_.order()),
        p_(static_cast<std::int64_t>(g_.least_prime())) {
    s_list_ = plan_s_masks(run.plan, mg_);
    for_each_subset_mask(n_, run.plan.a_size, [&](Mask a) {
      if (!run.plan.canonicalize || mg_.is_min_translate(a)) a_list_.push_back(a);
    });
  }

  void run(Shard shard, Accum& acc) {
    std::optional<SubsetSweep> sweep;
    if (!run_.plan.diagonal) sweep.emplace(n_, run_.plan.b_size);
    for (std::size_t r = shard.index; r < a_list_.size(); r += shard.count) {
      const Mask a = a_list_[r];
      for (Mask s : s_list_) {
        for (std::int64_t gamma : run_.gammas) {
          const std::int64_t lambda = gamma == kNoGamma ? 2 : 1 + gamma;
          const auto rows = build_rows(mg_, a, s, lambda);
          if (run_.plan.diagonal) {
            diagonal(a, s, rows, acc);
          } else {
            free_b(a, s, gamma, rows, *sweep, acc);
          }
        }
      }
    }
  }

 private:
  std::optional<std::int64_t> opt_gamma(std::int64_t gamma) const {
    return gamma == kNoGamma ? std::nullopt : std::optional<std::int64_t>(gamma);
  }

  const SizeTable& table(std::size_t sa, std::size_t ss, std::int64_t gamma, bool same) {
    const auto key = std::make_tuple(sa, ss, gamma, same);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    const auto nk = run_.kinds.size();
    SizeTable t;
    t.applicable.assign(nk * (n_ + 1), 0);
    t.rhs.assign(nk * (n_ + 1), 0);
    t.dropped.assign(nk * (n_ + 1), 0);
    t.reason.assign(nk * (n_ + 1), {});
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const auto kind = opt_.kinds[run_.kinds[ki]];
      for (std::size_t k = 0; k <= n_; ++k) {
        const auto at = ki * (n_ + 1) + k;
        auto why = hypothesis_failure(kind, g_, sa, same ? sa : k, ss, same, opt_gamma(gamma));
        t.applicable[at] = !why || opt_.drop_hypotheses;
        t.dropped[at] = why && opt_.drop_hypotheses;
        if (why) t.reason[at] = std::move(*why);
        t.rhs[at] = bound_value(kind, static_cast<std::int64_t>(sa), static_cast<std::int64_t>(same ? sa : k),
                                static_cast<std::int64_t>(ss), p_);
      }
    }
    return tables_.emplace(key, std::move(t)).first->second;
  }

  BoundReport report(std::size_t ki, const SizeTable& t, std::size_t at, Mask a, Mask b, Mask s,
                     std::int64_t gamma, std::int64_t lhs) const {
    BoundReport r{opt_.kinds[run_.kinds[ki]], ElementSet::from_mask(g_, a), ElementSet::from_mask(g_, b),
                  ElementSet::from_mask(g_, s), opt_gamma(gamma)};
    r.lhs = lhs;
    r.rhs = t.rhs[at];
    r.applicable = t.applicable[at];
    r.hypothesis_dropped = t.dropped[at];
    r.reason = t.reason[at];
    r.satisfied = !r.applicable || r.lhs >= r.rhs;
    r.tight = r.applicable && r.lhs == r.rhs;
    return r;
  }

  void record(std::size_t ki, const SizeTable& t, std::size_t at, Mask a, Mask b, Mask s, std::int64_t gamma,
              std::int64_t lhs, bool want_tight, Accum& acc) const {
    if (!t.applicable[at]) return;
    const auto slot = run_.kinds[ki];
    const MaskKey key{a, s, gamma, b};
    if (lhs < t.rhs[at]) {
      ++acc.tallies[slot].violations;
      if (admits(acc.violations[slot], key)) acc.violations[slot].offer(report(ki, t, at, a, b, s, gamma, lhs));
    } else if (lhs == t.rhs[at] && want_tight && admits(acc.tight[slot], key)) {
      acc.tight[slot].offer(report(ki, t, at, a, b, s, gamma, lhs));
    }
  }

  void diagonal(Mask a, Mask s, const SumsetRows& rows, Accum& acc) {
    const auto sa = static_cast<std::size_t>(std::popcount(a));
    const auto ss = static_cast<std::size_t>(std::popcount(s));
    const auto lhs = static_cast<std::int64_t>(std::popcount(rows.evaluate(a)));
    const auto& t = table(sa, ss, kNoGamma, true);
    ++acc.triples;
    for (std::size_t ki = 0; ki < run_.kinds.size(); ++ki) {
      const auto at = ki * (n_ + 1) + sa;
      const auto slot = run_.kinds[ki];
      ++acc.tallies[slot].checked;
      acc.tallies[slot].applicable += t.applicable[at];
      record(ki, t, at, a, a, s, kNoGamma, lhs, true, acc);
    }
  }

  void free_b(Mask a, Mask s, std::int64_t gamma, const SumsetRows& rows, SubsetSweep& sweep, Accum& acc) {
    const auto sa = static_cast<std::size_t>(std::popcount(a));
    const auto ss = static_cast<std::size_t>(std::popcount(s));
    const auto& t = table(sa, ss, gamma, false);
    const auto nk = run_.kinds.size();
    std::uint64_t total = 0;
    for (std::size_t k = sweep.min_b(); k <= sweep.max_b(); ++k) total += sweep.count_of_size(k);
    acc.triples += total;
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const auto slot = run_.kinds[ki];
      acc.tallies[slot].checked += total;
      for (std::size_t k = sweep.min_b(); k <= sweep.max_b(); ++k) {
        if (t.applicable[ki * (n_ + 1) + k]) acc.tallies[slot].applicable += sweep.count_of_size(k);
      }
    }

    std::array<std::uint8_t, 65> mins{};
    sweep.min_by_size(rows, mins);
    bool rescan = false;
    want_tight_.assign(nk, 0);
    for (std::size_t ki = 0; ki < nk; ++ki) {
      const auto slot = run_.kinds[ki];
      const bool tight_open = !prefix_closed(acc.tight[slot], a, s, gamma);
      for (std::size_t k = sweep.min_b(); k <= sweep.max_b(); ++k) {
        const auto at = ki * (n_ + 1) + k;
        if (!t.applicable[at]) continue;
        if (mins[k] < t.rhs[at]) rescan = true;
        if (tight_open && mins[k] <= t.rhs[at]) {
          want_tight_[ki] = 1;
          rescan = true;
        }
      }
    }
    if (!rescan) return;
    sweep.for_each(rows, [&](Mask b, unsigned lhs) {
      const auto k = static_cast<std::size_t>(std::popcount(b));
      for (std::size_t ki = 0; ki < nk; ++ki) {
        record(ki, t, ki * (n_ + 1) + k, a, b, s, gamma, lhs, want_tight_[ki], acc);
      }
    });
  }

  const DomainRun& run_;
  const VerifyOptions& opt_;
  GroupSpec g_;
  MaskGroup mg_;
  unsigned n_;
  std::int64_t p_;
  std::vector<Mask> a_list_;
  std::vector<Mask> s_list_;
  std::map<std::tuple<std::size_t, std::size_t, std::int64_t, bool>, SizeTable> tables_;
  std::vector<std::uint8_t> want_tight_;
};

// Generic evaluation: sampled plans and groups beyond word size.
void sweep_generic(const DomainRun& run, const VerifyOptions& opt, Shard shard, Accum& acc) {
  const auto& g = run.plan.group;
  const auto p = static_cast<std::int64_t>(g.least_prime());
  for_each_triple(run.plan, shard, [&](const Triple& t) {
    for (std::int64_t gamma : run.gammas) {
      const auto gm = gamma == kNoGamma ? std::nullopt : std::optional<std::int64_t>(gamma);
      std::int64_t lhs = 0;
      switch (run.domain) {
        case Domain::Plain: lhs = static_cast<std::int64_t>(sumset(t.a, t.b).size()); break;
        case Domain::Restricted:
        case Domain::Diagonal: lhs = static_cast<std::int64_t>(restricted_sumset(t.a, t.b).size()); break;
        case Domain::Generalized:
          lhs = static_cast<std::int64_t>(generalized_restricted_sumset(t.a, t.b, t.s).size());
          break;
        case Domain::Twisted:
          lhs = static_cast<std::int64_t>(twisted_restricted_sumset(t.a, t.b, t.s, gamma).size());
          break;
      }
      ++acc.triples;
      for (auto slot : run.kinds) {
        const auto kind = opt.kinds[slot];
        BoundReport r{kind, t.a, t.b, t.s, gm};
        auto why = hypothesis_failure(kind, g, t.a.size(), t.b.size(), t.s.size(), t.a == t.b, gm);
        r.applicable = !why || opt.drop_hypotheses;
        r.hypothesis_dropped = why && opt.drop_hypotheses;
        if (why) r.reason = std::move(*why);
        r.lhs = lhs;
        r.rhs = bound_value(kind, static_cast<std::int64_t>(t.a.size()), static_cast<std::int64_t>(t.b.size()),
                            static_cast<std::int64_t>(t.s.size()), p);
        r.satisfied = !r.applicable || r.lhs >= r.rhs;
        r.tight = r.applicable && r.lhs == r.rhs;
        ++acc.tallies[slot].checked;
        if (!r.applicable) continue;
        ++acc.tallies[slot].applicable;
        if (!r.satisfied) {
          ++acc.tallies[slot].violations;
          acc.violations[slot].offer(std::move(r));
        } else if (r.tight) {
          acc.tight[slot].offer(std::move(r));
        }
      }
    }
  });
}

bool use_masks(const EnumerationPlan& plan) { return !plan.sampled && plan.group.order() <= 64; }

}  // namespace

bool witness_less(const BoundReport& x, const BoundReport& y) {
  const auto kx = kind_rank(x.kind);
  const auto ky = kind_rank(y.kind);
  if (kx != ky) return kx < ky;
  if (auto c = x.a <=> y.a; c != 0) return c < 0;
  if (auto c = x.s <=> y.s; c != 0) return c < 0;
  if (auto c = gamma_key(x.gamma) <=> gamma_key(y.gamma); c != 0) return c < 0;
  return (x.b <=> y.b) < 0;
}

std::uint64_t VerificationSummary::violation_count() const {
  std::uint64_t n = 0;
  for (const auto& t : tallies) n += t.violations;
  return n;
}

std::uint64_t estimate_work(const VerifyOptions& opt) {
  opt.plan.validate();
  unsigned __int128 work = 0;
  for (const auto& run : domain_runs(opt)) {
    work += static_cast<unsigned __int128>(count_triples(run.plan)) * run.gammas.size() * run.kinds.size();
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  return work > kMax ? kMax : static_cast<std::uint64_t>(work);
}

VerificationSummary exhaustive_verify(const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  if (opt.kinds.empty()) throw DomainError("no bound kinds requested");
  if (opt.shard.count == 0 || opt.shard.index >= opt.shard.count) throw DomainError("invalid shard");
  if (opt.shards == 0) throw DomainError("shard count must be >= 1");
  const auto work = estimate_work(opt);
  if (work > opt.work_ceiling) {
    throw WorkCeilingExceeded("plan needs " + std::to_string(work) + " checks, ceiling is " +
                              std::to_string(opt.work_ceiling));
  }
  const auto runs = domain_runs(opt);
  const unsigned threads = std::max(1u, opt.threads);
  // Every (shard, thread) pair owns one residue class of the A (or sample) sequence.
  const std::uint64_t pieces = opt.shards * threads;
  std::vector<Accum> accs;
  accs.reserve(pieces);
  for (std::uint64_t i = 0; i < pieces; ++i) accs.emplace_back(opt);

  std::vector<std::optional<MaskSweep>> sweeps;
  for (const auto& run : runs) {
    sweeps.emplace_back();
    if (use_masks(run.plan)) sweeps.back().emplace(run, opt);
  }
  auto work_on = [&](unsigned t) {
    for (std::uint64_t i = t; i < pieces; i += threads) {
      const Shard piece{opt.shard.index + i * opt.shard.count, opt.shard.count * pieces};
      for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].gammas.empty()) continue;
        if (sweeps[r]) {
          // MaskSweep keeps per-instance caches; copy so threads never share one.
          MaskSweep local = *sweeps[r];
          local.run(piece, accs[i]);
        } else {
          sweep_generic(runs[r], opt, piece, accs[i]);
        }
      }
    }
  };
  if (threads == 1) {
    work_on(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          work_on(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Accum total(opt);
  for (auto& a : accs) total.merge(std::move(a));

  VerificationSummary out{opt.plan.group, opt.kinds};
  out.triples_checked = total.triples;
  out.tallies = total.tallies;
  for (std::size_t i = 0; i < opt.kinds.size(); ++i) {
    for (auto& r : std::move(total.violations[i]).sorted()) out.violations.push_back(std::move(r));
    for (auto& r : std::move(total.tight[i]).sorted()) out.tight.push_back(std::move(r));
  }
  std::stable_sort(out.violations.begin(), out.violations.end(), witness_less);
  std::stable_sort(out.tight.begin(), out.tight.end(), witness_less);
  out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

std::vector<BoundReport> search_witnesses(VerifyOptions opt, BoundKind kind, SearchMode mode) {
  opt.kinds = {kind};
  opt.drop_hypotheses = mode == SearchMode::Counterexample;
  auto summary = exhaustive_verify(opt);
  return mode == SearchMode::Tight ? std::move(summary.tight) : std::move(summary.violations);
}

}  // namespace rsumlab
