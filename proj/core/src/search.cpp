#include "ndsig/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <random>
#include <thread>
#include <tuple>

#include <boost/random/uniform_int_distribution.hpp>

namespace ndsig {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, "search: " + what);
}

std::int64_t exponent_lo() { return 2; }
std::int64_t exponent_hi(const FamilySpec& spec) { return 3 * spec.box + 1; }

struct Outcome {
  std::vector<Finding> findings;
  std::int64_t attempts = 0;
  std::int64_t processed = 0;
  std::int64_t consistent = 0;
  std::int64_t inconsistent = 0;
  std::optional<std::int64_t> min_delta;
  std::map<ErrorKind, std::int64_t> skipped;
  std::exception_ptr failure;

  void saw_delta(std::int64_t d) { min_delta = min_delta ? std::min(*min_delta, d) : d; }
};

Finding finding_from(const Support& support, const DegenerationReport& r) {
  Finding f;
  f.support = support;
  f.erased = r.geometry.erased;
  f.steps = {r};
  f.predicted = r.predicted;
  f.direct = r.direct;
  f.before = r.before;
  f.after = r.after;
  f.signature_delta = r.direct.signature;
  return f;
}

Finding finding_from(const Support& support, const ErasureChainReport& c) {
  Finding f;
  f.support = support;
  f.erased = c.erased;
  f.completion_n = c.completion_n;
  f.steps = c.steps;
  f.predicted = c.predicted;
  f.direct = c.direct;
  f.before = c.before;
  f.after = c.after;
  f.signature_delta = c.direct.signature;
  return f;
}

void run_vertices(const Support& s, Outcome& out) {
  Analysis an;
  try {
    an = analyze_support(s);
  } catch (const Error& e) {
    ++out.skipped[e.kind()];
    return;
  }
  const NewtonPolyhedron np = build_polyhedron(an.support);
  for (const auto& v : np.vertices) {
    if (!is_positive(v)) continue;
    ++out.attempts;
    const DegenerationAttempt a = attempt_degeneration(an.support, v);
    if (!a.report) {
      ++out.skipped[*a.error];
      continue;
    }
    const DegenerationReport& r = *a.report;
    ++out.processed;
    out.saw_delta(r.delta);
    if (!r.consistent) {
      ++out.inconsistent;
      continue;
    }
    ++out.consistent;
    if (r.direct.signature > 0) out.findings.push_back(finding_from(an.support, r));
  }
}

void run_monomial(const Support& s, const ExponentVector& a, Outcome& out) {
  ++out.attempts;
  ErasureChainReport c;
  try {
    c = verify_support_erasure(s, a);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::LemmaViolation) throw;
    ++out.skipped[e.kind()];
    return;
  }
  ++out.processed;
  for (const auto& st : c.steps) out.saw_delta(st.delta);
  if (!c.consistent) {
    ++out.inconsistent;
    return;
  }
  ++out.consistent;
  if (c.direct.signature > 0) out.findings.push_back(finding_from(s, c));
}

Support family_member(const FamilySpec& spec, std::int64_t index) {
  switch (spec.family) {
    case KnownFamily::Example1:
      return Support({{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2}, {4, 1, 0}, {0, 4, 1}, {1, 0, 4}});
    case KnownFamily::TFamily: {
      const std::int64_t k = spec.k.lo + index;
      return Support({{1, 1, 1}, {3 * k + 3, 1, 0}, {k + 1, 1, 1}, {1, 0, 2}, {0, 2, 1}});
    }
    case KnownFamily::Tpqr: {
      const auto np = spec.p.hi - spec.p.lo + 1;
      const auto nq = spec.q.hi - spec.q.lo + 1;
      const std::int64_t p = spec.p.lo + index % np;
      const std::int64_t q = spec.q.lo + (index / np) % nq;
      const std::int64_t r = spec.r.lo + index / (np * nq);
      return Support({{1, 1, 1}, {p, 0, 0}, {0, q, 0}, {0, 0, r}});
    }
  }
  throw std::logic_error("family_member: unknown family");
}

std::int64_t family_size(const FamilySpec& spec) {
  switch (spec.family) {
    case KnownFamily::Example1: return 1;
    case KnownFamily::TFamily: return spec.k.hi - spec.k.lo + 1;
    case KnownFamily::Tpqr:
      return (spec.p.hi - spec.p.lo + 1) * (spec.q.hi - spec.q.lo + 1) *
             (spec.r.hi - spec.r.lo + 1);
  }
  return 0;
}

std::int64_t candidate_total(const FamilySpec& spec) {
  switch (spec.mode) {
    case SearchMode::Random: return spec.count;
    case SearchMode::Grid: return std::min(spec.count, grid_size(spec));
    case SearchMode::Family: return family_size(spec);
  }
  return 0;
}

Outcome run_candidate(const FamilySpec& spec, std::int64_t index) {
  Outcome out;
  try {
    switch (spec.mode) {
      case SearchMode::Random: run_vertices(random_candidate(spec, index), out); break;
      case SearchMode::Grid: run_vertices(grid_candidate(spec, index), out); break;
      case SearchMode::Family: run_monomial(family_member(spec, index), {1, 1, 1}, out); break;
    }
  } catch (...) {
    out.failure = std::current_exception();
  }
  return out;
}

}  // namespace

void validate(const FamilySpec& spec) {
  require(spec.count >= 1, "count must be at least 1");
  if (spec.mode != SearchMode::Family) {
    require(spec.box >= 2, "box must be at least 2");
    require(spec.max_points >= 4, "points must be at least 4");
    require(spec.box <= 1000, "box too large");
    return;
  }
  auto ok = [](IntRange r, std::int64_t min) { return r.lo >= min && r.lo <= r.hi && r.hi <= 100000; };
  switch (spec.family) {
    case KnownFamily::Example1: break;
    case KnownFamily::TFamily: require(ok(spec.k, 1), "k range must satisfy 1 <= lo <= hi"); break;
    case KnownFamily::Tpqr:
      require(ok(spec.p, 2) && ok(spec.q, 2) && ok(spec.r, 2), "p, q, r ranges must satisfy 2 <= lo <= hi");
      break;
  }
}

Support random_candidate(const FamilySpec& spec, std::int64_t index) {
  const auto seed = spec.seed;
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::mt19937_64 rng(seq);
  boost::random::uniform_int_distribution<std::int64_t> coord(0, spec.box);
  boost::random::uniform_int_distribution<std::int64_t> power(exponent_lo(), exponent_hi(spec));

  std::vector<ExponentVector> pts;
  for (std::int64_t i = 0; i + 3 < spec.max_points; ++i) {
    // Order of evaluation matters for reproducibility.
    const auto x = coord(rng);
    const auto y = coord(rng);
    const auto z = coord(rng);
    if (x != 0 || y != 0 || z != 0) pts.push_back({x, y, z});
  }
  const auto p = power(rng);
  const auto q = power(rng);
  const auto r = power(rng);
  pts.push_back({p, 0, 0});
  pts.push_back({0, q, 0});
  pts.push_back({0, 0, r});
  return Support(pts);
}

std::int64_t grid_size(const FamilySpec& spec) {
  constexpr auto cap = std::numeric_limits<std::int64_t>::max() / 4;
  const std::int64_t cells = (spec.box + 1) * (spec.box + 1) * (spec.box + 1);
  const std::int64_t powers = exponent_hi(spec) - exponent_lo() + 1;
  std::int64_t n = powers * powers * powers;
  for (std::int64_t i = 0; i + 3 < spec.max_points; ++i) {
    if (n > cap / cells) return cap;
    n *= cells;
  }
  return n;
}

Support grid_candidate(const FamilySpec& spec, std::int64_t index) {
  const std::int64_t side = spec.box + 1;
  const std::int64_t cells = side * side * side;
  const std::int64_t powers = exponent_hi(spec) - exponent_lo() + 1;
  std::vector<ExponentVector> pts;
  for (std::int64_t i = 0; i + 3 < spec.max_points; ++i) {
    const std::int64_t c = index % cells;
    index /= cells;
    const ExponentVector v{c % side, (c / side) % side, c / (side * side)};
    if (!is_zero(v)) pts.push_back(v);
  }
  const std::int64_t p = exponent_lo() + index % powers;
  const std::int64_t q = exponent_lo() + (index / powers) % powers;
  const std::int64_t r = exponent_lo() + index / (powers * powers);
  pts.push_back({p, 0, 0});
  pts.push_back({0, q, 0});
  pts.push_back({0, 0, r});
  return Support(pts);
}

std::string support_key(const Support& s) {
  std::string key;
  for (const auto& p : s) key += format(p);
  return key;
}

HuntResult hunt(const FamilySpec& spec) {
  validate(spec);
  const std::int64_t total = candidate_total(spec);
  std::vector<Outcome> outcomes(static_cast<std::size_t>(total));

  unsigned workers = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, total));
  std::atomic<std::int64_t> next{0};
  auto work = [&] {
    for (std::int64_t i; (i = next.fetch_add(1)) < total;) {
      outcomes[static_cast<std::size_t>(i)] = run_candidate(spec, i);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  HuntResult res;
  res.candidates = total;
  std::map<std::pair<std::string, ExponentVector>, bool> seen;
  for (auto& o : outcomes) {
    if (o.failure) std::rethrow_exception(o.failure);
    res.attempts += o.attempts;
    res.processed += o.processed;
    res.consistent += o.consistent;
    res.inconsistent += o.inconsistent;
    if (o.min_delta) res.min_delta = res.min_delta ? std::min(*res.min_delta, *o.min_delta) : *o.min_delta;
    for (const auto& [k, n] : o.skipped) res.skipped[k] += n;
    for (auto& f : o.findings) {
      if (seen.emplace(std::pair{support_key(f.support), f.erased}, true).second) {
        res.findings.push_back(std::move(f));
      }
    }
  }
  std::stable_sort(res.findings.begin(), res.findings.end(), [](const Finding& a, const Finding& b) {
    if (a.signature_delta != b.signature_delta) return a.signature_delta > b.signature_delta;
    const auto ka = support_key(a.support);
    const auto kb = support_key(b.support);
    return std::tie(ka, a.erased) < std::tie(kb, b.erased);
  });
  return res;
}

RatioSummary ratio_report(const std::vector<Finding>& findings) {
  if (findings.empty()) throw Error(ErrorKind::EmptyFindings, "no findings to summarize");
  RatioSummary sum;
  for (const auto& f : findings) {
    RatioRow row;
    row.signature_delta = f.signature_delta;
    row.mu_degenerate = f.after.mu;
    row.mu_generic = f.before.mu;
    if (row.mu_degenerate <= 0 || row.mu_generic <= 0) {
      throw Error(ErrorKind::InvalidArgument, "ratio_report: finding with nonpositive Milnor number");
    }
    row.per_mu_degenerate = Ratio(row.signature_delta, row.mu_degenerate);
    row.per_mu_generic = Ratio(row.signature_delta, row.mu_generic);
    sum.max_per_mu_degenerate = std::max(sum.max_per_mu_degenerate, row.per_mu_degenerate);
    sum.max_per_mu_generic = std::max(sum.max_per_mu_generic, row.per_mu_generic);
    sum.rows.push_back(row);
  }
  return sum;
}

}  // namespace ndsig
