// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ndsig/report.hpp"
#include "oracles.hpp"

using namespace ndsig;

namespace {

using Clock = std::chrono::steady_clock;
using Row = std::array<std::int64_t, 5>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Row row(const SingularityInvariants& i) { return {i.mu, i.mu_plus, i.mu_zero, i.mu_minus, i.signature}; }

std::string show(const Row& r) {
  std::ostringstream os;
  os << "(" << r[0] << "," << r[1] << "," << r[2] << "," << r[3] << "," << r[4] << ")";
  return os.str();
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* kExample1 = "t*x*y*z + x^2*y*z + x*y^2*z + x*y*z^2 + x^4*y + y^4*z + z^4*x";

std::string family(std::int64_t k) {
  return "t*x*y*z + x^" + std::to_string(3 * k + 3) + "*y + x^" + std::to_string(k + 1) +
         "*y*z + z^2*x + y^2*z";
}

Support germ(const std::string& poly, std::int64_t t) {
  return oracle::support(poly, {{"t", Rational(t)}});
}

void expect(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = what;
  }
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  int n = 0;
  std::vector<std::string> misses;
  for (int p = 3; p <= 12; ++p)
    for (int q = 3; q <= 12; ++q)
      for (int r = 3; r <= 12; ++r) {
        const auto t0 = Clock::now();
        const Row got = row(signature_triple(Support({{1, 1, 1}, {p, 0, 0}, {0, q, 0}, {0, 0, r}})));
        const double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        const Row want{p + q + r - 1, 1, 1, p + q + r - 3, 4 - p - q - r};
        if (got != want) {
          misses.push_back("T_{" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "} gave " +
                           show(got) + ", formula says " + show(want));
        }
        expect(o, dt < 1.0, "an instance took over 1 s");
        ++n;
      }
  const std::string stats = std::to_string(n - static_cast<int>(misses.size())) + "/" + std::to_string(n) +
                            " germs match, slowest " + std::to_string(worst * 1000) + " ms";
  if (!misses.empty()) {
    o.pass = false;
    o.detail = stats;
    for (const auto& m : misses) o.detail += "; " + m;
  } else if (o.pass) {
    o.detail = stats;
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Row f0 = row(signature_triple(germ(kExample1, 0)));
  const Row f1 = row(signature_triple(germ(kExample1, 1)));
  expect(o, f0 == Row{45, 5, 3, 37, -32}, "f_0 gave " + show(f0));
  expect(o, f1 == Row{38, 1, 1, 36, -35}, "f_1 gave " + show(f1));
  if (o.pass) o.detail = "f_0 " + show(f0) + ", f_1 " + show(f1);
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (std::int64_t k = 1; k <= 6; ++k) {
    const Row f0 = row(signature_triple(germ(family(k), 0)));
    const Row f1 = row(signature_triple(germ(family(k), 1)));
    expect(o, f0 == Row{12 * k + 11, 2 * k + 1, 1, 10 * k + 9, -8 * k - 8}, "k=" + std::to_string(k) + " f_0 gave " + show(f0));
    expect(o, f1 == Row{9 * k + 11, 1, 1, 9 * k + 9, -9 * k - 8}, "k=" + std::to_string(k) + " f_1 gave " + show(f1));
    const ErasureChainReport c = verify_support_erasure(germ(family(k), 1), {1, 1, 1});
    expect(o, c.direct.signature == k, "k=" + std::to_string(k) + " dsign " + std::to_string(c.direct.signature));
    expect(o, c.consistent, "k=" + std::to_string(k) + " prediction differs from direct deltas");
    for (const auto& st : c.steps) expect(o, st.consistent, "k=" + std::to_string(k) + " inconsistent step");
  }
  if (o.pass) o.detail = "k=1..6 rows match; dropping xyz is k consistent primitive erasures, dsign=k";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Row x0 = row(signature_triple(oracle::support("z^2+y^3-x^6*y")));
  std::vector<SingularityInvariants> parts;
  for (const char* g : {"x^2+y^6+z^2", "x^2+y^6+z^2", "x^2+y^2+z^2", "x^2+y^2+z^2", "x^2+y^2+z^2"}) {
    parts.push_back(signature_triple(oracle::support(g)));
  }
  const Row xt = row(sum_invariants(parts));
  expect(o, x0 == Row{16, 2, 0, 14, -12}, "z^2+y^3-x^6y gave " + show(x0));
  expect(o, xt == Row{13, 0, 0, 13, -13}, "fibre sum gave " + show(xt));
  if (o.pass) o.detail = "X_0 " + show(x0) + ", sum over X_t " + show(xt);
  return o;
}

struct Sweep {
  std::int64_t valid = 0;
  std::int64_t consistent = 0;
  std::int64_t lemma_ok = 0;
  std::int64_t forms_agree = 0;
  std::int64_t lemma_violations = 0;
  double seconds = 0;
  HuntResult hunted;
};

Sweep run_sweep() {
  FamilySpec spec;
  spec.box = 4;
  spec.max_points = 6;
  spec.seed = 20240611;
  spec.count = 16000;
  Sweep s;
  const auto t0 = Clock::now();
  for (std::int64_t i = 0; i < spec.count; ++i) {
    Analysis an;
    try {
      an = analyze_support(random_candidate(spec, i));
    } catch (const Error&) {
      continue;
    }
    const Support& sup = an.support;
    const NewtonPolyhedron np = build_polyhedron(sup);
    for (const auto& v : np.vertices) {
      if (!is_positive(v)) continue;
      DegenerationAttempt a;
      try {
        a = attempt_degeneration(sup, v);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::LemmaViolation) throw;
        ++s.valid;
        ++s.lemma_violations;
        continue;
      }
      if (!a.report) continue;
      const DegenerationReport& r = *a.report;
      const DegenerationCounts& c = r.counts;
      ++s.valid;
      s.consistent += r.predicted == r.direct;
      s.lemma_ok += r.delta >= 0;
      const std::int64_t form1 = -c.six_v + c.n_inner + 3 * c.n_new + 1;
      const std::int64_t delta = c.six_v - c.n_outer - c.n_inner - 2 * c.n_new + 2;
      const std::int64_t form2 = 3 - delta - c.n_outer + c.n_new;
      s.forms_agree += form1 == form2 && form1 == r.predicted.signature;
    }
  }
  s.seconds = seconds_since(t0);
  spec.threads = 0;
  s.hunted = hunt(spec);
  return s;
}

Outcome criterion5(const Sweep& s) {
  Outcome o;
  expect(o, s.valid >= 500, "only " + std::to_string(s.valid) + " valid degenerations");
  expect(o, s.consistent == s.valid, std::to_string(s.valid - s.consistent) + " inconsistent instances");
  expect(o, s.lemma_violations == 0 && s.lemma_ok == s.valid, "delta < 0 observed");
  expect(o, s.seconds < 120, "sweep took " + std::to_string(s.seconds) + " s");
  expect(o, s.hunted.processed == s.valid && s.hunted.inconsistent == 0,
         "search module disagrees with the direct sweep");
  if (o.pass) {
    o.detail = std::to_string(s.valid) + " valid primitive degenerations, all consistent, delta >= 0, " +
               std::to_string(s.seconds) + " s";
  }
  return o;
}

Outcome criterion6(const Sweep& s) {
  Outcome o;
  expect(o, s.valid > 0 && s.forms_agree == s.valid,
         std::to_string(s.valid - s.forms_agree) + " instances where the closed forms differ");
  if (o.pass) o.detail = "both forms agree on " + std::to_string(s.valid) + " instances";
  return o;
}

Outcome criterion7() {
  Outcome o;
  FamilySpec e;
  e.mode = SearchMode::Family;
  e.family = KnownFamily::Example1;
  const HuntResult he = hunt(e);
  expect(o, he.findings.size() == 1, "example1 produced " + std::to_string(he.findings.size()) + " findings");
  if (he.findings.size() == 1) {
    const Finding& f = he.findings[0];
    expect(o, f.signature_delta == 3, "example1 dsign " + std::to_string(f.signature_delta));
    expect(o, row(f.after) == Row{45, 5, 3, 37, -32} && row(f.before) == Row{38, 1, 1, 36, -35},
           "example1 rows differ from the table");
  }
  FamilySpec t;
  t.mode = SearchMode::Family;
  t.family = KnownFamily::TFamily;
  t.k = {1, 6};
  const HuntResult ht = hunt(t);
  expect(o, ht.findings.size() == 6, "t-family produced " + std::to_string(ht.findings.size()) + " findings");
  for (std::size_t i = 0; i < ht.findings.size() && i < 6; ++i) {
    const std::int64_t k = 6 - static_cast<std::int64_t>(i);
    const Finding& f = ht.findings[i];
    expect(o, f.signature_delta == k, "t-family finding " + std::to_string(i) + " has dsign " + std::to_string(f.signature_delta));
    expect(o, row(f.after) == Row{12 * k + 11, 2 * k + 1, 1, 10 * k + 9, -8 * k - 8}, "t-family X_0 row");
    expect(o, row(f.before) == Row{9 * k + 11, 1, 1, 9 * k + 9, -9 * k - 8}, "t-family X_t row");
  }
  if (o.pass) o.detail = "example1: dsign 3; t-family: dsign 6,5,4,3,2,1";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(8);
  int n = 0;
  for (; n < 600; ++n) {
    const Support s = oracle::random_convenient(rng, 5, 8, 8);
    for (const auto& [name, check] : {std::pair{"hull", &oracle::check_hull},
                                      std::pair{"classification", &oracle::check_classification},
                                      std::pair{"pick", &oracle::check_pick}}) {
      const std::string why = check(s);
      std::ostringstream pts;
      for (const auto& p : s) pts << p;
      expect(o, why.empty(), std::string(name) + ": " + why + " on " + pts.str());
    }
  }
  if (o.pass) o.detail = std::to_string(n) + " supports (<= 8 points, coordinates <= 8): hull, box scan, Pick all agree";
  return o;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(NDSIG_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion9() {
  Outcome o;
  std::vector<Support> germs{germ(kExample1, 0), germ(kExample1, 1), oracle::support("z^2+y^3-x^6*y"),
                             oracle::support("x*y+z^2"), oracle::support("x^2*y+y^4+z^2")};
  for (std::int64_t k = 1; k <= 6; ++k) {
    germs.push_back(germ(family(k), 0));
    germs.push_back(germ(family(k), 1));
  }
  for (const auto& s : germs) {
    const std::int64_t n = default_completion_exponent(s);
    const SingularityInvariants a = analyze_support(s, {n}).invariants;
    const SingularityInvariants b = analyze_support(s, {n + 1}).invariants;
    expect(o, row(a) == row(b), "completion " + std::to_string(n) + " vs " + std::to_string(n + 1) + " differ");
  }
  const int code = run_cli("analyze 'x^2*y^2'");
  expect(o, code == 4, "x^2*y^2 exited with " + std::to_string(code));
  if (o.pass) o.detail = std::to_string(germs.size()) + " non-convenient germs stable at n and n+1; x^2*y^2 exits 4";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << title << "): " << o.detail << std::endl;
  };
  report(1, "T_pqr grid", criterion1);
  report(2, "example1 germs", criterion2);
  report(3, "k-family table and signature growth", criterion3);
  report(4, "suspension and fibre sum", criterion4);
  Sweep sweep;
  std::string sweep_error;
  try {
    sweep = run_sweep();
  } catch (const std::exception& e) {
    sweep_error = e.what();
  }
  report(5, "random degeneration consistency", [&] {
    if (!sweep_error.empty()) return Outcome{false, "exception: " + sweep_error};
    return criterion5(sweep);
  });
  report(6, "closed forms of the signature change", [&] {
    if (!sweep_error.empty()) return Outcome{false, "exception: " + sweep_error};
    return criterion6(sweep);
  });
  report(7, "search rediscovery", criterion7);
  report(8, "oracle suites", criterion8);
  report(9, "completion stabilization", criterion9);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
