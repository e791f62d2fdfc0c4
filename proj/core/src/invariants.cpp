#include "ndsig/invariants.hpp"

#include "ndsig/errors.hpp"

namespace ndsig {
namespace {

bool same_counts(const SingularityInvariants& a, const SingularityInvariants& b) {
  return a.mu == b.mu && a.mu_plus == b.mu_plus && a.mu_zero == b.mu_zero &&
         a.mu_minus == b.mu_minus && a.jordan == b.jordan && a.spectral == b.spectral;
}

std::string row(const SingularityInvariants& inv) {
  return "(" + std::to_string(inv.mu) + "," + std::to_string(inv.mu_plus) + "," +
         std::to_string(inv.mu_zero) + "," + std::to_string(inv.mu_minus) + ")";
}

}  // namespace

JordanCounts jordan_counts(const ClassifiedPoints& cp) {
  return {2 * static_cast<std::int64_t>(cp.on_face_interior.size()),
          static_cast<std::int64_t>(cp.on_skeleton.size())};
}

SingularityInvariants invariants_of_convenient(const Support& s) {
  const NewtonPolyhedron np = build_polyhedron(s);
  SingularityInvariants inv;
  inv.volume = volumes(np);
  inv.mu = inv.volume.newton_number();
  if (inv.mu < 0) {
    throw Error(ErrorKind::NonIsolated, "negative Newton number " + std::to_string(inv.mu));
  }
  const ClassifiedPoints cp = enumerate_not_above(np);
  inv.spectral.p_below = static_cast<std::int64_t>(cp.below.size());
  inv.spectral.p_on = static_cast<std::int64_t>(cp.on_diagram());
  inv.spectral.p_face_interior = static_cast<std::int64_t>(cp.on_face_interior.size());
  inv.jordan = jordan_counts(cp);

  inv.mu_plus = 2 * inv.spectral.p_below + inv.jordan.j2;
  inv.mu_zero = inv.jordan.j1 + inv.jordan.j2;
  inv.mu_minus = inv.mu - inv.mu_plus - inv.mu_zero;
  inv.signature = inv.mu_plus - inv.mu_minus;
  if (inv.mu_minus < 0) {
    throw Error(ErrorKind::NegativeMuMinus,
                "mu_- = " + std::to_string(inv.mu_minus) + " for mu = " +
                    std::to_string(inv.mu));
  }
  if (inv.mu_plus + inv.mu_zero != 2 * (inv.spectral.p_below + inv.spectral.p_on)) {
    throw std::logic_error("mu_+ + mu_0 differs from twice the count of points not above");
  }
  return inv;
}

Analysis analyze_support(const Support& s, const AnalysisOptions& opts) {
  if (s.empty()) throw Error(ErrorKind::ZeroPolynomial, "empty support");
  if (is_convenient(s)) return {invariants_of_convenient(s), s, std::nullopt};

  const std::int64_t n = opts.completion.value_or(default_completion_exponent(s));
  const Support at_n = convenient_completion(s, n);
  const Support at_n1 = convenient_completion(s, n + 1);
  SingularityInvariants a, b;
  try {
    a = invariants_of_convenient(at_n);
    b = invariants_of_convenient(at_n1);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NegativeMuMinus) {
      throw Error(ErrorKind::NonIsolated,
                  std::string("completed diagram is inconsistent: ") + e.what());
    }
    throw;
  }
  if (!same_counts(a, b)) {
    throw Error(ErrorKind::NonIsolated,
                "invariants do not stabilize under completion: " + row(a) + " at n=" +
                    std::to_string(n) + " vs " + row(b) + " at n=" + std::to_string(n + 1));
  }
  return {a, at_n, n};
}

std::int64_t milnor_number(const Support& s, const AnalysisOptions& opts) {
  return analyze_support(s, opts).invariants.mu;
}

SingularityInvariants signature_triple(const Support& s, const AnalysisOptions& opts) {
  return analyze_support(s, opts).invariants;
}

SingularityInvariants sum_invariants(std::span<const SingularityInvariants> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "sum over no singular points");
  SingularityInvariants total;
  for (const auto& p : parts) {
    total.mu += p.mu;
    total.mu_plus += p.mu_plus;
    total.mu_zero += p.mu_zero;
    total.mu_minus += p.mu_minus;
    total.jordan.j1 += p.jordan.j1;
    total.jordan.j2 += p.jordan.j2;
    total.spectral.p_below += p.spectral.p_below;
    total.spectral.p_on += p.spectral.p_on;
    total.spectral.p_face_interior += p.spectral.p_face_interior;
  }
  total.signature = total.mu_plus - total.mu_minus;
  return total;
}

}  // namespace ndsig
