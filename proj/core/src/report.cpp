#include "ndsig/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace ndsig {

using Json = nlohmann::ordered_json;

std::string_view engine_version() { return "ndsig 0.3.0"; }

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnboundParameter:
    case ErrorKind::NegativeExponent:
    case ErrorKind::CompletionTooSmall:
    case ErrorKind::InvalidArgument:
      return 2;
    case ErrorKind::AssumptionViolated:
      return 3;
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotConvenient:
    case ErrorKind::DegenerateSupport:
    case ErrorKind::NonIsolated:
    case ErrorKind::NegativeMuMinus:
      return 4;
    case ErrorKind::NotAVertex:
    case ErrorKind::NotInteriorLatticePoint:
      return 5;
    case ErrorKind::Io:
      return 6;
    case ErrorKind::LemmaViolation:
    case ErrorKind::EmptyFindings:
      return 1;
  }
  return 1;
}

namespace {

std::string fraction(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json vec(const IntVec3& v) { return Json::array({v.x, v.y, v.z}); }

IntVec3 vec_from(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Json::type_error::create(302, "expected [x,y,z]", &j);
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

Json vecs(const std::vector<IntVec3>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(vec(v));
  return a;
}

std::vector<IntVec3> vecs_from(const Json& j) {
  std::vector<IntVec3> out;
  for (const auto& e : j) out.push_back(vec_from(e));
  return out;
}

Json invariants_json(const SingularityInvariants& inv) {
  return {{"mu", inv.mu},
          {"mu_plus", inv.mu_plus},
          {"mu_zero", inv.mu_zero},
          {"mu_minus", inv.mu_minus},
          {"signature", inv.signature},
          {"j1", inv.jordan.j1},
          {"j2", inv.jordan.j2},
          {"p_below", inv.spectral.p_below},
          {"p_on", inv.spectral.p_on},
          {"p_face_interior", inv.spectral.p_face_interior}};
}

Json volumes_json(const VolumeData& v) {
  return {{"six_vol3", v.six_vol3},     {"two_vol2_xy", v.two_vol2_xy},
          {"two_vol2_yz", v.two_vol2_yz}, {"two_vol2_xz", v.two_vol2_xz},
          {"vol1_x", v.vol1_x},         {"vol1_y", v.vol1_y},
          {"vol1_z", v.vol1_z}};
}

SingularityInvariants invariants_from(const Json& j, const Json* volumes) {
  SingularityInvariants inv;
  inv.mu = j.at("mu").get<std::int64_t>();
  inv.mu_plus = j.at("mu_plus").get<std::int64_t>();
  inv.mu_zero = j.at("mu_zero").get<std::int64_t>();
  inv.mu_minus = j.at("mu_minus").get<std::int64_t>();
  inv.signature = j.at("signature").get<std::int64_t>();
  inv.jordan.j1 = j.at("j1").get<std::int64_t>();
  inv.jordan.j2 = j.at("j2").get<std::int64_t>();
  inv.spectral.p_below = j.at("p_below").get<std::int64_t>();
  inv.spectral.p_on = j.at("p_on").get<std::int64_t>();
  inv.spectral.p_face_interior = j.at("p_face_interior").get<std::int64_t>();
  if (volumes) {
    const Json& v = *volumes;
    inv.volume.six_vol3 = v.at("six_vol3").get<std::int64_t>();
    inv.volume.two_vol2_xy = v.at("two_vol2_xy").get<std::int64_t>();
    inv.volume.two_vol2_yz = v.at("two_vol2_yz").get<std::int64_t>();
    inv.volume.two_vol2_xz = v.at("two_vol2_xz").get<std::int64_t>();
    inv.volume.vol1_x = v.at("vol1_x").get<std::int64_t>();
    inv.volume.vol1_y = v.at("vol1_y").get<std::int64_t>();
    inv.volume.vol1_z = v.at("vol1_z").get<std::int64_t>();
  }
  return inv;
}

Json deltas_json(const InvariantDeltas& d) {
  return {{"mu", d.mu},
          {"mu_zero", d.mu_zero},
          {"mu_plus", d.mu_plus},
          {"mu_minus", d.mu_minus},
          {"signature", d.signature}};
}

InvariantDeltas deltas_from(const Json& j) {
  InvariantDeltas d;
  d.mu = j.at("mu").get<std::int64_t>();
  d.mu_zero = j.at("mu_zero").get<std::int64_t>();
  d.mu_plus = j.at("mu_plus").get<std::int64_t>();
  d.mu_minus = j.at("mu_minus").get<std::int64_t>();
  d.signature = j.at("signature").get<std::int64_t>();
  return d;
}

void put_counts(Json& j, const DegenerationCounts& c) {
  j["six_v"] = c.six_v;
  j["n_new"] = c.n_new;
  j["n_inner"] = c.n_inner;
  j["n_outer"] = c.n_outer;
}

DegenerationCounts counts_from(const Json& j) {
  return {j.at("six_v").get<std::int64_t>(), j.at("n_new").get<std::int64_t>(),
          j.at("n_inner").get<std::int64_t>(), j.at("n_outer").get<std::int64_t>()};
}

Json step_json(const StepSummary& s) {
  Json j;
  j["erased"] = vec(s.erased);
  put_counts(j, s.counts);
  j["delta"] = s.delta;
  j["collar_triangles"] = s.collar_triangles;
  j["predicted"] = deltas_json(s.predicted);
  j["direct"] = deltas_json(s.direct);
  j["consistent"] = s.consistent;
  j["new_points"] = vecs(s.new_points);
  j["inner_points"] = vecs(s.inner_points);
  j["outer_points"] = vecs(s.outer_points);
  return j;
}

StepSummary step_from(const Json& j) {
  StepSummary s;
  s.erased = vec_from(j.at("erased"));
  s.counts = counts_from(j);
  s.delta = j.at("delta").get<std::int64_t>();
  s.collar_triangles = j.at("collar_triangles").get<std::int64_t>();
  s.predicted = deltas_from(j.at("predicted"));
  s.direct = deltas_from(j.at("direct"));
  s.consistent = j.at("consistent").get<bool>();
  s.new_points = vecs_from(j.at("new_points"));
  s.inner_points = vecs_from(j.at("inner_points"));
  s.outer_points = vecs_from(j.at("outer_points"));
  return s;
}

Json degeneration_json(const DegenerationSummary& d) {
  Json j;
  j["erased"] = vec(d.erased);
  j["mode"] = d.monomial ? "monomial" : "primitive";
  put_counts(j, d.counts);
  j["delta"] = d.delta;
  j["predicted"] = deltas_json(d.predicted);
  j["direct"] = deltas_json(d.direct);
  j["consistent"] = d.consistent;
  j["after"] = invariants_json(d.after);
  j["after_volumes"] = volumes_json(d.after.volume);
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(step_json(s));
  j["steps"] = steps;
  return j;
}

DegenerationSummary degeneration_from(const Json& j) {
  DegenerationSummary d;
  d.erased = vec_from(j.at("erased"));
  const auto mode = j.at("mode").get<std::string>();
  if (mode != "monomial" && mode != "primitive") {
    throw Json::other_error::create(501, "unknown degeneration mode " + mode, &j);
  }
  d.monomial = mode == "monomial";
  d.counts = counts_from(j);
  d.delta = j.at("delta").get<std::int64_t>();
  d.predicted = deltas_from(j.at("predicted"));
  d.direct = deltas_from(j.at("direct"));
  d.consistent = j.at("consistent").get<bool>();
  const Json& vol = j.at("after_volumes");
  d.after = invariants_from(j.at("after"), &vol);
  for (const auto& s : j.at("steps")) d.steps.push_back(step_from(s));
  return d;
}

Json search_json(const SearchSummary& s) {
  Json j;
  j["spec"] = s.spec;
  j["candidates"] = s.candidates;
  j["attempts"] = s.attempts;
  j["processed"] = s.processed;
  j["consistent"] = s.consistent;
  j["inconsistent"] = s.inconsistent;
  j["min_delta"] = s.min_delta ? Json(*s.min_delta) : Json(nullptr);
  Json skipped = Json::object();
  for (const auto& [k, n] : s.skipped) skipped[k] = n;
  j["skipped"] = skipped;
  Json fs = Json::array();
  for (const auto& f : s.findings) {
    fs.push_back({{"support", vecs(f.support)},
                  {"erased", vec(f.erased)},
                  {"signature_delta", f.signature_delta},
                  {"mu_generic", f.mu_generic},
                  {"mu_degenerate", f.mu_degenerate},
                  {"steps", f.steps},
                  {"predicted", deltas_json(f.predicted)},
                  {"direct", deltas_json(f.direct)},
                  {"per_mu_degenerate", f.per_mu_degenerate},
                  {"per_mu_generic", f.per_mu_generic}});
  }
  j["findings"] = fs;
  j["max_per_mu_degenerate"] = s.max_per_mu_degenerate;
  j["max_per_mu_generic"] = s.max_per_mu_generic;
  return j;
}

SearchSummary search_from(const Json& j) {
  SearchSummary s;
  s.spec = j.at("spec").get<std::string>();
  s.candidates = j.at("candidates").get<std::int64_t>();
  s.attempts = j.at("attempts").get<std::int64_t>();
  s.processed = j.at("processed").get<std::int64_t>();
  s.consistent = j.at("consistent").get<std::int64_t>();
  s.inconsistent = j.at("inconsistent").get<std::int64_t>();
  if (!j.at("min_delta").is_null()) s.min_delta = j.at("min_delta").get<std::int64_t>();
  for (const auto& [k, n] : j.at("skipped").items()) s.skipped[k] = n.get<std::int64_t>();
  for (const auto& f : j.at("findings")) {
    FindingSummary fs;
    fs.support = vecs_from(f.at("support"));
    fs.erased = vec_from(f.at("erased"));
    fs.signature_delta = f.at("signature_delta").get<std::int64_t>();
    fs.mu_generic = f.at("mu_generic").get<std::int64_t>();
    fs.mu_degenerate = f.at("mu_degenerate").get<std::int64_t>();
    fs.steps = f.at("steps").get<std::size_t>();
    fs.predicted = deltas_from(f.at("predicted"));
    fs.direct = deltas_from(f.at("direct"));
    fs.per_mu_degenerate = f.at("per_mu_degenerate").get<std::string>();
    fs.per_mu_generic = f.at("per_mu_generic").get<std::string>();
    s.findings.push_back(std::move(fs));
  }
  s.max_per_mu_degenerate = j.at("max_per_mu_degenerate").get<std::string>();
  s.max_per_mu_generic = j.at("max_per_mu_generic").get<std::string>();
  return s;
}

StepSummary step_of(const DegenerationReport& r) {
  StepSummary s;
  s.erased = r.geometry.erased;
  s.counts = r.counts;
  s.delta = r.delta;
  s.collar_triangles = r.geometry.collar_triangles;
  s.predicted = r.predicted;
  s.direct = r.direct;
  s.consistent = r.consistent;
  s.new_points = r.geometry.new_points;
  s.inner_points = r.geometry.inner_points;
  s.outer_points = r.geometry.outer_points;
  return s;
}

std::size_t display_width(const std::string& s) {
  // UTF-8 code points; continuation bytes are 10xxxxxx.
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad_left(const std::string& s, std::size_t w) {
  const auto n = display_width(s);
  return n >= w ? s : std::string(w - n, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t w) {
  const auto n = display_width(s);
  return n >= w ? s : s + std::string(w - n, ' ');
}

std::string deltas_text(const InvariantDeltas& d) {
  std::ostringstream os;
  os << "dmu=" << d.mu << " dmu_0=" << d.mu_zero << " dmu_+=" << d.mu_plus
     << " dmu_-=" << d.mu_minus << " dsign=" << d.signature;
  return os.str();
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

DegenerationSummary summarize(const DegenerationReport& r) {
  DegenerationSummary d;
  d.erased = r.geometry.erased;
  d.counts = r.counts;
  d.delta = r.delta;
  d.predicted = r.predicted;
  d.direct = r.direct;
  d.consistent = r.consistent;
  d.after = r.after;
  d.steps = {step_of(r)};
  return d;
}

DegenerationSummary summarize(const ErasureChainReport& c) {
  DegenerationSummary d;
  d.erased = c.erased;
  d.monomial = true;
  for (const auto& st : c.steps) {
    d.counts.six_v += st.counts.six_v;
    d.counts.n_new += st.counts.n_new;
    d.counts.n_inner += st.counts.n_inner;
    d.counts.n_outer += st.counts.n_outer;
    d.delta += st.delta;
    d.steps.push_back(step_of(st));
  }
  d.predicted = c.predicted;
  d.direct = c.direct;
  d.consistent = c.consistent;
  d.after = c.after;
  return d;
}

SearchSummary summarize(const HuntResult& h, std::string spec_echo) {
  SearchSummary s;
  s.spec = std::move(spec_echo);
  s.candidates = h.candidates;
  s.attempts = h.attempts;
  s.processed = h.processed;
  s.consistent = h.consistent;
  s.inconsistent = h.inconsistent;
  s.min_delta = h.min_delta;
  for (const auto& [k, n] : h.skipped) s.skipped[std::string(to_string(k))] = n;
  if (h.findings.empty()) return s;
  const RatioSummary ratios = ratio_report(h.findings);
  for (std::size_t i = 0; i < h.findings.size(); ++i) {
    const Finding& f = h.findings[i];
    FindingSummary fs;
    fs.support = f.support.points();
    fs.erased = f.erased;
    fs.signature_delta = f.signature_delta;
    fs.mu_generic = f.before.mu;
    fs.mu_degenerate = f.after.mu;
    fs.steps = f.steps.size();
    fs.predicted = f.predicted;
    fs.direct = f.direct;
    fs.per_mu_degenerate = fraction(ratios.rows[i].per_mu_degenerate);
    fs.per_mu_generic = fraction(ratios.rows[i].per_mu_generic);
    s.findings.push_back(std::move(fs));
  }
  s.max_per_mu_degenerate = fraction(ratios.max_per_mu_degenerate);
  s.max_per_mu_generic = fraction(ratios.max_per_mu_generic);
  return s;
}

std::string to_json(const ReportDocument& doc, int indent) {
  Json j;
  j["command"] = doc.command;
  j["input"] = doc.input;
  Json b = Json::object();
  for (const auto& [k, v] : doc.bindings) b[k] = v;
  j["bindings"] = b;
  j["completion_n"] = doc.completion_n ? Json(*doc.completion_n) : Json(nullptr);
  if (doc.invariants) {
    j["invariants"] = invariants_json(*doc.invariants);
    j["volumes"] = volumes_json(doc.invariants->volume);
  }
  if (doc.degeneration) j["degeneration"] = degeneration_json(*doc.degeneration);
  if (doc.search) j["search"] = search_json(*doc.search);
  j["engine"] = doc.engine;
  return j.dump(indent);
}

ReportDocument report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ReportDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.input = j.at("input").get<std::string>();
    for (const auto& [k, v] : j.at("bindings").items()) doc.bindings.emplace_back(k, v.get<std::string>());
    if (!j.at("completion_n").is_null()) doc.completion_n = j.at("completion_n").get<std::int64_t>();
    if (j.contains("invariants")) {
      const Json& vol = j.at("volumes");
      doc.invariants = invariants_from(j.at("invariants"), &vol);
    }
    if (j.contains("degeneration")) doc.degeneration = degeneration_from(j.at("degeneration"));
    if (j.contains("search")) doc.search = search_from(j.at("search"));
    doc.engine = j.at("engine").get<std::string>();
    return doc;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string format_table(const std::vector<TableRow>& rows) {
  const std::vector<std::string> head{"μ", "μ₊", "μ₀", "μ₋", "μ₊−μ₋"};
  std::vector<std::vector<std::string>> cells;
  std::size_t label_w = 0;
  std::vector<std::size_t> w;
  for (const auto& h : head) w.push_back(display_width(h));
  for (const auto& r : rows) {
    const auto& i = r.inv;
    cells.push_back({std::to_string(i.mu), std::to_string(i.mu_plus), std::to_string(i.mu_zero),
                     std::to_string(i.mu_minus), std::to_string(i.mu_plus - i.mu_minus)});
    label_w = std::max(label_w, display_width(r.label));
    for (std::size_t c = 0; c < w.size(); ++c) w[c] = std::max(w[c], cells.back()[c].size());
  }
  std::ostringstream os;
  os << pad_right("", label_w);
  for (std::size_t c = 0; c < head.size(); ++c) os << "  " << pad_left(head[c], w[c]);
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << pad_right(rows[r].label, label_w);
    for (std::size_t c = 0; c < head.size(); ++c) os << "  " << pad_left(cells[r][c], w[c]);
    os << '\n';
  }
  return os.str();
}

std::string format_text(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.completion_n) os << "completion: x^" << *doc.completion_n << ", y^" << *doc.completion_n << ", z^" << *doc.completion_n << " where missing\n";
  if (doc.invariants && !doc.degeneration) {
    os << format_table({{"f", *doc.invariants}});
    const auto& v = doc.invariants->volume;
    os << "6Vol3=" << v.six_vol3 << " 2Vol2=" << v.two_vol2() << " Vol1=" << v.vol1()
       << "  j1=" << doc.invariants->jordan.j1 << " j2=" << doc.invariants->jordan.j2 << '\n';
  }
  if (doc.degeneration) {
    const auto& d = *doc.degeneration;
    if (doc.invariants) os << format_table({{"X_t", *doc.invariants}, {"X_0", d.after}});
    os << "erased " << format(d.erased) << (d.monomial ? " (monomial, " : " (primitive, ")
       << d.steps.size() << (d.steps.size() == 1 ? " step)\n" : " steps)\n");
    for (const auto& s : d.steps) {
      os << "  step " << format(s.erased) << ": 6V=" << s.counts.six_v << " N_new=" << s.counts.n_new
         << " N_inner=" << s.counts.n_inner << " N_outer=" << s.counts.n_outer << " delta=" << s.delta
         << (s.consistent ? " consistent\n" : " INCONSISTENT\n");
    }
    os << "predicted: " << deltas_text(d.predicted) << '\n';
    os << "direct:    " << deltas_text(d.direct) << '\n';
    os << (d.consistent ? "consistent\n" : "INCONSISTENT\n");
  }
  if (doc.search) {
    const auto& s = *doc.search;
    os << "search " << s.spec << '\n';
    os << "candidates=" << s.candidates << " attempts=" << s.attempts << " valid=" << s.processed
       << " consistent=" << s.consistent << " inconsistent=" << s.inconsistent;
    if (s.min_delta) os << " min_delta=" << *s.min_delta;
    os << '\n';
    for (const auto& [k, n] : s.skipped) os << "skipped " << k << ": " << n << '\n';
    os << "findings: " << s.findings.size() << '\n';
    for (const auto& f : s.findings) {
      os << "  dsign=" << f.signature_delta << " mu " << f.mu_generic << "->" << f.mu_degenerate
         << " dsign/mu(X_0)=" << f.per_mu_degenerate << " erase " << format(f.erased) << " from ";
      for (const auto& p : f.support) os << format(p);
      os << '\n';
    }
    if (!s.findings.empty()) {
      os << "max dsign/mu(X_0)=" << s.max_per_mu_degenerate << " max dsign/mu(X_t)=" << s.max_per_mu_generic << '\n';
    }
  }
  return os.str();
}

std::string render_obj(const NewtonPolyhedron& np, IntVec3 shift) {
  std::ostringstream os;
  os << "# Newton diagram: " << np.two_faces.size() << " compact faces\n";
  for (std::size_t i = 0; i < np.vertices.size(); ++i) {
    const IntVec3 v = np.vertices[i] + shift;
    os << "# v" << (i + 1) << " = " << format(np.vertices[i]) << '\n';
    os << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
  }
  for (const auto& tf : np.two_faces) {
    os << "# facet " << format(np.facets[tf.facet].normal) << " . p = " << np.facets[tf.facet].offset << '\n';
    os << 'f';
    for (std::size_t v : tf.cycle) os << ' ' << (v + 1);
    os << '\n';
  }
  return os.str();
}

std::string render_svg(const NewtonPolyhedron& np, IntVec3 shift) {
  // View along (1,1,1): the diagram is a graph over that direction, so faces never overlap.
  const double c = std::sqrt(3.0) / 2.0;
  auto project = [&](IntVec3 p) {
    const IntVec3 q = p + shift;
    return std::pair<double, double>{c * static_cast<double>(q.x - q.y),
                                     static_cast<double>(q.x + q.y) / 2.0 - static_cast<double>(q.z)};
  };
  std::vector<std::size_t> used;
  for (const auto& tf : np.two_faces) used.insert(used.end(), tf.cycle.begin(), tf.cycle.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  double lo_u = 0, hi_u = 0, lo_v = 0, hi_v = 0;
  bool first = true;
  for (std::size_t i : used) {
    const auto [u, v] = project(np.vertices[i]);
    if (first) {
      lo_u = hi_u = u;
      lo_v = hi_v = v;
      first = false;
    }
    lo_u = std::min(lo_u, u);
    hi_u = std::max(hi_u, u);
    lo_v = std::min(lo_v, v);
    hi_v = std::max(hi_v, v);
  }
  const double size = 640, margin = 60;
  const double span = std::max({hi_u - lo_u, hi_v - lo_v, 1.0});
  const double scale = (size - 2 * margin) / span;
  auto screen = [&](IntVec3 p) {
    const auto [u, v] = project(p);
    return std::pair<double, double>{margin + (u - lo_u) * scale, margin + (v - lo_v) * scale};
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& tf : np.two_faces) {
    os << "<polygon fill=\"#dbe7f3\" stroke=\"#1f3b57\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < tf.cycle.size(); ++k) {
      const auto [x, y] = screen(np.vertices[tf.cycle[k]]);
      os << (k ? " " : "") << fixed(x) << ',' << fixed(y);
    }
    os << "\"/>\n";
  }
  for (std::size_t i : used) {
    const auto [x, y] = screen(np.vertices[i]);
    os << "<circle cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"3\" fill=\"#1f3b57\"/>\n";
    os << "<text x=\"" << fixed(x + 5) << "\" y=\"" << fixed(y - 5)
       << "\" font-family=\"monospace\" font-size=\"11\">" << format(np.vertices[i] + shift) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ndsig
