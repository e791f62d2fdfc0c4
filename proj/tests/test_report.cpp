#include "helpers.hpp"
#include "ndsig/report.hpp"
#include "oracles.hpp"

using namespace ndsig;

namespace {
const char* kExample1 = "t*x*y*z + x^2*y*z + x*y^2*z + x*y*z^2 + x^4*y + y^4*z + z^4*x";

ReportDocument degenerate_doc() {
  const Support s = oracle::support(kExample1, {{"t", Rational(1)}});
  const DegenerationReport r = verify_degeneration(s, {1, 1, 1});
  ReportDocument doc;
  doc.command = "degenerate";
  doc.input = kExample1;
  doc.bindings = {{"t", "1"}};
  doc.completion_n = 13;
  doc.invariants = r.before;
  doc.degeneration = summarize(r);
  return doc;
}
}  // namespace

TEST_CASE("report: JSON round trip") {
  const ReportDocument doc = degenerate_doc();
  const std::string text = to_json(doc);
  CHECK(report_from_json(text) == doc);
  CHECK(text.find("\"six_v\": 7") != std::string::npos);
  CHECK(text.find("\"signature\": -35") != std::string::npos);

  FamilySpec fs;
  fs.mode = SearchMode::Family;
  fs.family = KnownFamily::TFamily;
  fs.k = {1, 3};
  ReportDocument sdoc;
  sdoc.command = "search";
  sdoc.search = summarize(hunt(fs), "family=t-family k=1..3");
  CHECK(report_from_json(to_json(sdoc)) == sdoc);
  CHECK(report_from_json(to_json(sdoc, -1)) == sdoc);
  REQUIRE(sdoc.search->findings.size() == 3);
  CHECK(sdoc.search->findings[0].per_mu_degenerate == "3/47");

  ReportDocument chain;
  chain.command = "degenerate";
  chain.degeneration = summarize(verify_support_erasure(oracle::support(
      "t*x*y*z + x^9*y + x^3*y*z + z^2*x + y^2*z", {{"t", Rational(1)}}), {1, 1, 1}));
  CHECK(chain.degeneration->monomial);
  CHECK(chain.degeneration->steps.size() == 2);
  CHECK(chain.degeneration->counts.six_v == 6);
  CHECK(report_from_json(to_json(chain)) == chain);
}

TEST_CASE("report: malformed JSON") {
  CHECK_ERROR_KIND(report_from_json("{"), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(report_from_json("{\"command\": 3}"), ErrorKind::InvalidArgument);
  CHECK_ERROR_KIND(report_from_json("[]"), ErrorKind::InvalidArgument);
}

TEST_CASE("report: table column order") {
  SingularityInvariants f0;
  f0.mu = 45;
  f0.mu_plus = 5;
  f0.mu_zero = 3;
  f0.mu_minus = 37;
  f0.signature = -32;
  const std::string t = format_table({{"X_0", f0}});
  const auto lines = t.substr(0, t.find('\n'));
  CHECK(lines.find("μ") < lines.find("μ₊"));
  CHECK(lines.find("μ₊") < lines.find("μ₀"));
  CHECK(lines.find("μ₀") < lines.find("μ₋"));
  CHECK(lines.find("μ₋") < lines.find("μ₊−μ₋"));
  CHECK(t.find("X_0  45   5   3  37    -32") != std::string::npos);
}

TEST_CASE("report: exit codes") {
  CHECK(exit_code_for(ErrorKind::SyntaxError) == 2);
  CHECK(exit_code_for(ErrorKind::InvalidArgument) == 2);
  CHECK(exit_code_for(ErrorKind::AssumptionViolated) == 3);
  CHECK(exit_code_for(ErrorKind::NonIsolated) == 4);
  CHECK(exit_code_for(ErrorKind::NotAVertex) == 5);
  CHECK(exit_code_for(ErrorKind::Io) == 6);
}

TEST_CASE("render: OBJ faces") {
  auto lines_with = [](const std::string& text, const std::string& prefix) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (line.rfind(prefix, 0) == 0) out.push_back(line);
    }
    return out;
  };
  const NewtonPolyhedron t = build_polyhedron(Support({{1, 1, 1}, {4, 0, 0}, {0, 5, 0}, {0, 0, 6}}));
  const std::string obj = render_obj(t);
  const auto faces = lines_with(obj, "f ");
  CHECK(faces.size() == 3);
  for (const auto& f : faces) CHECK(std::count(f.begin(), f.end(), ' ') == 3);
  CHECK(lines_with(obj, "v ").size() == 4);
  CHECK(obj.find("# v3 = (1,1,1)") != std::string::npos);

  const std::string a1 = render_obj(build_polyhedron(oracle::support("x^2+y^2+z^2")));
  CHECK(lines_with(a1, "f ").size() == 1);
  CHECK(lines_with(render_obj(t, {-1, -1, -1}), "v 0 0 0").size() == 1);
}

TEST_CASE("render: SVG labels") {
  const Analysis f0 = analyze_support(oracle::support(kExample1, {{"t", Rational(0)}}));
  const NewtonPolyhedron np = build_polyhedron(f0.support);
  const std::string svg = render_svg(np);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("(2,1,1)") != std::string::npos);
  std::size_t polys = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polys;
  CHECK(polys == np.two_faces.size());
  // The small triangle on (2,1,1), (1,2,1), (1,1,2).
  bool inner = false;
  for (const auto& tf : np.two_faces) {
    const auto poly = np.polygon(tf.facet);
    inner = inner || (poly.size() == 3 && std::find(poly.begin(), poly.end(), IntVec3{2, 1, 1}) != poly.end() &&
                      std::find(poly.begin(), poly.end(), IntVec3{1, 2, 1}) != poly.end() &&
                      std::find(poly.begin(), poly.end(), IntVec3{1, 1, 2}) != poly.end());
  }
  CHECK(inner);
  CHECK(render_svg(np, {-1, -1, -1}).find("(1,0,0)") != std::string::npos);
}
