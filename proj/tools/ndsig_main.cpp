#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ndsig/poly_parser.hpp"
#include "ndsig/report.hpp"

namespace {

using namespace ndsig;

struct Common {
  std::vector<std::string> sets;
  std::optional<std::int64_t> completion;
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--set", c.sets, "parameter binding name=value (repeatable)");
  cmd->add_option("--completion", c.completion, "exponent n of the pure powers added to a non-convenient support");
  cmd->add_flag("--json", c.json, "print the report as JSON");
}

Bindings parse_bindings(const std::vector<std::string>& sets,
                        std::vector<std::pair<std::string, std::string>>& echo) {
  Bindings b;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::InvalidArgument, "--set expects name=value, got '" + s + "'");
    }
    const std::string name = s.substr(0, eq);
    const Rational value = parse_rational(s.substr(eq + 1));
    b[name] = value;
    echo.emplace_back(name, to_string(value));
  }
  return b;
}

ExponentVector parse_vertex(const std::string& text) {
  std::vector<std::int64_t> c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    const std::string part = text.substr(pos, comma - pos);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size()) {
      throw Error(ErrorKind::InvalidArgument, "vertex must look like a,b,c, got '" + text + "'");
    }
    c.push_back(v);
    pos = comma + 1;
  }
  if (c.size() != 3) throw Error(ErrorKind::InvalidArgument, "vertex must have three coordinates");
  return {c[0], c[1], c[2]};
}

IntRange parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " expects lo..hi, got '" + text + "'");
  }
}

void emit(const ReportDocument& doc, bool json) {
  std::cout << (json ? to_json(doc) + "\n" : format_text(doc));
}

ReportDocument start(const std::string& command, const std::string& poly, const Common& c,
                     Support& support, AnalysisOptions& opts) {
  ReportDocument doc;
  doc.command = command;
  doc.input = poly;
  const Bindings b = parse_bindings(c.sets, doc.bindings);
  support = support_of(parse_polynomial(poly, b));
  opts.completion = c.completion;
  return doc;
}

int run_analyze(const std::string& poly, const Common& c) {
  Support s;
  AnalysisOptions opts;
  ReportDocument doc = start("analyze", poly, c, s, opts);
  const Analysis an = analyze_support(s, opts);
  doc.completion_n = an.completion_n;
  doc.invariants = an.invariants;
  emit(doc, c.json);
  return 0;
}

int run_degenerate(const std::string& poly, const std::string& vertex, bool monomial, const Common& c) {
  Support s;
  AnalysisOptions opts;
  ReportDocument doc = start("degenerate", poly, c, s, opts);
  const ExponentVector a = parse_vertex(vertex);
  if (monomial) {
    const ErasureChainReport r = verify_support_erasure(s, a, opts);
    doc.completion_n = r.completion_n;
    doc.invariants = r.before;
    doc.degeneration = summarize(r);
  } else {
    const Analysis an = analyze_support(s, opts);
    const DegenerationReport r = verify_degeneration(s, a, opts);
    doc.completion_n = an.completion_n;
    doc.invariants = r.before;
    doc.degeneration = summarize(r);
  }
  emit(doc, c.json);
  return doc.degeneration->consistent ? 0 : 1;
}

std::string echo(const FamilySpec& f) {
  std::ostringstream os;
  switch (f.mode) {
    case SearchMode::Random:
    case SearchMode::Grid:
      os << (f.mode == SearchMode::Random ? "random" : "grid") << " box=" << f.box
         << " points=" << f.max_points << " count=" << f.count;
      if (f.mode == SearchMode::Random) os << " seed=" << f.seed;
      break;
    case SearchMode::Family:
      switch (f.family) {
        case KnownFamily::Example1: os << "family=example1"; break;
        case KnownFamily::TFamily: os << "family=t-family k=" << f.k.lo << ".." << f.k.hi; break;
        case KnownFamily::Tpqr:
          os << "family=tpqr p=" << f.p.lo << ".." << f.p.hi << " q=" << f.q.lo << ".." << f.q.hi
             << " r=" << f.r.lo << ".." << f.r.hi;
          break;
      }
      break;
  }
  return os.str();
}

struct SearchArgs {
  std::string family;
  std::string k = "1..6", p = "3..6", q = "3..6", r = "3..6";
  bool random = false;
  bool grid = false;
  std::int64_t box = 3;
  std::int64_t points = 4;
  std::int64_t count = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool json = false;
};

int run_search(const SearchArgs& a) {
  FamilySpec f;
  const int modes = static_cast<int>(a.random) + static_cast<int>(a.grid) + static_cast<int>(!a.family.empty());
  if (modes != 1) throw Error(ErrorKind::InvalidArgument, "choose exactly one of --family, --random, --grid");
  if (!a.family.empty()) {
    f.mode = SearchMode::Family;
    if (a.family == "example1") {
      f.family = KnownFamily::Example1;
    } else if (a.family == "t-family") {
      f.family = KnownFamily::TFamily;
      f.k = parse_range(a.k, "--k");
    } else if (a.family == "tpqr") {
      f.family = KnownFamily::Tpqr;
      f.p = parse_range(a.p, "--p");
      f.q = parse_range(a.q, "--q");
      f.r = parse_range(a.r, "--r");
    } else {
      throw Error(ErrorKind::InvalidArgument, "unknown family '" + a.family + "' (example1, t-family, tpqr)");
    }
  } else {
    f.mode = a.random ? SearchMode::Random : SearchMode::Grid;
    f.box = a.box;
    f.max_points = a.points;
    f.count = a.count;
    f.seed = a.seed;
  }
  f.threads = a.threads;
  validate(f);
  const HuntResult h = hunt(f);
  ReportDocument doc;
  doc.command = "search";
  doc.search = summarize(h, echo(f));
  emit(doc, a.json);
  return h.inconsistent == 0 ? 0 : 1;
}

int run_render(const std::string& poly, const std::string& out, bool shift, const Common& c) {
  Support s;
  AnalysisOptions opts;
  ReportDocument doc = start("render", poly, c, s, opts);
  const Analysis an = analyze_support(s, opts);
  const NewtonPolyhedron np = build_polyhedron(an.support);
  const IntVec3 d = shift ? IntVec3{-1, -1, -1} : IntVec3{0, 0, 0};
  for (const auto& [ext, text] : {std::pair{".obj", render_obj(np, d)}, std::pair{".svg", render_svg(np, d)}}) {
    const std::string path = out + ext;
    std::ofstream f(path, std::ios::binary);
    if (!(f << text) || !f.flush()) throw Error(ErrorKind::Io, "cannot write " + path);
  }
  doc.completion_n = an.completion_n;
  doc.invariants = an.invariants;
  if (c.json) {
    emit(doc, true);
  } else {
    std::cout << "wrote " << out << ".obj and " << out << ".svg (" << np.two_faces.size()
              << " compact faces, " << np.vertices.size() << " vertices)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature and Milnor-number invariants of Newton non-degenerate surface germs"};
  app.set_version_flag("--version", std::string(ndsig::engine_version()));
  app.require_subcommand(1);

  Common common;
  std::string poly, vertex, out;
  bool monomial = false, shift = false;

  auto* analyze = app.add_subcommand("analyze", "invariants of one germ");
  analyze->add_option("polynomial", poly, "polynomial in x, y, z")->required();
  add_common(analyze, common);

  auto* degenerate = app.add_subcommand("degenerate", "erase a vertex and compare predicted with direct deltas");
  degenerate->add_option("polynomial", poly)->required();
  degenerate->add_option("vertex", vertex, "exponent a,b,c")->required();
  degenerate->add_flag("--monomial", monomial, "drop the monomial, splitting into primitive erasures when needed");
  add_common(degenerate, common);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "hunt for signature-increasing degenerations");
  search->add_option("--family", sa.family, "example1 | t-family | tpqr");
  search->add_option("--k", sa.k, "k range for t-family, lo..hi");
  search->add_option("--p", sa.p, "p range for tpqr");
  search->add_option("--q", sa.q, "q range for tpqr");
  search->add_option("--r", sa.r, "r range for tpqr");
  search->add_flag("--random", sa.random, "random candidates");
  search->add_flag("--grid", sa.grid, "exhaustive candidates in generation order");
  search->add_option("--box", sa.box, "coordinate bound B of sampled points");
  search->add_option("--points", sa.points, "support size m, three of them pure powers");
  search->add_option("--count", sa.count, "number of candidates");
  search->add_option("--seed", sa.seed, "random seed");
  search->add_option("--threads", sa.threads, "worker threads, 0 = all cores");
  search->add_flag("--json", sa.json, "print the report as JSON");

  auto* render = app.add_subcommand("render", "write the diagram as OBJ and SVG");
  render->add_option("polynomial", poly)->required();
  render->add_option("--out", out, "output path prefix")->required();
  render->add_flag("--shift", shift, "translate by (-1,-1,-1), i.e. draw the diagram of f/xyz");
  add_common(render, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return run_analyze(poly, common);
    if (*degenerate) return run_degenerate(poly, vertex, monomial, common);
    if (*search) return run_search(sa);
    if (*render) return run_render(poly, out, shift, common);
  } catch (const ndsig::Error& e) {
    std::cerr << "ndsig: " << e.what() << '\n';
    return ndsig::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "ndsig: internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
