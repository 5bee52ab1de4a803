// twseg: stage-oriented driver. Every stage reads a job file (or the output
// of an earlier stage, which embeds its job), recomputes what it needs, and
// writes one JSON (or text) report.
//
// Exit codes: 0 pass, 1 input or configuration error, 2 validation failure.

#include "twseg/twseg.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using namespace twseg;
using io::json;

namespace {

struct Config {
  std::string input, output, assignment, format = "json";
  int max_degree = 6, max_stab = 6;
  int density_i = 1, density_s = -1, density_window = 4;
};

struct StageResult {
  json report;
  bool pass = true;
};

/// Thrown for failures that are mathematical verdicts rather than bad input.
struct stage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  if (path.empty()) throw input_error("--input is required");
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

struct Job {
  json raw;
  QuadraticPresentation a = QuadraticPresentation::free(GeneratorSet({"x"}));
  QuadraticPresentation b = a;
  TwistingSeed seed;
  std::optional<QuadraticPresentation> claimed;
  json normal;

  TwistData twist() const { return TwistData(seed, a, b); }

  std::optional<TriangularCoefficients> coefficients() const {
    if (seed.dim_v() != 2 || seed.dim_u() != 2) return std::nullopt;
    try {
      return TriangularCoefficients::from_twist(Twist2x2::from_seed(seed));
    } catch (const input_error&) {
      return std::nullopt;
    }
  }
};

Job parse_job(json j) {
  if (j.is_object() && j.contains("job")) j = j.at("job");
  if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("twist"))
    throw input_error("job needs \"A\", \"B\" and \"twist\"");
  Job job;
  job.raw = j;
  job.a = io::presentation_from_json(j.at("A"));
  job.b = io::presentation_from_json(j.at("B"));
  job.seed = io::seed_from_json(j.at("twist"));
  if (j.contains("claimed_presentation")) job.claimed = io::presentation_from_json(j.at("claimed_presentation"));
  if (j.contains("normal")) job.normal = j.at("normal");
  (void)job.twist();  // dimension checks
  return job;
}

json dims_json(const GradedQuotient& q, int n) {
  json out = json::array();
  for (int d = 0; d <= n; ++d) out.push_back(q.dim(d));
  return out;
}

json stage_header(const std::string& stage, const Job& job, const Config& cfg) {
  return json{{"stage", stage}, {"job", job.raw}, {"max_degree", cfg.max_degree}};
}

// ---------------------------------------------------------------- stages

StageResult validate_twist(const Job& job, const Config& cfg) {
  StageResult r{stage_header("validate-twist", job, cfg)};
  const auto d = validate_descent(job.twist());
  json descent{{"b_side", d.b_side}, {"a_side", d.a_side}, {"pass", d.pass()}};
  if (d.b_witness) descent["b_witness"] = io::to_json(*d.b_witness);
  if (d.a_witness) descent["a_witness"] = io::to_json(*d.a_witness);
  r.report["descent"] = descent;
  r.pass = d.pass();
  if (job.seed.dim_v() == 2 && job.seed.dim_u() == 2) {
    const auto t = validate_2x2(Twist2x2::from_seed(job.seed));
    r.report["block_conditions"] = {{"cond1", t.cond1}, {"cond2", t.cond2}, {"failures", t.failures}, {"pass", t.pass()}};
    r.report["validators_agree"] = t.pass() == d.pass();
    r.pass = r.pass && t.pass();
  }
  r.report["pass"] = r.pass;
  return r;
}

SegrePresentation segre_or_fail(const Job& job) {
  try {
    return segre_presentation(job.twist());
  } catch (const math_error& e) {
    throw stage_failure(std::string("segre: ") + e.what());
  }
}

StageResult segre(const Job& job, const Config& cfg) {
  StageResult r{stage_header("segre", job, cfg)};
  const auto sp = segre_or_fail(job);
  const auto& pres = sp.presentation;
  GradedQuotient q(pres, cfg.max_degree);
  r.report["presentation"] = io::to_json(pres);
  r.report["num_relations"] = pres.relations().dim();
  r.report["hilbert"] = dims_json(q, cfg.max_degree);
  const auto cv = cross_validate(job.twist(), cfg.max_degree, job.claimed);
  json cj{{"pass", cv.pass}, {"presentation_dims", cv.presentation_dims}, {"component_dims", cv.component_dims}};
  if (!cv.pass) {
    cj["failure_stage"] = cv.failure_stage;
    cj["failure_degree"] = cv.failure_degree;
    cj["failure_detail"] = cv.failure_detail;
    cj["counterexample"] = io::to_json(cv.counterexample);
  }
  r.report["cross_validation"] = cj;
  if (job.claimed) r.report["claimed_equals_computed"] = job.claimed->relations() == pres.relations();
  r.pass = cv.pass;
  r.report["pass"] = r.pass;
  return r;
}

StageResult dual(const Job& job, const Config& cfg) {
  StageResult r{stage_header("dual", job, cfg)};
  const auto sp = segre_or_fail(job);
  const auto d = quadratic_dual(sp.presentation);
  GradedQuotient q(d, cfg.max_degree);
  r.report["dual_presentation"] = io::to_json(d);
  r.report["num_relations"] = d.relations().dim();
  r.report["hilbert"] = dims_json(q, cfg.max_degree);
  const bool koszul = koszul_series_check(sp.presentation, cfg.max_degree);
  r.report["koszul_series_check"] = koszul;
  r.pass = koszul;
  r.report["pass"] = r.pass;
  return r;
}

struct NormalChoice {
  QuadraticPresentation pres;
  std::string algebra;
  std::optional<FreeElement> w;
  json search;  // filled when a support search ran
};

std::vector<Word> support_from_json(const GeneratorSet& g, const json& j) {
  std::vector<Word> out;
  for (const auto& w : j) out.push_back(io::word_from_json(g, w));
  return out;
}

NormalChoice choose_normal(const Job& job, const Config& cfg) {
  const json spec = job.normal.is_null() ? json::object() : job.normal;
  NormalChoice c{QuadraticPresentation::free(GeneratorSet({"x"})), spec.value("algebra", "dual"), std::nullopt, {}};
  if (c.algebra == "dual") {
    c.pres = quadratic_dual(segre_or_fail(job).presentation);
  } else if (c.algebra == "segre") {
    c.pres = segre_or_fail(job).presentation;
  } else if (c.algebra == "custom") {
    if (!spec.contains("presentation")) throw input_error("custom algebra needs \"presentation\"");
    c.pres = io::presentation_from_json(spec.at("presentation"));
  } else {
    throw input_error("normal.algebra must be dual, segre or custom");
  }
  const GeneratorSet& g = c.pres.gens();
  if (spec.contains("w")) {
    c.w = io::element_from_json(g, spec.at("w"));
    return c;
  }
  if (spec.contains("support")) {
    GradedQuotient q(c.pres, std::max(3, cfg.max_degree));
    const auto res = search_normal_degree2(q, support_from_json(g, spec.at("support")), default_seed());
    json found = json::array();
    for (const auto& f : res.found) found.push_back(io::to_json(g, q.lift(f.w)));
    auto spans = [&](const std::vector<std::vector<Vec>>& list) {
      json out = json::array();
      for (const auto& span : list) {
        json s = json::array();
        for (const auto& v : span) s.push_back(io::to_json(g, q.lift(GradedElement{2, v})));
        out.push_back(s);
      }
      return out;
    };
    std::vector<std::vector<Vec>> fam;
    for (const auto& f : res.families) fam.push_back(f.basis);
    c.search = {{"found", found},
                {"families", spans(fam)},
                {"pencils", spans(res.pencils)},
                {"degenerate_lines", spans(res.degenerate_lines)},
                {"all_normal", res.all_normal},
                {"inconclusive", res.inconclusive},
                {"notes", res.notes},
                {"refined_dim", res.refined_dim}};
    std::vector<Vec> pick;
    if (spec.contains("quotient_target")) {
      pick = select_by_quotient(c.pres, q, res, io::presentation_from_json(spec.at("quotient_target")));
      json sel = json::array();
      for (const auto& v : pick) sel.push_back(io::to_json(g, q.lift(GradedElement{2, v})));
      c.search["selected_by_quotient"] = sel;
    } else if (res.found.size() == 1 && res.families.empty() && res.pencils.empty()) {
      pick.push_back(res.found.front().w.coords);
    }
    if (pick.size() == 1) c.w = q.lift(GradedElement{2, pick.front()});
    return c;
  }
  // Closed form for lower-triangular diagonal twists.
  if (c.algebra == "dual") {
    if (auto k = job.coefficients()) {
      FreeElement w(2);
      w.add({2, 1}, k->b22);
      w.add({1, 3}, k->a21);
      w.add({1, 2}, k->a11);
      c.w = w;
      return c;
    }
  }
  throw input_error("no normal element given: set normal.w or normal.support");
}

struct NormalOutcome {
  NormalChoice choice;
  std::optional<NormalCertificate> cert;
  json report;
  bool pass = false;
};

NormalOutcome run_normal(const Job& job, const Config& cfg) {
  NormalOutcome o{choose_normal(job, cfg), std::nullopt, json::object(), false};
  const GeneratorSet& g = o.choice.pres.gens();
  o.report["algebra"] = o.choice.algebra;
  if (!o.choice.search.is_null()) o.report["search"] = o.choice.search;
  if (!o.choice.w) {
    o.report["verdict"] = "no unique candidate";
    return o;
  }
  GradedQuotient q(o.choice.pres, std::max(3, cfg.max_degree));
  const auto w = q.normal_form(*o.choice.w);
  const auto r = verify_normal(q, w);
  o.report["w"] = io::to_json(g, *o.choice.w);
  o.report["status"] = to_string(r.status);
  if (!r.ok()) {
    if (r.failing_generator >= 0) {
      o.report["failing_generator"] = g.name(static_cast<std::size_t>(r.failing_generator));
      o.report["defect"] = io::to_json(g, q.lift(GradedElement{3, r.defect}));
    }
    return o;
  }
  const auto reg = regularity_window(q, w, cfg.max_degree);
  json rows = json::array();
  for (const auto& row : reg.rows)
    rows.push_back({{"degree", row.degree}, {"dim", row.dim}, {"left_rank", row.left_rank}, {"right_rank", row.right_rank}});
  const bool extends = extend_automorphism(o.choice.pres, r.certificate->nu1);
  NormalCertificate cert = *r.certificate;
  cert.checked_degree = cfg.max_degree;
  json cj = io::to_json(q, cert);
  cj["regular_window"] = reg.regular;
  o.report["certificate"] = cj;
  o.report["regularity"] = rows;
  o.report["nu_extends"] = extends;
  o.cert = cert;
  o.pass = reg.regular && extends;
  return o;
}

StageResult normal(const Job& job, const Config& cfg) {
  StageResult r{stage_header("normal", job, cfg)};
  auto o = run_normal(job, cfg);
  r.report.update(o.report);
  r.pass = o.pass;
  r.report["pass"] = r.pass;
  return r;
}

struct CliffordOutcome {
  std::optional<CliffordAlgebra> algebra;
  std::optional<TElementTable> t_table;
  json report;
  bool pass = false;
};

json t_table_json(const TElementTable& t) {
  json products = json::array();
  for (const auto& row : t.products) {
    json r = json::array();
    for (const auto& v : row) r.push_back(io::to_json(v));
    products.push_back(r);
  }
  json elems = json::array();
  for (const auto& e : t.elements) elems.push_back(io::to_json(e));
  return {{"names", t.names}, {"elements", elems}, {"products", products}};
}

CliffordOutcome run_clifford(const Job& job, const Config& cfg) {
  CliffordOutcome o;
  auto n = run_normal(job, cfg);
  if (n.choice.algebra != "dual") throw input_error("clifford needs the normal element of the dual");
  if (!n.pass) throw stage_failure("clifford: normal stage failed (" + n.report.value("status", "no candidate") + ")");
  const auto st = stabilize(n.choice.pres, *n.cert, cfg.max_stab);
  o.report["stabilization"] = {{"stabilized", st.stabilized}, {"i0", st.i0}, {"dims", st.dims}};
  if (!st.stabilized) {
    o.report["verdict"] = "inconclusive: no stabilization up to max_stab";
    return o;
  }
  try {
    const auto k = job.coefficients();
    // The t-elements include a degree-4 word, so they need level >= 2.
    const int level = k ? std::max(st.i0, 2) : st.i0;
    auto c = clifford_algebra(n.choice.pres, *n.cert, st, level);
    const auto next = clifford_algebra(n.choice.pres, *n.cert, st, level + 1);
    json words = json::array();
    for (const auto& w : c.basis_words) words.push_back(io::word_to_json(n.choice.pres.gens(), w));
    o.report["level"] = c.level;
    o.report["basis_words"] = words;
    o.report["structure_constants"] = io::to_json(c.base);
    o.report["dim_at_next_level"] = next.base.dim;
    if (k) {
      o.t_table = evaluate_t_elements(c, *k);
      o.report["t_elements"] = t_table_json(*o.t_table);
    }
    o.pass = next.base.dim == c.base.dim;
    o.algebra = std::move(c);
  } catch (const math_error& e) {
    throw stage_failure(std::string("clifford: ") + e.what());
  }
  return o;
}

StageResult clifford(const Job& job, const Config& cfg) {
  StageResult r{stage_header("clifford", job, cfg)};
  r.report["max_stab"] = cfg.max_stab;
  auto o = run_clifford(job, cfg);
  r.report.update(o.report);
  r.pass = o.pass;
  r.report["pass"] = r.pass;
  return r;
}

/// {"images": {"name": [block, block, ...]}}; names are t-element names or
/// "e<i>" for basis vectors.
IsoReport check_assignment(const FinDimAlgebra& alg, const json& tj, const json& assignment) {
  if (!assignment.contains("images") || !assignment.at("images").is_object())
    throw input_error("assignment needs an \"images\" object");
  std::map<std::string, Vec> named;
  if (tj.is_object())
    for (std::size_t i = 0; i < tj.at("names").size(); ++i)
      named[tj.at("names")[i].get<std::string>()] = io::vec_from_json(tj.at("elements")[i]);
  std::vector<Vec> elements;
  std::vector<std::vector<Mat>> images;
  std::vector<std::string> names;
  for (const auto& [name, blocks] : assignment.at("images").items()) {
    Vec e;
    if (named.count(name)) {
      e = named.at(name);
    } else if (name.size() > 1 && name[0] == 'e' && name.find_first_not_of("0123456789", 1) == std::string::npos) {
      const auto i = std::stoul(name.substr(1));
      if (i >= alg.dim) throw input_error("assignment names basis vector " + name + " beyond the dimension");
      e = alg.basis(i);
    } else {
      throw input_error("assignment names unknown element " + name);
    }
    std::vector<Mat> bl;
    for (const auto& b : blocks) bl.push_back(io::mat_from_json(b));
    elements.push_back(std::move(e));
    images.push_back(std::move(bl));
    names.push_back(name);
  }
  return verify_explicit_iso(alg, elements, images, names);
}

StageResult analyze(const json& input, const Config& cfg) {
  json tj;
  FinDimAlgebra alg;
  json header;
  if (input.is_object() && input.contains("structure_constants")) {
    alg = io::algebra_from_json(input.at("structure_constants"));
    if (input.contains("t_elements")) tj = input.at("t_elements");
    header = {{"stage", "analyze"}, {"job", input.value("job", json())}, {"max_degree", input.value("max_degree", cfg.max_degree)}};
  } else if (input.is_object() && input.contains("table") && input.contains("unit")) {
    alg = io::algebra_from_json(input);
    header = {{"stage", "analyze"}, {"job", json()}, {"max_degree", cfg.max_degree}};
  } else {
    const Job job = parse_job(input);
    auto o = run_clifford(job, cfg);
    if (!o.algebra) throw stage_failure("analyze: clifford stage did not stabilize");
    alg = o.algebra->base;
    if (o.t_table) tj = t_table_json(*o.t_table);
    header = stage_header("analyze", job, cfg);
  }
  if (!alg.associative() || !alg.unital()) throw input_error("structure constants are not those of a unital associative algebra");
  StageResult r{header};
  const auto rad = radical(alg);
  r.report["dim"] = alg.dim;
  r.report["radical_dim"] = rad.dim();
  r.report["center_dim"] = center(alg).dim();
  r.report["semisimple"] = rad.dim() == 0;
  r.pass = rad.dim() == 0;
  if (r.pass) {
    const auto w = wedderburn_type(alg);
    r.report["blocks"] = w.blocks;
    r.report["split"] = w.split;
    r.report["obstructions"] = w.obstructions;
    r.pass = w.split;
  }
  if (!cfg.assignment.empty()) {
    const auto iso = check_assignment(alg, tj, read_json(cfg.assignment));
    r.report["iso_verified"] = iso.ok;
    if (!iso.ok) r.report["iso_failure"] = iso.reason;
    r.pass = r.pass && iso.ok;
  }
  r.report["pass"] = r.pass;
  return r;
}

StageResult density(const Job& job, const Config& cfg) {
  StageResult r{stage_header("density", job, cfg)};
  const int i = cfg.density_i, s = cfg.density_s;
  const int bound = std::max({std::abs(i), std::abs(s), std::abs(i + s)});
  const auto tr = smash_truncation(job.twist(), bound, cfg.density_window);
  const auto rep = density_window_check(tr, i, s);
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"t", e.t}, {"target_dim", e.target_dim}, {"span_dim", e.span_dim}, {"covered", e.covered()}});
  r.report["i"] = i;
  r.report["s"] = s;
  r.report["window"] = cfg.density_window;
  r.report["entries"] = entries;
  r.report["defects"] = rep.defects;
  r.report["proof_range_covered"] = rep.proof_range_covered;
  r.pass = rep.proof_range_covered;
  r.report["pass"] = r.pass;
  return r;
}

/// Merges <stage>.json files from a directory.
StageResult report(const std::string& dir, const Config& cfg) {
  (void)cfg;
  if (dir.empty() || !fs::is_directory(dir)) throw input_error("report needs --input DIRECTORY");
  const std::vector<std::string> expected = {"validate-twist", "segre", "dual", "normal", "clifford", "analyze"};
  const std::map<std::string, std::string> claim = {{"validate-twist", "twist_descends"},
                                                    {"segre", "segre_presentation"},
                                                    {"dual", "koszul_dual"},
                                                    {"normal", "normal_element"},
                                                    {"clifford", "clifford_algebra"},
                                                    {"analyze", "wedderburn_type"},
                                                    {"density", "density_window"}};
  StageResult r{json{{"stage", "report"}}};
  json stages = json::object(), summary = json::object(), missing = json::array(), warnings = json::array();
  std::set<int> degrees;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    json j = read_json(p.string());
    if (!j.is_object() || !j.contains("stage")) continue;
    const std::string stage = j.at("stage").get<std::string>();
    if (stage == "report") continue;
    std::string key = claim.count(stage) ? claim.at(stage) : stage;
    if (stage == "normal") key += "_in_" + j.value("algebra", std::string("dual"));
    if (j.contains("max_degree")) degrees.insert(j.at("max_degree").get<int>());
    json verdict{{"pass", j.value("pass", false)}, {"file", p.filename().string()}};
    if (stage == "analyze" && j.contains("blocks")) verdict["blocks"] = j.at("blocks");
    if (stage == "analyze" && j.contains("iso_verified")) verdict["iso_verified"] = j.at("iso_verified");
    if (stage == "segre") verdict["hilbert"] = j.value("hilbert", json::array());
    summary[key] = verdict;
    stages[p.stem().string()] = j;
    r.pass = r.pass && j.value("pass", false);
  }
  for (const auto& s : expected) {
    bool seen = false;
    for (const auto& [name, j] : stages.items()) seen = seen || j.value("stage", "") == s;
    if (!seen) {
      missing.push_back(s);
      summary[claim.at(s)] = "absent";
    }
  }
  if (degrees.size() > 1) {
    std::ostringstream os;
    os << "max_degree differs across stages:";
    for (int d : degrees) os << ' ' << d;
    warnings.push_back(os.str());
  }
  r.report["stages"] = stages;
  r.report["summary"] = summary;
  r.report["missing"] = missing;
  r.report["warnings"] = warnings;
  r.report["complete"] = missing.empty();
  r.report["pass"] = r.pass;
  return r;
}

// ---------------------------------------------------------------- output

void render_text(std::ostream& out, const json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (key == "job") continue;
    if (value.is_object()) {
      out << indent << key << ":\n";
      render_text(out, value, indent + "  ");
    } else if (value.is_string()) {
      out << indent << key << ": " << value.get<std::string>() << '\n';
    } else {
      out << indent << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(const StageResult& r, const Config& cfg) {
  std::ostringstream os;
  if (cfg.format == "text")
    render_text(os, r.report, "");
  else
    os << r.report.dump(2) << '\n';
  if (cfg.output.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(cfg.output);
    if (!f) throw input_error("cannot write " + cfg.output);
    f << os.str();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Segre products of quadratic algebras: presentations, duals, normal elements, C(A)."};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--input,-i", cfg.input, "job file, stage output, or directory (report)");
  app.add_option("--output,-o", cfg.output, "write the report here instead of stdout");
  app.add_option("--max-degree", cfg.max_degree, "certificate horizon for Hilbert tables and windows")
      ->check(CLI::Range(2, 40));
  app.add_option("--max-stab", cfg.max_stab, "largest stabilization index tried")->check(CLI::Range(0, 20));
  app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--assignment", cfg.assignment, "images of named elements for the isomorphism check");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate-twist", "check descent of the twisting seed and the 2x2 block conditions"},
      {"segre", "presentation, Hilbert table and cross-validation of the twisted Segre product"},
      {"dual", "quadratic dual of the Segre product and the Koszul series check"},
      {"normal", "certify (or search for) a degree-2 normal element"},
      {"clifford", "stabilize and build C(A) with its structure constants"},
      {"analyze", "radical, center, Wedderburn type and optional isomorphism check"},
      {"density", "density window of the smash product bigrading"},
      {"report", "merge the stage outputs of a directory"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);
  auto* dens = app.get_subcommand("density");
  dens->add_option("--i", cfg.density_i, "first component index");
  dens->add_option("--s", cfg.density_s, "second component index");
  dens->add_option("--window", cfg.density_window, "largest B-degree t")->check(CLI::Range(0, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    StageResult r;
    if (cmd == "report") {
      r = report(cfg.input, cfg);
    } else if (cmd == "analyze") {
      r = analyze(read_json(cfg.input), cfg);
    } else {
      const Job job = parse_job(read_json(cfg.input));
      if (cmd == "validate-twist") r = validate_twist(job, cfg);
      else if (cmd == "segre") r = segre(job, cfg);
      else if (cmd == "dual") r = dual(job, cfg);
      else if (cmd == "normal") r = normal(job, cfg);
      else if (cmd == "clifford") r = clifford(job, cfg);
      else if (cmd == "density") r = density(job, cfg);
    }
    emit(r, cfg);
    return r.pass ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "twseg " << cmd << ": input error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "twseg " << cmd << ": input error: " << e.what() << '\n';
    return 1;
  } catch (const stage_failure& e) {
    std::cerr << "twseg " << cmd << ": " << e.what() << '\n';
    return 2;
  } catch (const math_error& e) {
    std::cerr << "twseg " << cmd << ": " << e.what() << '\n';
    return 2;
  }
}
