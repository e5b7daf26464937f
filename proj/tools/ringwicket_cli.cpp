// Command-line front door for the ring and wicket group library: word
// problem solvers, representation images, relator sets and their
// verification, u*t normal forms, McCool generator words, coset
// enumeration, and the circle-configuration geometry.
//
// Exit codes: 0 success / affirmative answer, 1 negative answer,
// 2 input error, 3 inconclusive (enumeration overflow, degenerate or
// non-generic geometry).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ringwicket/coset.hpp"
#include "ringwicket/ring_geometry.hpp"
#include "ringwicket/verify.hpp"

namespace rw = ringwicket;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

rw::GroupId make_group(const std::string& family, int n) {
  const auto f = rw::family_from_name(family);
  if (!f) throw rw::ParseError("unknown group family '" + family + "'");
  if (n < 1) throw rw::ParseError("group size must be >= 1");
  return {*f, n};
}

rw::RepKind make_rep(const std::string& name) {
  const auto r = rw::rep_from_name(name);
  if (!r) throw rw::ParseError("unknown representation '" + name + "'");
  return *r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rw::ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string auto_lines(const rw::SymAuto& a) {
  std::string out;
  for (int i = 1; i <= a.rank; ++i)
    out += "x" + std::to_string(i) + " -> " + rw::to_string(a.images[i - 1]) + "\n";
  return out;
}

json auto_json(const rw::SymAuto& a) {
  json j = json::array();
  for (int i = 1; i <= a.rank; ++i)
    j.push_back({{"basis", i}, {"image", rw::to_string(a.images[i - 1])}});
  return j;
}

std::size_t tc_default_limit() {
  if (const char* env = std::getenv("MG_TC_LIMIT")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

struct Options {
  bool json_out = false;
};

void emit(const Options& opt, const std::string& text, const json& j) {
  if (opt.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_solve(const Options& opt, const std::string& family, int n, const std::string& word,
              bool expect_trivial) {
  const rw::GroupId g = make_group(family, n);
  const rw::GroupWord w = rw::parse_word(word, g);
  const bool trivial = rw::word_is_trivial(w);
  emit(opt, std::string(trivial ? "true" : "false") + "\n",
       {{"command", "solve"},
        {"group", std::string(rw::family_name(g.family))},
        {"n", g.n},
        {"word", rw::to_string(w)},
        {"trivial", trivial}});
  if (expect_trivial && !trivial) return kExitNegative;
  return trivial ? kExitOk : kExitNegative;
}

int cmd_eq(const Options& opt, const std::string& family, int n, const std::string& w1,
           const std::string& w2) {
  const rw::GroupId g = make_group(family, n);
  const rw::GroupWord a = rw::parse_word(w1, g);
  const rw::GroupWord b = rw::parse_word(w2, g);
  const bool equal = rw::words_equal(a, b);
  emit(opt, std::string(equal ? "true" : "false") + "\n",
       {{"command", "eq"},
        {"group", std::string(rw::family_name(g.family))},
        {"n", g.n},
        {"w1", rw::to_string(a)},
        {"w2", rw::to_string(b)},
        {"equal", equal}});
  return equal ? kExitOk : kExitNegative;
}

int cmd_image(const Options& opt, const std::string& family, int n, const std::string& rep,
              const std::string& word) {
  const rw::GroupId g = make_group(family, n);
  const rw::RepKind r = make_rep(rep);
  const rw::GroupWord w = rw::parse_word(word, g);
  if (!rw::rep_defined_for(g.family, r))
    throw rw::DomainError("representation-undefined-for-group: " +
                          std::string(rw::rep_name(r)) + " on " + g.str());
  std::string text;
  json j = {{"command", "image"},
            {"group", std::string(rw::family_name(g.family))},
            {"n", g.n},
            {"word", rw::to_string(w)},
            {"rep", std::string(rw::rep_name(r))}};
  switch (r) {
    case rw::RepKind::EndpointBraid: {
      const rw::BraidWord b = rw::endpoint_hom(w, rw::pinned_dictionary(g.n));
      text = rw::to_string(b) + "\n";
      j["strands"] = b.strands;
      j["braid"] = rw::to_string(b);
      break;
    }
    case rw::RepKind::Dahm: {
      const rw::SymAuto a = rw::dahm_rep(w);
      text = auto_lines(a);
      j["automorphism"] = auto_json(a);
      break;
    }
    case rw::RepKind::Signed: {
      const rw::SignedPerm s = rw::signed_image(w);
      text = rw::to_string(s) + "\n";
      j["perm"] = rw::cycle_string(s.p);
      j["signs"] = s.sign;
      break;
    }
    case rw::RepKind::Twist: {
      const rw::TwistPerm t = rw::twist_image(w);
      text = rw::to_string(t) + "\n";
      j["perm"] = rw::cycle_string(t.p);
      j["twists"] = t.twist;
      break;
    }
    case rw::RepKind::Perm: {
      const rw::Perm p = rw::perm_image(w);
      text = rw::cycle_string(p) + "\n";
      j["perm"] = rw::cycle_string(p);
      break;
    }
  }
  emit(opt, text, j);
  return kExitOk;
}

int cmd_relators(const Options& opt, const std::string& family, int n) {
  const rw::GroupId g = make_group(family, n);
  const rw::RelatorSet rs = rw::relators(g);
  std::string text;
  json rows = json::array();
  for (const auto& r : rs.relators) {
    text += rw::to_string(r) + "\n";
    rows.push_back(rw::to_string(r));
  }
  emit(opt, text,
       {{"command", "relators"},
        {"group", std::string(rw::family_name(g.family))},
        {"n", g.n},
        {"count", rs.relators.size()},
        {"relators", rows}});
  return kExitOk;
}

int cmd_relcheck(const Options& opt, const std::string& family, int n, const std::string& rep) {
  const rw::GroupId g = make_group(family, n);
  const rw::RepKind r = make_rep(rep);
  const rw::RelatorReport report = rw::verify_relators(g, r);
  std::string text;
  json rows = json::array();
  for (const auto& row : report.rows) {
    text += rw::to_string(row.relator) + "\t" + std::string(rw::rep_name(r)) + "\t" +
            (row.pass ? "pass" : "fail") + "\n";
    rows.push_back({{"relator", rw::to_string(row.relator)}, {"pass", row.pass}});
  }
  text += std::string("all-pass: ") + (report.all_pass() ? "true" : "false") + "\n";
  emit(opt, text,
       {{"command", "relcheck"},
        {"group", std::string(rw::family_name(g.family))},
        {"n", g.n},
        {"rep", std::string(rw::rep_name(r))},
        {"rows", rows},
        {"all_pass", report.all_pass()}});
  return report.all_pass() ? kExitOk : kExitNegative;
}

int cmd_nf(const Options& opt, const std::string& family, int n, const std::string& word) {
  const rw::GroupId g = make_group(family, n);
  const rw::GroupWord w = rw::parse_word(word, g);
  const rw::TauNormalForm nf = rw::tau_normal_form(w);
  emit(opt, "u: " + rw::to_string(nf.u) + "\nt: " + rw::to_string(nf.t) + "\n",
       {{"command", "nf"},
        {"group", std::string(rw::family_name(g.family))},
        {"n", g.n},
        {"word", rw::to_string(w)},
        {"u", rw::to_string(nf.u)},
        {"t", rw::to_string(nf.t)}});
  return kExitOk;
}

int cmd_alpha(const Options& opt, int n, int i, int j) {
  const rw::GroupWord w = rw::alpha_word(i, j, n);
  const rw::SymAuto a = rw::mccool(i, j, n);
  emit(opt, "word: " + rw::to_string(w) + "\n" + auto_lines(a),
       {{"command", "alpha"},
        {"n", n},
        {"i", i},
        {"j", j},
        {"word", rw::to_string(w)},
        {"automorphism", auto_json(a)}});
  return kExitOk;
}

int cmd_tc(const Options& opt, const std::string& family, int n,
           const std::vector<std::string>& extra, const std::vector<std::string>& subgroup,
           std::size_t limit, const std::string& csv_path) {
  const rw::GroupId g = make_group(family, n);
  const rw::RelatorSet rs = rw::relators(g);
  std::vector<rw::GroupWord> extras, subs;
  for (const auto& s : extra) extras.push_back(rw::parse_word(s, g));
  for (const auto& s : subgroup) subs.push_back(rw::parse_word(s, g));
  const rw::CosetTable t = rw::todd_coxeter(rs, extras, subs, limit);
  json j = {{"command", "tc"},
            {"group", std::string(rw::family_name(g.family))},
            {"n", g.n},
            {"limit", limit},
            {"complete", t.complete()}};
  if (!t.complete()) {
    emit(opt, "overflow at limit " + std::to_string(limit) + "\n", j);
    return kExitInconclusive;
  }
  j["cosets"] = t.coset_count;
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw rw::ParseError("cannot write file '" + csv_path + "'");
    out << rw::coset_table_csv(t);
    j["csv"] = csv_path;
  }
  emit(opt, "cosets: " + std::to_string(t.coset_count) + "\n", j);
  return kExitOk;
}

int cmd_pin(const Options& opt, int n) {
  const rw::PinResult res = rw::pin_dictionary(n);
  std::string text;
  json j = {{"command", "pin"}, {"n", n}};
  json gens = json::array();
  for (int i = 1; i <= n - 1; ++i) {
    text += "r" + std::to_string(i) + " -> " +
            rw::to_string(res.dictionary.braid_of(rw::rho(i))) + "\n";
    gens.push_back({{"generator", "r" + std::to_string(i)},
                    {"braid", rw::to_string(res.dictionary.braid_of(rw::rho(i)))}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    text += "s" + std::to_string(i) + " -> " +
            rw::to_string(res.dictionary.braid_of(rw::sigma(i))) + "\n";
    gens.push_back({{"generator", "s" + std::to_string(i)},
                    {"braid", rw::to_string(res.dictionary.braid_of(rw::sigma(i)))}});
  }
  for (int i = 1; i <= n; ++i) {
    text += "t" + std::to_string(i) + " -> " +
            rw::to_string(res.dictionary.braid_of(rw::tau(i))) + "\n";
    gens.push_back({{"generator", "t" + std::to_string(i)},
                    {"braid", rw::to_string(res.dictionary.braid_of(rw::tau(i)))}});
  }
  auto sign_str = [](const rw::GeneratorDictionary& d) {
    std::string s;
    for (int v : d.signs()) s += v > 0 ? '+' : '-';
    return s;
  };
  text += "winners:";
  json winners = json::array();
  for (const auto& w : res.winners) {
    text += " " + sign_str(w);
    winners.push_back(sign_str(w));
  }
  text += "\n";
  j["generators"] = gens;
  j["winners"] = winners;
  j["chosen"] = sign_str(res.dictionary);
  emit(opt, text, j);
  return kExitOk;
}

json config_json(const rw::geom::RingConfig& cfg) {
  json arr = json::array();
  for (const auto& c : cfg.circles)
    arr.push_back({{"center", {c.center.x, c.center.y, c.center.z}},
                   {"radius", c.radius},
                   {"normal", {c.normal.x, c.normal.y, c.normal.z}}});
  return arr;
}

int cmd_geom(const Options& opt, const std::string& sub, const std::string& path, double u,
             int grid, double reduce_below) {
  namespace geo = rw::geom;
  geo::RingConfig cfg = geo::parse_ring_config(read_file(path));
  if (sub == "link") {
    if (cfg.circles.size() != 2)
      throw rw::ParseError("geom link expects a file with exactly 2 circles");
    const geo::LinkVerdict v = geo::linked(cfg.circles[0], cfg.circles[1]);
    emit(opt, std::string(geo::to_string(v)) + "\n",
         {{"command", "geom link"}, {"file", path}, {"verdict", std::string(geo::to_string(v))}});
    if (v == geo::LinkVerdict::Degenerate) return kExitInconclusive;
    return v == geo::LinkVerdict::Linked ? kExitNegative : kExitOk;
  }
  if (sub == "validate") {
    const auto issue = geo::validation_issue(cfg);
    if (issue) {
      emit(opt, issue->str() + "\n",
           {{"command", "geom validate"}, {"file", path}, {"valid", false}, {"issue", issue->str()}});
      return issue->linked ? kExitNegative : kExitInconclusive;
    }
    emit(opt, "valid (" + std::to_string(cfg.circles.size()) + " circles)\n",
         {{"command", "geom validate"},
          {"file", path},
          {"valid", true},
          {"circles", cfg.circles.size()}});
    return kExitOk;
  }
  // remaining subcommands require a valid configuration
  cfg = geo::validate(cfg);
  if (sub == "complexity") {
    const double c = geo::complexity(cfg);
    emit(opt, geo::format_double(c) + "\n",
         {{"command", "geom complexity"}, {"file", path}, {"complexity", c}});
    return kExitOk;
  }
  if (sub == "shrink") {
    const geo::RingConfig out = geo::canonical_shrink(cfg, u);
    emit(opt, "u=" + geo::format_double(u) + "\n" + geo::to_string(out),
         {{"command", "geom shrink"}, {"file", path}, {"u", u}, {"circles", config_json(out)}});
    return kExitOk;
  }
  if (sub == "certify") {
    const geo::UnlinkCertificate cert = geo::generic_unlink_certificate(cfg, grid);
    std::string text = geo::to_string(cert);
    text += "final:\n" + geo::to_string(cert.final_config);
    text += std::string("disks-disjoint: ") + (cert.disks_disjoint_verified ? "true" : "false") +
            "\n";
    json j = {{"command", "geom certify"},
              {"file", path},
              {"grid", grid},
              {"disks_disjoint", cert.disks_disjoint_verified},
              {"final", config_json(cert.final_config)},
              {"frozen_radii", cert.frozen_radii}};
    if (reduce_below > 0) {
      const geo::RingConfig reduced = geo::reduce_complexity_below(cert.final_config, reduce_below);
      text += "reduced (complexity < " + geo::format_double(reduce_below) + "):\n" +
              geo::to_string(reduced);
      j["reduced"] = config_json(reduced);
      j["reduced_complexity"] = geo::complexity(reduced);
    }
    emit(opt, text, j);
    return cert.disks_disjoint_verified ? kExitOk : kExitNegative;
  }
  throw rw::ParseError("unknown geom subcommand '" + sub + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"motion groups of unlinked rings and wickets"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json_out, "mirror the report as JSON");

  std::string family = "R", rep = "dahm", word, word2, csv_path, geom_file;
  int n = 2, ai = 1, aj = 2;
  bool expect_trivial = false;
  double shrink_u = 0.0, reduce_below = 0.0;
  int grid = 8;
  std::vector<std::string> extra, subgroup;
  std::size_t limit = tc_default_limit();

  auto add_group_opts = [&](CLI::App* c) {
    c->add_option("--group", family, "group family: UW, W, UR, VR, R, PUR")->required();
    c->add_option("--n", n, "number of rings/wickets")->required();
  };

  auto* solve = app.add_subcommand("solve", "decide triviality of a word");
  add_group_opts(solve);
  solve->add_option("word", word, "word in the letter grammar")->required();
  solve->add_flag("--expect-trivial", expect_trivial, "exit 1 when the word is nontrivial");

  auto* eq = app.add_subcommand("eq", "decide equality of two words");
  add_group_opts(eq);
  eq->add_option("w1", word, "first word")->required();
  eq->add_option("w2", word2, "second word")->required();

  auto* image = app.add_subcommand("image", "representation image of a word");
  add_group_opts(image);
  image->add_option("--rep", rep, "braid | auto | perm | signed | twist")->required();
  image->add_option("word", word, "word in the letter grammar")->required();

  auto* relators_cmd = app.add_subcommand("relators", "dump the relator set");
  add_group_opts(relators_cmd);

  auto* relcheck = app.add_subcommand("relcheck", "verify relators under a representation");
  add_group_opts(relcheck);
  relcheck->add_option("--rep", rep, "braid | auto | perm | signed | twist")->required();

  auto* nf = app.add_subcommand("nf", "u*t normal form of a word");
  add_group_opts(nf);
  nf->add_option("word", word, "word in the letter grammar")->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "McCool generator word and automorphism");
  alpha_cmd->add_option("--n", n, "rank")->required();
  alpha_cmd->add_option("i", ai, "ring that moves")->required();
  alpha_cmd->add_option("j", aj, "ring passed through")->required();

  auto* tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  add_group_opts(tc);
  tc->add_option("--extra", extra, "extra relator (repeatable)");
  tc->add_option("--subgroup", subgroup, "subgroup generator word (repeatable)");
  tc->add_option("--limit", limit, "coset allocation limit (default 1e6 or MG_TC_LIMIT)");
  tc->add_option("--csv", csv_path, "write the standardized table as CSV");

  auto* pin = app.add_subcommand("pin", "pin the endpoint braid dictionary");
  pin->add_option("--n", n, "number of wickets")->required();

  auto* geom = app.add_subcommand("geom", "circle configuration geometry");
  geom->require_subcommand(1);
  for (const char* name : {"validate", "link", "complexity", "shrink", "certify"}) {
    auto* sub = geom->add_subcommand(name);
    sub->add_option("file", geom_file, "configuration file")->required();
    if (std::string(name) == "shrink")
      sub->add_option("--u", shrink_u, "slice height")->required();
    if (std::string(name) == "certify") {
      sub->add_option("--grid", grid, "extra trajectory samples (default 8)");
      sub->add_option("--reduce-below", reduce_below,
                      "also emit an in-place shrink with complexity below this");
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(solve)) return cmd_solve(opt, family, n, word, expect_trivial);
    if (app.got_subcommand(eq)) return cmd_eq(opt, family, n, word, word2);
    if (app.got_subcommand(image)) return cmd_image(opt, family, n, rep, word);
    if (app.got_subcommand(relators_cmd)) return cmd_relators(opt, family, n);
    if (app.got_subcommand(relcheck)) return cmd_relcheck(opt, family, n, rep);
    if (app.got_subcommand(nf)) return cmd_nf(opt, family, n, word);
    if (app.got_subcommand(alpha_cmd)) return cmd_alpha(opt, n, ai, aj);
    if (app.got_subcommand(tc)) return cmd_tc(opt, family, n, extra, subgroup, limit, csv_path);
    if (app.got_subcommand(pin)) return cmd_pin(opt, n);
    if (app.got_subcommand(geom)) {
      for (const auto* sub : geom->get_subcommands())
        return cmd_geom(opt, sub->get_name(), geom_file, shrink_u, grid, reduce_below);
    }
  } catch (const rw::InconclusiveError& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const rw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cerr << "error: no subcommand\n";
  return kExitInput;
}
