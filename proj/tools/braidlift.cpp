#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "braidlift/certificate.hpp"
#include "braidlift/coloring.hpp"
#include "braidlift/errors.hpp"
#include "braidlift/garside.hpp"
#include "braidlift/hurwitz.hpp"
#include "braidlift/pipeline.hpp"
#include "braidlift/pretzel.hpp"
#include "json.hpp"

using namespace braidlift;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kInternal = 3 };

struct VerificationFailure {
  std::string what;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedToken, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Literal PD text, or a path to a file holding it.
LinkDiagram load_pd(const std::string& arg) {
  auto looks_literal = [](const std::string& s) {
    return s.rfind("PD[", 0) == 0 || s.rfind("[[", 0) == 0 || s == "U";
  };
  return parse_pd(looks_literal(arg) ? arg : read_text(arg));
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("junk");
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::MalformedToken, "expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::MalformedToken, "empty integer list");
  return out;
}

int capped_bound(int bound) {
  if (const char* cap = std::getenv("BRAIDLIFT_MAX_BOUND")) {
    int c = std::atoi(cap);
    if (c > 0) bound = std::min(bound, c);
  }
  return bound;
}

void print(const json& j, bool as_json, const std::string& text) {
  if (as_json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

json coloring_json(const GColoring& c) {
  json strands = json::array();
  for (auto& p : c.perms) strands.push_back(p.str());
  for (auto& b : c.braids) strands.push_back(b.str());
  return strands;
}

// `arc<TAB>element` lines; elements in cycle notation (S_3) or braid-word text (B_3).
GColoring read_coloring(const LinkDiagram& d, const std::string& path) {
  std::istringstream in(read_text(path));
  std::string line;
  std::vector<std::optional<std::string>> per_strand(d.strand_count());
  bool braids = false, perms = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find_first_of("\t ");
    if (tab == std::string::npos) throw Error(ErrorKind::MalformedToken, "expected arc<TAB>element: " + line);
    int arc;
    try {
      arc = std::stoi(line.substr(0, tab));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::MalformedToken, "bad arc id: " + line);
    }
    std::string elem = line.substr(line.find_first_not_of("\t ", tab));
    int s = d.strand_of_arc(d.canonical_label(arc));
    (elem[0] == '(' ? perms : braids) = true;
    if (per_strand[s] && *per_strand[s] != elem)
      throw Error(ErrorKind::InvalidColoring, "arcs of one strand disagree at arc " + std::to_string(arc));
    per_strand[s] = elem;
  }
  if (braids && perms) throw Error(ErrorKind::InvalidColoring, "mixed permutation and braid elements");
  GColoring c;
  c.tag = braids ? GroupTag::B3 : GroupTag::Sn;
  for (int s = 0; s < d.strand_count(); ++s) {
    if (!per_strand[s]) throw Error(ErrorKind::InvalidColoring, "strand " + std::to_string(s) + " has no color");
    if (braids) c.braids.push_back(parse_braid(*per_strand[s], 3));
    else c.perms.push_back(Permutation::parse(*per_strand[s], 3));
  }
  return c;
}

std::vector<GColoring> nonconstant_classes(const LinkDiagram& d) {
  auto all = enumerate_colorings(d, 3);
  std::vector<GColoring> out;
  for (int i : coloring_classes(all))
    if (!all[i].is_constant()) out.push_back(all[i]);
  return out;
}

// ---------- report ----------

struct ReportRow {
  std::string name;
  json data;
  std::string csv;
};

ReportRow report_row(const std::string& name, const std::string& pd, const std::optional<TwoBridgeForm>& form,
                     int bound, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  ReportRow r{name, json::object(), ""};
  auto d = parse_pd(pd);
  r.data["name"] = name;
  auto delta = fox_alexander(wirtinger(d));
  long long det = std::llabs(delta.eval(-1));
  r.data["determinant"] = det;
  r.data["alexander"] = delta.str();
  if (form) r.data["two_bridge"] = std::to_string(form->p) + "/" + std::to_string(form->q);
  auto all = enumerate_colorings(d, 3);
  r.data["tricolorings"] = all.size();
  json verdicts = json::array();
  std::string summary;
  for (auto& c : nonconstant_classes(d)) {
    KnownForm kf;
    kf.two_bridge = form;
    auto v = decide_lift(d, c, bound, kf);
    json j = v.to_json();
    j["coloring"] = coloring_json(c);
    verdicts.push_back(j);
    if (!summary.empty()) summary += ";";
    summary += std::string(verdict_name(v.kind)) + "(" + v.route + ")";
  }
  r.data["verdicts"] = verdicts;
  if (timing)
    r.data["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.csv = name + "," + std::to_string(det) + "," + delta.str() + "," + std::to_string(all.size()) + "," +
          (summary.empty() ? "-" : summary);
  return r;
}

std::vector<std::pair<std::string, std::string>> read_table(const std::string& path) {
  std::istringstream in(read_text(path));
  std::vector<std::pair<std::string, std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw Error(ErrorKind::MalformedToken, "expected name<TAB>value: " + line);
    std::string rest = line.substr(tab + 1);
    rows.emplace_back(line.substr(0, tab), rest.substr(0, rest.find('\t')));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidlift: lifting branched covers to braided embeddings"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "JSON output");
  app.fallthrough();

  int n = 3;
  std::string word, word2;
  auto* normalize = app.add_subcommand("normalize", "Garside left normal form of a braid word");
  normalize->add_option("-n", n, "strands")->required();
  normalize->add_option("word", word, "braid word, e.g. \"1 -2 1\"")->required();

  auto* forget_cmd = app.add_subcommand("forget", "permutation of a braid word");
  forget_cmd->add_option("-n", n, "strands")->required();
  forget_cmd->add_option("word", word)->required();

  auto* equal_cmd = app.add_subcommand("equal", "decide equality of two braid words");
  equal_cmd->add_option("-n", n, "strands")->required();
  equal_cmd->add_option("first", word)->required();
  equal_cmd->add_option("second", word2)->required();

  std::string system_file;
  auto* lift_system = app.add_subcommand("lift-system", "lift a permutation system to a braid system");
  lift_system->add_option("file", system_file, "perm-system file")->required();

  auto* verify_system = app.add_subcommand("verify-system", "verify a braid system against a permutation system");
  verify_system->add_option("file", system_file, "file with a braid-system line and optionally a perm-system line")
      ->required();

  auto* cyclic = app.add_subcommand("cyclic", "lift the cyclic n-fold cover system");
  cyclic->add_option("-n", n, "degree")->required();

  std::string pd, two_bridge, q_text, coloring_file;
  int bound = 8, jobs = 1;
  auto* colorings = app.add_subcommand("colorings", "enumerate simple S_n-colorings");
  colorings->add_option("--pd", pd, "PD text or file")->required();
  colorings->add_option("-n,--n", n, "symmetric group degree");

  auto* alexander = app.add_subcommand("alexander", "Alexander polynomial");
  auto* alex_pd = alexander->add_option("--pd", pd, "PD text or file");
  auto* alex_tb = alexander->add_option("--two-bridge", two_bridge, "fraction p/q");
  auto* alex_pz = alexander->add_option("--pretzel,--q", q_text, "pretzel entries, e.g. 3,3,-1");
  alex_pd->excludes(alex_tb)->excludes(alex_pz);
  alex_tb->excludes(alex_pz);

  auto* lift = app.add_subcommand("lift", "decide whether tricolorings lift to simple B_3-colorings");
  auto* lift_pd = lift->add_option("--pd", pd, "PD text or file");
  auto* lift_pz = lift->add_option("--pretzel,--q", q_text, "pretzel entries; the diagram is built from them");
  lift_pd->excludes(lift_pz);
  lift->add_option("--coloring", coloring_file, "arc<TAB>element file; default: every nonconstant class");
  lift->add_option("--two-bridge", two_bridge, "fraction p/q of the diagram's knot");
  lift->add_option("--bound", bound, "search bound");

  auto* two_bridge_cmd = app.add_subcommand("two-bridge", "Schubert presentation and exact lift decision");
  two_bridge_cmd->add_option("--two-bridge,fraction", two_bridge, "fraction p/q")->required();

  bool s4 = false;
  int cross_check = 0;
  auto* pretzel = app.add_subcommand("classify-pretzel", "classify pretzel colorings by the closed-form rules");
  pretzel->add_option("--q", q_text, "entries, e.g. 3,3,6")->required();
  pretzel->add_flag("--s4", s4, "simple S_4-colorings instead of tricolorings");
  pretzel->add_option("--cross-check", cross_check, "also run the bounded search with this bound");

  std::string table, table2;
  bool csv = false, timing = false;
  auto* report = app.add_subcommand("report", "per-knot report over a knot table");
  report->add_option("table", table, "name<TAB>PD file")->required();
  report->add_option("--two-bridge", table2, "name<TAB>p/q file supplying exact two-bridge forms");
  report->add_option("--bound", bound, "search bound");
  report->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  report->add_flag("--csv", csv, "CSV instead of JSON");
  report->add_flag("--timing", timing, "include per-row seconds (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*normalize) {
      auto nf = normal_form(parse_braid(word, n));
      print({{"normal_form", nf.str()}, {"inf", nf.inf()}, {"sup", nf.sup()}}, as_json, nf.str() + "\n");
    } else if (*forget_cmd) {
      auto p = forget(parse_braid(word, n));
      print({{"permutation", p.str()}}, as_json, p.str() + "\n");
    } else if (*equal_cmd) {
      bool e = equal(parse_braid(word, n), parse_braid(word2, n));
      print({{"equal", e}}, as_json, e ? "true\n" : "false\n");
    } else if (*lift_system) {
      auto ps = parse_permutation_system(read_text(system_file));
      if (!smooth_obstruction(ps)) {
        json j{{"verdict", "not_liftable"},
               {"obstruction", "no sign assignment satisfies the smooth extension condition"}};
        print(j, true, "");
        return kOk;
      }
      auto r = lift_permutation_system(ps);
      auto rep = verify_braid_system(r.system, ps);
      json j{{"system", r.system.str()}, {"verification", rep.to_json()}, {"trace_moves", r.trace.moves.size()}};
      print(j, true, "");
      if (!rep.pass()) throw VerificationFailure{"lifted system failed verification"};
    } else if (*verify_system) {
      std::istringstream in(read_text(system_file));
      std::string line, braid_line, perm_line;
      while (std::getline(in, line)) {
        if (line.rfind("braid-system", 0) == 0) braid_line = line;
        else if (line.rfind("perm-system", 0) == 0) perm_line = line;
      }
      if (braid_line.empty()) throw Error(ErrorKind::MalformedToken, "no braid-system line");
      auto bs = parse_braid_system(braid_line);
      // Files carry no certificates; derive them where a split conjugator exists.
      bs.certificates.resize(bs.entries.size());
      for (size_t i = 0; i < bs.entries.size(); ++i)
        if (!bs.certificates[i]) bs.certificates[i] = certify_split(bs.entries[i]);
      PermutationSystem ps;
      if (perm_line.empty()) {
        std::vector<Permutation> e;
        for (auto& b : bs.entries) e.push_back(forget(b));
        ps = PermutationSystem(bs.n, e);
      } else {
        ps = parse_permutation_system(perm_line);
      }
      auto rep = verify_braid_system(bs, ps);
      print(rep.to_json(), true, "");
      if (!rep.pass()) throw VerificationFailure{"braid system failed verification"};
    } else if (*cyclic) {
      auto c = lift_cyclic_cover(n);
      json j;
      if (c.system) {
        std::vector<Permutation> e(n, forget(c.system->entries[0]));
        for (int i = 0; i < n; ++i) e[i] = forget(c.system->entries[i]);
        auto rep = verify_braid_system(*c.system, PermutationSystem(n, e));
        j = {{"system", c.system->str()}, {"verification", rep.to_json()}};
        print(j, true, "");
        if (!rep.pass()) throw VerificationFailure{"cyclic system failed verification"};
      } else {
        print({{"verdict", "not_liftable"}, {"obstruction", c.obstruction}}, true, "");
      }
    } else if (*colorings) {
      auto d = load_pd(pd);
      auto all = enumerate_colorings(d, n);
      json list = json::array();
      std::string text;
      for (int i : coloring_classes(all)) {
        list.push_back({{"strands", coloring_json(all[i])}, {"constant", all[i].is_constant()}});
        text += all[i].str() + "\n";
      }
      json j{{"count", all.size()}, {"classes", list}};
      print(j, as_json, std::to_string(all.size()) + " colorings, " + std::to_string(list.size()) + " classes\n" + text);
    } else if (*alexander) {
      WirtingerPresentation pres;
      if (!pd.empty()) pres = wirtinger(load_pd(pd));
      else if (!two_bridge.empty()) pres = two_bridge_presentation(parse_fraction(two_bridge));
      else if (!q_text.empty()) pres = wirtinger(pretzel_diagram(parse_int_list(q_text)));
      else throw Error(ErrorKind::MalformedToken, "give --pd, --two-bridge or --pretzel");
      auto delta = fox_alexander(pres);
      long long det = std::llabs(delta.eval(-1));
      auto ob = trefoil_divisibility_obstruction(delta);
      json j{{"alexander", delta.str()},
             {"determinant", det},
             {"trefoil_divisibility", ob == Obstruction::Obstructed ? "obstructed" : "inconclusive"}};
      print(j, as_json, delta.str() + "\n");
    } else if (*lift) {
      LinkDiagram d;
      KnownForm form;
      if (!pd.empty()) d = load_pd(pd);
      else if (!q_text.empty()) {
        form.pretzel = parse_int_list(q_text);
        d = pretzel_diagram(*form.pretzel);
      } else {
        throw Error(ErrorKind::MalformedToken, "give --pd or --pretzel");
      }
      if (!two_bridge.empty()) form.two_bridge = parse_fraction(two_bridge);
      int b = capped_bound(bound);
      json out = json::array();
      std::vector<GColoring> todo;
      if (!coloring_file.empty()) {
        auto c = read_coloring(d, coloring_file);
        if (c.tag == GroupTag::B3) {
          // A braid coloring is its own witness.
          bool ok = c.is_valid(d);
          for (auto& w : c.braids) ok = ok && forget(w).is_transposition();
          json j{{"verdict", ok ? "liftable" : "invalid"}, {"witness", coloring_json(c)}, {"route", "given"}};
          print(j, true, "");
          if (!ok) throw VerificationFailure{"braid coloring fails a crossing relation"};
          return kOk;
        }
        todo.push_back(c);
      } else {
        todo = nonconstant_classes(d);
      }
      for (auto& c : todo) {
        auto v = decide_lift(d, c, b, form);
        json j = v.to_json();
        j["coloring"] = coloring_json(c);
        out.push_back(j);
      }
      print(out, true, "");
    } else if (*two_bridge_cmd) {
      auto f = parse_fraction(two_bridge);
      auto pres = two_bridge_presentation(f);
      json j{{"fraction", std::to_string(f.p) + "/" + std::to_string(f.q)},
             {"schubert_word", schubert_word(f).str()},
             {"relator", pres.relators[0].str()}};
      if (f.p % 2) {
        j["alexander"] = fox_alexander(pres).str();
        if (f.p % 3 == 0) {
          auto v = two_bridge_lift_decision(pres, Permutation::transposition(3, 1, 2),
                                            Permutation::transposition(3, 2, 3));
          v.route = "two-bridge";
          j["tricoloring"] = v.to_json();
        } else {
          j["tricoloring"] = "none";
        }
      }
      print(j, true, "");
    } else if (*pretzel) {
      auto q = parse_int_list(q_text);
      json out = json::array();
      LinkDiagram d = pretzel_diagram(q);
      for (auto& c : classify_pretzel(q, s4 ? 4 : 3)) {
        json j = c.verdict.to_json();
        j["coloring"] = coloring_json(c.coloring);
        json flags = json::array();
        for (bool f : c.region_constant) flags.push_back(f);
        j["region_constant"] = flags;
        if (cross_check > 0 && !s4) {
          auto r = b3_lift_search(d, c.coloring, capped_bound(cross_check));
          j["search"] = r.verdict.to_json();
          bool disagree = (c.verdict.kind == PretzelKind::Liftable && r.verdict.kind != VerdictKind::Liftable) ||
                          (c.verdict.kind == PretzelKind::NotLiftable && r.verdict.kind == VerdictKind::Liftable);
          if (disagree) {
            print(out, true, "");
            throw Error(ErrorKind::InternalInconsistency, "classifier and search disagree");
          }
        }
        out.push_back(j);
      }
      print(out, true, "");
    } else if (*report) {
      auto rows = read_table(table);
      std::map<std::string, TwoBridgeForm> forms;
      if (!table2.empty())
        for (auto& [name, frac] : read_table(table2)) forms[name] = parse_fraction(frac);
      int b = capped_bound(bound);
      std::vector<std::optional<ReportRow>> done(rows.size());
      std::vector<std::string> errors(rows.size());
      std::atomic<size_t> next{0};
      auto worker = [&] {
        for (size_t i; (i = next++) < rows.size();) {
          std::optional<TwoBridgeForm> f;
          if (auto it = forms.find(rows[i].first); it != forms.end()) f = it->second;
          try {
            done[i] = report_row(rows[i].first, rows[i].second, f, b, timing);
          } catch (const Error& e) {
            errors[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      for (size_t i = 0; i < rows.size(); ++i)
        if (!done[i]) throw Error(ErrorKind::MalformedPD, rows[i].first + ": " + errors[i]);
      if (csv) {
        std::cout << "name,determinant,alexander,tricolorings,verdicts\n";
        for (auto& r : done) std::cout << r->csv << "\n";
      } else {
        json out = json::array();
        for (auto& r : done) out.push_back(r->data);
        std::cout << out.dump(2) << "\n";
      }
    }
  } catch (const VerificationFailure& v) {
    std::cerr << "verification failed: " << v.what << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kInternal : kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
