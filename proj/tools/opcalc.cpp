#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "opcalc/error.hpp"
#include "opcalc/expression.hpp"
#include "opcalc/recognize.hpp"
#include "opcalc/verify.hpp"

using namespace opcalc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kVerify = 2, kInternal = 3 };

struct Options {
  Format format = Format::Text;
  bool recognize = false;
  bool dump_tables = false;
  std::string method = "direct";
};

struct MatchGroup {
  std::string key;
  std::string transform;
  std::size_t count;
};

std::vector<MatchGroup> grouped_matches(const OperadPresentation& o, std::vector<std::string>& warnings) {
  std::vector<MatchGroup> out;
  for (const auto& m : match_zoo(o, {}, {}, &warnings)) {
    if (!out.empty() && out.back().key == m.key) {
      ++out.back().count;
      continue;
    }
    out.push_back({m.key, to_string(m.transform, zoo_get(m.key).signature, o.signature), 1});
  }
  return out;
}

std::string symmetry_list(const Signature& s) {
  std::string out;
  for (const auto& g : s.generators()) {
    if (!out.empty()) out += ", ";
    out += g.name + ":" + to_string(g.symmetry);
  }
  return out;
}

void print_tables(const Options& opt, json* j) {
  const TableKind kinds[] = {TableKind::BlackAss, TableKind::BlackPreLieR, TableKind::BlackPreLieL,
                             TableKind::WhiteCup, TableKind::WhiteCupBracket};
  for (TableKind k : kinds) {
    if (opt.format == Format::Json) {
      (*j)["tables"][to_string(k)] = dump_table(k);
    } else {
      std::cout << dump_table(k) << "\n";
    }
  }
}

int emit(const OperadPresentation& o, const Options& opt, json extra = json::object()) {
  std::vector<std::string> warnings;
  std::vector<MatchGroup> matches;
  if (opt.recognize) matches = grouped_matches(o, warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  switch (opt.format) {
    case Format::Json: {
      json j = json::parse(render(o, Format::Json));
      j["dim_relations"] = o.dim_relations();
      j["dim_quotient"] = o.dim_quotient();
      if (opt.dump_tables) print_tables(opt, &j);
      if (opt.recognize) {
        j["matches"] = json::array();
        for (const auto& m : matches) {
          j["matches"].push_back({{"key", m.key}, {"transform", m.transform}, {"count", m.count}});
        }
      }
      for (auto& [k, v] : extra.items()) j[k] = v;
      std::cout << j.dump(2) << "\n";
      break;
    }
    case Format::Latex:
      if (opt.dump_tables) print_tables(opt, nullptr);
      std::cout << "% " << o.name << ": " << symmetry_list(o.signature) << "\n";
      std::cout << render(o, Format::Latex);
      for (const auto& m : matches) std::cout << "% match: " << m.key << " (" << m.transform << ")\n";
      break;
    case Format::Text:
      if (opt.dump_tables) print_tables(opt, nullptr);
      std::cout << "// " << o.name << "\n";
      std::cout << "// signature: " << symmetry_list(o.signature) << "  (p,q,r) = (" << o.signature.p()
                << "," << o.signature.q() << "," << o.signature.r() << ")\n";
      std::cout << "// arity 3: ambient " << o.signature.dim3() << ", relations " << o.dim_relations()
                << ", quotient " << o.dim_quotient() << "\n";
      for (auto& [k, v] : extra.items()) std::cout << "// " << k << ": " << v.dump() << "\n";
      std::cout << render(o, Format::Text);
      if (opt.recognize) {
        if (matches.empty()) std::cout << "// no zoo match\n";
        for (const auto& m : matches) {
          std::cout << "// match: " << m.key << " (" << m.transform << ")";
          if (m.count > 1) std::cout << " and " << m.count - 1 << " more transforms";
          std::cout << "\n";
        }
      }
      break;
  }
  return kOk;
}

std::string join(const std::vector<std::string>& w, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < w.size(); ++i) out += (i > from ? " " : "") + w[i];
  return out;
}

int run_white(const std::vector<std::string>& words, const Options& opt) {
  if (words.size() < 3) throw UsageError("usage: white {ass|lie|perm} SPEC");
  Family f = parse_white_family(words[1]);
  OperadPresentation o = evaluate_spec(join(words, 2));
  if (opt.method == "direct") return emit(white_direct(f, o), opt);
  if (opt.method == "dual") return emit(white_via_dual(f, o), opt);
  OperadPresentation a = white_direct(f, o);
  OperadPresentation b = white_via_dual(f, o);
  bool agree = a.relations == b.relations;
  int rc = emit(a, opt, {{"methods_agree", agree}});
  if (!agree) {
    std::cerr << "error: direct and dual white products disagree\n";
    return kInternal;
  }
  return rc;
}

int run_recognize(const std::vector<std::string>& words, Options opt) {
  if (words.size() < 2) throw UsageError("usage: recognize SPEC");
  opt.recognize = true;
  return emit(evaluate_spec(join(words, 1)), opt);
}

int run_show(const std::vector<std::string>& words, const Options& opt) {
  if (words.size() != 2) throw UsageError("usage: show KEY");
  OperadPresentation o = zoo_get(words[1]);
  std::string provenance;
  for (const auto& e : zoo_entries()) {
    std::string a = e.key, b = words[1];
    std::transform(a.begin(), a.end(), a.begin(), ::tolower);
    std::transform(b.begin(), b.end(), b.begin(), ::tolower);
    if (a == b) provenance = e.provenance;
  }
  json extra = json::object();
  if (!provenance.empty()) extra["provenance"] = provenance;
  return emit(o, opt, extra);
}

int run_verify(const std::vector<std::string>& words, const Options& opt) {
  if (words.size() != 2) throw UsageError("usage: verify {paper|duality|adjunction|all}");
  Suite s;
  try {
    s = parse_suite(words[1]);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  json results = json::array();
  bool ok = true;
  run_suite(s, [&](const CriterionResult& r) {
    ok = ok && r.pass;
    if (opt.format == Format::Json) {
      results.push_back({{"id", r.id},
                         {"title", r.title},
                         {"pass", r.pass},
                         {"seconds", r.seconds},
                         {"failures", r.failures},
                         {"notes", r.notes}});
      return;
    }
    std::cout << summary_line(r) << "\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
    std::cout.flush();
  });
  if (opt.format == Format::Json) {
    std::cout << json{{"suite", words[1]}, {"pass", ok}, {"results", results}}.dump(2) << "\n";
  } else {
    std::cout << (ok ? "all criteria pass" : "verification failed") << "\n";
  }
  return ok ? kOk : kVerify;
}

int run_parse(const std::vector<std::string>& words, const Options& opt) {
  if (words.size() != 2) throw UsageError("usage: parse FILE");
  return emit(load_file(words[1]), opt);
}

void load_zoo_dir(const std::string& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw UsageError("--zoo-dir: not a directory: " + dir);
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".op") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    OperadPresentation o = parse_presentation(ss.str());
    add_zoo_entry({o.name, "file " + p.string(), ss.str()});
  }
}

int dispatch(const std::vector<std::string>& words, const Options& opt) {
  const std::string& verb = words[0];
  if (verb == "white") return run_white(words, opt);
  if (verb == "recognize") return run_recognize(words, opt);
  if (verb == "show") return run_show(words, opt);
  if (verb == "verify") return run_verify(words, opt);
  if (verb == "parse") return run_parse(words, opt);
  if (verb == "black" || verb == "dual" || verb == "sum" || verb == "prod" || verb == "adm" ||
      verb == "opp") {
    return emit(evaluate_spec(join(words, 0)), opt);
  }
  throw UsageError("unknown verb '" + verb + "'");
}

int report(const Options& opt, const std::string& kind, const std::string& msg, int code) {
  if (opt.format == Format::Json) {
    std::cout << json{{"error", {{"kind", kind}, {"message", msg}}}, {"exit_code", code}}.dump(2) << "\n";
  } else {
    std::cerr << "error: " << msg << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculator for binary quadratic operads: black and white products, Koszul duals, recognition."};
  std::string format = "text";
  std::string zoo_dir;
  Options opt;
  std::vector<std::string> words;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_flag("--recognize", opt.recognize, "Append zoo matches");
  app.add_flag("--dump-tables", opt.dump_tables, "Print the cochain multiplication tables");
  app.add_option("--zoo-dir", zoo_dir, "Directory of extra .op presentations");
  app.add_option("--method", opt.method, "White product method")
      ->check(CLI::IsMember({"direct", "dual", "both"}));
  app.add_option("command", words,
                 "show KEY | black F SPEC | white F SPEC | dual SPEC | sum SPEC SPEC | prod SPEC SPEC |"
                 " adm SPEC | opp SPEC | recognize SPEC | verify SUITE | parse FILE")
      ->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (format == "json") opt.format = Format::Json;
    return report(opt, "usage", e.what(), kUsage);
  }
  opt.format = parse_format(format);
  try {
    if (!zoo_dir.empty()) load_zoo_dir(zoo_dir);
    return dispatch(words, opt);
  } catch (const ParseError& e) {
    return report(opt, "parse", e.what(), kUsage);
  } catch (const UsageError& e) {
    return report(opt, "usage", e.what(), kUsage);
  } catch (const LookupError& e) {
    return report(opt, "lookup", e.what(), kUsage);
  } catch (const StructuralError& e) {
    return report(opt, "structural", e.what(), kUsage);
  } catch (const std::exception& e) {
    return report(opt, "internal", e.what(), kInternal);
  }
}
