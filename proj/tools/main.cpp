#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <iostream>
#include <string>
#include <variant>

#include "kring/corpus.hpp"
#include "kring/json_io.hpp"

namespace {

using namespace kring;

constexpr int kExitOk = 0;      // computation completed / all checks passed
constexpr int kExitFail = 1;    // validation or verification failure
constexpr int kExitSchema = 2;  // malformed input, IO, or usage problems

struct Options {
  std::string input;
  std::string kind = "auto";
  std::string format = "text";
  int max_radius = 3;

  bool json() const { return format == "json"; }
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw SchemaError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

// Parse, validate, and hand a characteristic pair to the command body.
// Fan inputs are validated as fans first and then translated.
int with_char_pair(const Options& o, const std::function<int(const CharPair&)>& body) {
  auto parsed = parse_input(load_json(o.input), o.kind == "auto" ? "" : o.kind);
  if (std::holds_alternative<Fan>(parsed)) {
    const Fan& fan = std::get<Fan>(parsed);
    FanReport rep = validate_fan(fan);
    if (!rep.ok()) {
      emit(o, to_json(rep), to_text(rep));
      return kExitFail;
    }
    return body(to_char_pair(fan));
  }
  const CharPair& cp = std::get<CharPair>(parsed);
  ValidationReport rep = validate_char_pair(cp);
  if (!rep.ok()) {
    emit(o, to_json(rep), to_text(rep));
    return kExitFail;
  }
  return body(cp);
}

int cmd_validate(const Options& o) {
  auto parsed = parse_input(load_json(o.input), o.kind == "auto" ? "" : o.kind);
  if (std::holds_alternative<Fan>(parsed)) {
    FanReport rep = validate_fan(std::get<Fan>(parsed));
    emit(o, to_json(rep), to_text(rep));
    return rep.ok() ? kExitOk : kExitFail;
  }
  ValidationReport rep = validate_char_pair(std::get<CharPair>(parsed));
  emit(o, to_json(rep), to_text(rep));
  return rep.ok() ? kExitOk : kExitFail;
}

// Grow the sampling radius until the quotient reaches rank chi without
// torsion.  Runs that hit the cap report failure instead of partial success.
struct StabilizedPresentation {
  ZModulePresentation pres;
  int radius_used = 0;
  bool stabilized = false;
};

StabilizedPresentation stabilize(const CharPair& cp, int max_radius) {
  StabilizedPresentation out;
  const int chi = euler_characteristic(cp);
  for (int r = 1; r <= max_radius; ++r) {
    out.pres = kring_presentation(cp, build_relations(cp, r));
    out.radius_used = r;
    if (out.pres.quotient_rank() == chi && out.pres.torsion_free()) {
      out.stabilized = true;
      break;
    }
  }
  return out;
}

int cmd_kring(const Options& o) {
  return with_char_pair(o, [&](const CharPair& cp) {
    StabilizedPresentation st = stabilize(cp, o.max_radius);
    Json j = to_json(st.pres);
    j["u_radius_used"] = st.radius_used;
    j["stabilized"] = st.stabilized;
    std::string text = to_text(st.pres) + "u-radius used: " + std::to_string(st.radius_used) +
                       (st.stabilized ? "\n" : "  (rank did not stabilize at chi)\n");
    emit(o, j, text);
    return st.stabilized ? kExitOk : kExitFail;
  });
}

int cmd_cohomology(const Options& o) {
  return with_char_pair(o, [&](const CharPair& cp) {
    CohomologySummary css = cohomology_presentation(cp);
    emit(o, to_json(css), to_text(css));
    return kExitOk;
  });
}

int cmd_gr_compare(const Options& o) {
  return with_char_pair(o, [&](const CharPair& cp) {
    StabilizedPresentation st = stabilize(cp, o.max_radius);
    if (!st.stabilized || !st.pres.torsion_free()) {
      Json j;
      j["stabilized"] = false;
      j["u_radius_used"] = st.radius_used;
      emit(o, j, "K-ring presentation did not stabilize; no graded comparison\n");
      return kExitFail;
    }
    GradedRanks gr = graded_ranks_of_kring(cp, st.pres);
    CohomologySummary css = cohomology_presentation(cp);
    bool match = gr.per_degree == css.ranks;
    Json j;
    j["gr_ranks"] = to_json(gr);
    j["cohomology_ranks"] = css.ranks;
    j["match"] = match;
    std::ostringstream text;
    text << "gr ranks:         " << Json(gr.per_degree).dump() << '\n'
         << "cohomology ranks: " << Json(css.ranks).dump() << '\n'
         << (match ? "graded pieces match\n" : "MISMATCH\n");
    emit(o, j, text.str());
    return match ? kExitOk : kExitFail;
  });
}

int cmd_basis(const Options& o) {
  return with_char_pair(o, [&](const CharPair& cp) {
    MonomialBasisResult mb = monomial_basis(cp, o.max_radius);
    emit(o, to_json(mb), to_text(mb));
    return (mb.complete && mb.kring_basis_verified) ? kExitOk : kExitFail;
  });
}

int cmd_verify(const Options& o) {
  return with_char_pair(o, [&](const CharPair& cp) {
    VerificationReport rep = adaptive_verify(cp, o.max_radius);
    emit(o, to_json(rep), to_text(rep));
    return rep.all_passed() ? kExitOk : kExitFail;
  });
}

int cmd_list_examples(const Options& o) {
  const auto& es = corpus::entries();
  if (o.json()) {
    Json arr = Json::array();
    for (const auto& e : es) {
      Json j;
      j["name"] = e.name;
      j["file"] = e.file;
      j["kind"] = e.kind;
      j["positive"] = e.positive;
      if (e.positive) j["chi"] = e.chi;
      j["note"] = e.note;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << '\n';
  } else {
    for (const auto& e : es) {
      std::ostringstream line;
      line << e.name;
      for (size_t pad = e.name.size(); pad < 20; ++pad) line << ' ';
      line << (e.kind == "fan" ? "fan      " : "charpair ") << "corpus/" << e.file;
      for (size_t pad = e.file.size(); pad < 28; ++pad) line << ' ';
      if (e.positive)
        line << "chi = " << e.chi << "  " << e.note;
      else
        line << e.note;
      std::cout << line.str() << '\n';
    }
    std::cout << es.size() << " entries\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"presented K-rings and cohomology of complete smooth fans and torus-manifold "
               "characteristic pairs"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* sub, bool with_radius) {
    sub->add_option("input", o.input, "fan or characteristic-pair JSON file")->required();
    sub->add_option("--kind", o.kind, "input kind: fan | charpair | auto (default auto)")
        ->check(CLI::IsMember({"fan", "charpair", "auto"}));
    sub->add_option("--format,-f", o.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_radius)
      sub->add_option("--max-radius,-r", o.max_radius,
                      "cap on the u sampling radius (default 3)")
          ->check(CLI::PositiveNumber);
  };

  CLI::App* validate = app.add_subcommand("validate", "structural validation only");
  add_common(validate, false);
  CLI::App* kringc = app.add_subcommand("kring", "present the K-ring as an abelian group");
  add_common(kringc, true);
  CLI::App* cohom = app.add_subcommand("cohomology", "degreewise cohomology presentation");
  add_common(cohom, false);
  CLI::App* grc = app.add_subcommand("gr-compare",
                                     "compare the K-ring filtration with cohomology ranks");
  add_common(grc, true);
  CLI::App* basis = app.add_subcommand("basis", "extract a monomial basis");
  add_common(basis, true);
  CLI::App* verify = app.add_subcommand("verify", "run the full structural verification");
  add_common(verify, true);
  CLI::App* list = app.add_subcommand("list-examples", "print the bundled corpus manifest");
  list->add_option("--format,-f", o.format, "output format: text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitSchema;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(o);
    if (app.got_subcommand(kringc)) return cmd_kring(o);
    if (app.got_subcommand(cohom)) return cmd_cohomology(o);
    if (app.got_subcommand(grc)) return cmd_gr_compare(o);
    if (app.got_subcommand(basis)) return cmd_basis(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
    if (app.got_subcommand(list)) return cmd_list_examples(o);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSchema;
  }
  return kExitSchema;
}
