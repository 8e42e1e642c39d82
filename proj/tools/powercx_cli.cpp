// powercx: command-line front end. Complexes travel as JSON on stdin/stdout.
//
//   powercx gen polygon 4 | powercx power --n 2 | powercx map-genus

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powercx.hpp"

namespace {

using namespace powercx;

enum Exit { ok = 0, bad_input = 1, invalid = 2, too_large = 3 };

struct Options {
  std::string format = "json";
  bool annotate = false;
  std::string input = "-";
  std::string input2;
  std::string family;
  std::vector<int> params;
  int n = 2, m = 2, rank = 0;
  std::size_t cap = default_face_cap;
  FaceId lower = 0, upper = 0;
  std::string gamma, coord_map;
  std::vector<std::string> gens;
};

std::string slurp(std::string const &path)
{
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in)
    throw precondition_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

IncidenceComplex load(std::string const &path) { return read_complex(slurp(path)); }

/// A JSON array given inline or as @file.
json json_arg(std::string const &text)
{
  try {
    return json::parse(!text.empty() && text[0] == '@' ? slurp(text.substr(1)) : text);
  } catch (json::exception const &e) {
    throw precondition_error(std::string("bad JSON argument: ") + e.what());
  }
}

void emit(IncidenceComplex const &K, Options const &o)
{
  if (o.format == "dot")
    write_dot(std::cout, FlagGraph(K));
  else
    std::cout << write_complex(K) << '\n';
}

std::string join(std::vector<int> const &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_validate(Options const &o)
{
  ValidationReport report;
  try {
    report = validate_complex(load(o.input));
  } catch (malformed_poset const &e) {
    report.malformed.push_back(e.what());
    std::cout << to_json(report).dump() << '\n';
    return bad_input;
  }
  std::cout << to_json(report).dump() << '\n';
  return report.is_complex ? ok : invalid;
}

int cmd_power(Options const &o)
{
  auto K = load(o.input);
  auto const report = validate_complex(K);
  if (!report.is_complex || !is_vertex_describable(K)) {
    std::cerr << "base is not a vertex-describable incidence complex: "
              << to_json(report).dump() << '\n';
    return invalid;
  }
  PowerComplex P(std::move(K), o.n, o.cap);
  if (o.annotate && o.format == "json")
    std::cout << to_json_annotated(P).dump() << '\n';
  else
    emit(P.complex(), o);
  return ok;
}

int cmd_aut(Options const &o)
{
  auto const group = automorphism_group(load(o.input));
  std::cout << "order " << group.order() << '\n';
  for (auto const &g : group.generators())
    std::cout << to_cycles(g) << '\n';
  return ok;
}

int cmd_regular(Options const &o)
{
  auto const count = flag_orbit_count(load(o.input));
  std::cout << "flag orbits " << count << '\n' << "regular " << (count == 1 ? "true" : "false") << '\n';
  return ok;
}

ComplexMap load_gamma(Options const &o)
{
  auto const gamma = json_arg(o.gamma);
  if (gamma.is_object())
    return map_from_json(gamma);
  return ComplexMap{load(o.input), load(o.input2), gamma.get<std::vector<FaceId>>()};
}

int cmd_cover(Options const &o, bool use_g)
{
  auto const gamma = load_gamma(o);
  auto const values = json_arg(o.coord_map).get<std::vector<int>>();
  auto const c = use_g ? induced_covering_g(gamma, o.n, o.m, values, o.cap)
                       : induced_covering_f(gamma, o.n, o.m, values, o.cap);
  std::cout << to_json(c).dump() << '\n';
  return ok;
}

int cmd_classify(Options const &o)
{
  json j;
  try {
    j = json::parse(slurp(o.input));
  } catch (json::exception const &e) {
    throw malformed_poset(std::string("not valid JSON: ") + e.what());
  }
  auto const c = classify(map_from_json(j));
  std::cout << to_json(c).dump() << '\n';
  return ok;
}

int cmd_quotient(Options const &o)
{
  auto const K = load(o.input);
  std::vector<Perm> gens;
  for (auto const &text : o.gens)
    gens.push_back(parse_cycles(text, K.size()));
  auto const q = quotient(K, gens);
  emit(q.poset, o);
  if (!q.report.is_complex) {
    std::cerr << "quotient is not an incidence complex: " << to_json(q.report).dump() << '\n';
    return invalid;
  }
  return ok;
}

int cmd_invariants(Options const &o)
{
  auto const K = load(o.input);
  auto const report = validate_complex(K);
  std::vector<int> f;
  for (auto x : K.f_vector())
    f.push_back(static_cast<int>(x));
  std::cout << "rank " << K.rank() << '\n'
            << "f-vector " << join(f) << '\n'
            << "c-vector " << (report.c ? join(*report.c) : std::string("none")) << '\n'
            << "complex " << (report.is_complex ? "true" : "false") << '\n';
  if (report.is_complex)
    std::cout << "vertex-describable " << (is_vertex_describable(K) ? "true" : "false") << '\n';
  return report.is_complex ? ok : invalid;
}

int cmd_map_genus(Options const &o)
{
  auto const s = surface_of(load(o.input));
  if (!s.is_surface) {
    std::cerr << "not a map on a closed surface: " << s.diagnostic << '\n';
    return invalid;
  }
  std::cout << "V " << s.vertices << " E " << s.edges << " F " << s.faces << '\n'
            << "chi " << s.euler << '\n'
            << "orientable " << (s.orientable ? "true" : "false") << '\n'
            << (s.orientable ? "genus " : "nonorientable-genus ") << s.genus << '\n';
  return ok;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Power complexes n^K over incidence complexes"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format for complexes")
      ->check(CLI::IsMember({"json", "dot"}));

  auto input = [&](CLI::App *sub) {
    sub->add_option("input", o.input, "Complex JSON file, '-' for stdin");
  };

  auto *gen = app.add_subcommand("gen", "Generate a catalog complex");
  gen->add_option("family", o.family, "simplex|polygon|rank1|cube|complex_cube|torus44|torus36")
      ->required();
  gen->add_option("params", o.params, "Integer parameters")->required();

  auto *validate = app.add_subcommand("validate", "Check the axioms, print the report");
  input(validate);

  auto *power = app.add_subcommand("power", "Build n^K");
  input(power);
  power->add_option("--n", o.n, "Base n >= 2")->required();
  power->add_option("--cap", o.cap, "Face-count cap");
  power->add_flag("--annotate", o.annotate, "Attach the PowerFace of every face");

  auto *skel = app.add_subcommand("skeleton", "j-skeleton");
  input(skel);
  skel->add_option("--rank", o.rank, "j")->required();

  auto *sect = app.add_subcommand("section", "Section G/F");
  input(sect);
  sect->add_option("--lower", o.lower, "Face id F")->required();
  sect->add_option("--upper", o.upper, "Face id G")->required();

  auto *aut = app.add_subcommand("aut", "Automorphism group order and generators");
  input(aut);
  auto *regular = app.add_subcommand("regular", "Number of flag orbits");
  input(regular);

  auto *cover_f = app.add_subcommand("cover-f", "Induced map from a covering and f");
  auto *cover_g = app.add_subcommand("cover-g", "Induced map from an equifibered covering and g");
  for (auto *sub : {cover_f, cover_g}) {
    sub->add_option("source", o.input, "Source complex K")->required();
    sub->add_option("target", o.input2, "Target complex L")->required();
    sub->add_option("--gamma", o.gamma, "Face map K -> L as a JSON array (or @file)")->required();
    sub->add_option("--n", o.n, "n")->required();
    sub->add_option("--m", o.m, "m")->required();
    sub->add_option("--cap", o.cap, "Face-count cap");
  }
  cover_f->add_option("--f", o.coord_map, "f(1..n) as a JSON array")->required();
  cover_g->add_option("--g", o.coord_map, "g on {1..n}^l, lexicographic, as a JSON array")
      ->required();

  auto *cls = app.add_subcommand("classify", "Classify a map given as JSON");
  input(cls);

  auto *quot = app.add_subcommand("quotient", "Quotient by the group of the given generators");
  input(quot);
  quot->add_option("--gen", o.gens, "Generator in cycle notation on face ids (repeatable)");

  auto *inv = app.add_subcommand("invariants", "Rank, f-vector, c-vector, vertex-describability");
  input(inv);
  auto *genus = app.add_subcommand("map-genus", "Euler characteristic and genus of a map");
  input(genus);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }

  try {
    if (*gen) {
      emit(generate(parse_catalog_key(o.family, o.params)), o);
      return ok;
    }
    if (*validate) return cmd_validate(o);
    if (*power) return cmd_power(o);
    if (*skel) {
      emit(skeleton(load(o.input), o.rank), o);
      return ok;
    }
    if (*sect) {
      emit(section(load(o.input), o.lower, o.upper), o);
      return ok;
    }
    if (*aut) return cmd_aut(o);
    if (*regular) return cmd_regular(o);
    if (*cover_f) return cmd_cover(o, false);
    if (*cover_g) return cmd_cover(o, true);
    if (*cls) return cmd_classify(o);
    if (*quot) return cmd_quotient(o);
    if (*inv) return cmd_invariants(o);
    if (*genus) return cmd_map_genus(o);
  } catch (size_limit_error const &e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return too_large;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  }
  return bad_input;
}
