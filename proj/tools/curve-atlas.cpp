#include <CLI11.hpp>
#include <json.hpp>

#include <homaloidal/arrangements.hpp>
#include <homaloidal/atlas.hpp>
#include <homaloidal/errors.hpp>
#include <homaloidal/parse.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using namespace homaloidal;

struct FieldChoice {
  std::uint64_t p = 0;
  int e = 1;
};

FieldChoice parse_field(const std::string& text) {
  FieldChoice out;
  std::string::size_type colon = text.find(':');
  try {
    out.p = std::stoull(text.substr(0, colon));
    if (colon != std::string::npos) out.e = std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw MathError("field spec must look like 0, 5 or 2:4, got " + text);
  }
  if (out.p == 0 && out.e != 1)
    throw MathError("the rationals take no extension degree");
  if (out.e < 1) throw MathError("extension degree must be positive");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.ends_with('\n')) std::cout << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw MathError("cannot open output file: " + out_path);
  f << text;
  if (!text.ends_with('\n')) f << '\n';
}

std::string tstring(const std::map<int, long long>& t) {
  std::string s;
  for (const auto& [r, count] : t) {
    if (!s.empty()) s += '|';
    s += 't' + std::to_string(r) + '=' + std::to_string(count);
  }
  return s;
}

std::string arrangement_text(const std::string& input,
                             const LineArrangement& arr,
                             const CombinatorialVerdict& v) {
  std::ostringstream os;
  os << "input:          " << input << "\n";
  os << "field:          " << arr.ring->field()->name() << "\n";
  os << "lines:          " << arr.d() << "\n";
  os << "profile:        " << tstring(v.profile.t) << "\n";
  os << "classification: " << arr_class_name(v.classification) << "\n";
  if (v.d0) os << "d0 (points):    " << *v.d0 << "\n";
  if (v.algebraic_d0) {
    os << "d0 (fibers):    " << *v.algebraic_d0;
    if (v.d0 && *v.d0 == *v.algebraic_d0) os << "  (agrees)";
    os << "\n";
  }
  if (v.d0 && !v.degree_formula_exact)
    os << "note:           the point count is only an upper bound here\n";
  return os.str();
}

std::string arrangement_json_text(const std::string& input,
                                  const LineArrangement& arr,
                                  const CombinatorialVerdict& v) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = "arrangement-report/1";
  j["input"] = input;
  j["field"] = arr.ring->field()->name();
  j["lineCount"] = arr.d();
  nlohmann::ordered_json t = nlohmann::ordered_json::object();
  for (const auto& [r, count] : v.profile.t) t[std::to_string(r)] = count;
  j["profile"] = t;
  j["concurrent"] = v.profile.concurrent;
  j["sumTr"] = v.sum_tr;
  j["nearPencil"] = v.near_pencil;
  j["classification"] = arr_class_name(v.classification);
  if (v.d0) j["d0"] = *v.d0;
  if (v.algebraic_d0) j["algebraicD0"] = *v.algebraic_d0;
  j["degreeFormulaExact"] = v.degree_formula_exact;
  return j.dump(2);
}

std::string sweep_text(const SweepReport& rep) {
  std::ostringstream os;
  os << "plane:      " << rep.plane_lines.size() << " lines over GF(" << rep.p;
  if (rep.e > 1) os << "^" << rep.e;
  os << ")\n";
  os << "d:          " << rep.d_lo;
  if (rep.d_hi != rep.d_lo) os << ".." << rep.d_hi;
  os << "\n";
  os << "subsets:    " << rep.rows.size() << "\n";
  std::map<std::string, long long> by_class;
  for (const SweepRow& row : rep.rows) by_class[arr_class_name(row.cls)] += 1;
  os << "classes:\n";
  for (const auto& [name, count] : by_class)
    os << "  " << name << "  " << count << "\n";
  os << "profiles:\n";
  for (const auto& [key, count] : rep.profile_buckets)
    os << "  " << key << "  " << count << "\n";
  os << "homaloidal: " << rep.homaloidal_count << "\n";
  if (rep.checked > 0)
    os << "replays:    " << rep.checked << " sampled, all agree\n";
  return os.str();
}

std::string syzygy_text(const PresentationMatrix& M) {
  std::ostringstream os;
  os << pretty(M) << "\n";
  os << "columns: " << M.width() << ", degrees";
  for (int deg : M.column_degrees) os << " " << deg;
  os << "\n";
  if (M.width() == 2) {
    NaiveDegrees nd = naive_degrees(M);
    os << "naive multidegree: (" << nd.d0 << ", " << nd.d1 << ", " << nd.d2
       << ")\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar map atlas for plane curves in any characteristic"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_s = "0";
  std::uint64_t seed = 0;
  int trials = 3;
  bool json = false;
  bool verbose = false;
  std::string out_path;
  app.add_option("--field", field_s,
                 "coefficient field char[:ext]; 0 is the rationals")
      ->capture_default_str();
  app.add_option("--seed", seed, "replay seed")->capture_default_str();
  app.add_option("--trials", trials, "independent fiber trials")
      ->capture_default_str();
  app.add_flag("--json", json, "emit the JSON certificate");
  app.add_option("--out", out_path, "write the report to a file");
  app.add_flag("--verbose,-v", verbose, "progress notes on stderr");

  CLI::App* cmd_an =
      app.add_subcommand("analyze", "full pipeline on one polynomial");
  std::string an_poly;
  cmd_an->add_option("--poly", an_poly, "homogeneous polynomial in x0, x1, x2")
      ->required();

  CLI::App* cmd_fam =
      app.add_subcommand("family", "build a named curve and analyze it");
  std::string fam_name;
  int fam_n = 0;
  std::uint64_t slope_seed = 0;
  bool no_extend = false;
  cmd_fam
      ->add_option("--name", fam_name,
                   "near-pencil | gn | intro-quintic | q5-quintic | ramphoid")
      ->required();
  cmd_fam->add_option("--n", fam_n, "line count / family parameter");
  cmd_fam->add_option("--slope-seed", slope_seed,
                      "shift of the near-pencil slope window");
  cmd_fam->add_flag("--no-extend", no_extend,
                    "fail instead of growing a too-small field");

  CLI::App* cmd_arr = app.add_subcommand(
      "arrangement", "combinatorial classification of a line arrangement");
  std::string arr_lines;
  bool cross = false;
  cmd_arr->add_option("--lines", arr_lines, "semicolon-separated linear forms")
      ->required();
  cmd_arr->add_flag("--cross-check", cross,
                    "replay the fiber degree through saturation");

  CLI::App* cmd_sw = app.add_subcommand(
      "sweep", "classify every d-subset of the projective plane");
  int sw_d = 0;
  int sw_hi = -1;
  int sw_sample = 0;
  long long sw_max = 200000;
  bool sw_csv = false;
  cmd_sw->add_option("--lines", sw_d, "subset size d")->required();
  cmd_sw->add_option("--lines-hi", sw_hi, "sweep the range d..hi");
  cmd_sw->add_option("--sample", sw_sample, "fiber replays per d");
  cmd_sw->add_option("--max-subsets", sw_max, "enumeration budget")
      ->capture_default_str();
  cmd_sw->add_flag("--csv", sw_csv, "emit one CSV row per subset");

  CLI::App* cmd_sy =
      app.add_subcommand("syzygy", "relation matrix of the polar partials");
  std::string sy_poly;
  cmd_sy->add_option("--poly", sy_poly, "homogeneous polynomial in x0, x1, x2")
      ->required();

  try {
    app.parse(argc, argv);

    FieldChoice fc = parse_field(field_s);
    FieldPtr F = fc.p == 0 ? Field::rationals() : Field::make(fc.p, fc.e);
    RingPtr R = Ring::make(F, {"x0", "x1", "x2"});

    if (cmd_an->parsed()) {
      if (verbose) std::cerr << "analyzing over " << F->name() << "\n";
      AnalysisReport rep = analyze(parse_poly(R, an_poly), trials, seed, an_poly);
      emit(json ? report_json(rep) : report_text(rep), out_path);
      return 0;
    }

    if (cmd_fam->parsed()) {
      FamilySpec spec{fam_name, fam_n, F, slope_seed, !no_extend};
      FamilyResult fam = family_make(spec);
      if (verbose && fam.extended)
        std::cerr << "field grown to " << fam.field->name() << "\n";
      AnalysisReport rep = analyze(fam.f, trials, seed, fam.label);
      emit(json ? report_json(rep) : report_text(rep), out_path);
      return 0;
    }

    if (cmd_arr->parsed()) {
      LineArrangement arr = arrangement_from_string(R, arr_lines);
      CombinatorialVerdict v = classify_arrangement(arr, cross, seed, trials);
      emit(json ? arrangement_json_text(arr_lines, arr, v)
                : arrangement_text(arr_lines, arr, v),
           out_path);
      return 0;
    }

    if (cmd_sw->parsed()) {
      if (fc.p == 0)
        throw MathError("sweep needs a finite field, pass --field p[:e]");
      if (sw_csv && json)
        throw MathError("pick one of --csv and --json for the sweep");
      int hi = sw_hi < 0 ? sw_d : sw_hi;
      SweepReport rep = sweep_projective_plane(fc.p, fc.e, sw_d, hi, sw_sample,
                                               seed, sw_max);
      if (verbose)
        std::cerr << rep.rows.size() << " subsets classified, "
                  << rep.checked << " replayed\n";
      emit(sw_csv ? sweep_csv(rep) : (json ? sweep_json(rep) : sweep_text(rep)),
           out_path);
      return 0;
    }

    if (cmd_sy->parsed()) {
      Poly f = parse_poly(R, sy_poly);
      PresentationMatrix M = minimal_presentation(polar_map(f).partials);
      emit(json ? presentation_json(M) : syzygy_text(M), out_path);
      return 0;
    }

    return 2;  // unreachable with require_subcommand(1)
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InconsistentResult& e) {
    std::cerr << "cross-check inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
