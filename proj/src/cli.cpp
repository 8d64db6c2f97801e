/*
 * Copyright 2026 the coxcones authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "coxcones/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxcones/classify.hpp"
#include "coxcones/cohomology.hpp"
#include "coxcones/gitfan.hpp"
#include "coxcones/groebner.hpp"
#include "coxcones/sampling.hpp"
#include "json.hpp"

namespace coxcones {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GroebnerBudget budget_from_env() {
  GroebnerBudget b;
  if (const char* env = std::getenv("COXCONES_BUDGET")) {
    std::string s(env);
    auto comma = s.find(',');
    b.max_pairs = std::stol(s.substr(0, comma));
    if (comma != std::string::npos) b.max_degree = std::stoi(s.substr(comma + 1));
  }
  return b;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw UsageError("expected a comma-separated integer list, got '" + s + "'");
  }
  if (out.empty()) throw UsageError("expected a comma-separated integer list");
  return out;
}

Level parse_level(const std::string& name) {
  try {
    return level_from_name(name);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Hypersurface build_p1_pn(int d, int e, int n, const std::string& f_text, std::uint32_t field) {
  if (!f_text.empty() && f_text != "diagonal") {
    Ambient amb{{1, n}};
    Polynomial f = Polynomial::parse(amb.coordinate_ctx(), f_text, field);
    return Hypersurface::from_form(amb, {d, e}, std::move(f));
  }
  return Hypersurface::diagonal_fixture(d, e, n, field);
}

std::string grid_symbol(MdsStatus s) {
  switch (s) {
    case MdsStatus::Yes: return "Y";
    case MdsStatus::No: return "N";
    case MdsStatus::Conditional: return "C";
    case MdsStatus::OutOfClassification: return "O";
  }
  return "?";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact birational invariants of hypersurfaces in products of projective spaces", "coxcones"};
  app.require_subcommand(1);
  bool json = false, tsv = false;

  auto* c_classify = app.add_subcommand("classify", "cone data and Mori-dream-space status");
  std::string cl_factors, cl_degree, cl_level = "general";
  c_classify->add_option("--factors", cl_factors, "factor dimensions, e.g. 1,3")->required();
  c_classify->add_option("--degree", cl_degree, "multidegree, e.g. 2,2")->required();
  c_classify->add_option("--level", cl_level, "arbitrary | general | very_general");
  c_classify->add_flag("--json", json, "JSON output");

  auto* c_grid = app.add_subcommand("classify-grid", "status matrix over a bidegree rectangle");
  int g_n = 3, g_dmax = 6, g_emax = 6;
  std::string g_level = "very_general";
  c_grid->add_option("--n", g_n, "dimension of the second factor")->required();
  c_grid->add_option("--dmax", g_dmax, "largest d");
  c_grid->add_option("--emax", g_emax, "largest e");
  c_grid->add_option("--level", g_level, "generality level");
  c_grid->add_flag("--json", json, "JSON output");
  c_grid->add_flag("--tsv", tsv, "TSV output");

  auto* c_hilbert = app.add_subcommand("hilbert", "section counts over a class range");
  int h_d = 2, h_e = 2, h_n = 3;
  long long h_amin = -1, h_amax = 5, h_bmin = 0, h_bmax = 6;
  c_hilbert->add_option("--d", h_d, "x-degree")->required();
  c_hilbert->add_option("--e", h_e, "y-degree")->required();
  c_hilbert->add_option("--n", h_n, "dimension of the second factor")->required();
  c_hilbert->add_option("--amin", h_amin, "smallest a");
  c_hilbert->add_option("--amax", h_amax, "largest a");
  c_hilbert->add_option("--bmin", h_bmin, "smallest b");
  c_hilbert->add_option("--bmax", h_bmax, "largest b");
  c_hilbert->add_flag("--json", json, "JSON output");
  c_hilbert->add_flag("--tsv", tsv, "TSV output");

  auto* c_flip = app.add_subcommand("flip-eval", "evaluate the small modification on points");
  int f_d = 2, f_e = 2, f_n = 3, f_sample = 0;
  std::uint64_t f_seed = 0;
  std::uint32_t f_mod = 10007;
  std::string f_form, f_point, f_json;
  bool f_inverse = false;
  c_flip->add_option("--d", f_d, "x-degree");
  c_flip->add_option("--e", f_e, "y-degree");
  c_flip->add_option("--n", f_n, "dimension of the second factor");
  c_flip->add_option("--f", f_form, "defining form (text), or 'diagonal' for the y_i^e fixture");
  c_flip->add_option("--hypersurface", f_json,
                     "hypersurface as JSON {\"factors\":[1,n],\"multidegree\":[d,e],\"f\":\"...\"}");
  c_flip->add_option("--point", f_point, "point as per-factor coordinate arrays, e.g. [[1,1],[1,2,0,0]]");
  c_flip->add_option("--sample", f_sample, "sample this many points and round-trip them");
  c_flip->add_option("--seed", f_seed, "sampling seed");
  c_flip->add_option("--mod", f_mod, "prime modulus");
  c_flip->add_flag("--inverse", f_inverse, "apply the inverse map to a target point");
  c_flip->add_flag("--json", json, "JSON output");

  auto* c_git = app.add_subcommand("git-chambers", "chamber fan and irrelevant ideals of the weight system");
  int q_d = 2, q_e = 2, q_n = 3;
  c_git->add_option("--d", q_d, "number of z-variables")->required();
  c_git->add_option("--e", q_e, "second weight of the z-variables")->required();
  c_git->add_option("--n", q_n, "dimension of the second factor")->required();
  c_git->add_flag("--json", json, "JSON output");

  auto* c_int = app.add_subcommand("intersect", "top intersection number of divisor classes");
  std::string i_factors, i_degree, i_classes;
  c_int->add_option("--factors", i_factors, "factor dimensions, e.g. 1,3")->required();
  c_int->add_option("--degree", i_degree, "multidegree, e.g. 4,2")->required();
  c_int->add_option("--classes", i_classes, "JSON list of classes, e.g. [[-4,6],[-4,6],[-4,6]]")->required();
  c_int->add_flag("--json", json, "JSON output");

  auto* c_cox = app.add_subcommand("cox", "Cox ring presentation of the classified case");
  std::string x_factors, x_degree, x_form, x_level = "general";
  bool x_certify = false;
  c_cox->add_option("--factors", x_factors, "factor dimensions, e.g. 1,3")->required();
  c_cox->add_option("--degree", x_degree, "multidegree, e.g. 2,2")->required();
  c_cox->add_option("--f", x_form, "defining form for explicit relations, or 'diagonal'");
  c_cox->add_option("--level", x_level, "generality level");
  c_cox->add_flag("--certify", x_certify, "certify the relations are a complete intersection (needs --f)");
  c_cox->add_flag("--json", json, "JSON output");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();  // resolves to the active subcommand's help
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  auto fail = [&](const std::string& code, const std::string& message) {
    if (json) {
      ordered_json j;
      j["schema"] = 1;
      j["error"] = {{"code", code}, {"message", message}};
      out << j.dump(2) << "\n";
    }
    err << "error (" << code << "): " << message << "\n";
    return 1;
  };

  try {
    if (app.got_subcommand(c_classify)) {
      std::vector<int> dims = parse_int_list(cl_factors);
      std::vector<int> deg = parse_int_list(cl_degree);
      ClassificationReport rep =
          classify(Ambient{dims}, DivisorClass(deg.begin(), deg.end()), parse_level(cl_level));
      if (json)
        out << report_to_json(rep).dump(2) << "\n";
      else
        out << report_to_text(rep);
      return 0;
    }

    if (app.got_subcommand(c_grid)) {
      auto cells = mds_bidegree_region(g_n, g_dmax, g_emax, parse_level(g_level), Exec::Parallel);
      if (json) {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = g_n;
        j["level"] = g_level;
        ordered_json rows = ordered_json::array();
        for (const auto& c : cells)
          rows.push_back({{"d", c.d}, {"e", c.e}, {"mds", mds_status_name(c.status)}, {"case", c.case_tag}});
        j["cells"] = rows;
        out << j.dump(2) << "\n";
      } else {
        std::string sep = tsv ? "\t" : " ";
        out << "d\\e";
        for (int e = 1; e <= g_emax; ++e) out << sep << e;
        out << "\n";
        for (int d = 1; d <= g_dmax; ++d) {
          out << d;
          for (int e = 1; e <= g_emax; ++e) out << sep << grid_symbol(cells[(d - 1) * g_emax + (e - 1)].status);
          out << "\n";
        }
        out << "Y mori dream space, N not, C conditional, O out of classification\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_hilbert)) {
      Hypersurface x;  // only the degrees enter the counts
      x.ambient = Ambient{{1, h_n}};
      x.multidegree = {h_d, h_e};
      auto cells = hilbert_table(x, h_amin, h_amax, h_bmin, h_bmax, Exec::Parallel);
      if (json) {
        ordered_json j;
        j["schema"] = 1;
        j["d"] = h_d;
        j["e"] = h_e;
        j["n"] = h_n;
        ordered_json rows = ordered_json::array();
        for (const auto& c : cells) {
          ordered_json r;
          r["a"] = c.a;
          r["b"] = c.b;
          if (c.h0.exact())
            r["h0"] = c.h0.lo;
          else
            r["h0"] = {{"lo", c.h0.lo}, {"hi", c.h0.hi}};
          r["koszul"] = c.koszul;
          rows.push_back(r);
        }
        j["table"] = rows;
        out << j.dump(2) << "\n";
      } else {
        std::string sep = tsv ? "\t" : "  ";
        out << "h0 (rows a = " << h_amin << ".." << h_amax << ", cols b = " << h_bmin << ".." << h_bmax
            << "); interval entries as lo..hi\n";
        long long nb = h_bmax - h_bmin + 1;
        for (long long a = h_amin; a <= h_amax; ++a) {
          out << a << ":";
          for (long long b = h_bmin; b <= h_bmax; ++b) {
            const auto& cell = cells[(a - h_amin) * nb + (b - h_bmin)];
            out << sep;
            if (cell.h0.exact())
              out << cell.h0.lo;
            else
              out << cell.h0.lo << ".." << cell.h0.hi;
          }
          out << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(c_flip)) {
      Hypersurface x;
      if (!f_json.empty()) {
        x = hypersurface_from_json(nlohmann::json::parse(f_json), f_mod);
        x.require_p1_pn();
        if (x.slices.empty()) throw GeometryError("the hypersurface JSON needs a defining form f");
      } else {
        if (!c_flip->count("--d") || !c_flip->count("--e") || !c_flip->count("--n"))
          throw UsageError("flip-eval needs --d, --e and --n (or --hypersurface)");
        x = build_p1_pn(f_d, f_e, f_n, f_form, f_mod);
      }
      if (f_sample > 0) {
        SampleOptions opt;
        opt.modulus = f_mod;
        opt.seed = f_seed;
        opt.count = f_sample;
        opt.exec = Exec::Parallel;
        auto pts = sample_points(x, opt);
        int ok = 0;
        ordered_json rows = ordered_json::array();
        for (const auto& pt : pts) {
          ProjectivePoint img = flip_forward(x, pt);
          ProjectivePoint back = flip_backward(x, img);
          bool round = back == pt;
          if (round) ++ok;
          if (json)
            rows.push_back({{"point", point_to_json(pt, f_mod)},
                            {"image", point_to_json(img, f_mod)},
                            {"roundtrip", round}});
          else
            out << pt.str() << " -> " << img.str() << (round ? "" : "  ROUNDTRIP MISMATCH") << "\n";
        }
        if (json) {
          ordered_json j;
          j["schema"] = 1;
          j["sampled"] = pts.size();
          j["roundtrip_ok"] = ok;
          j["samples"] = rows;
          out << j.dump(2) << "\n";
        } else {
          out << ok << "/" << pts.size() << " round trips exact\n";
        }
        return 0;
      }
      if (f_point.empty()) throw GeometryError("flip-eval needs --point or --sample");
      ProjectivePoint pt = point_from_json(nlohmann::json::parse(f_point), f_mod);
      ProjectivePoint img = f_inverse ? flip_backward(x, pt) : flip_forward(x, pt);
      if (json) {
        ordered_json j;
        j["schema"] = 1;
        j["point"] = point_to_json(pt, f_mod);
        j["image"] = point_to_json(img, f_mod);
        out << j.dump(2) << "\n";
      } else {
        out << pt.str() << " -> " << img.str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_git)) {
      WeightSystem w = WeightSystem::standard(q_d, q_e, q_n);
      auto fan = chamber_fan(w);
      if (json) {
        ordered_json j;
        j["schema"] = 1;
        ordered_json vars = ordered_json::array();
        for (size_t i = 0; i < w.names.size(); ++i)
          vars.push_back({{"name", w.names[i]}, {"weight", {w.cols[i][0], w.cols[i][1]}}});
        j["variables"] = vars;
        ordered_json chams = ordered_json::array();
        for (const auto& ch : fan) chams.push_back(chamber_to_json(ch, w));
        j["chambers"] = chams;
        out << j.dump(2) << "\n";
      } else {
        out << "weights:";
        for (size_t i = 0; i < w.names.size(); ++i)
          out << " " << w.names[i] << "(" << w.cols[i][0] << "," << w.cols[i][1] << ")";
        out << "\n";
        for (const auto& ch : fan)
          out << (ch.is_wall ? "wall    " : "chamber ") << ch.label << ": " << cone_str(ch.cone)
              << "  irrelevant ideal " << ch.irrelevant.str(w.names) << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_int)) {
      std::vector<int> dims = parse_int_list(i_factors);
      std::vector<int> deg = parse_int_list(i_degree);
      Hypersurface x;
      x.ambient = Ambient{dims};
      x.multidegree = DivisorClass(deg.begin(), deg.end());
      auto classes_json = nlohmann::json::parse(i_classes);
      std::vector<DivisorClass> classes;
      for (const auto& c : classes_json) classes.push_back(c.get<DivisorClass>());
      mpz_class v = intersection_number(x, classes);
      if (json) {
        ordered_json j;
        j["schema"] = 1;
        j["value"] = v.get_str();
        out << j.dump(2) << "\n";
      } else {
        out << v.get_str() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(c_cox)) {
      std::vector<int> dims = parse_int_list(x_factors);
      std::vector<int> deg = parse_int_list(x_degree);
      ClassificationReport rep =
          classify(Ambient{dims}, DivisorClass(deg.begin(), deg.end()), parse_level(x_level));
      CoxPresentation pres = cox_descriptor(rep);
      std::string certify_note;
      if (!x_form.empty()) {
        Ambient amb{dims};
        if (amb.is_p1_pn()) {
          Hypersurface x = build_p1_pn(static_cast<int>(deg[0]), static_cast<int>(deg[1]), dims[1], x_form, 0);
          pres.relations = cox_equations(x);
        } else {
          pres.relations = {Polynomial::parse(amb.coordinate_ctx(), x_form, 0)};
        }
        if (x_certify) {
          GroebnerBudget budget = budget_from_env();
          int codim = ideal_codim(pres.relations, pres.generator_count(), budget);
          bool ok = codim == static_cast<int>(pres.relations.size());
          certify_note = std::string("complete intersection: ") + (ok ? "certified" : "FAILED") +
                         " (codim " + std::to_string(codim) + " of " + std::to_string(pres.relations.size()) +
                         " relations)";
        }
      } else if (x_certify) {
        throw GeometryError("--certify needs --f");
      }
      if (json) {
        ordered_json j;
        j["schema"] = 1;
        ordered_json blocks = ordered_json::array();
        for (const auto& b : pres.blocks)
          blocks.push_back({{"name", b.name}, {"count", b.count}, {"degree", b.degree}});
        j["generators"] = blocks;
        j["generator_count"] = pres.generator_count();
        j["relation_degrees"] = pres.relation_degrees;
        if (!pres.relations.empty()) {
          ordered_json rels = ordered_json::array();
          for (const auto& r : pres.relations) rels.push_back(r.str());
          j["relations"] = rels;
        }
        if (!certify_note.empty()) j["certification"] = certify_note;
        out << j.dump(2) << "\n";
      } else {
        out << pres.generator_count() << " generators:";
        for (const auto& b : pres.blocks) {
          out << " " << b.count << "x" << b.name << "(";
          for (size_t i = 0; i < b.degree.size(); ++i) out << (i ? "," : "") << b.degree[i];
          out << ")";
        }
        out << "\n" << pres.relation_degrees.size() << " relations of degree (";
        for (size_t i = 0; i < pres.relation_degrees[0].size(); ++i)
          out << (i ? "," : "") << pres.relation_degrees[0][i];
        out << ")\n";
        for (const auto& r : pres.relations) out << "  " << r.str() << "\n";
        if (!certify_note.empty()) out << certify_note << "\n";
      }
      return 0;
    }

    throw GeometryError("no subcommand selected");
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    return fail("budget_exceeded", e.what());
  } catch (const IndeterminacyError& e) {
    return fail("indeterminacy", e.what());
  } catch (const StabilizationError& e) {
    return fail("non_stabilized", e.what());
  } catch (const ParseError& e) {
    return fail("parse_error", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail("parse_error", e.what());
  } catch (const std::exception& e) {
    return fail("computation_error", e.what());
  }
}

}  // namespace coxcones
