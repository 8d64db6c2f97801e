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

#include "coxcones/classify.hpp"

#include <algorithm>

namespace coxcones {

std::string level_name(Level l) {
  switch (l) {
    case Level::Arbitrary: return "arbitrary";
    case Level::General: return "general";
    case Level::VeryGeneral: return "very_general";
  }
  return "?";
}

std::string mds_status_name(MdsStatus s) {
  switch (s) {
    case MdsStatus::Yes: return "yes";
    case MdsStatus::No: return "no";
    case MdsStatus::Conditional: return "conditional";
    case MdsStatus::OutOfClassification: return "out_of_classification";
  }
  return "?";
}

Level level_from_name(const std::string& name) {
  if (name == "arbitrary") return Level::Arbitrary;
  if (name == "general") return Level::General;
  if (name == "very_general") return Level::VeryGeneral;
  throw GeometryError("unknown generality level '" + name + "'");
}

namespace {

Cone quadrant() { return cone_from_rays(2, {{1, 0}, {0, 1}}); }

Cone orthant(int rank) {
  std::vector<DivisorClass> rays;
  for (int i = 0; i < rank; ++i) {
    DivisorClass r(rank, 0);
    r[i] = 1;
    rays.push_back(r);
  }
  return cone_from_rays(rank, rays);
}

// requires level >= needed, otherwise downgrades a definite verdict
void apply_level(ClassificationReport& rep, Level needed, const std::string& why) {
  if (rep.level >= needed) return;
  rep.mds = MdsStatus::Conditional;
  rep.notes.push_back("verdict proved for " + level_name(needed) + " members (" + why +
                      "); reported conditionally at level " + level_name(rep.level));
}

void drop_cones_keep_bound(ClassificationReport& rep) {
  rep.eff.reset();
  rep.mov.reset();
  rep.nef.reset();
  rep.mov_chambers.clear();
  rep.cox.reset();
}

void classify_p1_pn_surface(ClassificationReport& rep, int d, int e) {
  // surfaces in P^1 x P^2: movable classes are nef, so mov = nef throughout
  if (e == 1) {
    rep.case_tag = "surface_ruled";
    rep.mds = MdsStatus::Yes;
    rep.picard_rank = 2;
    rep.picard_note = "ruled surface over P^1";
    long long q = d / 2, qq = (d + 1) / 2;
    rep.nef = cone_from_rays(2, {{1, 0}, {-q, 1}});
    rep.mov = rep.nef;
    rep.eff = cone_from_rays(2, {{1, 0}, {-qq, 1}});
    rep.mov_chambers = {{*rep.nef, "Nef(X)"}};
    rep.notes.push_back("fiberwise-linear equation: the first projection is a ruled-surface structure");
    rep.notes.push_back("cone data assumes the balanced splitting type of a general member");
    apply_level(rep, Level::General, "balanced splitting of the kernel bundle");
    return;
  }
  if (d == 1) {
    rep.case_tag = "surface_blow_up";
    rep.picard_rank = e * static_cast<long long>(e) + 1;
    rep.picard_note = "blow-up of P^2 in the e^2 base points of a pencil";
    if (e <= 2) {
      rep.mds = MdsStatus::Yes;
      rep.notes.push_back("del Pezzo surface; cone data in the rank-" + std::to_string(*rep.picard_rank) +
                          " Picard basis is not modeled here");
    } else {
      rep.mds = MdsStatus::No;
      rep.notes.push_back("infinitely many (-1)-curves; the effective cone is not rational polyhedral");
    }
    apply_level(rep, Level::VeryGeneral, "base points of the pencil in very general position");
    return;
  }
  if (d == 2) {
    rep.case_tag = "surface_double_cover";
    rep.mds = MdsStatus::Yes;
    rep.notes.push_back("double cover of P^2 branched along a degree-2e curve");
    if (e == 2) {
      rep.picard_rank = 6;
      rep.picard_note = "del Pezzo surface of degree 4";
      rep.notes.push_back("cone data in the rank-6 Picard basis is not modeled here");
      apply_level(rep, Level::VeryGeneral, "smooth branch curve and Picard rank 6");
      return;
    }
    rep.picard_rank = 2;
    rep.picard_note = "Noether-Lefschetz for very general members (d >= 2, e >= 3)";
    Cone c = cone_from_rays(2, {{1, 0}, {-1, e}});
    rep.nef = c;
    rep.mov = c;
    rep.eff = c;
    rep.mov_chambers = {{c, "Nef(X)"}};
    rep.cox = CoxPresentation::p1_pn(2, e, 2);
    apply_level(rep, Level::VeryGeneral, "Noether-Lefschetz");
    return;
  }
  // d >= 3, e >= 2
  rep.case_tag = "surface_eff_not_closed";
  rep.mds = MdsStatus::No;
  rep.notes.push_back("the effective cone is not closed: its boundary ray has no effective multiple");
  if (e >= 3) {
    rep.picard_rank = 2;
    rep.picard_note = "Noether-Lefschetz for very general members (d >= 2, e >= 3)";
    DivisorClass edge = primitive({-d, 2LL * e});
    Cone closed = cone_from_rays(2, {{1, 0}, edge});
    rep.nef = closed;
    Cone open_edge = closed;
    open_edge.open_ray[1] = true;
    rep.eff = open_edge;
    rep.mov = open_edge;
    rep.mov_chambers = {{closed, "Nef(X)"}};
  } else {
    if (d == 3) {
      rep.picard_rank = 11;
      rep.picard_note = "blow-up of a ruled surface in 9 points";
    } else {
      rep.picard_note = "larger than 2; not determined here";
    }
    rep.notes.push_back("Picard rank exceeds 2 for e = 2, so the rank-2 cone data does not apply");
  }
  apply_level(rep, Level::VeryGeneral, "no effective multiple on the boundary ray");
  if (rep.mds == MdsStatus::Conditional) drop_cones_keep_bound(rep);
}

void classify_p1_pn_high_dim(ClassificationReport& rep, int d, int e, int n) {
  rep.picard_rank = 2;
  rep.picard_note = "restriction from the ambient product (dim X >= 3)";
  if (d == 1) {
    rep.case_tag = "blow_up_of_pn";
    rep.mds = MdsStatus::Yes;
    rep.eff = cone_from_rays(2, {{1, 0}, {-1, e}});
    rep.nef = quadrant();
    rep.mov = rep.nef;
    rep.mov_chambers = {{*rep.nef, "Nef(X)"}};
    rep.cox = CoxPresentation::p1_pn(1, e, n);
    rep.notes.push_back("second projection contracts the exceptional class eH2 - H1");
    apply_level(rep, Level::General, "smoothness and a regular sequence of slice forms");
    return;
  }
  if (d < n) {
    rep.case_tag = "small_modification_pair";
    rep.mds = MdsStatus::Yes;
    Cone eff = cone_from_rays(2, {{1, 0}, {-1, e}});
    rep.eff = eff;
    rep.mov = eff;
    rep.nef = quadrant();
    rep.mov_chambers = {{*rep.nef, "Nef(X)"}, {cone_from_rays(2, {{0, 1}, {-1, e}}), "Nef(X+) pullback"}};
    rep.cox = CoxPresentation::p1_pn(d, e, n);
    rep.notes.push_back("the movable cone is the union of the nef chambers of X and of its small modification");
    apply_level(rep, Level::General, "smoothness and a regular sequence of slice forms");
    return;
  }
  if (d == n) {
    rep.case_tag = "bpf_contraction";
    rep.mds = MdsStatus::Yes;
    Cone c = cone_from_rays(2, {{1, 0}, {-1, e}});
    rep.eff = c;
    rep.mov = c;
    rep.nef = c;
    rep.mov_chambers = {{c, "Nef(X)"}};
    rep.cox = CoxPresentation::p1_pn(d, e, n);
    rep.notes.push_back("eH2 - H1 is base-point free and contracts to P^{n-1}");
    apply_level(rep, Level::General, "smoothness and a regular sequence of slice forms");
    return;
  }
  // d > n
  if (e == 1) {
    rep.case_tag = "projective_bundle";
    rep.mds = MdsStatus::Yes;
    long long q = d / n, s = d % n;
    rep.nef = cone_from_rays(2, {{1, 0}, {-q, 1}});
    rep.eff = cone_from_rays(2, {{1, 0}, {-(q + (s ? 1 : 0)), 1}});
    if (s >= 2) {
      rep.mov = rep.eff;
      rep.mov_chambers = {{*rep.nef, "Nef(X)"},
                          {cone_from_rays(2, {{-q, 1}, {-(q + 1), 1}}), "Nef(X+) pullback"}};
    } else {
      rep.mov = rep.nef;
      rep.mov_chambers = {{*rep.nef, "Nef(X)"}};
    }
    rep.notes.push_back("toric projective-bundle structure over P^1");
    rep.notes.push_back("cone data assumes the balanced splitting type of a general member");
    apply_level(rep, Level::General, "balanced splitting of the kernel bundle");
    return;
  }
  rep.case_tag = "eff_cone_not_closed";
  rep.mds = MdsStatus::No;
  DivisorClass edge = primitive({-static_cast<long long>(d), static_cast<long long>(n) * e});
  Cone closed = cone_from_rays(2, {{1, 0}, edge});
  rep.nef = closed;
  Cone open_edge = closed;
  open_edge.open_ray[1] = true;
  rep.eff = open_edge;
  rep.mov = open_edge;
  rep.mov_chambers = {{closed, "Nef(X)"}};
  rep.notes.push_back("the nef boundary ray neH2 - dH1 has no effective multiple; Eff and Mov are not closed");
  apply_level(rep, Level::VeryGeneral, "no effective multiple on the boundary ray");
  if (rep.mds == MdsStatus::Conditional) {
    drop_cones_keep_bound(rep);
    rep.notes.push_back("at this level only the open lower-bound subcone of Eff is asserted");
  }
}

void classify_product(ClassificationReport& rep) {
  const Ambient& amb = rep.ambient;
  int rank = amb.rank();
  int dim_x = amb.dim() - 1;
  bool calabi_yau = std::all_of(rep.canonical.begin(), rep.canonical.end(), [](long long c) { return c == 0; });
  int m = 0, k = 0;
  for (int f = 0; f < rank; ++f) (amb.dims[f] == 1 ? m : k)++;

  if (!calabi_yau || dim_x < 3 || k == 0 || rank < 2) {
    rep.mds = MdsStatus::OutOfClassification;
    rep.case_tag = "out_of_classification";
    if (rank < 2)
      rep.notes.push_back("a single projective space is outside the product classification");
    else if (!calabi_yau)
      rep.notes.push_back("no classification for non-Calabi-Yau multidegrees in products of 3 or more factors");
    else if (k == 0)
      rep.notes.push_back("products of P^1 factors only: reflection orbits of the nef cone are available, "
                          "but the cone classification is not");
    else
      rep.notes.push_back("classification requires dim X >= 3");
    return;
  }

  rep.picard_rank = rank;
  rep.picard_note = "restriction from the ambient product (dim X >= 3)";
  rep.nef = orthant(rank);
  if (m == 0) {
    rep.case_tag = "calabi_yau_ample_factors";
    rep.mds = MdsStatus::Yes;
    rep.eff = rep.nef;
    rep.mov = rep.nef;
    rep.mov_chambers = {{*rep.nef, "Nef(X)"}};
    rep.cox = CoxPresentation::ambient_quotient(amb, rep.multidegree);
    apply_level(rep, Level::General, "smoothness");
    return;
  }
  if (m == 1) {
    rep.case_tag = "calabi_yau_double_cover";
    rep.mds = MdsStatus::Yes;
    int f = 0;
    while (amb.dims[f] != 1) ++f;
    LatticeMap sigma = involution_action(amb, rep.multidegree, f);
    Cone image = apply_map(sigma, *rep.nef);
    std::vector<DivisorClass> rays = rep.nef->rays;
    rays.insert(rays.end(), image.rays.begin(), image.rays.end());
    Cone eff = cone_from_rays(rank, rays);
    rep.eff = eff;
    rep.mov = eff;
    rep.mov_chambers = {{*rep.nef, "Nef(X)"}, {image, "sigma*Nef(X)"}};
    rep.notes.push_back("the double-cover involution of the P^1 factor glues the two nef chambers");
    apply_level(rep, Level::General, "smoothness");
    return;
  }
  rep.case_tag = "calabi_yau_reflections";
  rep.mds = MdsStatus::No;
  rep.notes.push_back("two or more P^1 factors give reflections generating an infinite group of "
                      "pseudo-automorphisms; the movable cone is not rational polyhedral");
  apply_level(rep, Level::General, "smoothness");
}

}  // namespace

ClassificationReport classify(const Ambient& ambient, const DivisorClass& multidegree, Level level) {
  if (static_cast<int>(multidegree.size()) != ambient.rank())
    throw GeometryError("multidegree rank does not match the ambient");
  for (long long d : multidegree)
    if (d < 1) throw GeometryError("multidegree entries must be >= 1");
  for (int d : ambient.dims)
    if (d < 1) throw GeometryError("factor dimensions must be >= 1");

  ClassificationReport rep;
  rep.ambient = ambient;
  rep.multidegree = multidegree;
  rep.level = level;
  rep.canonical = canonical_class(ambient, multidegree);

  if (ambient.rank() == 2) {
    int m = ambient.dims[0], n = ambient.dims[1];
    if (m >= 2 && n >= 2) {
      rep.case_tag = "two_large_factors";
      rep.mds = MdsStatus::Yes;
      rep.picard_rank = 2;
      rep.picard_note = "restriction from the ambient product (dim X >= 3)";
      Cone q = quadrant();
      rep.eff = q;
      rep.mov = q;
      rep.nef = q;
      rep.mov_chambers = {{q, "Nef(X)"}};
      rep.cox = CoxPresentation::two_factor(m, n, multidegree[0], multidegree[1]);
      rep.notes.push_back("both factors of dimension >= 2: the section ring restricts from the ambient product");
      rep.notes.push_back("assumes X normal and Q-factorial");
      return rep;
    }
    // normalize P^1 x P^n order
    if (n == 1 && m >= 2) {
      Ambient swapped{{1, m}};
      DivisorClass md = {multidegree[1], multidegree[0]};
      ClassificationReport r = classify(swapped, md, level);
      r.notes.insert(r.notes.begin(), "factors reordered to put the P^1 first; classes use the reordered basis");
      return r;
    }
    if (m == 1 && n == 1) {
      rep.case_tag = "curve";
      rep.mds = MdsStatus::OutOfClassification;
      rep.notes.push_back("dimension 1: divisor cones of a curve are outside this classification");
      if (multidegree[0] == 2 && multidegree[1] == 2)
        rep.notes.push_back("a very general (2,2) divisor is an elliptic curve whose (H1,H2) section ring "
                            "is not finitely generated");
      return rep;
    }
    int d = static_cast<int>(multidegree[0]);
    int e = static_cast<int>(multidegree[1]);
    rep.eff_lower_bound = subcone_lower_bound(ambient, multidegree);
    if (n == 2) {
      classify_p1_pn_surface(rep, d, e);
    } else {
      classify_p1_pn_high_dim(rep, d, e, n);
    }
    return rep;
  }

  classify_product(rep);
  return rep;
}

std::vector<MovChamber> mov_chamber_decomposition(const ClassificationReport& report) {
  if (!report.mov || report.mov_chambers.empty())
    throw GeometryError("no chamber decomposition available for case " + report.case_tag);
  return report.mov_chambers;
}

CoxPresentation cox_descriptor(const ClassificationReport& report) {
  if (!report.cox)
    throw GeometryError("no Cox presentation available for case " + report.case_tag);
  return *report.cox;
}

Cone subcone_lower_bound(const Ambient& ambient, const DivisorClass& multidegree) {
  if (!ambient.is_p1_pn() || ambient.dims[1] < 2)
    throw GeometryError("subcone lower bound needs an ambient P^1 x P^n, n >= 2");
  long long d = multidegree.at(0), e = multidegree.at(1);
  long long n = ambient.dims[1];
  Cone c = cone_from_rays(2, {{1, 0}, primitive({-d, n * e})});
  c.open_ray = {true, true};
  return c;
}

std::vector<GridCell> mds_bidegree_region(int n, int dmax, int emax, Level level, Exec exec) {
  if (n < 3) throw GeometryError("bidegree region scan needs n >= 3");
  if (dmax < 1 || emax < 1) throw GeometryError("empty grid");
  std::vector<GridCell> cells(static_cast<size_t>(dmax) * emax);
  Ambient amb{{1, n}};
  auto fill = [&](int k) {
    int d = k / emax + 1;
    int e = k % emax + 1;
    ClassificationReport r = classify(amb, {d, e}, level);
    cells[k] = {d, e, r.mds, r.case_tag};
  };
  int total = dmax * emax;
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int k = 0; k < total; ++k) fill(k);
  } else {
    for (int k = 0; k < total; ++k) fill(k);
  }
  return cells;
}

namespace {

nlohmann::ordered_json cox_to_json(const CoxPresentation& p) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : p.blocks) {
    nlohmann::ordered_json jb;
    jb["name"] = b.name;
    jb["count"] = b.count;
    jb["degree"] = b.degree;
    blocks.push_back(jb);
  }
  j["generators"] = blocks;
  j["generator_count"] = p.generator_count();
  j["relation_degrees"] = p.relation_degrees;
  if (!p.relations.empty()) {
    nlohmann::ordered_json rels = nlohmann::ordered_json::array();
    for (const auto& r : p.relations) rels.push_back(r.str());
    j["relations"] = rels;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json report_to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["factors"] = report.ambient.dims;
  j["multidegree"] = report.multidegree;
  j["level"] = level_name(report.level);
  j["mds"] = mds_status_name(report.mds);
  j["case"] = report.case_tag;
  if (report.picard_rank)
    j["picard_rank"] = *report.picard_rank;
  else
    j["picard_rank"] = "unknown";
  if (!report.picard_note.empty()) j["picard_note"] = report.picard_note;
  j["canonical"] = report.canonical;
  j["nef"] = report.nef ? cone_to_json(*report.nef) : nlohmann::ordered_json();
  j["mov"] = report.mov ? cone_to_json(*report.mov) : nlohmann::ordered_json();
  j["eff"] = report.eff ? cone_to_json(*report.eff) : nlohmann::ordered_json();
  nlohmann::ordered_json chambers = nlohmann::ordered_json::array();
  for (const auto& ch : report.mov_chambers) {
    nlohmann::ordered_json jc = cone_to_json(ch.cone);
    jc["label"] = ch.label;
    chambers.push_back(jc);
  }
  j["mov_chambers"] = chambers;
  j["eff_lower_bound"] =
      report.eff_lower_bound ? cone_to_json(*report.eff_lower_bound) : nlohmann::ordered_json();
  j["cox"] = report.cox ? cox_to_json(*report.cox) : nlohmann::ordered_json();
  j["notes"] = report.notes;
  return j;
}

std::string report_to_text(const ClassificationReport& report) {
  std::string s;
  s += "ambient: P^" + std::to_string(report.ambient.dims[0]);
  for (size_t i = 1; i < report.ambient.dims.size(); ++i)
    s += " x P^" + std::to_string(report.ambient.dims[i]);
  s += "   multidegree: (";
  for (size_t i = 0; i < report.multidegree.size(); ++i)
    s += (i ? "," : "") + std::to_string(report.multidegree[i]);
  s += ")   level: " + level_name(report.level) + "\n";
  s += "case: " + report.case_tag + "\n";
  s += "mori dream space: " + mds_status_name(report.mds) + "\n";
  if (report.picard_rank)
    s += "picard rank: " + std::to_string(*report.picard_rank) +
         (report.picard_note.empty() ? "" : "  (" + report.picard_note + ")") + "\n";
  else if (!report.picard_note.empty())
    s += "picard rank: " + report.picard_note + "\n";
  s += "canonical class: (";
  for (size_t i = 0; i < report.canonical.size(); ++i)
    s += (i ? "," : "") + std::to_string(report.canonical[i]);
  s += ")\n";
  if (report.nef) s += "nef: " + cone_str(*report.nef) + "\n";
  if (report.mov) s += "mov: " + cone_str(*report.mov) + "\n";
  if (report.eff) s += "eff: " + cone_str(*report.eff) + "\n";
  for (const auto& ch : report.mov_chambers)
    s += "chamber " + ch.label + ": " + cone_str(ch.cone) + "\n";
  if (report.eff_lower_bound) s += "eff lower bound: " + cone_str(*report.eff_lower_bound) + "\n";
  if (report.cox) {
    s += "cox presentation: " + std::to_string(report.cox->generator_count()) + " generators (";
    for (size_t i = 0; i < report.cox->blocks.size(); ++i) {
      const auto& b = report.cox->blocks[i];
      s += (i ? ", " : "") + std::to_string(b.count) + " of degree (";
      for (size_t k = 0; k < b.degree.size(); ++k) s += (k ? "," : "") + std::to_string(b.degree[k]);
      s += ")";
    }
    s += "), " + std::to_string(report.cox->relation_degrees.size()) + " relations\n";
  }
  for (const auto& note : report.notes) s += "note: " + note + "\n";
  return s;
}

}  // namespace coxcones
