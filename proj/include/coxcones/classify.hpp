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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxcones/cohomology.hpp"
#include "coxcones/cone.hpp"
#include "coxcones/hypersurface.hpp"
#include "json.hpp"

namespace coxcones {

/// How the member is chosen in its linear system.  Verdicts proved only for
/// very general members are downgraded to Conditional at lower levels.
enum class Level { Arbitrary, General, VeryGeneral };

enum class MdsStatus { Yes, No, Conditional, OutOfClassification };

std::string level_name(Level l);
std::string mds_status_name(MdsStatus s);
Level level_from_name(const std::string& name);

struct MovChamber {
  Cone cone;
  std::string label;
};

/// Everything the classification knows about one (ambient, multidegree)
/// query: Mori-dream-space status, divisor cones with open-ray flags, the
/// chamber decomposition of the movable cone, a Cox presentation descriptor
/// when one is known, and the hypothesis notes that qualify each claim.
struct ClassificationReport {
  Ambient ambient;
  DivisorClass multidegree;
  Level level = Level::General;

  MdsStatus mds = MdsStatus::OutOfClassification;
  std::string case_tag;
  std::vector<std::string> notes;

  std::optional<long long> picard_rank;
  std::string picard_note;
  DivisorClass canonical;

  std::optional<Cone> eff, mov, nef;
  std::vector<MovChamber> mov_chambers;
  std::optional<Cone> eff_lower_bound;  // open subcone contained in Eff for any member
  std::optional<CoxPresentation> cox;
};

ClassificationReport classify(const Ambient& ambient, const DivisorClass& multidegree, Level level);

/// The chambers of the movable cone (one per marked small modification).
/// Throws when the movable cone itself is unknown for the case.
std::vector<MovChamber> mov_chamber_decomposition(const ClassificationReport& report);

/// The report's Cox presentation; throws when the case has none.
CoxPresentation cox_descriptor(const ClassificationReport& report);

/// The open cone R_{>0} H1 + R_{>0} (ne H2 - d H1), contained in Eff(X) for
/// every bidegree (d,e) hypersurface of P^1 x P^n (no generality needed).
Cone subcone_lower_bound(const Ambient& ambient, const DivisorClass& multidegree);

struct GridCell {
  int d = 0, e = 0;
  MdsStatus status = MdsStatus::OutOfClassification;
  std::string case_tag;
};

/// classify over the bidegree rectangle [1,dmax] x [1,emax] on P^1 x P^n.
/// Serial and parallel execution agree exactly.
std::vector<GridCell> mds_bidegree_region(int n, int dmax, int emax, Level level = Level::VeryGeneral,
                                          Exec exec = Exec::Serial);

nlohmann::ordered_json report_to_json(const ClassificationReport& report);
std::string report_to_text(const ClassificationReport& report);

}  // namespace coxcones
