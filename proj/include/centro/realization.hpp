#pragma once

#include <string>
#include <vector>

#include "centro/centro_core.hpp"
#include "centro/spectra.hpp"

namespace centro {

enum class RealizationKind { RealCentro, NonnegCentro, PositiveCentro };

inline std::string to_string(RealizationKind k) {
  switch (k) {
    case RealizationKind::RealCentro: return "real-centrosymmetric";
    case RealizationKind::NonnegCentro: return "nonnegative-centrosymmetric";
    case RealizationKind::PositiveCentro: return "positive-centrosymmetric";
  }
  return "?";
}

/// Which construction produced a matrix.
enum class Construction {
  RealCentro,
  NonnegReal,
  PositivePerfect,
  Suleimanova,
  Partitioned,
  FourByFourReal,
  FourByFourDiagReal,
  FourByFourDiagComplex,
  External,
};

inline std::string to_string(Construction c) {
  switch (c) {
    case Construction::RealCentro: return "real-centro";
    case Construction::NonnegReal: return "nonneg-real";
    case Construction::PositivePerfect: return "positive";
    case Construction::Suleimanova: return "suleimanova";
    case Construction::Partitioned: return "partitioned";
    case Construction::FourByFourReal: return "4x4";
    case Construction::FourByFourDiagReal: return "4x4-diag-real";
    case Construction::FourByFourDiagComplex: return "4x4-diag-complex";
    case Construction::External: return "external";
  }
  return "?";
}

struct Provenance {
  Construction construction = Construction::External;
  /// Short human-readable statement of the result the construction rests on.
  std::string statement;
  /// Sublists actually used (empty when the construction has none).
  std::vector<SpectrumList> partition;
  std::vector<double> anchors;
  std::vector<std::string> notes;
};

struct Realization {
  CentroMatrix matrix;
  RealizationKind kind = RealizationKind::RealCentro;
  Provenance provenance;
};

}  // namespace centro
