#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gplab {

enum class SymbolKind { gp, schrodinger, klein_gordon, beam, fourth_order };

/// Radial dispersion relation ω(r) with closed-form derivatives up to order three.
class SymbolSpec {
 public:
  SymbolSpec(SymbolKind kind, std::vector<double> params);

  SymbolKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }

  double omega(double r) const;
  double omega1(double r) const;
  double omega2(double r) const;
  double omega3(double r) const;

  // Evaluates ω^{(order)} for order in 0..3.
  double derivative(int order, double r) const;

 private:
  SymbolKind kind_;
  std::vector<double> params_;
  std::string name_;
};

/// Throws DomainError for unknown names or invalid parameters.
SymbolSpec catalog_lookup(const std::string& name, const std::vector<double>& params = {});

/// Frequency annulus I_k = (2^{k-1}, 2^{k+1}).
struct DyadicBand {
  int k = 0;
  double lower() const;
  double upper() const;
  // Geometric interior sample r_i = 2^{k-1} 4^{(i+1/2)/n}.
  double sample(int i, int n) const;
};

struct DyadicClassification {
  int k = 0;
  double alpha = 0;
  double beta = 0;
  bool h1 = false;
  bool h2 = false;
  bool h3 = false;
  double c_lower_1 = 0;
  double c_lower_2 = 0;
  double ratio_bound = 0;
  int sign_changes_omega3 = 0;
};

struct ClassifyOptions {
  int grid_points = 256;
  double c_min = 0.05;
};

DyadicClassification classify_band(const SymbolSpec& spec, DyadicBand band, double alpha,
                                   double beta, ClassifyOptions opts = {});

struct ExponentSuggestion {
  double alpha = 0;
  // Empty when ω″ vanishes identically on the band.
  std::optional<double> beta;
};

ExponentSuggestion suggest_exponents(const SymbolSpec& spec, DyadicBand band,
                                     int grid_points = 256);

/// Exponents and flags the catalog documents for each entry.
struct DocumentedBand {
  double alpha = 0;
  double beta = 0;
  bool h1 = false;
  bool h2 = false;
  bool h3 = false;
};

DocumentedBand documented_exponents(const SymbolSpec& spec, int k);

}  // namespace gplab
