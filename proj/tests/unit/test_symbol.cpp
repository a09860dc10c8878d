#include <doctest.h>

#include <cmath>

#include "gplab/errors.hpp"
#include "gplab/symbol.hpp"

using namespace gplab;

namespace {

struct Entry {
  const char* name;
  std::vector<double> params;
};

const std::vector<Entry> kCatalog{
    {"gp", {}},           {"schrodinger", {2.0}},  {"schrodinger", {1.0}},  {"schrodinger", {0.5}},
    {"klein_gordon", {}}, {"beam", {}},            {"fourth_order", {0.0}}, {"fourth_order", {0.1}},
    {"fourth_order", {1.0}},
};

}  // namespace

TEST_CASE("gp omega1 tends to sqrt2 at the origin") {
  const SymbolSpec gp = catalog_lookup("gp");
  CHECK(gp.omega1(1e-9) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(gp.omega(0.0) == 0.0);
}

TEST_CASE("schrodinger a=2 closed forms") {
  const SymbolSpec s = catalog_lookup("schrodinger", {2.0});
  for (double r : {0.01, 0.7, 3.0, 100.0}) {
    CHECK(s.omega(r) == doctest::Approx(r * r));
    CHECK(s.omega2(r) == doctest::Approx(2.0));
    CHECK(s.omega3(r) == doctest::Approx(0.0));
  }
}

TEST_CASE("klein-gordon values at r=1") {
  const SymbolSpec kg = catalog_lookup("klein_gordon");
  CHECK(kg.omega(1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(kg.omega1(1.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("catalog rejects unknown names and invalid parameters") {
  CHECK_THROWS_AS(catalog_lookup("airy"), DomainError);
  CHECK_THROWS_AS(catalog_lookup("schrodinger", {0.0}), DomainError);
  CHECK_THROWS_AS(catalog_lookup("schrodinger", {-1.0}), DomainError);
  CHECK_THROWS_AS(catalog_lookup("fourth_order", {-0.1}), DomainError);
}

TEST_CASE("derivatives agree with centered differences on [2^-10, 2^10]") {
  for (const Entry& e : kCatalog) {
    const SymbolSpec s = catalog_lookup(e.name, e.params);
    for (int i = 0; i <= 80; ++i) {
      const double r = std::ldexp(1.0, -10) * std::pow(2.0, 20.0 * i / 80.0);
      for (int order = 1; order <= 3; ++order) {
        const double h = 1e-4 * r;
        const double fd = (s.derivative(order - 1, r + h) - s.derivative(order - 1, r - h)) / (2 * h);
        const double exact = s.derivative(order, r);
        REQUIRE(std::isfinite(exact));
        const double scale = std::max({std::abs(exact), std::abs(s.derivative(order - 1, r)) / r, 1e-300});
        INFO(e.name << " order " << order << " r " << r);
        CHECK(std::abs(fd - exact) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("classification examples") {
  const SymbolSpec gp = catalog_lookup("gp");
  const auto hi = classify_band(gp, DyadicBand{3}, 2, 2);
  CHECK(hi.h1);
  CHECK(hi.h2);
  CHECK(hi.h3);
  const auto lo = classify_band(gp, DyadicBand{-4}, 1, 3);
  CHECK(lo.h1);
  CHECK(lo.h2);
  CHECK(lo.h3);
  const auto kg = classify_band(catalog_lookup("klein_gordon"), DyadicBand{2}, 1, -1);
  CHECK(kg.h2);
  CHECK(kg.h3);
}

TEST_CASE("catalog table is reproduced for k in -8..8") {
  for (const Entry& e : kCatalog) {
    const SymbolSpec s = catalog_lookup(e.name, e.params);
    for (int k = -8; k <= 8; ++k) {
      const DocumentedBand doc = documented_exponents(s, k);
      const auto cls = classify_band(s, DyadicBand{k}, doc.alpha, doc.beta);
      INFO(s.name() << " k=" << k);
      CHECK(cls.h1 == doc.h1);
      CHECK(cls.h2 == doc.h2);
      CHECK(cls.h3 == doc.h3);
      if (cls.h2) {
        CHECK(cls.h1);
        CHECK(k * (cls.alpha - cls.beta) >= 0);
      }
    }
  }
}

TEST_CASE("h3 implies omega1*omega2 > 0 on the band") {
  for (const Entry& e : kCatalog) {
    const SymbolSpec s = catalog_lookup(e.name, e.params);
    for (int k = -8; k <= 8; ++k) {
      const DocumentedBand doc = documented_exponents(s, k);
      const auto cls = classify_band(s, DyadicBand{k}, doc.alpha, doc.beta);
      if (!cls.h3) continue;
      for (int i = 0; i < 256; ++i) {
        const double r = DyadicBand{k}.sample(i, 256);
        CHECK(s.omega1(r) * s.omega2(r) > 0);
      }
    }
  }
}

TEST_CASE("wrong exponents are rejected") {
  const SymbolSpec gp = catalog_lookup("gp");
  CHECK_FALSE(classify_band(gp, DyadicBand{8}, 3, 2).h1);
  CHECK_FALSE(classify_band(gp, DyadicBand{-8}, 0, 3).h1);
  CHECK_FALSE(classify_band(gp, DyadicBand{8}, 2, 3).h2);
  CHECK_FALSE(classify_band(gp, DyadicBand{-8}, 1, 0).h2);
}

TEST_CASE("classify_band preconditions") {
  const SymbolSpec gp = catalog_lookup("gp");
  CHECK_THROWS_AS(classify_band(gp, DyadicBand{0}, 2, 2, {32, 0.05}), PreconditionError);
  CHECK_THROWS_AS(classify_band(gp, DyadicBand{0}, NAN, 2), PreconditionError);
}

TEST_CASE("dyadic band geometry") {
  for (int k = -5; k <= 5; ++k) {
    const DyadicBand b{k};
    CHECK(b.lower() > 0);
    CHECK(b.upper() / b.lower() == 4.0);
    CHECK(b.sample(0, 256) > b.lower());
    CHECK(b.sample(255, 256) < b.upper());
  }
}

TEST_CASE("suggest_exponents examples") {
  const SymbolSpec beam = catalog_lookup("beam");
  const auto hi = suggest_exponents(beam, DyadicBand{4});
  CHECK(hi.alpha == 2.0);
  REQUIRE(hi.beta);
  CHECK(*hi.beta == 2.0);
  const auto lo = suggest_exponents(beam, DyadicBand{-4});
  CHECK(lo.alpha == 4.0);
  CHECK(*lo.beta == 4.0);
  const auto lin = suggest_exponents(catalog_lookup("schrodinger", {1.0}), DyadicBand{0});
  CHECK(lin.alpha == 1.0);
  CHECK_FALSE(lin.beta.has_value());
}

TEST_CASE("suggested exponents classify cleanly for |k| <= 8") {
  for (const Entry& e : kCatalog) {
    const SymbolSpec s = catalog_lookup(e.name, e.params);
    for (int k = -8; k <= 8; ++k) {
      const auto sug = suggest_exponents(s, DyadicBand{k});
      const auto cls = classify_band(s, DyadicBand{k}, sug.alpha, sug.beta.value_or(2.0));
      INFO(s.name() << " k=" << k);
      CHECK(cls.h1);
    }
  }
}
