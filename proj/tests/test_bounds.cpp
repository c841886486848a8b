#include <cmath>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "wirsing/bounds.hpp"
#include "wirsing/errors.hpp"

using namespace wirsing;

namespace {

RealInterval pt(const Rational& q) { return RealInterval(q); }

// (n - 2m - 2 + sqrt(disc)) / 4, an independent algebraic form of Phi.
RealInterval phi_oracle(long m, long n) {
  long disc = n * n + 12 * m * n + 20 * n - 12 * m * m - 24 * m + 4;
  return (RealInterval(Rational(n - 2 * m - 2)) + sqrt(pt(Rational(disc)), pow10(-40))) / 4;
}

// Double-precision argmax over m, used only where candidate gaps are far above rounding.
long best_m_double(long n) {
  long best = 1;
  double best_v = -1;
  for (long m = 1; 2 * m <= n - 2; ++m) {
    double d = static_cast<double>(n * n + 12 * m * n + 20 * n - 12 * m * m - 24 * m + 4);
    double v = (static_cast<double>(n - 2 * m - 2) + std::sqrt(d)) / 4;
    if (v > best_v + 1e-9) {
      best_v = v;
      best = m;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("phi bound examples") {
  BoundReport r = phi_bound(1, 4);
  CHECK(r.display == "2.64");
  CHECK(r.value.overlaps(sqrt(pt(Rational(7)), pow10(-40))));
  CHECK(phi_bound(1, 5).display == "3.34");
  // 38 / (-1 + sqrt 153)
  RealInterval closed = RealInterval(Rational(38)) / (sqrt(pt(Rational(153)), pow10(-40)) - 1);
  CHECK(phi_value(1, 5).overlaps(closed));
  CHECK(phi_bound(1, 4, 10).display == "2.6457513110");
  CHECK_THROWS_AS(phi_value(1, 3), DomainError);
  CHECK_THROWS_AS(phi_value(2, 5), DomainError);
  CHECK_THROWS_AS(phi_value(0, 10), DomainError);
}

TEST_CASE("phi with a perfect-square discriminant is an exact rational") {
  int found = 0;
  for (long n = 4; n <= 400 && found < 5; ++n) {
    for (long m = 1; m <= max_admissible_m(n); ++m) {
      long disc = n * n + 12 * m * n + 20 * n - 12 * m * m - 24 * m + 4;
      long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
      if (s * s != disc) continue;
      ++found;
      RealInterval v = phi_value(m, n);
      CHECK(v.is_point());
      CHECK(v.lo() == make_rational(n - 2 * m - 2 + s, 4));
      CHECK(phi_algebraic(m, n).is_rational());
    }
  }
  CHECK(found > 0);
}

TEST_CASE("phi agrees with its rationalized form") {
  for (long n = 4; n <= 80; ++n) {
    for (long m = 1; m <= max_admissible_m(n); ++m) {
      RealInterval v = phi_value(m, n);
      CHECK(v.width() <= default_width());
      CHECK(v.overlaps(phi_oracle(m, n)));
      RealInterval a = phi_algebraic(m, n).enclosure(120);
      CHECK(v.overlaps(a));
    }
  }
}

TEST_CASE("equilibrium root") {
  // (1,4): 14 l^2 - 2 = 0, root 1/sqrt 7
  AlgebraicReal l14 = equilibrium_lambda(1, 4);
  CHECK(l14.polynomial() == IntPolynomial{-1, 0, 7});
  RealInterval e = l14.enclosure(80);
  CHECK(e.overlaps(1 / sqrt(pt(Rational(7)), pow10(-40))));
  CHECK(truncated_decimal(e, 5) == std::optional<std::string>("0.37796"));
  // (1,5): 19 l^2 + l - 2 = 0
  CHECK(equilibrium_lambda(1, 5).polynomial() == IntPolynomial{-2, 1, 19});
  for (long n = 4; n <= 60; ++n) {
    for (long m = 1; m <= max_admissible_m(n); ++m) {
      RealInterval lam = equilibrium_lambda(m, n).enclosure(70);
      CHECK(lam.lo() > make_rational(1, n - m + 1));
      CHECK(lam.hi() < make_rational(1, m));
      RealInterval prod = phi_value(m, n, pow10(-25)) * lam;
      CHECK(prod.contains(Rational(1)));
      CHECK(prod.width() < pow10(-15));
    }
  }
}

TEST_CASE("best m and the comparison table") {
  CHECK(best_m(4).best_m == 1);
  CHECK(best_m(4).all_candidates.size() == 1);
  CHECK(best_m(1000).best_m == 210);
  CHECK(truncated_decimal(best_m(1000).bound, 2) == std::optional<std::string>("577.92"));
  CHECK(truncated_decimal(best_m(100).bound, 2) == std::optional<std::string>("58.32"));
  for (long n = 4; n <= 300; ++n) {
    OptimizationResult r = best_m(n);
    CHECK(r.best_m == best_m_double(n));
    for (const auto& [m, v] : r.all_candidates) CHECK(v.lo() <= r.bound.hi());
  }
  CHECK_THROWS_AS(best_m(3), DomainError);

  std::vector<long> ns{4, 5, 10, 20, 24, 25, 30, 50, 100, 1000};
  std::vector<std::string> bs{"2.64", "3.34", "6.42", "12.16", "14.46", "15.04", "17.92", "29.46", "58.32", "577.92"};
  auto rows = bs_table(ns);
  REQUIRE(rows.size() == ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    CHECK(rows[i].n == ns[i]);
    CHECK(rows[i].bs_value == bs[i]);
    CHECK(rows[i].tsi_reference.has_value());
  }
  CHECK(rows[4].tsi_reference == std::optional<std::string>("14.46"));
  CHECK(bs_table({}).empty());
}

TEST_CASE("ties in the optimizer resolve to the smaller m") {
  // Exact comparison path: identical algebraic values compare equal.
  CHECK(compare(phi_algebraic(3, 20), phi_algebraic(3, 20)) == 0);
  CHECK(compare(phi_algebraic(3, 20), phi_algebraic(2, 20)) > 0);
}

TEST_CASE("F and its maximum") {
  auto [a0, f0] = argmax_F();
  RealInterval alpha = a0.enclosure(120);
  RealInterval closed = (3 - sqrt(pt(Rational(3)), pow10(-45))) / 6;
  CHECK(alpha.overlaps(closed));
  CHECK(truncated_decimal(alpha, 4) == std::optional<std::string>("0.2113"));
  CHECK(f0.overlaps(inv_sqrt3()));
  CHECK(truncated_decimal(f0, 4) == std::optional<std::string>("0.5773"));
  // F(1/4) = (3/4) / (-1/2 + sqrt(13/4))
  RealInterval f14 = eval_F(pt(make_rational(1, 4)));
  CHECK(f14.overlaps(RealInterval(make_rational(3, 4)) / (sqrt(pt(make_rational(13, 4)), pow10(-40)) - RealInterval(make_rational(1, 2)))));
  for (long k = 1; k < 50; ++k) {
    Rational t = make_rational(k, 100);
    RealInterval T = pt(t);
    RealInterval f = eval_F(T);
    // identity F(t) (2t - 1 + sqrt(1 + 12t - 12t^2)) = 4t - 4t^2
    RealInterval lhs = f * (2 * T - 1 + sqrt(1 + 12 * T - 12 * T.square(), pow10(-40)));
    CHECK(lhs.contains(4 * t - 4 * t * t));
    // rationalized form (sqrt(1 + 12t - 12t^2) + 1 - 2t) / 4
    RealInterval simple = (sqrt(1 + 12 * T - 12 * T.square(), pow10(-40)) + 1 - 2 * T) / 4;
    CHECK(f.overlaps(simple));
    CHECK(f.hi() <= f0.hi());
  }
  CHECK_THROWS_AS(eval_F(pt(Rational(0))), DomainError);
  CHECK_THROWS_AS(eval_F(pt(make_rational(1, 2))), DomainError);
}

TEST_CASE("G, c and the constants") {
  RealInterval g0 = gamma0().enclosure(110);
  CHECK(truncated_decimal(g0, 4) == std::optional<std::string>("0.2345"));
  RealInterval d = delta();
  CHECK(truncated_decimal(d, 4) == std::optional<std::string>("0.6408"));
  CHECK(d.lo() > make_rational(6408, 10000));
  CHECK(d.width() <= default_width());
  RealInterval c0 = eval_c(gamma0().enclosure(200), pow10(-30));
  CHECK(c0.lo() >= 1);
  CHECK(c0.hi() <= 2);
  CHECK((c0 * d).contains(Rational(1)) == (c0 * d).overlaps(RealInterval(Rational(1))));
  CHECK(truncated_decimal(1 / d, 3) == truncated_decimal(c0, 3));
  for (Rational g : {make_rational(1, 4), make_rational(1, 3), make_rational(2, 5)}) {
    CHECK((eval_G(pt(g)) * eval_c(pt(g))).contains(Rational(1)));
  }
  for (long k = 1; k < 200; ++k) {
    Rational g = make_rational(k, 400);
    CHECK((eval_G(pt(g)) * eval_c(pt(g))).contains(Rational(1)));
  }
  CHECK_THROWS_AS(eval_G(pt(make_rational(-1, 4))), DomainError);
  CHECK_THROWS_AS(eval_c(pt(make_rational(1, 2))), DomainError);
}

TEST_CASE("R and S") {
  CHECK(eval_R(pt(Rational(1))) == pt(Rational(0)));
  CHECK(eval_S(pt(Rational(1))) == pt(Rational(1)));
  CHECK(truncated_decimal(eval_S(pt(make_rational(3, 2))), 4) == std::optional<std::string>("1.0717"));
  CHECK(truncated_decimal(eval_S(pt(make_rational(7, 4))), 4) == std::optional<std::string>("1.2037"));
  CHECK(truncated_decimal(eval_S(pt(make_rational(199, 100))), 4) == std::optional<std::string>("1.7527"));
  CHECK(truncated_decimal(eval_S(pt(make_rational(19999, 10000))), 4) == std::optional<std::string>("1.9721"));
  bool limit = false;
  CHECK(eval_S(pt(Rational(2)), default_width(), &limit) == pt(Rational(2)));
  CHECK(limit);
  RealInterval prev = eval_S(pt(Rational(1)));
  for (long k = 1; k <= 100; ++k) {
    RealInterval cur = eval_S(pt(1 + (1 - pow10(-4)) * make_rational(k, 100)));
    CHECK(certainly_less(prev, cur));
    prev = cur;
  }
  CHECK_THROWS_AS(eval_S(pt(make_rational(5, 2))), DomainError);
  CHECK_THROWS_AS(eval_R(pt(make_rational(1, 2))), DomainError);
}

TEST_CASE("exponent relation right-hand sides") {
  CHECK(rhs_h11(4, 1, pt(make_rational(2, 5))) == pt(make_rational(11, 3)));
  RealInterval wd = rhs_windag(4, 1, pt(make_rational(1, 3) + pow10(-9)));
  CHECK(wd.hi() < 3);
  CHECK(wd.lo() > make_rational(29999, 10000));
  for (long n = 4; n <= 12; ++n) {
    for (long m = 1; m <= max_admissible_m(n); ++m) {
      CHECK(rhs_h11(n, m, pt(make_rational(1, n - m))) == pt(Rational(n - m)));
      // increasing in lambda-hat and above n - m past the threshold
      Rational lo = make_rational(1, n - m);
      Rational hi = make_rational(1, m + 1);
      RealInterval prev11 = rhs_h11(n, m, pt(lo));
      RealInterval prev21 = rhs_h21(n, m, pt(lo), pt(lo));
      for (int k = 1; k < 20; ++k) {
        Rational l = lo + (hi - lo) * make_rational(k, 20);
        RealInterval h11 = rhs_h11(n, m, pt(l));
        RealInterval h21 = rhs_h21(n, m, pt(l), pt(l));
        CHECK(h11.lo() > n - m);
        CHECK(certainly_less(prev11, h11));
        CHECK(prev21.hi() <= h21.lo());
        prev11 = h11;
        prev21 = h21;
      }
    }
  }
  CHECK_THROWS_AS(rhs_h11(4, 1, pt(make_rational(1, 4))), DomainError);
  CHECK_THROWS_AS(rhs_h11(4, 1, pt(Rational(1))), DomainError);
  CHECK_THROWS_AS(rhs_verynew(4, 1, pt(make_rational(1, 3))), DomainError);
  CHECK_THROWS_AS(rhs_h11(3, 1, pt(make_rational(1, 2))), DomainError);
  try {
    rhs_h11(4, 1, pt(make_rational(1, 4)));
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("lambda_hat > 1/(n-m)") != std::string::npos);
  }
}

TEST_CASE("consistency bound for lambda-hat") {
  AlgebraicReal r = consistency_max_lambda(4, 1);
  CHECK(r.polynomial() == IntPolynomial{-1, -4, 15});
  RealInterval e = r.enclosure(100);
  CHECK(e.overlaps((sqrt(pt(Rational(19)), pow10(-40)) + 2) / 15));
  CHECK(truncated_decimal(e, 4) == std::optional<std::string>("0.4239"));
  for (long n : {4L, 6L, 8L, 10L, 20L}) {
    long m = n / 2 - 1;
    AlgebraicReal x = consistency_max_lambda(n, m);
    RealInterval xe = x.enclosure(100);
    CHECK(xe.hi() < make_rational(2, n));
    // at the crossing the even-n lower (lambda-hat part) and upper bounds coincide
    RealInterval lower = (n + 2) * xe / (2 - n * xe);
    RealInterval upper = even_n_upper(n, xe);
    CHECK(lower.overlaps(upper));
    // and they agree with the general forms at m = n/2 - 1
    Rational l = make_rational(2, n + 2) + make_rational(1, 1000);
    CHECK(even_n_lower(n, pt(l), pt(l)) == rhs_h21(n, m, pt(l), pt(l)));
    CHECK(even_n_upper(n, pt(l)) == rhs_verynew(n, m, pt(l)));
  }
}

TEST_CASE("transfer inequalities") {
  for (long n = 1; n <= 6; ++n) {
    TransferArgs a;
    a.n = n;
    a.w_hat = pt(Rational(n));
    a.w = pt(Rational(n));
    a.lam_hat = pt(make_rational(1, n));
    CHECK(transfer_rhs(FormulaId::TOLL, a) == pt(make_rational(n + 1, 2)));
    CHECK(transfer_rhs(FormulaId::DAVSCHM, a) == pt(Rational(n)));
    CHECK(transfer_rhs(FormulaId::TOLLER_3, a) == pt(Rational(n)));
    CHECK(transfer_rhs(FormulaId::TOLLER_1, a) == pt(make_rational(n + 1, 2)));
    CHECK(transfer_rhs(FormulaId::TOLLER_2, a) == pt(Rational(1)));
    CHECK(transfer_rhs(FormulaId::STRONG_TOLL, a) == pt(make_rational(n + 1, 2)));
  }
  TransferArgs bad;
  bad.n = 3;
  bad.w_hat = pt(Rational(2));
  CHECK_THROWS_AS(transfer_rhs(FormulaId::TOLL, bad), DomainError);
  CHECK_THROWS_AS(transfer_rhs(FormulaId::TOLLER_1, bad), DomainError);
  CHECK_THROWS_AS(transfer_rhs(FormulaId::PHI, bad), DomainError);
}

TEST_CASE("positivity behind Phi(m,n)/n > 1/sqrt 3") {
  PositivityCheck c12 = verify_inv_sqrt3_bound(12);
  CHECK(c12.m == 2);
  CHECK(c12.positive);
  CHECK(c12.exceeds_inv_sqrt3);
  PositivityCheck c4 = verify_inv_sqrt3_bound(4);
  CHECK(c4.m == 1);
  CHECK(c4.clamped);
  CHECK(c4.exceeds_inv_sqrt3);
  CHECK(certainly_less(inv_sqrt3(), phi_value(1, 4) / 4));
  for (long n = 5; n <= 400; ++n) {
    PositivityCheck c = verify_inv_sqrt3_bound(n);
    CHECK_FALSE(c.clamped);
    CHECK(c.positive);
    CHECK(c.exceeds_inv_sqrt3);
  }
  CHECK(floor_n_alpha0(12) == 2);
  CHECK(floor_n_alpha0(1000) == 211);
}

TEST_CASE("report serialization") {
  BoundReport r = phi_bound(1, 4, 4);
  auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["schema_version"] == 1);
  CHECK(j["formula_id"] == "PHI");
  CHECK(j["params"]["m"] == "1");
  CHECK(j["params"]["n"] == "4");
  CHECK(j["display"] == "2.6457");
  CHECK(std::string(j["lo"]).rfind("2.64575131106459", 0) == 0);
  CHECK(formula_id_from_string("TOLLER_2") == FormulaId::TOLLER_2);
  CHECK_THROWS_AS(formula_id_from_string("NOPE"), InputError);
}
