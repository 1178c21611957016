#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace tpbtest;

namespace {

using WF = W2<ModInt>;
using WQ = W2<GFq>;

WF wf(std::int64_t a0, std::int64_t a1, std::int64_t p) { return WF(ModInt(a0, p), ModInt(a1, p), p); }

// Ghost component a0^p + p a1 identifies W2(F_p) with Z/p^2.
std::int64_t ghost(const WF& x) {
  const std::int64_t p = x.p(), m = p * p;
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < p; ++i) acc = acc * x.a0().value() % m;
  return (acc + p * x.a1().value()) % m;
}

WQ random_wq(const FqFieldPtr& f, std::mt19937_64& rng) {
  return WQ(GFq::random(f, rng), GFq::random(f, rng), f->characteristic());
}

}  // namespace

TEST_CASE("addition examples") {
  CHECK(wf(1, 0, 3) + wf(1, 0, 3) == wf(2, 1, 3));
  CHECK(wf(0, 0, 5) + wf(3, 4, 5) == wf(3, 4, 5));
  CHECK(wf(2, 0, 7) + wf(0, 5, 7) == wf(2, 5, 7));
  CHECK(witt_carry_coefficients(5) == std::vector<std::int64_t>{0, 1, 2, 2, 1, 0});
  CHECK_THROWS_AS(wf(1, 0, 3) + wf(1, 0, 5), Error);
}

TEST_CASE("multiplication examples") {
  CHECK(wf(0, 1, 5) * wf(0, 1, 5) == wf(0, 0, 5));
  CHECK(wf(3, 2, 7) * wf(1, 0, 7) == wf(3, 2, 7));
  CHECK(wf(2, 1, 3) * wf(2, 0, 3) == wf(1, 2, 3));
  CHECK_THROWS_AS(wf(1, 0, 3) * wf(1, 0, 7), Error);
}

TEST_CASE("frobenius examples") {
  CHECK(wf(2, 1, 3).frobenius() == wf(2, 1, 3));
  CHECK(wf(0, 0, 3).frobenius() == wf(0, 0, 3));
  const auto f9 = FqField::make(3, 2);
  const GFq g = GFq::generator(f9);
  CHECK(WQ::teichmuller(g, 3).frobenius() == WQ::teichmuller(g.pow(3), 3));
}

TEST_CASE("p times one") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const WF one = WF::one(ModInt(0, p), p);
    CHECK(one.times(static_cast<std::uint64_t>(p)) == wf(0, 1, p));
    CHECK(one.times(static_cast<std::uint64_t>(p * p)) == WF::zero(ModInt(0, p), p));
    CHECK(wf(4 % p, 2, p).times(1) == wf(4 % p, 2, p));
  }
}

TEST_CASE("operations agree with Z/p^2") {
  std::mt19937_64 rng(17);
  for (std::int64_t p : {3, 5, 7, 11}) {
    const std::int64_t m = p * p;
    for (int i = 0; i < 300; ++i) {
      const WF x = wf(static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p), p);
      const WF y = wf(static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p), p);
      CHECK(ghost(x + y) == (ghost(x) + ghost(y)) % m);
      CHECK(ghost(x * y) == ghost(x) * ghost(y) % m);
      CHECK(ghost(-x) == (m - ghost(x)) % m);
    }
    std::set<std::int64_t> image;
    for (std::int64_t a = 0; a < p; ++a)
      for (std::int64_t b = 0; b < p; ++b) image.insert(ghost(wf(a, b, p)));
    CHECK(image.size() == static_cast<std::size_t>(m));
  }
}

TEST_CASE("ring axioms over F_p and F_{p^2}") {
  std::mt19937_64 rng(23);
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int m = 1; m <= 2; ++m) {
      const auto f = FqField::make(p, m);
      const WQ zero = WQ::zero(GFq(f, 0), p), one = WQ::one(GFq(f, 0), p);
      for (int i = 0; i < 500; ++i) {
        const WQ x = random_wq(f, rng), y = random_wq(f, rng), z = random_wq(f, rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + zero == x);
        CHECK(x * one == x);
        CHECK(x + (-x) == zero);
      }
    }
  }
}

TEST_CASE("reduction is a ring homomorphism; inclusion is multiplicative only") {
  std::mt19937_64 rng(29);
  const auto f = FqField::make(5, 2);
  for (int i = 0; i < 200; ++i) {
    const WQ x = random_wq(f, rng), y = random_wq(f, rng);
    CHECK((x + y).a0() == x.a0() + y.a0());
    CHECK((x * y).a0() == x.a0() * y.a0());
    CHECK(WQ::teichmuller(x.a0() * y.a0(), 5) == WQ::teichmuller(x.a0(), 5) * WQ::teichmuller(y.a0(), 5));
  }
  CHECK_FALSE(wf(1, 0, 3) + wf(1, 0, 3) == WF::teichmuller(ModInt(2, 3), 3));
}

TEST_CASE("a0 and a1 split additively") {
  std::mt19937_64 rng(31);
  for (std::int64_t p : {3, 5, 7, 11}) {
    const auto f = FqField::make(p, 2);
    for (int i = 0; i < 125; ++i) {
      const GFq a0 = GFq::random(f, rng), a1 = GFq::random(f, rng);
      const GFq z(f, 0);
      CHECK(WQ(a0, z, p) + WQ(z, a1, p) == WQ(a0, a1, p));
    }
  }
}

TEST_CASE("frobenius is a ring endomorphism") {
  std::mt19937_64 rng(37);
  for (std::int64_t p : {3, 5, 7}) {
    const auto f = FqField::make(p, 2);
    for (int i = 0; i < 200; ++i) {
      const WQ x = random_wq(f, rng), y = random_wq(f, rng);
      CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
      CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
    }
  }
}

TEST_CASE("forms with zero differential ignore the second coordinate") {
  std::mt19937_64 rng(41);
  for (std::int64_t p : {3, 5}) {
    const auto f = FqField::make(p, 2);
    const GFq z0(f, 0);
    for (int t = 0; t < 10; ++t) {
      TernaryForm<GFq> g(2, z0);
      for (const auto& mono : monomials(2)) g.set_coeff(mono, GFq::random(f, rng));
      const auto phi = g.inflate(static_cast<int>(p));
      std::array<WQ, 3> pt{random_wq(f, rng), random_wq(f, rng), random_wq(f, rng)};
      std::array<WQ, 3> flat = pt;
      for (auto& w : flat) w = WQ(w.a0(), z0, p);
      auto eval = [&](const std::array<WQ, 3>& v) -> WQ {
        WQ acc = WQ::zero(z0, p);
        const auto ms = monomials(phi.degree());
        for (std::size_t i = 0; i < ms.size(); ++i) {
          if (phi.coeffs()[i].is_zero()) continue;
          WQ term = WQ::teichmuller(phi.coeffs()[i], p);
          for (int k = 0; k < 3; ++k)
            for (int e = 0; e < ms[i][static_cast<std::size_t>(k)]; ++e) term = term * v[static_cast<std::size_t>(k)];
          acc = acc + term;
        }
        return acc;
      };
      CHECK(eval(pt) == eval(flat));
    }
  }
}
