#include "twistcalc/weierstrass.hpp"

#include <algorithm>

namespace twistcalc {

ChainResult chain_is_limit_weierstrass(const ChainInput& in) {
  if (in.g < 2) throw Error("BadChain", "chain length must be at least 2");
  if (in.torsion.size() != static_cast<std::size_t>(in.g - 1))
    throw Error("BadChain", "expected torsion orders t_2..t_g");
  for (const auto& t : in.torsion)
    if (t && *t < 1) throw Error("BadChain", "torsion orders are positive");

  const int g = in.g;
  auto divides = [&](int i, const Int& k) {  // does t_i divide k?
    const auto& t = in.torsion[static_cast<std::size_t>(i - 2)];
    return t && k % *t == 0;
  };

  // reach[i][k] = admissible prefix k_1..k_i with k_i = k (2 <= k <= g)
  std::vector<std::vector<char>> reach(g + 1, std::vector<char>(g + 1, 0));
  std::vector<std::vector<int>> parent(g + 1, std::vector<int>(g + 1, -1));
  for (int k = 2; k <= g; ++k) reach[1][k] = 1;
  for (int i = 2; i <= g; ++i)
    for (int k = 2; k <= g; ++k) {
      if (!reach[i - 1][k]) continue;
      for (int k2 = k; k2 <= g; ++k2) {
        if (k2 == k && !divides(i, Int(k2))) continue;
        if (!reach[i][k2]) {
          reach[i][k2] = 1;
          parent[i][k2] = k;
        }
      }
    }

  ChainResult out;
  if (!reach[g][g]) return out;
  out.limit_weierstrass = true;
  std::vector<Int> seq(g);
  int k = g;
  for (int i = g; i >= 1; --i) {
    seq[static_cast<std::size_t>(i - 1)] = k;
    if (i > 1) k = parent[i][k];
  }
  out.witness = std::move(seq);
  return out;
}

namespace {

WeierstrassFact fact(WeierstrassStatus s, std::string cite, std::string hyp = "") {
  return {s, std::move(cite), std::move(hyp)};
}

}  // namespace

WeierstrassFact generic_nonweierstrass(const Signature& mu, std::size_t index,
                                       ComponentLabel component) {
  if (index >= mu.n()) throw Error("BadIndex", "no marked point at that index");
  Int g = genus_of(mu);
  const Int& m = mu.orders()[index];

  if (g <= 1)
    return fact(WeierstrassStatus::NotWeierstrass, "genus<=1",
                "curves of genus at most one have no Weierstrass points");

  if (component == ComponentLabel::Hyperelliptic) {
    const auto& o = mu.orders();
    if (mu.holomorphic()) {
      if (o.size() == 1 && o[0] == 2 * g - 2)
        return fact(WeierstrassStatus::Weierstrass, "Sec-6-hyp");
      if (o.size() == 2 && o[0] == g - 1 && o[1] == g - 1)
        return fact(WeierstrassStatus::NotWeierstrass, "Sec-6-hyp",
                    "the two zeros are conjugate under the hyperelliptic involution");
      return fact(WeierstrassStatus::OutOfScope, "Sec-6-hyp",
                  "not a hyperelliptic signature shape");
    }
    std::vector<std::size_t> z, p;
    for (std::size_t i = 0; i < o.size(); ++i) (o[i] >= 0 ? z : p).push_back(i);
    bool zok = (z.size() == 1 && o[z[0]] % 2 == 0) || (z.size() == 2 && o[z[0]] == o[z[1]]);
    bool pok = (p.size() == 1 && o[p[0]] % 2 == 0) || (p.size() == 2 && o[p[0]] == o[p[1]]);
    if (!zok || !pok)
      return fact(WeierstrassStatus::OutOfScope, "Sec-6-hyp",
                  "not a hyperelliptic signature shape");
    bool is_zero = o[index] >= 0;
    bool paired = is_zero ? z.size() == 2 : p.size() == 2;
    if (paired)
      return fact(WeierstrassStatus::NotWeierstrass, "Sec-6-hyp",
                  "conjugate pair under the hyperelliptic involution");
    return fact(WeierstrassStatus::Weierstrass, "Sec-6-hyp");
  }

  if (mu.holomorphic()) {
    if (m >= g) return fact(WeierstrassStatus::Weierstrass, "Riemann-Roch", "m_i >= g");
    return fact(WeierstrassStatus::OutOfScope, "Prop-6.4",
                "conditional: reduces to the (m-2)-stratum when m does not divide g");
  }
  if (m > 0) return fact(WeierstrassStatus::NotWeierstrass, "Thm-6.7");
  if (m == 0)
    return fact(WeierstrassStatus::OutOfScope, "Thm-6.7",
                "order-0 marked points are not zeros of the differential");
  return fact(WeierstrassStatus::OutOfScope, "Prop-6.5",
              "conditional: reduces to the (-l-2)-stratum when l does not divide g");
}

}  // namespace twistcalc
