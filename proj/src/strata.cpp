#include "twistcalc/strata.hpp"

#include <algorithm>
#include <sstream>

namespace twistcalc {

bool Signature::holomorphic() const {
  return std::none_of(orders_.begin(), orders_.end(), [](const Int& o) { return o < 0; });
}

std::size_t Signature::zeros() const {
  return std::count_if(orders_.begin(), orders_.end(), [](const Int& o) { return o >= 0; });
}

std::size_t Signature::poles() const { return orders_.size() - zeros(); }

Int Signature::sum() const {
  Int s = 0;
  for (const Int& o : orders_) s += o;
  return s;
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << ", ";
    os << orders_[i].get_str();
  }
  os << ")";
  return os.str();
}

Int genus_of(const Signature& mu) {
  Int s = mu.sum();
  if (s % 2 != 0) throw Error("OddSum", "orders sum to an odd number");
  Int g = (s + 2) / 2;
  if (g < 0) throw Error("NegativeGenus", "orders sum below -2");
  return g;
}

Int stratum_dimension(const Signature& mu, bool projectivized) {
  Int g = genus_of(mu);
  Int dim;
  if (mu.holomorphic()) {
    dim = 2 * g + Int(mu.n()) - 1;
  } else {
    dim = 2 * g - 2 + Int(mu.zeros()) + Int(mu.poles());
  }
  return projectivized ? Int(dim - 1) : dim;
}

const char* to_string(ComponentLabel l) {
  switch (l) {
    case ComponentLabel::Hyperelliptic: return "hyperelliptic";
    case ComponentLabel::OddSpin: return "odd";
    case ComponentLabel::EvenSpin: return "even";
    case ComponentLabel::Nonhyperelliptic: return "nonhyperelliptic";
    default: return "unlabeled";
  }
}

namespace {

bool all_even(const Signature& mu) {
  return std::all_of(mu.orders().begin(), mu.orders().end(),
                     [](const Int& o) { return o % 2 == 0; });
}

bool hyperelliptic_shape(const Signature& mu, const Int& g) {
  const auto& o = mu.orders();
  if (mu.holomorphic()) {
    if (o.size() == 1 && o[0] == 2 * g - 2 && g >= 1) return true;
    if (o.size() == 2 && o[0] == g - 1 && o[1] == g - 1 && g >= 1) return true;
    return false;
  }
  // (2k, -2l), (2k, -l, -l), (k, k, -2l), (k, k, -l, -l)
  std::vector<Int> z, p;
  for (const Int& x : o) (x >= 0 ? z : p).push_back(x);
  if (z.empty() || p.empty()) return false;
  bool zok = (z.size() == 1 && z[0] > 0 && z[0] % 2 == 0) || (z.size() == 2 && z[0] == z[1]);
  bool pok = (p.size() == 1 && p[0] % 2 == 0) || (p.size() == 2 && p[0] == p[1]);
  return zok && pok;
}

}  // namespace

std::vector<ComponentLabel> component_labels(const Signature& mu) {
  Int g = genus_of(mu);
  std::vector<ComponentLabel> out;
  bool hyp = hyperelliptic_shape(mu, g);
  bool spin = mu.holomorphic() && all_even(mu) && g >= 2;
  if (g == 3 && spin && hyp) {
    // the even spin component is the hyperelliptic one
    return {ComponentLabel::Hyperelliptic, ComponentLabel::OddSpin};
  }
  if (hyp) out.push_back(ComponentLabel::Hyperelliptic);
  if (spin) {
    out.push_back(ComponentLabel::OddSpin);
    out.push_back(ComponentLabel::EvenSpin);
  }
  if (out.empty()) out.push_back(ComponentLabel::Unlabeled);
  return out;
}

SignatureMove split_zero(const Signature& mu, std::size_t index, const std::vector<Int>& parts) {
  if (index >= mu.n()) throw Error("BadIndex", "no entry at that index");
  if (mu.orders()[index] <= 0) throw Error("BadPartition", "only positive zero orders split");
  Int total = 0;
  for (const Int& p : parts) {
    if (p <= 0) throw Error("BadPartition", "parts must be positive");
    total += p;
  }
  if (parts.empty() || total != mu.orders()[index])
    throw Error("BadPartition", "parts do not sum to the split entry");
  std::vector<Int> v;
  v.reserve(mu.n() + parts.size() - 1);
  for (std::size_t i = 0; i < mu.n(); ++i) {
    if (i == index)
      v.insert(v.end(), parts.begin(), parts.end());
    else
      v.push_back(mu.orders()[i]);
  }
  Signature split{std::move(v)};
  return {split, {mu, split}};
}

SignatureMove merge_poles(const Signature& mu, std::size_t i, std::size_t j) {
  if (i >= mu.n() || j >= mu.n() || i == j) throw Error("BadIndex", "bad pole indices");
  if (mu.orders()[i] >= 0 || mu.orders()[j] >= 0)
    throw Error("NotAPole", "only two poles can merge");
  std::size_t lo = std::min(i, j), hi = std::max(i, j);
  std::vector<Int> v;
  v.reserve(mu.n() - 1);
  for (std::size_t k = 0; k < mu.n(); ++k) {
    if (k == hi) continue;
    if (k == lo)
      v.push_back(mu.orders()[i] + mu.orders()[j]);
    else
      v.push_back(mu.orders()[k]);
  }
  Signature merged{std::move(v)};
  return {merged, {merged, mu}};
}

}  // namespace twistcalc
