#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "brauer/diagram.hpp"
#include "brauer/error.hpp"
#include "brauer/rings.hpp"

namespace brauer {

// A finite linear combination of (k, l) diagrams over the ring R, living in
// a Brauer category whose loop value is `delta`.
template <class R>
class Morphism {
 public:
  using Ring = R;
  using Elem = typename R::Elem;
  using Terms = std::map<Diagram, Elem>;

  Morphism(R ring, Elem delta, int lower_count, int upper_count)
      : ring_(std::move(ring)), delta_(std::move(delta)), lower_(lower_count), upper_(upper_count) {}

  static Morphism from_diagram(R ring, Elem delta, const Diagram& d) {
    Morphism m(ring, std::move(delta), d.lower_count(), d.upper_count());
    m.add_term(d, m.ring_.one());
    return m;
  }

  const R& ring() const { return ring_; }
  const Elem& delta() const { return delta_; }
  int lower_count() const { return lower_; }
  int upper_count() const { return upper_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Elem coefficient(const Diagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  void add_term(const Diagram& d, const Elem& c) {
    if (d.lower_count() != lower_ || d.upper_count() != upper_) {
      throw ValencyError("term " + d.to_string() + " does not match valency (" +
                         std::to_string(lower_) + "," + std::to_string(upper_) + ")");
    }
    if (ring_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (ring_.is_zero(it->second)) terms_.erase(it);
    }
  }

  // Same ring, delta and valency, no terms.
  Morphism empty_like(int k, int l) const { return Morphism(ring_, delta_, k, l); }
  Morphism empty_like() const { return empty_like(lower_, upper_); }
  Morphism unit(const Diagram& d) const {
    return from_diagram(ring_, delta_, d);
  }

  Morphism& operator+=(const Morphism& o) {
    check_compatible(o);
    check_same_valency(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  Morphism& operator-=(const Morphism& o) {
    check_compatible(o);
    check_same_valency(o);
    for (const auto& [d, c] : o.terms_) add_term(d, ring_.neg(c));
    return *this;
  }

  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) { return a -= b; }

  Morphism scaled(const Elem& s) const {
    Morphism out = empty_like();
    if (ring_.is_zero(s)) return out;
    for (const auto& [d, c] : terms_) out.add_term(d, ring_.mul(s, c));
    return out;
  }

  friend bool operator==(const Morphism& a, const Morphism& b) {
    if (!(a.ring_ == b.ring_) || a.lower_ != b.lower_ || a.upper_ != b.upper_) return false;
    if (!a.ring_.equal(a.delta_, b.delta_) || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [d, c] : a.terms_) {
      if (!(d == it->first) || !a.ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  void check_compatible(const Morphism& o) const {
    if (!(ring_ == o.ring_)) {
      throw RingMismatchError("morphisms over " + ring_.name() + " and " + o.ring_.name());
    }
    if (!ring_.equal(delta_, o.delta_)) {
      throw RingMismatchError("morphisms with different loop values " + ring_.format(delta_) +
                              " and " + ring_.format(o.delta_));
    }
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [d, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + ring_.format(c) + ")" + d.to_string();
    }
    return out;
  }

 private:
  void check_same_valency(const Morphism& o) const {
    if (lower_ != o.lower_ || upper_ != o.upper_) {
      throw ValencyError("adding morphisms of different valency");
    }
  }

  R ring_;
  Elem delta_;
  int lower_;
  int upper_;
  Terms terms_;
};

// upper o lower; each diagram pair contributes delta^loops.
template <class R>
Morphism<R> compose(const Morphism<R>& upper, const Morphism<R>& lower) {
  upper.check_compatible(lower);
  if (upper.lower_count() != lower.upper_count()) {
    throw ValencyError("cannot compose morphisms: " + std::to_string(upper.lower_count()) +
                       " != " + std::to_string(lower.upper_count()));
  }
  const R& ring = upper.ring();
  Morphism<R> out = upper.empty_like(lower.lower_count(), upper.upper_count());
  std::vector<typename R::Elem> powers{ring.one()};
  for (const auto& [d1, c1] : upper.terms()) {
    for (const auto& [d2, c2] : lower.terms()) {
      auto [loops, d] = compose(d1, d2);
      while (static_cast<int>(powers.size()) <= loops) {
        powers.push_back(ring.mul(powers.back(), upper.delta()));
      }
      out.add_term(d, ring.mul(ring.mul(c1, c2), powers[static_cast<std::size_t>(loops)]));
    }
  }
  return out;
}

template <class R>
Morphism<R> operator*(const Morphism<R>& a, const Morphism<R>& b) {
  return compose(a, b);
}

template <class R>
Morphism<R> tensor(const Morphism<R>& a, const Morphism<R>& b) {
  a.check_compatible(b);
  const R& ring = a.ring();
  Morphism<R> out =
      a.empty_like(a.lower_count() + b.lower_count(), a.upper_count() + b.upper_count());
  for (const auto& [d1, c1] : a.terms()) {
    for (const auto& [d2, c2] : b.terms()) out.add_term(tensor(d1, d2), ring.mul(c1, c2));
  }
  return out;
}

template <class R, class F>
Morphism<R> map_diagrams(const Morphism<R>& x, int k, int l, F f) {
  Morphism<R> out = x.empty_like(k, l);
  for (const auto& [d, c] : x.terms()) out.add_term(f(d), c);
  return out;
}

template <class R>
Morphism<R> star(const Morphism<R>& x) {
  return map_diagrams(x, x.upper_count(), x.lower_count(), [](const Diagram& d) { return star(d); });
}

template <class R>
Morphism<R> sharp(const Morphism<R>& x) {
  return map_diagrams(x, x.lower_count(), x.upper_count(), [](const Diagram& d) { return sharp(d); });
}

template <class R>
Morphism<R> ast(const Morphism<R>& x) {
  return map_diagrams(x, x.upper_count(), x.lower_count(), [](const Diagram& d) { return ast(d); });
}

// Coefficients mapped through `f`, which takes a source Elem to a target Elem.
template <class Dst, class Src, class F>
Morphism<Dst> change_ring(const Morphism<Src>& x, const Dst& ring, typename Dst::Elem delta, F f) {
  Morphism<Dst> out(ring, std::move(delta), x.lower_count(), x.upper_count());
  for (const auto& [d, c] : x.terms()) out.add_term(d, f(c));
  return out;
}

template <class R>
std::string delta_label(const R& ring, const typename R::Elem& delta) {
  if constexpr (std::is_same_v<R, DeltaPolyRing>) {
    if (delta == ring.indeterminate()) return "symbolic";
  }
  return ring.format(delta);
}

template <class R>
nlohmann::json morphism_to_json(const Morphism<R>& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [d, c] : x.terms()) {
    nlohmann::json dj;
    to_json(dj, d);
    terms.push_back({{"diagram", dj}, {"coeff", x.ring().format(c)}});
  }
  return {{"k", x.lower_count()},
          {"l", x.upper_count()},
          {"ring", x.ring().name()},
          {"delta", delta_label(x.ring(), x.delta())},
          {"terms", terms}};
}

template <class R>
Morphism<R> morphism_from_json(const nlohmann::json& j, const R& ring) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l") || !j.contains("terms")) {
    throw ValidationError("morphism JSON needs fields k, l, terms");
  }
  typename R::Elem delta = ring.zero();
  const auto dj = j.value("delta", nlohmann::json("symbolic"));
  const std::string dtext = dj.is_string() ? dj.get<std::string>() : dj.dump();
  if (dtext == "symbolic") {
    if constexpr (std::is_same_v<R, DeltaPolyRing>) {
      delta = ring.indeterminate();
    } else {
      throw ValidationError("symbolic delta requires the polynomial ring");
    }
  } else {
    delta = ring.parse(dtext);
  }
  Morphism<R> out(ring, delta, j.at("k").get<int>(), j.at("l").get<int>());
  for (const auto& t : j.at("terms")) {
    Diagram d;
    from_json(t.at("diagram"), d);
    const auto& cj = t.at("coeff");
    out.add_term(d, ring.parse(cj.is_string() ? cj.get<std::string>() : cj.dump()));
  }
  return out;
}

}  // namespace brauer
