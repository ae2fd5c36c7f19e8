#include "plg/wedge.hpp"

#include <sstream>

namespace plg {

std::strong_ordering CanonLeg::cmp(const CanonLeg& o) const {
  if (weight != o.weight) return weight <=> o.weight;
  if (weight >= 2) return sym.cmp(o.sym);
  return key.cmp(o.key);
}

std::vector<std::pair<CanonLeg, Rat>> expand_leg(const FieldCtx* ctx, const Leg& l) {
  std::vector<std::pair<CanonLeg, Rat>> out;
  if (l.weight >= 2) {
    CanonLeg c;
    c.weight = l.weight;
    c.sym = l.sym;
    out.emplace_back(std::move(c), Rat(1));
    return out;
  }
  for (auto& [k, e] : ctx->factors().resolve(l.word)) {
    CanonLeg c;
    c.weight = 1;
    c.key = k;
    out.emplace_back(std::move(c), e);
  }
  return out;
}

void WedgeElem::add(Leg a, Leg b, const Rat& c) {
  if (c == 0) return;
  terms_.push_back(Term{std::move(a), std::move(b), c});
}

void WedgeElem::add_scaled(const WedgeElem& o, const Rat& c) {
  if (ctx_ == nullptr) ctx_ = o.ctx_;
  if (c == 0) return;
  for (auto& t : o.terms_) terms_.push_back(Term{t.a, t.b, t.c * c});
}

WedgeElem WedgeElem::operator+(const WedgeElem& o) const {
  WedgeElem r = *this;
  r.add_scaled(o, Rat(1));
  return r;
}

WedgeElem WedgeElem::operator-(const WedgeElem& o) const {
  WedgeElem r = *this;
  r.add_scaled(o, Rat(-1));
  return r;
}

WedgeElem WedgeElem::operator*(const Rat& c) const {
  WedgeElem r(ctx_);
  r.add_scaled(*this, c);
  return r;
}

WedgeElem WedgeElem::swap_legs() const {
  WedgeElem r(ctx_);
  for (auto& t : terms_) r.add(t.b, t.a, t.c);
  return r;
}

WedgeElem WedgeElem::drop_weight1_component() const {
  WedgeElem r(ctx_);
  for (auto& t : terms_)
    if (t.a.weight >= 2 && t.b.weight >= 2) r.add(t.a, t.b, t.c);
  return r;
}

WedgeElem::Canon WedgeElem::canonical() const {
  Canon out;
  for (auto& t : terms_) {
    auto ea = expand_leg(ctx_, t.a);
    auto eb = expand_leg(ctx_, t.b);
    for (auto& [a0, ca] : ea)
      for (auto& [b0, cb] : eb) {
        CanonLeg a = a0, b = b0;
        Rat c = t.c * ca * cb;
        auto ord = a.cmp(b);
        if (ord == 0) continue;  // v /\ v = 0
        if (ord > 0) {
          std::swap(a, b);
          c = -c;
        }
        auto key = std::make_pair(std::move(a), std::move(b));
        auto it = out.find(key);
        if (it == out.end()) {
          out.emplace(std::move(key), c);
        } else {
          it->second += c;
          if (it->second == 0) out.erase(it);
        }
      }
  }
  return out;
}

std::string WedgeElem::str() const {
  Canon c = canonical();
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  auto leg_str = [&](const CanonLeg& l) -> std::string {
    if (l.weight >= 2) return l.sym.str();
    return "log(" + ctx_->factors().key_str(l.key) + ")";
  };
  for (auto& [key, v] : c) {
    Rat av = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (av != 1) os << av.get_str() << "*";
    os << leg_str(key.first) << " /\\ " << leg_str(key.second);
  }
  return os.str();
}

namespace {

// Extract the leg for a cyclic window [j, j+i] of xs (indices mod n+1).
// Returns false if the normalized leg vanishes.
bool window_leg(const FieldCtx* ctx, std::span<const FieldElem> xs, size_t j, size_t len,
                Leg& out) {
  size_t n1 = xs.size();
  std::vector<FieldElem> w(len);
  for (size_t i = 0; i < len; ++i) w[i] = xs[(j + i) % n1];
  if (len == 2) {
    MultWord mw = weight1_value(w[0], w[1]);
    if (ctx->factors().is_zero(mw)) return false;
    out = Leg::from_word(std::move(mw));
    return true;
  }
  LinComb lc = normalize(ctx, w);
  if (lc.is_zero()) return false;
  out = Leg::from_sym(lc.terms().begin()->first);
  return true;
}

}  // namespace

WedgeElem cobracket_tuple(const FieldCtx* ctx, std::span<const FieldElem> xs, const Rat& coeff) {
  WedgeElem out(ctx);
  int n = (int)xs.size() - 1;
  if (n < 2) return out;
  for (int j = 0; j <= n; ++j)
    for (int i = 1; i <= n - 1; ++i) {
      Leg left, right;
      // left: (x_j, x_{j+1}, ..., x_{j+i})
      if (!window_leg(ctx, xs, (size_t)j, (size_t)i + 1, left)) continue;
      // right: (x_j, x_{j+i+1}, ..., x_{j+n})
      std::vector<FieldElem> rw;
      rw.push_back(xs[(size_t)(j % (n + 1))]);
      for (int k = i + 1; k <= n; ++k) rw.push_back(xs[(size_t)((j + k) % (n + 1))]);
      if (rw.size() == 2) {
        MultWord mw = weight1_value(rw[0], rw[1]);
        if (ctx->factors().is_zero(mw)) continue;
        right = Leg::from_word(std::move(mw));
      } else {
        LinComb lc = normalize(ctx, rw);
        if (lc.is_zero()) continue;
        right = Leg::from_sym(lc.terms().begin()->first);
      }
      out.add(std::move(left), std::move(right), coeff);
    }
  return out;
}

WedgeElem cobracket(const FieldCtx* ctx, const LinComb& e) {
  WedgeElem out(ctx);
  for (auto& [s, c] : e.terms()) out.add_scaled(cobracket_tuple(ctx, s.xs, Rat(1)), c);
  return out;
}

WedgeElem truncated_cobracket(const FieldCtx* ctx, const LinComb& e) {
  return cobracket(ctx, e).drop_weight1_component();
}

void Tensor3::add(const Leg& a, const Leg& b, const Leg& c, const Rat& v) {
  if (v == 0) return;
  terms_.push_back(T{a, b, c, v});
}

bool Tensor3::exact_zero() const {
  std::map<std::tuple<CanonLeg, CanonLeg, CanonLeg>, Rat> acc;
  for (auto& t : terms_) {
    auto ea = expand_leg(ctx_, t.a), eb = expand_leg(ctx_, t.b), ec = expand_leg(ctx_, t.c);
    for (auto& [a, ca] : ea)
      for (auto& [b, cb] : eb)
        for (auto& [c, cc] : ec) {
          auto key = std::make_tuple(a, b, c);
          Rat v = t.v * ca * cb * cc;
          auto it = acc.find(key);
          if (it == acc.end()) {
            acc.emplace(std::move(key), v);
          } else {
            it->second += v;
            if (it->second == 0) acc.erase(it);
          }
        }
  }
  return acc.empty();
}

Tensor3 Tensor3::cojacobi(const FieldCtx* ctx, const LinComb& e) {
  Tensor3 out(ctx);
  WedgeElem w = cobracket(ctx, e);
  for (auto& t : w.raw()) {
    // wedge term c * (a (x) b - b (x) a); apply 1 (x) delta to each part
    auto expand = [&](const Leg& x, const Leg& y, const Rat& v) {
      if (y.weight < 2) return;
      LinComb ylc(y.weight);
      ylc.add(y.sym, Rat(1));
      WedgeElem dy = cobracket(ctx, ylc);
      for (auto& u : dy.raw()) {
        // delta y = sum d * (p (x) q - q (x) p)
        out.add(x, u.a, u.b, v * u.c);
        out.add(x, u.b, u.a, -(v * u.c));
      }
    };
    expand(t.a, t.b, t.c);
    expand(t.b, t.a, -t.c);
  }
  // cyclic sum: terms (a,b,c) + (b,c,a) + (c,a,b)
  std::vector<T> base = out.terms_;
  for (auto& t : base) {
    out.add(t.b, t.c, t.a, t.v);
    out.add(t.c, t.a, t.b, t.v);
  }
  return out;
}

}  // namespace plg
