#include "grc/group_ring.hpp"

#include <cctype>
#include <stdexcept>

namespace grc {

GroupRingElement GroupRingElement::zero(RingSpec ring, GroupPtr group) {
  GroupRingElement v{ring, std::move(group), {}};
  v.coeffs.assign(v.group->order(), RingValue::zero(ring));
  return v;
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

static void require_compatible(const GroupRingElement& v, const GroupRingElement& w) {
  if (v.ring != w.ring) throw std::invalid_argument("ring mismatch");
  if (v.group != w.group) throw std::invalid_argument("group mismatch");
}

GroupRingElement gr_add(const GroupRingElement& v, const GroupRingElement& w) {
  require_compatible(v, w);
  GroupRingElement out = v;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = ring_add(out.coeffs[i], w.coeffs[i]);
  return out;
}

GroupRingElement gr_mul(const GroupRingElement& v, const GroupRingElement& w) {
  require_compatible(v, w);
  const auto& g = *v.group;
  GroupRingElement out = GroupRingElement::zero(v.ring, v.group);
  for (int i = 0; i < g.order(); ++i) {
    if (v.coeffs[i].is_zero()) continue;
    for (int j = 0; j < g.order(); ++j) {
      if (w.coeffs[j].is_zero()) continue;
      const int t = g.mul(i, j);
      out.coeffs[t] = ring_add(out.coeffs[t], ring_mul(v.coeffs[i], w.coeffs[j]));
    }
  }
  return out;
}

GroupRingElement gr_scale(const RingValue& r, const GroupRingElement& v) {
  GroupRingElement out = v;
  for (auto& c : out.coeffs) c = ring_mul(r, c);
  return out;
}

GroupRingElement involution(const GroupRingElement& v) {
  GroupRingElement out = GroupRingElement::zero(v.ring, v.group);
  for (int i = 0; i < v.group->order(); ++i) out.coeffs[v.group->inv(i)] = v.coeffs[i];
  return out;
}

SigmaMatrix sigma(const GroupRingElement& v) {
  const auto& g = *v.group;
  const int n = g.order();
  SigmaMatrix m{v.ring, v.group, n, {}};
  m.entries.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int gi_inv = g.inv(i);
    for (int j = 0; j < n; ++j) m.entries.push_back(v.coeffs[g.mul(gi_inv, j)]);
  }
  return m;
}

bool sigma_is_symmetric(const GroupRingElement& v) { return v == involution(v); }

SigmaMatrix sigma_add(const SigmaMatrix& a, const SigmaMatrix& b) {
  if (a.n != b.n || a.ring != b.ring) throw std::invalid_argument("sigma matrix mismatch");
  SigmaMatrix out = a;
  for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = ring_add(out.entries[i], b.entries[i]);
  return out;
}

SigmaMatrix sigma_matmul(const SigmaMatrix& a, const SigmaMatrix& b) {
  if (a.n != b.n || a.ring != b.ring) throw std::invalid_argument("sigma matrix mismatch");
  SigmaMatrix out{a.ring, a.group, a.n, {}};
  out.entries.assign(static_cast<size_t>(a.n) * a.n, RingValue::zero(a.ring));
  for (int i = 0; i < a.n; ++i)
    for (int l = 0; l < a.n; ++l) {
      const RingValue& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (int j = 0; j < a.n; ++j) {
        auto& dst = out.entries[static_cast<size_t>(i) * a.n + j];
        dst = ring_add(dst, ring_mul(x, b.at(l, j)));
      }
    }
  return out;
}

SigmaMatrix sigma_transpose(const SigmaMatrix& m) {
  SigmaMatrix out{m.ring, m.group, m.n, {}};
  out.entries.assign(m.entries.size(), RingValue::zero(m.ring));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) out.entries[static_cast<size_t>(j) * m.n + i] = m.at(i, j);
  return out;
}

bool operator==(const SigmaMatrix& a, const SigmaMatrix& b) {
  return a.n == b.n && a.ring == b.ring && a.entries == b.entries;
}

namespace {

class ElementParser {
 public:
  ElementParser(std::string_view text, RingSpec ring, GroupPtr group)
      : text_(text), ring_(ring), group_(std::move(group)) {}

  GroupRingElement parse() {
    GroupRingElement v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  std::string_view text_;
  RingSpec ring_;
  GroupPtr group_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) { ++pos_; return true; }
    return false;
  }

  GroupRingElement scalar(RingValue r) {
    GroupRingElement v = GroupRingElement::zero(ring_, group_);
    v.coeffs[group_->identity()] = r;
    return v;
  }

  GroupRingElement expr() {
    GroupRingElement v = product();
    while (eat('+')) v = gr_add(v, product());
    return v;
  }

  GroupRingElement product() {
    GroupRingElement v = factor();
    for (;;) {
      if (eat('*')) {
        v = gr_mul(v, factor());
      } else if (peek() == '(') {
        // juxtaposition: (1+a)(1+b), b(a+h)
        v = gr_mul(v, factor());
      } else {
        return v;
      }
    }
  }

  GroupRingElement factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GroupRingElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == '0') { ++pos_; return GroupRingElement::zero(ring_, group_); }
    if (c == '1') { ++pos_; return scalar(RingValue::one(ring_)); }
    if (c == 'u' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
      return scalar(ring_monomial());
    if (std::isalpha(static_cast<unsigned char>(c))) return word();
    fail("expected factor");
  }

  RingValue ring_monomial() {
    std::uint16_t subset = 0;
    while (pos_ + 1 < text_.size() && text_[pos_] == 'u' &&
           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const int i = text_[pos_ + 1] - '0';
      if (i < 1 || i > ring_.k) fail("ring generator u" + std::to_string(i) + " not in ring");
      subset |= static_cast<std::uint16_t>(1u << (i - 1));
      pos_ += 2;
    }
    return RingValue(ring_, static_cast<std::uint16_t>(1u << subset));
  }

  GroupRingElement word() {
    int idx = group_->identity();
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) break;
      if (text_[pos_] == 'u' && pos_ + 1 < text_.size() &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
        break;  // ring monomial, not part of the word
      const std::string gen(1, text_[pos_]);
      if (gen == "e") {
        ++pos_;
        any = true;
        continue;
      }
      const int gidx = group_->index_of(gen);
      if (gidx < 0) fail("unknown generator '" + gen + "'");
      ++pos_;
      int exp = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected exponent");
        exp = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          exp = exp * 10 + (text_[pos_++] - '0');
      }
      for (int t = 0; t < exp; ++t) idx = group_->mul(idx, gidx);
      any = true;
    }
    if (!any) fail("expected word");
    GroupRingElement v = GroupRingElement::zero(ring_, group_);
    v.coeffs[idx] = RingValue::one(ring_);
    return v;
  }
};

}  // namespace

GroupRingElement parse_element(std::string_view text, RingSpec ring, const GroupPtr& group) {
  return ElementParser(text, ring, group).parse();
}

std::string to_string(const GroupRingElement& v) {
  std::string out;
  for (int i = 0; i < v.group->order(); ++i) {
    const auto& c = v.coeffs[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string cs = to_string(c);
    if (cs == "1") {
      out += v.group->name(i);
    } else {
      const bool needs_parens = cs.find('+') != std::string::npos;
      out += (needs_parens ? "(" + cs + ")" : cs) + "*" + v.group->name(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace grc
